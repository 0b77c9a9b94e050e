#include "jsr/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace jsr {

namespace {

// Relative threshold below which a discriminant or off-diagonal part counts as zero.
constexpr double kDegenerateTol = 1e-12;
// Two real lines coincide when their angles differ by less than this (mod pi).
constexpr double kAngleTol = 1e-10;

void require_2x2(const Matrix& a) {
    if (a.dim() != 2) throw UnsupportedDimensionError(a.dim());
}

double max_abs_entry(const Matrix& a) {
    double m = 0.0;
    for (double v : a.entries()) m = std::max(m, std::abs(v));
    return m;
}

// Angle of the line spanned by (x, y), folded into [0, pi).
double line_angle(double x, double y) {
    double angle = std::atan2(y, x);
    if (angle < 0.0) angle += std::numbers::pi;
    if (angle >= std::numbers::pi) angle -= std::numbers::pi;
    return angle;
}

// Direction of the kernel of the (numerically) singular 2x2 matrix [[p, q], [r, s]].
double kernel_angle(double p, double q, double r, double s) {
    if (std::hypot(p, q) >= std::hypot(r, s)) return line_angle(-q, p);
    return line_angle(-s, r);
}

bool leaves_line_invariant(const Matrix& a, double angle) {
    const Vec2 v{std::cos(angle), std::sin(angle)};
    const Vec2 w = jsr::apply(a, v);
    const double len = std::hypot(w[0], w[1]);
    if (len <= kDegenerateTol * std::max(max_abs_entry(a), 1e-300)) return true;
    const double cross = v[0] * w[1] - v[1] * w[0];
    const double dot = v[0] * w[0] + v[1] * w[1];
    const double diff = std::remainder(std::atan2(cross, dot), std::numbers::pi);
    return std::abs(diff) <= kAngleTol;
}

}  // namespace

UnsupportedDimensionError::UnsupportedDimensionError(std::size_t dim)
    : std::domain_error("unsupported matrix dimension " + std::to_string(dim) + " (only 2x2 is supported)"),
      dim_(dim) {}

Matrix::Matrix(std::size_t dim, std::vector<double> entries) : dim_(dim), entries_(std::move(entries)) {
    if (dim_ == 0) throw std::invalid_argument("matrix dimension must be at least 1");
    if (entries_.size() != dim_ * dim_)
        throw std::invalid_argument("matrix of dimension " + std::to_string(dim_) + " needs " +
                                    std::to_string(dim_ * dim_) + " entries, got " + std::to_string(entries_.size()));
    for (double v : entries_)
        if (!std::isfinite(v)) throw std::invalid_argument("matrix entries must be finite");
}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) : dim_(rows.size()) {
    if (dim_ == 0) throw std::invalid_argument("matrix dimension must be at least 1");
    entries_.reserve(dim_ * dim_);
    for (const auto& row : rows) {
        if (row.size() != dim_) throw std::invalid_argument("matrix rows must have length " + std::to_string(dim_));
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
    for (double v : entries_)
        if (!std::isfinite(v)) throw std::invalid_argument("matrix entries must be finite");
}

Matrix Matrix::identity(std::size_t dim) {
    std::vector<double> e(dim * dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i) e[i * dim + i] = 1.0;
    return Matrix(dim, std::move(e));
}

Matrix Matrix::rotation(double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return Matrix{{c, -s}, {s, c}};
}

double Matrix::trace() const noexcept {
    double t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += entries_[i * dim_ + i];
    return t;
}

bool Matrix::is_zero() const noexcept {
    return std::all_of(entries_.begin(), entries_.end(), [](double v) { return v == 0.0; });
}

Matrix Matrix::transposed() const {
    std::vector<double> t(entries_.size());
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) t[j * dim_ + i] = entries_[i * dim_ + j];
    return Matrix(dim_, std::move(t));
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
    if (lhs.dim_ != rhs.dim_) throw std::invalid_argument("matrix product: dimension mismatch");
    const std::size_t n = lhs.dim_;
    std::vector<double> out(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const double a = lhs.entries_[i * n + k];
            for (std::size_t j = 0; j < n; ++j) out[i * n + j] += a * rhs.entries_[k * n + j];
        }
    return Matrix(n, std::move(out));
}

Matrix operator*(double scale, const Matrix& m) {
    std::vector<double> out(m.entries_);
    for (double& v : out) v *= scale;
    return Matrix(m.dim_, std::move(out));
}

Vec2 apply(const Matrix& a, const Vec2& x) {
    require_2x2(a);
    const auto e = a.entries();
    return {e[0] * x[0] + e[1] * x[1], e[2] * x[0] + e[3] * x[1]};
}

std::vector<double> apply(const Matrix& a, std::span<const double> x) {
    const std::size_t n = a.dim();
    if (x.size() != n)
        throw std::invalid_argument("apply: vector of length " + std::to_string(x.size()) + " for matrix of dimension " +
                                    std::to_string(n));
    std::vector<double> y(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) y[i] += a(i, j) * x[j];
    return y;
}

double spectral_radius(const Matrix& a) {
    if (a.dim() == 1) return std::abs(a(0, 0));
    require_2x2(a);
    const double half_trace = 0.5 * (a(0, 0) + a(1, 1));
    const double half_gap = 0.5 * (a(0, 0) - a(1, 1));
    // (tr/2)^2 - det, written so that A and A^T give bit-identical results.
    const double disc = half_gap * half_gap + a(0, 1) * a(1, 0);
    if (disc >= 0.0) return std::abs(half_trace) + std::sqrt(disc);
    // complex pair: |lambda|^2 = det
    const double det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    return std::sqrt(std::max(det, 0.0));
}

bool is_scalar(const Matrix& a) {
    require_2x2(a);
    const double tol = kDegenerateTol * max_abs_entry(a);
    return std::abs(a(0, 1)) <= tol && std::abs(a(1, 0)) <= tol && std::abs(a(0, 0) - a(1, 1)) <= tol;
}

std::vector<double> eigen_directions(const Matrix& a) {
    require_2x2(a);
    if (is_scalar(a)) return {};
    const double scale = max_abs_entry(a);
    const double half_trace = 0.5 * (a(0, 0) + a(1, 1));
    const double half_gap = 0.5 * (a(0, 0) - a(1, 1));
    const double disc = half_gap * half_gap + a(0, 1) * a(1, 0);
    const double tol = kDegenerateTol * scale * scale;
    if (disc < -tol) return {};
    if (disc <= tol) {
        // defective double eigenvalue: a single invariant line
        return {kernel_angle(a(0, 0) - half_trace, a(0, 1), a(1, 0), a(1, 1) - half_trace)};
    }
    std::vector<double> dirs;
    for (double sign : {1.0, -1.0}) {
        const double lambda = half_trace + sign * std::sqrt(disc);
        dirs.push_back(kernel_angle(a(0, 0) - lambda, a(0, 1), a(1, 0), a(1, 1) - lambda));
    }
    return dirs;
}

bool is_irreducible(const MatrixSet& family) {
    if (family.dim() != 2) throw UnsupportedDimensionError(family.dim());
    const auto first = std::find_if(family.begin(), family.end(), [](const Matrix& m) { return !is_scalar(m); });
    if (first == family.end()) return false;
    for (double angle : eigen_directions(*first)) {
        const bool common = std::all_of(family.begin(), family.end(),
                                        [angle](const Matrix& m) { return leaves_line_invariant(m, angle); });
        if (common) return false;
    }
    return true;
}

MatrixSet::MatrixSet(std::vector<Matrix> matrices) : matrices_(std::move(matrices)) {
    if (matrices_.empty()) throw std::invalid_argument("matrix set must contain at least one matrix");
    const std::size_t dim = matrices_.front().dim();
    for (const auto& m : matrices_)
        if (m.dim() != dim) throw std::invalid_argument("matrix set members must share one dimension");
    if (std::all_of(matrices_.begin(), matrices_.end(), [](const Matrix& m) { return m.is_zero(); }))
        throw std::invalid_argument("matrix set must contain a nonzero matrix");
}

MatrixSet::MatrixSet(std::initializer_list<Matrix> matrices) : MatrixSet(std::vector<Matrix>(matrices)) {}

MatrixSet MatrixSet::scaled(double scale) const {
    std::vector<Matrix> out;
    out.reserve(matrices_.size());
    for (const auto& m : matrices_) out.push_back(scale * m);
    return MatrixSet(std::move(out));
}

MatrixSet MatrixSet::similar(const Matrix& t) const {
    require_2x2(t);
    const double det = t(0, 0) * t(1, 1) - t(0, 1) * t(1, 0);
    if (det == 0.0) throw std::invalid_argument("similarity transform must be invertible");
    const Matrix inv{{t(1, 1) / det, -t(0, 1) / det}, {-t(1, 0) / det, t(0, 0) / det}};
    std::vector<Matrix> out;
    out.reserve(matrices_.size());
    for (const auto& m : matrices_) out.push_back(t * m * inv);
    return MatrixSet(std::move(out));
}

}  // namespace jsr
