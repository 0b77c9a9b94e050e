#include "jsr/angular_norm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "jsr/parallel.hpp"

namespace jsr {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Fractional node coordinate of direction theta in [-pi, pi]: t in [0, N].
double node_coordinate(std::size_t node_count, double theta) {
    return (theta / kTwoPi + 0.5) * static_cast<double>(node_count);
}

void check_gamma(double gamma) {
    if (!(gamma > 0.0) || !std::isfinite(gamma))
        throw std::invalid_argument("relaxation scale gamma must be positive and finite");
}

}  // namespace

void AngularNorm::check_node_count(std::size_t node_count) {
    if (node_count < 8 || node_count % 2 != 0)
        throw std::invalid_argument("node count must be even and at least 8, got " + std::to_string(node_count));
}

AngularNorm::AngularNorm(std::vector<double> values) : values_(std::move(values)) {
    check_node_count(values_.size());
    for (double v : values_)
        if (!(v > 0.0) || !std::isfinite(v)) throw std::invalid_argument("norm profile values must be positive and finite");
    const std::size_t half = values_.size() / 2;
    for (std::size_t j = 0; j < half; ++j) {
        const double mean = 0.5 * (values_[j] + values_[j + half]);
        values_[j] = mean;
        values_[j + half] = mean;
    }
}

double AngularNorm::node_angle(std::size_t node_count, std::size_t j) {
    return kTwoPi * (static_cast<double>(j) / static_cast<double>(node_count) - 0.5);
}

Vec2 AngularNorm::node_direction(std::size_t node_count, std::size_t j) {
    // Exact axes and exact antipodes: cos/sin of a rounded multiple of pi leave
    // ~1e-16 residues that interpolation would pick up from neighbouring nodes.
    const std::size_t half = node_count / 2;
    if (j >= half) {
        const Vec2 u = node_direction(node_count, j - half);
        return {-u[0], -u[1]};
    }
    if ((4 * j) % node_count == 0) {
        if (j == 0) return {-1.0, 0.0};
        return {0.0, -1.0};
    }
    const double phi = node_angle(node_count, j);
    return {std::cos(phi), std::sin(phi)};
}

std::optional<std::size_t> AngularNorm::node_of(std::size_t node_count, const Vec2& x) {
    if (x[0] == 0.0 && x[1] == 0.0) return std::nullopt;
    const double t = node_coordinate(node_count, std::atan2(x[1], x[0]));
    const double nearest = std::round(t);
    if (std::abs(t - nearest) > 1e-9) return std::nullopt;
    return static_cast<std::size_t>(nearest) % node_count;
}

double AngularNorm::operator()(const Vec2& x) const noexcept {
    const double radius = std::hypot(x[0], x[1]);
    if (radius == 0.0) return 0.0;
    const std::size_t n = values_.size();
    const double t = node_coordinate(n, std::atan2(x[1], x[0]));
    const double floor_t = std::floor(t);
    const double frac = t - floor_t;
    std::size_t j = static_cast<std::size_t>(floor_t);
    if (j >= n) j -= n;
    const std::size_t next = j + 1 == n ? 0 : j + 1;
    const double h = frac == 0.0 ? values_[j] : (1.0 - frac) * values_[j] + frac * values_[next];
    return radius * h;
}

AngularNorm euclidean(std::size_t node_count) {
    AngularNorm::check_node_count(node_count);
    return AngularNorm(std::vector<double>(node_count, 1.0));
}

double eval(const AngularNorm& nm, const Vec2& x) { return nm(x); }

double max_image(const AngularNorm& nm, const MatrixSet& family, const Vec2& x) {
    double best = 0.0;
    for (const auto& a : family) best = std::max(best, nm(jsr::apply(a, x)));
    return best;
}

std::vector<double> image_profile(const AngularNorm& nm, const MatrixSet& family) {
    if (family.dim() != 2) throw UnsupportedDimensionError(family.dim());
    const std::size_t n = nm.node_count();
    std::vector<double> image(n);
    parallel_for(n, [&](std::size_t begin, std::size_t end) {
        for (std::size_t j = begin; j < end; ++j) image[j] = max_image(nm, family, AngularNorm::node_direction(n, j));
    });
    return image;
}

namespace detail {

AngularNorm linear_update(const AngularNorm& nm, std::span<const double> image, double lambda, double gamma) {
    check_gamma(gamma);
    const auto h = nm.values();
    std::vector<double> out(h.size());
    const double mix = 1.0 - lambda;
    for (std::size_t j = 0; j < h.size(); ++j) out[j] = lambda * h[j] + mix * (image[j] / gamma);
    return AngularNorm(std::move(out));
}

AngularNorm max_update(const AngularNorm& nm, std::span<const double> image, double gamma) {
    check_gamma(gamma);
    const auto h = nm.values();
    std::vector<double> out(h.size());
    for (std::size_t j = 0; j < h.size(); ++j) out[j] = std::max(h[j], image[j] / gamma);
    return AngularNorm(std::move(out));
}

}  // namespace detail

AngularNorm combine_linear(const AngularNorm& nm, const MatrixSet& family, double lambda, double gamma) {
    if (!(lambda > 0.0 && lambda < 1.0)) throw std::invalid_argument("relaxation weight lambda must lie in (0, 1)");
    check_gamma(gamma);
    return detail::linear_update(nm, image_profile(nm, family), lambda, gamma);
}

AngularNorm combine_max(const AngularNorm& nm, const MatrixSet& family, double gamma) {
    check_gamma(gamma);
    return detail::max_update(nm, image_profile(nm, family), gamma);
}

AngularNorm normalize(const AngularNorm& nm, const Vec2& e) {
    const double scale = nm(e);
    if (scale == 0.0) throw std::invalid_argument("normalization vector must be nonzero");
    std::vector<double> out(nm.values().begin(), nm.values().end());
    if (const auto node = AngularNorm::node_of(nm.node_count(), e); node && std::hypot(e[0], e[1]) == 1.0) {
        // divide by the node value itself so that ||e|| comes out as exactly 1
        const double at_node = out[*node];
        for (double& v : out) v /= at_node;
    } else {
        for (double& v : out) v /= scale;
    }
    return AngularNorm(std::move(out));
}

double eccentricity(const AngularNorm& n1, const AngularNorm& n2) {
    if (n1.node_count() != n2.node_count())
        throw std::invalid_argument("eccentricity: node counts differ (" + std::to_string(n1.node_count()) + " vs " +
                                    std::to_string(n2.node_count()) + ")");
    double hi = 0.0;
    double lo = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n1.node_count(); ++j) {
        const double ratio = n1[j] / n2[j];
        hi = std::max(hi, ratio);
        lo = std::min(lo, ratio);
    }
    return hi / lo;
}

}  // namespace jsr
