#pragma once

/**
 * @file matrix.hpp
 * @brief Real square matrices, finite matrix families, and the 2x2 spectral
 *        facts the relaxation schemes rely on.
 */
#include <array>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace jsr {

/// Thrown when an operation needs 2x2 input but gets something else.
class UnsupportedDimensionError : public std::domain_error {
public:
    explicit UnsupportedDimensionError(std::size_t dim);
    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }

private:
    std::size_t dim_;
};

/// Planar vector.
using Vec2 = std::array<double, 2>;

/**
 * @brief Dense real square matrix, row-major.
 *
 * Entries are always finite; construction rejects NaN and Inf.
 */
class Matrix {
public:
    /// dim x dim matrix from row-major entries.
    Matrix(std::size_t dim, std::vector<double> entries);
    /// 2x2 matrix from rows, e.g. `Matrix{{1, 1}, {0, 1}}`.
    Matrix(std::initializer_list<std::initializer_list<double>> rows);

    static Matrix identity(std::size_t dim);
    /// Rotation of the plane by `angle` radians.
    static Matrix rotation(double angle);

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] double operator()(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
    [[nodiscard]] std::span<const double> entries() const noexcept { return entries_; }

    [[nodiscard]] double trace() const noexcept;
    [[nodiscard]] bool is_zero() const noexcept;
    [[nodiscard]] Matrix transposed() const;

    friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);
    friend Matrix operator*(double scale, const Matrix& m);
    friend bool operator==(const Matrix& lhs, const Matrix& rhs) = default;

private:
    std::size_t dim_;
    std::vector<double> entries_;
};

/// y = A x for a 2x2 matrix.
[[nodiscard]] Vec2 apply(const Matrix& a, const Vec2& x);
/// y = A x for any dimension.
[[nodiscard]] std::vector<double> apply(const Matrix& a, std::span<const double> x);

/**
 * @brief Spectral radius max |lambda| over eigenvalues of A.
 *
 * Closed form from trace and determinant; only 2x2 (and the trivial 1x1)
 * matrices are supported.
 */
[[nodiscard]] double spectral_radius(const Matrix& a);

/**
 * @brief The family {A_1, ..., A_r}: nonempty, uniform dimension, not all zero.
 */
class MatrixSet {
public:
    explicit MatrixSet(std::vector<Matrix> matrices);
    MatrixSet(std::initializer_list<Matrix> matrices);

    [[nodiscard]] std::size_t size() const noexcept { return matrices_.size(); }
    [[nodiscard]] std::size_t dim() const noexcept { return matrices_.front().dim(); }
    [[nodiscard]] const Matrix& operator[](std::size_t i) const { return matrices_[i]; }
    [[nodiscard]] const std::vector<Matrix>& matrices() const noexcept { return matrices_; }
    [[nodiscard]] auto begin() const noexcept { return matrices_.begin(); }
    [[nodiscard]] auto end() const noexcept { return matrices_.end(); }

    /// Every member multiplied by `scale` (scale != 0).
    [[nodiscard]] MatrixSet scaled(double scale) const;
    /// Every member replaced by T A T^{-1}.
    [[nodiscard]] MatrixSet similar(const Matrix& t) const;

private:
    std::vector<Matrix> matrices_;
};

/**
 * @brief True iff the 2x2 family has no common invariant real line.
 *
 * Collects the real eigendirections of the first non-scalar member and
 * tests each one against every other member. Scalar multiples of the
 * identity leave every line invariant and so constrain nothing; a family
 * made only of them is reducible.
 */
[[nodiscard]] bool is_irreducible(const MatrixSet& family);

/// Real eigendirections of a 2x2 matrix as angles in [0, pi). Empty for a
/// complex pair; a scalar matrix reports no directions (all are invariant).
[[nodiscard]] std::vector<double> eigen_directions(const Matrix& a);

/// True when A is c*I up to round-off.
[[nodiscard]] bool is_scalar(const Matrix& a);

}  // namespace jsr
