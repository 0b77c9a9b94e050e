#pragma once

/**
 * @file oracle.hpp
 * @brief Brute-force JSR estimates from products of length n.
 *
 * For every ordered product P = A_{i_n} ... A_{i_1}:
 *   lower(n) = (max rho(P))^{1/n} <= JSR <= (max ||P||)^{1/n} = upper(n).
 * These are independent of the relaxation schemes and serve as a cross-check.
 */
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "jsr/angular_norm.hpp"
#include "jsr/matrix.hpp"

namespace jsr {

/// Default cap on the number r^n of enumerated products.
inline constexpr std::uint64_t kDefaultProductBudget = std::uint64_t{1} << 20;

/// Thrown when r^n exceeds the product budget.
class EnumerationBudgetError : public std::length_error {
public:
    EnumerationBudgetError(std::uint64_t required, std::uint64_t budget);
    /// r^n, saturated at UINT64_MAX.
    [[nodiscard]] std::uint64_t required() const noexcept { return required_; }
    [[nodiscard]] std::uint64_t budget() const noexcept { return budget_; }

private:
    std::uint64_t required_;
    std::uint64_t budget_;
};

/// r^n, saturated at UINT64_MAX.
[[nodiscard]] std::uint64_t product_count(std::size_t r, std::size_t depth);

struct ProductBounds {
    std::size_t depth = 0;
    double lower = 0.0;
    double upper = 0.0;
    /// Which norm induced the operator norms behind `upper`.
    std::string norm_used;
};

/**
 * @brief Enumerate all r^n products of length n.
 *
 * The operator norm of P is taken over grid directions:
 * max_j ||P u(phi_j)|| / h_j.
 */
[[nodiscard]] ProductBounds product_bounds(const MatrixSet& family, std::size_t depth, const AngularNorm& nm,
                                           std::uint64_t budget = kDefaultProductBudget);

/// max over products P of length n of |tr P|^{1/n}. Diagnostic only: at finite
/// n it neither bounds the JSR from above nor from below.
[[nodiscard]] double trace_estimate(const MatrixSet& family, std::size_t depth,
                                    std::uint64_t budget = kDefaultProductBudget);

/// Operator norm of a 2x2 matrix induced by nm, over grid directions.
[[nodiscard]] double induced_norm(const Matrix& p, const AngularNorm& nm);

}  // namespace jsr
