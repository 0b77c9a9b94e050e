#include "jsr/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <vector>

#include "jsr/parallel.hpp"

namespace jsr {

std::uint64_t product_count(std::size_t r, std::size_t depth) {
    std::uint64_t count = 1;
    for (std::size_t k = 0; k < depth; ++k) {
        if (count > std::numeric_limits<std::uint64_t>::max() / r) return std::numeric_limits<std::uint64_t>::max();
        count *= r;
    }
    return count;
}

namespace {

// Calls visit(P) for every ordered product P = A_{i_n} ... A_{i_1}, where
// the product index k encodes i_1 in its lowest base-r digit.
template <class Visit>
void for_each_product(const MatrixSet& family, std::size_t depth, std::uint64_t budget, Visit&& visit) {
    if (depth == 0) throw std::invalid_argument("product depth must be at least 1");
    if (family.dim() != 2) throw UnsupportedDimensionError(family.dim());
    const std::size_t r = family.size();
    const std::uint64_t count = product_count(r, depth);
    if (count > budget) throw EnumerationBudgetError(count, budget);
    parallel_for(static_cast<std::size_t>(count), [&](std::size_t begin, std::size_t end) {
        for (std::size_t k = begin; k < end; ++k) {
            std::size_t code = k;
            Matrix product = family[code % r];
            for (std::size_t level = 1; level < depth; ++level) {
                code /= r;
                product = family[code % r] * product;
            }
            visit(product);
        }
    });
}

// Thread-safe running maximum.
class RunningMax {
public:
    void offer(double v) {
        std::lock_guard lock(mutex_);
        value_ = std::max(value_, v);
    }
    [[nodiscard]] double value() const { return value_; }

private:
    std::mutex mutex_;
    double value_ = 0.0;
};

}  // namespace

EnumerationBudgetError::EnumerationBudgetError(std::uint64_t required, std::uint64_t budget)
    : std::length_error("product enumeration needs " + std::to_string(required) + " products, budget is " +
                        std::to_string(budget)),
      required_(required),
      budget_(budget) {}

double induced_norm(const Matrix& p, const AngularNorm& nm) {
    const std::size_t n = nm.node_count();
    double best = 0.0;
    for (std::size_t j = 0; j < n; ++j) best = std::max(best, nm(jsr::apply(p, AngularNorm::node_direction(n, j))) / nm[j]);
    return best;
}

ProductBounds product_bounds(const MatrixSet& family, std::size_t depth, const AngularNorm& nm, std::uint64_t budget) {
    RunningMax max_radius;
    RunningMax max_norm;
    for_each_product(family, depth, budget, [&](const Matrix& product) {
        max_radius.offer(spectral_radius(product));
        max_norm.offer(induced_norm(product, nm));
    });
    const double inv = 1.0 / static_cast<double>(depth);
    const bool is_euclidean =
        std::all_of(nm.values().begin(), nm.values().end(), [](double v) { return v == 1.0; });
    return ProductBounds{depth, std::pow(max_radius.value(), inv), std::pow(max_norm.value(), inv),
                         is_euclidean ? "euclidean" : "angular-profile(" + std::to_string(nm.node_count()) + ")"};
}

double trace_estimate(const MatrixSet& family, std::size_t depth, std::uint64_t budget) {
    RunningMax max_trace;
    for_each_product(family, depth, budget, [&](const Matrix& product) { max_trace.offer(std::abs(product.trace())); });
    return std::pow(max_trace.value(), 1.0 / static_cast<double>(depth));
}

}  // namespace jsr
