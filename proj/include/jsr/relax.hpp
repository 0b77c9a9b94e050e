#pragma once

/**
 * @file relax.hpp
 * @brief Linear-relaxation (LR) and max-relaxation (MR) iterations for the
 *        joint spectral radius and a Barabanov norm of a planar matrix family.
 *
 * Both schemes keep a norm ||.||_n and, at every step, compute
 *
 *   rho+_n = max_x max_i ||A_i x||_n / ||x||_n,
 *   rho-_n = min_x max_i ||A_i x||_n / ||x||_n,
 *
 * which bracket the joint spectral radius. LR then sets
 * ||x||_{n+1} = lambda_n ||x||_n + (1 - lambda_n) gamma_n^{-1} max_i ||A_i x||_n
 * with gamma_n = max_i ||A_i e||_n; MR takes the pointwise maximum of the two
 * terms with gamma_n an average of rho-_n and rho+_n and rescales so that
 * ||e||_{n+1} = 1. Extrema over x are taken over the grid directions of the
 * AngularNorm.
 */
#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "jsr/angular_norm.hpp"
#include "jsr/matrix.hpp"

namespace jsr {

enum class Algorithm { lr, mr };
enum class Averaging { arithmetic, geometric, harmonic };
enum class Status { converged, max_iters_reached, not_irreducible_rejected };

[[nodiscard]] std::string_view to_string(Algorithm algorithm);
[[nodiscard]] std::string_view to_string(Averaging averaging);
[[nodiscard]] std::string_view to_string(Status status);

struct RelaxConfig {
    Algorithm algorithm = Algorithm::lr;
    double lambda_lo = 0.05;
    double lambda_hi = 0.95;
    /// LR weights. Empty means constant `lambda`; otherwise lambda_n is
    /// taken from the list, cycling when n runs past its end.
    double lambda = 0.3;
    std::vector<double> lambda_sequence;
    Averaging averaging = Averaging::arithmetic;
    std::size_t node_count = 3000;
    Vec2 e{1.0, 0.0};
    double tol = 1e-3;
    std::size_t max_iters = 10000;
    /// Starting profile; Euclidean when unset. Rescaled so that ||e||_0 = 1.
    std::optional<AngularNorm> initial_norm;
    /// Run even when the family is reducible.
    bool force = false;
    /// LR with lambda_n = 0. Not covered by any convergence guarantee.
    bool unsafe_direct = false;

    /// Throws std::invalid_argument if any field is out of range.
    void validate() const;
    /// lambda_n for step n (0 under unsafe_direct).
    [[nodiscard]] double lambda_at(std::size_t n) const;
};

struct IterationRecord {
    std::size_t n = 0;
    double rho_minus = 0.0;
    double rho_plus = 0.0;
    double gamma = 0.0;
    std::optional<double> lambda;  // LR only

    [[nodiscard]] double half_width() const noexcept { return 0.5 * (rho_plus - rho_minus); }
};

struct RelaxResult {
    double rho_lo = 0.0;
    double rho_hi = 0.0;
    double rho_mid = 0.0;
    /// The norm at which the final bracket was computed.
    AngularNorm norm;
    std::vector<IterationRecord> trace;
    Status status = Status::converged;
    RelaxConfig config;

    /// Number of relaxation steps applied before the final bracket.
    [[nodiscard]] std::size_t steps() const noexcept { return trace.empty() ? 0 : trace.back().n; }
};

struct Bounds {
    double rho_minus;
    double rho_plus;
};

/// Grid extrema of max_i ||A_i x|| / ||x||.
[[nodiscard]] Bounds bounds(const AngularNorm& nm, const MatrixSet& family);

/// gamma_n of the LR scheme: max_i ||A_i e||.
[[nodiscard]] double gamma_lr(const AngularNorm& nm, const MatrixSet& family, const Vec2& e);

/// gamma_n of the MR scheme: the chosen average of rho- and rho+.
[[nodiscard]] double gamma_mr(double rho_minus, double rho_plus, Averaging kind);

/// One LR step from norm n: returns norm n+1 and the record for step n.
[[nodiscard]] std::pair<AngularNorm, IterationRecord> lr_step(const AngularNorm& nm, const MatrixSet& family,
                                                              const RelaxConfig& cfg, std::size_t n);

/// One MR step from norm n: returns norm n+1 and the record for step n.
[[nodiscard]] std::pair<AngularNorm, IterationRecord> mr_step(const AngularNorm& nm, const MatrixSet& family,
                                                              const RelaxConfig& cfg, std::size_t n);

/// Called with every norm ||.||_n and its record, in order, during `run`.
using StepObserver = std::function<void(const AngularNorm&, const IterationRecord&)>;

/**
 * @brief Iterate until (rho+ - rho-)/2 <= tol or max_iters steps.
 *
 * A reducible family yields status not_irreducible_rejected (empty trace,
 * NaN bracket) unless cfg.force is set.
 */
[[nodiscard]] RelaxResult run(const MatrixSet& family, const RelaxConfig& cfg, const StepObserver& observer = {});

/// The starting norm ||.||_0 for a configuration, normalized at e.
[[nodiscard]] AngularNorm initial_norm(const RelaxConfig& cfg);

}  // namespace jsr
