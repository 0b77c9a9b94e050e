#include "jsr/relax.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace jsr {

namespace {

// ||e||_n must stay 1 to this accuracy along an LR run.
constexpr double kNormalizationTol = 1e-12;

Bounds bounds_from_image(const AngularNorm& nm, std::span<const double> image) {
    Bounds b{std::numeric_limits<double>::infinity(), 0.0};
    for (std::size_t j = 0; j < image.size(); ++j) {
        const double ratio = image[j] / nm[j];
        b.rho_minus = std::min(b.rho_minus, ratio);
        b.rho_plus = std::max(b.rho_plus, ratio);
    }
    return b;
}

void check_normalized(const AngularNorm& nm, const Vec2& e, const char* what) {
    const double at_e = nm(e);
    if (std::abs(at_e - 1.0) > kNormalizationTol)
        throw std::logic_error(std::string(what) + ": ||e|| = " + std::to_string(at_e) + ", expected 1");
}

}  // namespace

std::string_view to_string(Algorithm algorithm) {
    switch (algorithm) {
        case Algorithm::lr: return "lr";
        case Algorithm::mr: return "mr";
    }
    return "?";
}

std::string_view to_string(Averaging averaging) {
    switch (averaging) {
        case Averaging::arithmetic: return "arith";
        case Averaging::geometric: return "geom";
        case Averaging::harmonic: return "harm";
    }
    return "?";
}

std::string_view to_string(Status status) {
    switch (status) {
        case Status::converged: return "converged";
        case Status::max_iters_reached: return "max_iters_reached";
        case Status::not_irreducible_rejected: return "not_irreducible_rejected";
    }
    return "?";
}

void RelaxConfig::validate() const {
    if (!(lambda_lo > 0.0 && lambda_lo <= lambda_hi && lambda_hi < 1.0))
        throw std::invalid_argument("lambda bounds must satisfy 0 < lambda_lo <= lambda_hi < 1");
    const auto in_bounds = [this](double l) { return l >= lambda_lo && l <= lambda_hi; };
    if (!unsafe_direct) {
        if (lambda_sequence.empty() && !in_bounds(lambda))
            throw std::invalid_argument("lambda " + std::to_string(lambda) + " outside [lambda_lo, lambda_hi]");
        for (double l : lambda_sequence)
            if (!in_bounds(l))
                throw std::invalid_argument("lambda sequence entry " + std::to_string(l) +
                                            " outside [lambda_lo, lambda_hi]");
    }
    AngularNorm::check_node_count(node_count);
    if (!std::isfinite(e[0]) || !std::isfinite(e[1]) || (e[0] == 0.0 && e[1] == 0.0))
        throw std::invalid_argument("normalization vector e must be finite and nonzero");
    if (!AngularNorm::node_of(node_count, e))
        throw std::invalid_argument("normalization vector e must point along a grid node direction");
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    if (max_iters == 0) throw std::invalid_argument("iteration cap must be positive");
    if (initial_norm && initial_norm->node_count() != node_count)
        throw std::invalid_argument("initial norm has " + std::to_string(initial_norm->node_count()) +
                                    " nodes, configuration asks for " + std::to_string(node_count));
}

double RelaxConfig::lambda_at(std::size_t n) const {
    if (unsafe_direct) return 0.0;
    if (lambda_sequence.empty()) return lambda;
    return lambda_sequence[n % lambda_sequence.size()];
}

Bounds bounds(const AngularNorm& nm, const MatrixSet& family) {
    const auto image = image_profile(nm, family);
    return bounds_from_image(nm, image);
}

double gamma_lr(const AngularNorm& nm, const MatrixSet& family, const Vec2& e) {
    if (e[0] == 0.0 && e[1] == 0.0) throw std::invalid_argument("normalization vector e must be nonzero");
    return max_image(nm, family, e);
}

double gamma_mr(double rho_minus, double rho_plus, Averaging kind) {
    if (!(rho_minus > 0.0) || !(rho_plus > 0.0)) throw std::invalid_argument("averaging needs positive arguments");
    if (rho_minus == rho_plus) return rho_minus;
    double g = 0.0;
    switch (kind) {
        case Averaging::arithmetic: g = 0.5 * (rho_minus + rho_plus); break;
        case Averaging::geometric: g = std::sqrt(rho_minus * rho_plus); break;
        case Averaging::harmonic: g = 2.0 * rho_minus * rho_plus / (rho_minus + rho_plus); break;
    }
    // round-off must not push the average outside its arguments
    return std::clamp(g, std::min(rho_minus, rho_plus), std::max(rho_minus, rho_plus));
}

std::pair<AngularNorm, IterationRecord> lr_step(const AngularNorm& nm, const MatrixSet& family, const RelaxConfig& cfg,
                                                std::size_t n) {
    check_normalized(nm, cfg.e, "lr_step precondition");
    const auto image = image_profile(nm, family);
    const Bounds b = bounds_from_image(nm, image);
    const double gamma = gamma_lr(nm, family, cfg.e);
    const double lambda = cfg.lambda_at(n);
    AngularNorm next = detail::linear_update(nm, image, lambda, gamma);
    check_normalized(next, cfg.e, "lr_step");
    return {std::move(next), IterationRecord{n, b.rho_minus, b.rho_plus, gamma, lambda}};
}

std::pair<AngularNorm, IterationRecord> mr_step(const AngularNorm& nm, const MatrixSet& family, const RelaxConfig& cfg,
                                                std::size_t n) {
    check_normalized(nm, cfg.e, "mr_step precondition");
    const auto image = image_profile(nm, family);
    const Bounds b = bounds_from_image(nm, image);
    const double gamma = gamma_mr(b.rho_minus, b.rho_plus, cfg.averaging);
    AngularNorm next = normalize(detail::max_update(nm, image, gamma), cfg.e);
    return {std::move(next), IterationRecord{n, b.rho_minus, b.rho_plus, gamma, std::nullopt}};
}

AngularNorm initial_norm(const RelaxConfig& cfg) {
    return normalize(cfg.initial_norm ? *cfg.initial_norm : euclidean(cfg.node_count), cfg.e);
}

RelaxResult run(const MatrixSet& family, const RelaxConfig& cfg, const StepObserver& observer) {
    cfg.validate();
    if (family.dim() != 2) throw UnsupportedDimensionError(family.dim());
    AngularNorm norm = initial_norm(cfg);

    if (!cfg.force && !is_irreducible(family)) {
        const double nan = std::numeric_limits<double>::quiet_NaN();
        return RelaxResult{nan, nan, nan, std::move(norm), {}, Status::not_irreducible_rejected, cfg};
    }

    const auto step = cfg.algorithm == Algorithm::lr ? lr_step : mr_step;
    std::vector<IterationRecord> trace;
    for (std::size_t n = 0;; ++n) {
        auto [next, record] = step(norm, family, cfg, n);
        if (observer) observer(norm, record);
        trace.push_back(record);
        const bool converged = record.half_width() <= cfg.tol;
        if (converged || n == cfg.max_iters) {
            return RelaxResult{record.rho_minus,
                               record.rho_plus,
                               0.5 * (record.rho_minus + record.rho_plus),
                               std::move(norm),
                               std::move(trace),
                               converged ? Status::converged : Status::max_iters_reached,
                               cfg};
        }
        norm = std::move(next);
    }
}

}  // namespace jsr
