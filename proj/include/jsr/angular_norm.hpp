#pragma once

/**
 * @file angular_norm.hpp
 * @brief Planar norms stored as piecewise-linear radial profiles.
 *
 * A norm on R^2 is determined by its values on the unit circle,
 * h(phi) = ||(cos phi, sin phi)||. AngularNorm keeps h at N equally spaced
 * nodes phi_j = -pi + 2*pi*j/N and interpolates linearly in angle between
 * them; ||x|| = |x|_2 * h(atan2(x2, x1)).
 *
 * N is even and at least 8, so phi = 0 and phi = +-pi/2 are nodes and every
 * node has its antipode on the grid. Central symmetry h_j = h_{j+N/2} is
 * enforced on construction.
 */
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "jsr/matrix.hpp"

namespace jsr {

class AngularNorm {
public:
    /// Profile from node values. Antipodal pairs are averaged; values must be
    /// positive and finite, and the count even and >= 8.
    explicit AngularNorm(std::vector<double> values);

    /// Profile sampled from a function of the node angle.
    template <class F>
    static AngularNorm sampled(std::size_t node_count, F&& profile) {
        check_node_count(node_count);
        std::vector<double> values(node_count);
        for (std::size_t j = 0; j < node_count; ++j) values[j] = profile(node_angle(node_count, j));
        return AngularNorm(std::move(values));
    }

    [[nodiscard]] std::size_t node_count() const noexcept { return values_.size(); }
    [[nodiscard]] std::span<const double> values() const noexcept { return values_; }
    [[nodiscard]] double operator[](std::size_t j) const { return values_[j]; }

    /// Angle of node j: -pi + 2*pi*j/N.
    [[nodiscard]] static double node_angle(std::size_t node_count, std::size_t j);
    /// Unit vector (cos phi_j, sin phi_j).
    [[nodiscard]] static Vec2 node_direction(std::size_t node_count, std::size_t j);
    /// Index of the node whose direction matches x, if x points exactly along a node.
    [[nodiscard]] static std::optional<std::size_t> node_of(std::size_t node_count, const Vec2& x);

    /// Norm of x by angular interpolation of the profile; 0 at the origin.
    [[nodiscard]] double operator()(const Vec2& x) const noexcept;

    static void check_node_count(std::size_t node_count);

    friend bool operator==(const AngularNorm&, const AngularNorm&) = default;

private:
    std::vector<double> values_;
};

/// The Euclidean norm: h_j = 1.
[[nodiscard]] AngularNorm euclidean(std::size_t node_count);

/// Norm evaluation; same as nm(x).
[[nodiscard]] double eval(const AngularNorm& nm, const Vec2& x);

/// max_i ||A_i x|| in the given norm.
[[nodiscard]] double max_image(const AngularNorm& nm, const MatrixSet& family, const Vec2& x);

/// max_image at every node direction: the profile of x -> max_i ||A_i x||.
[[nodiscard]] std::vector<double> image_profile(const AngularNorm& nm, const MatrixSet& family);

/**
 * @brief Linear relaxation update.
 *
 * h'_j = lambda * h_j + (1 - lambda) / gamma * max_i ||A_i u(phi_j)||.
 * Requires lambda in (0, 1) and gamma > 0.
 */
[[nodiscard]] AngularNorm combine_linear(const AngularNorm& nm, const MatrixSet& family, double lambda, double gamma);

/**
 * @brief Max relaxation update.
 *
 * h'_j = max(h_j, max_i ||A_i u(phi_j)|| / gamma). Requires gamma > 0.
 */
[[nodiscard]] AngularNorm combine_max(const AngularNorm& nm, const MatrixSet& family, double gamma);

/// Rescaled so that ||e|| = 1 (exactly, when e lies along a node).
[[nodiscard]] AngularNorm normalize(const AngularNorm& nm, const Vec2& e);

/// Grid eccentricity max_j(h1_j/h2_j) / min_j(h1_j/h2_j) >= 1.
[[nodiscard]] double eccentricity(const AngularNorm& n1, const AngularNorm& n2);

namespace detail {

// The update formulas on a precomputed image profile. `linear_update`
// accepts lambda in [0, 1) so the unsafe direct scheme can share it.
AngularNorm linear_update(const AngularNorm& nm, std::span<const double> image, double lambda, double gamma);
AngularNorm max_update(const AngularNorm& nm, std::span<const double> image, double gamma);

}  // namespace detail

}  // namespace jsr
