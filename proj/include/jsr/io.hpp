#pragma once

/**
 * @file io.hpp
 * @brief Problem files, trace and norm CSV files, and SVG plots of unit spheres.
 *
 * Problem file (JSON):
 *
 *     {"label": "example 2",
 *      "matrices": [[["15/17", "-16/17"], ["4/17", "15/17"]],
 *                   [[0.8, 0.6], [-0.6, 0.8]]]}
 *
 * Entries are JSON numbers or strings holding a decimal or a "p/q" ratio.
 */
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "jsr/angular_norm.hpp"
#include "jsr/matrix.hpp"
#include "jsr/relax.hpp"

namespace jsr {

/// Malformed input text; the message carries the offending position.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A sink or file could not be written or read.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ProblemFile {
    std::optional<std::string> label;
    std::vector<std::string> labels;  // per matrix, may be empty
    std::vector<Matrix> matrices;

    [[nodiscard]] MatrixSet family() const { return MatrixSet(matrices); }
};

[[nodiscard]] ProblemFile parse_problem(std::string_view text);
[[nodiscard]] ProblemFile read_problem(const std::filesystem::path& path);

/// Parses "p/q" or a plain decimal to the nearest double.
[[nodiscard]] double parse_entry(std::string_view text);

/// Trace CSV version written in the header comment.
inline constexpr int kTraceFormatVersion = 1;

struct TraceFile {
    int version = 0;
    /// `# key=value` header lines, in file order keyed by name.
    std::map<std::string, std::string> header;
    std::vector<IterationRecord> rows;
};

/// Trace CSV: `#` comment lines with the configuration and outcome, then
/// `n,rho_minus,rho_plus,gamma,lambda` rows with 17 significant digits.
void write_trace(const RelaxResult& result, std::ostream& sink);
/// Parses and re-validates a trace: contiguous n from 0 and
/// rho_minus <= gamma <= rho_plus within 1e-9 on every row.
[[nodiscard]] TraceFile parse_trace(std::string_view text);

/// Norm CSV: header `phi,h`, one row per node, phi ascending from -pi.
void write_norm(const AngularNorm& nm, std::ostream& sink);
[[nodiscard]] AngularNorm parse_norm(std::string_view text);

/// Points u(phi_j) / h_j of the unit sphere {x : ||x|| = 1}, in node order.
[[nodiscard]] std::vector<Vec2> unit_sphere_points(const AngularNorm& nm);

/// SVG 1.1 document: the unit sphere as one closed path plus the Euclidean
/// unit circle as a guide, fitted into a size x size viewBox with 5% margin.
[[nodiscard]] std::string render_unit_sphere(const AngularNorm& nm, int size_px);

/// Writes `content` to `path`, throwing IoError on failure.
void write_file(const std::filesystem::path& path, std::string_view content);
[[nodiscard]] std::string read_file(const std::filesystem::path& path);

/// 17-significant-digit decimal used in all CSV output; round-trips exactly.
[[nodiscard]] std::string format_double(double value);

}  // namespace jsr
