#include "jsr/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace jsr {

namespace {

constexpr std::string_view kTraceMagic = "jsr-relax trace v";
constexpr std::string_view kTraceColumns = "n,rho_minus,rho_plus,gamma,lambda";
constexpr std::string_view kNormColumns = "phi,h";

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::optional<double> to_double(std::string_view s) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    if (s.empty()) return std::nullopt;
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

std::vector<std::string_view> lines_of(std::string_view text) {
    auto lines = split(text, '\n');
    if (!lines.empty() && lines.back().empty()) lines.pop_back();
    for (auto& line : lines)
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    return lines;
}

double field(std::string_view s, std::size_t line_no, const char* name) {
    const auto v = to_double(s);
    if (!v) throw ParseError("line " + std::to_string(line_no) + ": bad " + name + " value '" + std::string(s) + "'");
    return *v;
}

std::string position(std::size_t m, std::size_t row, std::size_t col) {
    return "matrix " + std::to_string(m + 1) + ", row " + std::to_string(row + 1) + ", column " +
           std::to_string(col + 1);
}

std::string describe(const RelaxConfig& cfg) {
    if (!cfg.lambda_sequence.empty()) {
        std::string seq;
        for (std::size_t k = 0; k < cfg.lambda_sequence.size(); ++k) {
            if (k) seq += ';';
            seq += format_double(cfg.lambda_sequence[k]);
        }
        return seq;
    }
    return format_double(cfg.lambda);
}

}  // namespace

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

double parse_entry(std::string_view text) {
    const auto s = trim(text);
    double value = 0.0;
    if (const auto slash = s.find('/'); slash != std::string_view::npos) {
        const auto num = to_double(s.substr(0, slash));
        const auto den = to_double(s.substr(slash + 1));
        if (!num || !den) throw ParseError("malformed ratio '" + std::string(text) + "'");
        if (*den == 0.0) throw ParseError("zero denominator in '" + std::string(text) + "'");
        value = *num / *den;
    } else {
        const auto v = to_double(s);
        if (!v) throw ParseError("malformed number '" + std::string(text) + "'");
        value = *v;
    }
    if (!std::isfinite(value)) throw ParseError("non-finite entry '" + std::string(text) + "'");
    return value;
}

ProblemFile parse_problem(std::string_view text) {
    using nlohmann::json;
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("problem file: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("problem file: top level must be an object");
    ProblemFile problem;
    if (auto it = doc.find("label"); it != doc.end()) {
        if (!it->is_string()) throw ParseError("problem file: 'label' must be a string");
        problem.label = it->get<std::string>();
    }
    const auto mats = doc.find("matrices");
    if (mats == doc.end() || !mats->is_array()) throw ParseError("problem file: 'matrices' must be an array");
    if (mats->empty()) throw ParseError("problem file: 'matrices' is empty");

    std::size_t dim = 0;
    for (std::size_t m = 0; m < mats->size(); ++m) {
        const json& rows = (*mats)[m];
        const std::string where = "matrix " + std::to_string(m + 1);
        if (!rows.is_array() || rows.empty()) throw ParseError(where + ": must be a nonempty array of rows");
        if (m == 0) dim = rows.size();
        if (rows.size() != dim)
            throw ParseError(where + ": has " + std::to_string(rows.size()) + " rows, expected " + std::to_string(dim));
        std::vector<double> entries;
        entries.reserve(dim * dim);
        for (std::size_t r = 0; r < dim; ++r) {
            const json& row = rows[r];
            if (!row.is_array())
                throw ParseError(where + ", row " + std::to_string(r + 1) + ": must be an array");
            if (row.size() != dim)
                throw ParseError(where + ", row " + std::to_string(r + 1) + ": has " + std::to_string(row.size()) +
                                 " entries, expected " + std::to_string(dim));
            for (std::size_t c = 0; c < dim; ++c) {
                const json& cell = row[c];
                double value = 0.0;
                if (cell.is_number()) {
                    value = cell.get<double>();
                    if (!std::isfinite(value)) throw ParseError(position(m, r, c) + ": non-finite entry");
                } else if (cell.is_string()) {
                    try {
                        value = parse_entry(cell.get<std::string>());
                    } catch (const ParseError& e) {
                        throw ParseError(position(m, r, c) + ": " + e.what());
                    }
                } else {
                    throw ParseError(position(m, r, c) + ": entry must be a number or a string");
                }
                entries.push_back(value);
            }
        }
        problem.matrices.emplace_back(dim, std::move(entries));
    }
    if (auto it = doc.find("labels"); it != doc.end()) {
        if (!it->is_array() || it->size() != problem.matrices.size())
            throw ParseError("problem file: 'labels' must be an array with one string per matrix");
        for (const auto& l : *it) {
            if (!l.is_string()) throw ParseError("problem file: 'labels' entries must be strings");
            problem.labels.push_back(l.get<std::string>());
        }
    }
    return problem;
}

ProblemFile read_problem(const std::filesystem::path& path) { return parse_problem(read_file(path)); }

void write_trace(const RelaxResult& result, std::ostream& sink) {
    const RelaxConfig& cfg = result.config;
    std::string out;
    out += "# " + std::string(kTraceMagic) + std::to_string(kTraceFormatVersion) + "\n";
    out += "# algorithm=" + std::string(to_string(cfg.algorithm)) + "\n";
    out += "# lambda=" + describe(cfg) + "\n";
    out += "# lambda_lo=" + format_double(cfg.lambda_lo) + "\n";
    out += "# lambda_hi=" + format_double(cfg.lambda_hi) + "\n";
    out += "# averaging=" + std::string(to_string(cfg.averaging)) + "\n";
    out += "# nodes=" + std::to_string(cfg.node_count) + "\n";
    out += "# e=" + format_double(cfg.e[0]) + "," + format_double(cfg.e[1]) + "\n";
    out += "# tol=" + format_double(cfg.tol) + "\n";
    out += "# max_iters=" + std::to_string(cfg.max_iters) + "\n";
    out += std::string("# initial_norm=") + (cfg.initial_norm ? "explicit" : "euclidean") + "\n";
    out += std::string("# force=") + (cfg.force ? "1" : "0") + "\n";
    out += std::string("# unsafe_direct=") + (cfg.unsafe_direct ? "1" : "0") + "\n";
    out += "# status=" + std::string(to_string(result.status)) + "\n";
    out += "# rho_lo=" + format_double(result.rho_lo) + "\n";
    out += "# rho_hi=" + format_double(result.rho_hi) + "\n";
    out += "# rho_mid=" + format_double(result.rho_mid) + "\n";
    out += std::string(kTraceColumns) + "\n";
    for (const auto& rec : result.trace) {
        out += std::to_string(rec.n) + "," + format_double(rec.rho_minus) + "," + format_double(rec.rho_plus) + "," +
               format_double(rec.gamma) + "," + (rec.lambda ? format_double(*rec.lambda) : std::string()) + "\n";
    }
    sink.write(out.data(), static_cast<std::streamsize>(out.size()));
    sink.flush();
    if (!sink) throw IoError("failed to write trace");
}

TraceFile parse_trace(std::string_view text) {
    TraceFile trace;
    const auto lines = lines_of(text);
    std::size_t i = 0;
    for (; i < lines.size() && !lines[i].empty() && lines[i].front() == '#'; ++i) {
        const auto body = trim(lines[i].substr(1));
        if (body.starts_with(kTraceMagic)) {
            const auto v = to_double(body.substr(kTraceMagic.size()));
            if (!v) throw ParseError("line " + std::to_string(i + 1) + ": bad format version");
            trace.version = static_cast<int>(*v);
            continue;
        }
        const auto eq = body.find('=');
        if (eq == std::string_view::npos) continue;
        trace.header.emplace(std::string(trim(body.substr(0, eq))), std::string(trim(body.substr(eq + 1))));
    }
    if (trace.version != kTraceFormatVersion)
        throw ParseError("trace: missing or unsupported format version (expected v" +
                         std::to_string(kTraceFormatVersion) + ")");
    if (i >= lines.size() || lines[i] != kTraceColumns)
        throw ParseError("line " + std::to_string(i + 1) + ": expected header '" + std::string(kTraceColumns) + "'");
    for (++i; i < lines.size(); ++i) {
        const std::size_t line_no = i + 1;
        const auto cols = split(lines[i], ',');
        if (cols.size() != 5)
            throw ParseError("line " + std::to_string(line_no) + ": expected 5 columns, got " +
                             std::to_string(cols.size()));
        IterationRecord rec;
        const auto n = to_double(cols[0]);
        if (!n || *n < 0 || *n != std::floor(*n)) throw ParseError("line " + std::to_string(line_no) + ": bad n");
        rec.n = static_cast<std::size_t>(*n);
        rec.rho_minus = field(cols[1], line_no, "rho_minus");
        rec.rho_plus = field(cols[2], line_no, "rho_plus");
        rec.gamma = field(cols[3], line_no, "gamma");
        if (!trim(cols[4]).empty()) rec.lambda = field(cols[4], line_no, "lambda");
        if (rec.n != trace.rows.size())
            throw ParseError("line " + std::to_string(line_no) + ": row index " + std::to_string(rec.n) +
                             " out of sequence (expected " + std::to_string(trace.rows.size()) + ")");
        if (!(rec.rho_minus <= rec.gamma + 1e-9 && rec.gamma <= rec.rho_plus + 1e-9))
            throw ParseError("line " + std::to_string(line_no) + ": gamma outside [rho_minus, rho_plus]");
        trace.rows.push_back(rec);
    }
    return trace;
}

void write_norm(const AngularNorm& nm, std::ostream& sink) {
    std::string out(kNormColumns);
    out += "\n";
    const std::size_t n = nm.node_count();
    for (std::size_t j = 0; j < n; ++j)
        out += format_double(AngularNorm::node_angle(n, j)) + "," + format_double(nm[j]) + "\n";
    sink.write(out.data(), static_cast<std::streamsize>(out.size()));
    sink.flush();
    if (!sink) throw IoError("failed to write norm");
}

AngularNorm parse_norm(std::string_view text) {
    const auto lines = lines_of(text);
    if (lines.empty() || lines[0] != kNormColumns)
        throw ParseError("line 1: expected header '" + std::string(kNormColumns) + "'");
    const std::size_t n = lines.size() - 1;
    try {
        AngularNorm::check_node_count(n);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("norm file: ") + e.what());
    }
    std::vector<double> values;
    values.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t line_no = j + 2;
        const auto cols = split(lines[j + 1], ',');
        if (cols.size() != 2) throw ParseError("line " + std::to_string(line_no) + ": expected 2 columns");
        const double phi = field(cols[0], line_no, "phi");
        if (std::abs(phi - AngularNorm::node_angle(n, j)) > 1e-9)
            throw ParseError("line " + std::to_string(line_no) + ": phi is off the uniform grid");
        const double h = field(cols[1], line_no, "h");
        if (!(h > 0.0) || !std::isfinite(h))
            throw ParseError("line " + std::to_string(line_no) + ": h must be positive and finite");
        values.push_back(h);
    }
    return AngularNorm(std::move(values));
}

std::vector<Vec2> unit_sphere_points(const AngularNorm& nm) {
    const std::size_t n = nm.node_count();
    std::vector<Vec2> points(n);
    for (std::size_t j = 0; j < n; ++j) {
        const Vec2 u = AngularNorm::node_direction(n, j);
        points[j] = {u[0] / nm[j], u[1] / nm[j]};
    }
    return points;
}

std::string render_unit_sphere(const AngularNorm& nm, int size_px) {
    if (size_px < 64) throw std::invalid_argument("SVG size must be at least 64 pixels");
    const auto points = unit_sphere_points(nm);
    double extent = 1.0;  // the guide circle must fit too
    for (const auto& p : points) extent = std::max(extent, std::hypot(p[0], p[1]));
    const double size = size_px;
    const double center = 0.5 * size;
    const double scale = 0.45 * size / extent;

    char buf[128];
    std::string svg = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    std::snprintf(buf, sizeof buf,
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"%d\" height=\"%d\" "
                  "viewBox=\"0 0 %d %d\">\n",
                  size_px, size_px, size_px, size_px);
    svg += buf;
    std::snprintf(buf, sizeof buf,
                  "<circle cx=\"%.4f\" cy=\"%.4f\" r=\"%.4f\" fill=\"none\" stroke=\"#999999\" "
                  "stroke-dasharray=\"4 3\"/>\n",
                  center, center, scale);
    svg += buf;
    svg += "<path fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1.5\" d=\"";
    for (std::size_t j = 0; j < points.size(); ++j) {
        std::snprintf(buf, sizeof buf, "%s%.4f %.4f ", j == 0 ? "M" : "L", center + scale * points[j][0],
                      center - scale * points[j][1]);
        svg += buf;
    }
    svg += "Z\"/>\n</svg>\n";
    return svg;
}

void write_file(const std::filesystem::path& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw IoError("failed writing '" + path.string() + "'");
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace jsr
