#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "rholat/cotan_float.hpp"
#include "rholat/floer.hpp"
#include "rholat/rational.hpp"
#include "rholat/sweep.hpp"

namespace rholat::cli {

enum class Format { json, csv, table };

std::optional<Format> parse_format(const std::string& s);

/// Shortest round-trip decimal form of a double.
std::string format_double(double v);

/// {"num": "...", "den": "..."}; decimal strings, never binary floats.
nlohmann::ordered_json rational_json(const Rational& r);

struct OutputRecord {
    std::string command;
    std::vector<std::pair<std::string, std::string>> params;
    std::optional<Rational> exact;
    std::optional<double> numeric;
    FloatSumResult diag;
    double tolerance = kDefaultTolerance;
    std::string formula;
    std::vector<std::string> notes;

    /// |float - exact|, or nullopt when either side is absent.
    std::optional<double> route_agreement() const;
};

std::string render(const OutputRecord& rec, Format fmt);
std::string render(const FloerReport& rep, Format fmt, bool with_table, double tolerance);

/// One sweep row as a line (no trailing newline), keyed for merging.
using KeyedLine = std::pair<SweepKey, std::string>;

enum class LineFormat { csv, jsonl };

std::string sweep_header(const std::string& what);
KeyedLine sweep_line(const LensRow& row, LineFormat fmt);
KeyedLine sweep_line(const SumsRow& row, LineFormat fmt);
KeyedLine sweep_line(const FloerRow& row, LineFormat fmt);

/// Recover the key of a previously written sweep line; nullopt for headers
/// and blank lines. Throws DomainError on malformed lines.
std::optional<SweepKey> parse_sweep_key(const std::string& what, const std::string& line,
                                        LineFormat fmt);

} // namespace rholat::cli
