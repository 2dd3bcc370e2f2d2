#include "format.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <sstream>

#include "rholat/errors.hpp"

namespace rholat::cli {

using nlohmann::ordered_json;

std::optional<Format> parse_format(const std::string& s)
{
    if (s == "json")
        return Format::json;
    if (s == "csv")
        return Format::csv;
    if (s == "table")
        return Format::table;
    return std::nullopt;
}

std::string format_double(double v)
{
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

ordered_json rational_json(const Rational& r)
{
    return ordered_json{{"num", r.num().get_str()}, {"den", r.den().get_str()}};
}

std::optional<double> OutputRecord::route_agreement() const
{
    if (!exact || !numeric)
        return std::nullopt;
    return std::abs(*numeric - exact->to_double());
}

namespace {

std::string csv_escape(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

std::string join(const std::vector<std::string>& cells)
{
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i)
            out += ',';
        out += csv_escape(cells[i]);
    }
    return out;
}

template <std::size_t N>
ordered_json ranks_json(const GradedRanks<N>& r)
{
    ordered_json a = ordered_json::array();
    for (auto v : r.ranks)
        a.push_back(v);
    return a;
}

template <std::size_t N>
std::string ranks_text(const GradedRanks<N>& r)
{
    std::string out = "(";
    for (std::size_t i = 0; i < N; ++i)
        out += (i ? "," : "") + std::to_string(r.ranks[i]);
    return out + ")";
}

} // namespace

std::string render(const OutputRecord& rec, Format fmt)
{
    const auto agreement = rec.route_agreement();
    switch (fmt) {
    case Format::json: {
        ordered_json params = ordered_json::object();
        for (const auto& [k, v] : rec.params)
            params[k] = v;
        ordered_json j;
        j["command"] = rec.command;
        j["params"] = params;
        j["exact"] = rec.exact ? rational_json(*rec.exact) : ordered_json(nullptr);
        j["float"] = rec.numeric ? ordered_json(*rec.numeric) : ordered_json(nullptr);
        j["diagnostics"] = {{"terms", rec.diag.terms},
                            {"skipped", rec.diag.skipped},
                            {"route_agreement", agreement ? ordered_json(*agreement) : ordered_json(nullptr)}};
        j["tolerance"] = rec.tolerance;
        if (!rec.formula.empty())
            j["formula"] = rec.formula;
        if (!rec.notes.empty())
            j["notes"] = rec.notes;
        return j.dump(2) + "\n";
    }
    case Format::csv: {
        std::vector<std::string> head{"command"}, row{rec.command};
        for (const auto& [k, v] : rec.params) {
            head.push_back(k);
            row.push_back(v);
        }
        head.insert(head.end(), {"exact_num", "exact_den", "float", "terms", "skipped",
                                 "route_agreement", "tolerance"});
        row.push_back(rec.exact ? rec.exact->num().get_str() : "");
        row.push_back(rec.exact ? rec.exact->den().get_str() : "");
        row.push_back(rec.numeric ? format_double(*rec.numeric) : "");
        row.push_back(std::to_string(rec.diag.terms));
        row.push_back(std::to_string(rec.diag.skipped));
        row.push_back(agreement ? format_double(*agreement) : "");
        row.push_back(format_double(rec.tolerance));
        return join(head) + "\n" + join(row) + "\n";
    }
    case Format::table: {
        std::ostringstream os;
        os << rec.command;
        for (const auto& [k, v] : rec.params)
            os << "  " << k << "=" << v;
        os << "\n";
        if (!rec.formula.empty())
            os << "  formula          " << rec.formula << "\n";
        os << "  exact            " << (rec.exact ? rec.exact->to_string() : "-") << "\n";
        os << "  float            " << (rec.numeric ? format_double(*rec.numeric) : "-") << "\n";
        os << "  terms/skipped    " << rec.diag.terms << "/" << rec.diag.skipped << "\n";
        os << "  route agreement  " << (agreement ? format_double(*agreement) : "-")
           << "  (tolerance " << format_double(rec.tolerance) << ")\n";
        for (const auto& n : rec.notes)
            os << "  note: " << n << "\n";
        return os.str();
    }
    }
    return {};
}

std::string render(const FloerReport& rep, Format fmt, bool with_table, double tolerance)
{
    const auto& s = rep.sphere;
    switch (fmt) {
    case Format::json: {
        ordered_json rows = ordered_json::array();
        for (const auto& r : rep.records) {
            rows.push_back({{"l1", RotationNumbers::l1},
                            {"l2", r.rot.l2},
                            {"l3", r.rot.l3},
                            {"e", r.e},
                            {"gr", r.gr.get_str()},
                            {"gr_mod8", r.gr_mod8},
                            {"rho", rational_json(r.rho)},
                            {"rho_float", r.rho_float},
                            {"mu", r.mu.get_str()},
                            {"mu_mod4", r.mu_mod4}});
        }
        ordered_json j;
        j["command"] = "floer";
        j["params"] = {{"p", s.p}, {"q", s.q}};
        j["seifert"] = {{"b1", rep.seifert.b1}, {"b2", rep.seifert.b2}, {"b3", rep.seifert.b3}};
        j["representations"] = rows;
        j["instanton_ranks"] = ranks_json(rep.instanton);
        j["signature"] = rep.signature;
        j["ic_natural_ranks"] = ranks_json(rep.ic_natural);
        j["tolerance"] = tolerance;
        return j.dump(2) + "\n";
    }
    case Format::csv: {
        std::ostringstream os;
        os << "kind,p,q,l1,l2,l3,e,gr,gr_mod8,rho_num,rho_den,rho_float,mu,mu_mod4\n";
        for (const auto& r : rep.records)
            os << "rep," << s.p << "," << s.q << "," << RotationNumbers::l1 << "," << r.rot.l2
               << "," << r.rot.l3 << "," << r.e << "," << r.gr.get_str() << "," << r.gr_mod8 << ","
               << r.rho.num().get_str() << "," << r.rho.den().get_str() << ","
               << format_double(r.rho_float) << "," << r.mu.get_str() << "," << r.mu_mod4 << "\n";
        os << "kind,p,q,b1,b2,b3,reps,signature";
        for (int i = 0; i < 8; ++i)
            os << ",I" << i;
        for (int i = 0; i < 4; ++i)
            os << ",IC" << i;
        os << "\nsummary," << s.p << "," << s.q << "," << rep.seifert.b1 << "," << rep.seifert.b2
           << "," << rep.seifert.b3 << "," << rep.records.size() << "," << rep.signature;
        for (auto v : rep.instanton.ranks)
            os << "," << v;
        for (auto v : rep.ic_natural.ranks)
            os << "," << v;
        os << "\n";
        return os.str();
    }
    case Format::table: {
        std::ostringstream os;
        os << "Sigma(2," << s.p << "," << s.q << ")  Seifert (b1,b2,b3) = (" << rep.seifert.b1
           << "," << rep.seifert.b2 << "," << rep.seifert.b3 << ")\n";
        os << "  irreducible representations  " << rep.records.size() << "\n";
        if (with_table) {
            os << "    (l1,l2,l3)        e          gr  gr%8         rho          mu  mu%4\n";
            for (const auto& r : rep.records) {
                std::ostringstream rot;
                rot << "(1," << r.rot.l2 << "," << r.rot.l3 << ")";
                char line[256];
                std::snprintf(line, sizeof line, "    %-12s %10lld %11s %5d %11s %11s %5d\n",
                              rot.str().c_str(), static_cast<long long>(r.e), r.gr.get_str().c_str(),
                              r.gr_mod8, r.rho.to_string().c_str(), r.mu.get_str().c_str(), r.mu_mod4);
                os << line;
            }
        }
        os << "  I+ ranks (mod 8)             " << ranks_text(rep.instanton) << "\n";
        os << "  signature of T(" << s.p << "," << s.q << ")        " << rep.signature << "\n";
        os << "  IC-natural ranks (mod 4)     " << ranks_text(rep.ic_natural) << "\n";
        return os.str();
    }
    }
    return {};
}

std::string sweep_header(const std::string& what)
{
    if (what == "lens")
        return "p,q,ell,involution,exact_num,exact_den,float,terms,skipped";
    if (what == "sums")
        return "p,q,ell,delta_num,delta_den,delta_tau,delta_float,delta_tau_float";
    std::string h = "p,q,reps";
    for (int i = 0; i < 8; ++i)
        h += ",I" + std::to_string(i);
    h += ",signature";
    for (int i = 0; i < 4; ++i)
        h += ",IC" + std::to_string(i);
    return h;
}

KeyedLine sweep_line(const LensRow& row, LineFormat fmt)
{
    if (fmt == LineFormat::jsonl) {
        ordered_json j{{"p", row.p},
                       {"q", row.q},
                       {"ell", row.ell},
                       {"involution", std::string(to_string(row.inv))},
                       {"exact", row.exact ? rational_json(*row.exact) : ordered_json(nullptr)},
                       {"float", row.numeric.value},
                       {"terms", row.numeric.terms},
                       {"skipped", row.numeric.skipped}};
        return {row.key, j.dump()};
    }
    return {row.key, join({std::to_string(row.p), std::to_string(row.q), std::to_string(row.ell),
                           std::string(to_string(row.inv)),
                           row.exact ? row.exact->num().get_str() : "",
                           row.exact ? row.exact->den().get_str() : "",
                           format_double(row.numeric.value), std::to_string(row.numeric.terms),
                           std::to_string(row.numeric.skipped)})};
}

KeyedLine sweep_line(const SumsRow& row, LineFormat fmt)
{
    if (fmt == LineFormat::jsonl) {
        ordered_json j{{"p", row.p},
                       {"q", row.q},
                       {"ell", row.ell},
                       {"delta", rational_json(row.delta)},
                       {"delta_tau", row.delta_tau},
                       {"delta_float", row.delta_float},
                       {"delta_tau_float", row.delta_tau_float}};
        return {row.key, j.dump()};
    }
    return {row.key, join({std::to_string(row.p), std::to_string(row.q), std::to_string(row.ell),
                           row.delta.num().get_str(), row.delta.den().get_str(),
                           std::to_string(row.delta_tau), format_double(row.delta_float),
                           format_double(row.delta_tau_float)})};
}

KeyedLine sweep_line(const FloerRow& row, LineFormat fmt)
{
    if (fmt == LineFormat::jsonl) {
        ordered_json j{{"p", row.p},
                       {"q", row.q},
                       {"reps", row.reps},
                       {"instanton_ranks", ranks_json(row.instanton)},
                       {"signature", row.signature},
                       {"ic_natural_ranks", ranks_json(row.ic_natural)}};
        return {row.key, j.dump()};
    }
    std::vector<std::string> cells{std::to_string(row.p), std::to_string(row.q),
                                   std::to_string(row.reps)};
    for (auto v : row.instanton.ranks)
        cells.push_back(std::to_string(v));
    cells.push_back(std::to_string(row.signature));
    for (auto v : row.ic_natural.ranks)
        cells.push_back(std::to_string(v));
    return {row.key, join(cells)};
}

std::optional<SweepKey> parse_sweep_key(const std::string& what, const std::string& line,
                                        LineFormat fmt)
{
    if (line.empty())
        return std::nullopt;
    const std::size_t arity = what == "lens" ? 4 : (what == "sums" ? 3 : 2);
    auto inv_index = [](const std::string& name) -> std::int64_t {
        const auto inv = parse_involution(name);
        require(inv.has_value(), "unknown involution '" + name + "' in existing output");
        return static_cast<std::int64_t>(*inv);
    };
    SweepKey key;
    if (fmt == LineFormat::jsonl) {
        ordered_json j;
        try {
            j = ordered_json::parse(line);
            key = {j.at("p").get<std::int64_t>(), j.at("q").get<std::int64_t>()};
            if (arity >= 3)
                key.push_back(j.at("ell").get<std::int64_t>());
            if (arity == 4)
                key.push_back(inv_index(j.at("involution").get<std::string>()));
        } catch (const nlohmann::json::exception& e) {
            throw DomainError(std::string("malformed sweep line: ") + e.what());
        }
        return key;
    }
    if (line.rfind("p,", 0) == 0)
        return std::nullopt;
    std::stringstream ss(line);
    std::string cell;
    while (key.size() < arity && std::getline(ss, cell, ',')) {
        if (key.size() == 3) {
            key.push_back(inv_index(cell));
            continue;
        }
        try {
            key.push_back(std::stoll(cell));
        } catch (const std::exception&) {
            throw DomainError("malformed sweep line: " + line);
        }
    }
    require(key.size() == arity, "malformed sweep line: " + line);
    return key;
}

} // namespace rholat::cli
