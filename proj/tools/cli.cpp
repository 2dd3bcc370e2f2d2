#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "format.hpp"
#include "rholat/cotan_float.hpp"
#include "rholat/errors.hpp"
#include "rholat/exact_arith.hpp"
#include "rholat/floer.hpp"
#include "rholat/lattice_exact.hpp"
#include "rholat/lens_rho.hpp"
#include "rholat/sweep.hpp"
#include "rholat/verify.hpp"

namespace rholat::cli {

namespace {

class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

const std::map<std::string, Format> kFormats{
    {"json", Format::json}, {"csv", Format::csv}, {"table", Format::table}};
const std::map<std::string, std::string> kInvolutionNames{
    {"A", "A"}, {"B", "B"}, {"Bprime", "Bprime"}, {"B'", "Bprime"}};
const std::map<std::string, LineFormat> kLineFormats{{"csv", LineFormat::csv},
                                                     {"jsonl", LineFormat::jsonl}};

const char* kFormulaB = "-(2/p) sum_k cot(pi k/p) tan(pi q k/p) sin^2(pi k l/p)";
const char* kFormulaBprime = "-(2/p) sum_k tan(pi k/p) cot(pi q k/p) sin^2(pi k l/p)";

void check_agreement(const OutputRecord& rec)
{
    const auto gap = rec.route_agreement();
    if (gap && !(*gap <= rec.tolerance)) {
        std::ostringstream os;
        os << rec.command << ": float and exact routes differ by " << format_double(*gap)
           << " (tolerance " << format_double(rec.tolerance) << ")";
        throw ConsistencyError(os.str());
    }
}

struct LensArgs {
    std::int64_t p = 0, q = 0, ell = 0;
    Involution inv = Involution::B;
    Format fmt = Format::json;
    double tol = kDefaultTolerance;
};

OutputRecord lens_record(const LensArgs& a)
{
    const auto space = LensSpace::make(a.p, a.q);
    const auto rep = U1Rep::make(space, a.ell);
    OutputRecord rec;
    rec.command = "lens-rho";
    rec.params = {{"p", std::to_string(a.p)},
                  {"q", std::to_string(a.q)},
                  {"l", std::to_string(a.ell)},
                  {"involution", std::string(to_string(a.inv))}};
    rec.tolerance = a.tol;
    rec.diag = rho_lens_float(space, rep, a.inv);
    rec.numeric = rec.diag.value;
    rec.exact = rho_lens_exact(space, rep, a.inv);
    switch (a.inv) {
    case Involution::A:
        rec.formula = "0 (diagonal representation)";
        break;
    case Involution::B:
        rec.formula = kFormulaB;
        break;
    case Involution::Bprime:
        rec.formula = kFormulaBprime;
        break;
    }
    if (!rec.exact)
        rec.notes.push_back("even p: no exact route; summands with singular tan omitted");
    check_agreement(rec);
    return rec;
}

struct SumArgs {
    std::string which;
    std::int64_t p = 0, q = 0, ell = 0, b = 0, twob = 0;
    Format fmt = Format::json;
    double tol = kDefaultTolerance;
};

OutputRecord sums_record(const SumArgs& a)
{
    OutputRecord rec;
    rec.command = "sums " + a.which;
    rec.tolerance = a.tol;
    if (a.which == "delta" || a.which == "delta-tau") {
        require(a.p >= 2, "p must be >= 2");
        require(std::gcd(a.p, a.q) == 1, "gcd(p, q) must be 1");
        rec.params = {{"p", std::to_string(a.p)}, {"q", std::to_string(a.q)},
                      {"l", std::to_string(a.ell)}};
        const bool tau = a.which == "delta-tau";
        rec.diag = tau ? delta_tau_float(a.p, a.q, a.ell) : delta_float(a.p, a.q, a.ell);
        rec.numeric = rec.diag.value;
        rec.formula = tau ? "-(2/p) sum_k cot(pi k/p) tan(pi q k/p) sin^2(pi k l/p)"
                          : "-(2/p) sum_k cot(pi k/p) cot(pi q k/p) sin^2(pi k l/p)";
        if (a.p % 2 == 0) {
            if (tau)
                rec.notes.push_back("even p: no exact route; summands with singular tan omitted");
            else
                rec.notes.push_back("even p: no exact route");
        } else if (mod_floor(a.ell, a.p) == 0) {
            rec.exact = Rational(0);
            rec.notes.push_back("l = 0 mod p: every summand vanishes");
        } else {
            const auto l = normalize_ell(a.p, a.ell);
            rec.exact = tau ? Rational(delta_tau_exact(a.p, a.q, l)) : delta_exact(a.p, a.q, l);
        }
    } else if (a.which == "dedekind-D") {
        require(a.p >= 2, "p must be >= 2");
        require(std::gcd(a.p, a.b) == 1, "gcd(p, b) must be 1");
        rec.params = {{"p", std::to_string(a.p)}, {"b", std::to_string(a.b)}};
        rec.formula = "16 s(2b, p) - 8 s(b, p)";
        rec.diag = dedekind_D_float(a.p, a.b);
        rec.numeric = rec.diag.value;
        if (a.p % 2 == 1)
            rec.exact = dedekind_D_exact(a.p, a.b);
        else
            rec.notes.push_back("even p: no exact route; summands with singular tan omitted");
    } else {
        rec.params = {{"q", std::to_string(a.q)}, {"twob", std::to_string(a.twob)},
                      {"l", std::to_string(a.ell)}};
        rec.formula = "sum of bracket indicators over the Dieter sequences, mod 4";
        rec.exact = Rational(lawson_N_mod4(a.q, a.twob, a.ell));
    }
    check_agreement(rec);
    return rec;
}

struct FloerArgs {
    std::int64_t p = 0, q = 0;
    Format fmt = Format::table;
    bool table = false;
    double tol = kDefaultTolerance;
    int jobs = 0;
};

struct SweepArgs {
    std::string what = "lens";
    std::string p_range, q_range;
    int jobs = 0;
    std::string out = "-";
    LineFormat fmt = LineFormat::csv;
    bool skip_existing = false;
    bool serial = false;
    double tol = kDefaultTolerance;
};

std::map<SweepKey, std::string> read_existing(const SweepArgs& a)
{
    std::map<SweepKey, std::string> lines;
    if (a.out == "-")
        throw DomainError("--skip-existing needs --out FILE");
    std::ifstream in(a.out);
    if (!in)
        return lines; // nothing computed yet
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (auto key = parse_sweep_key(a.what, line, a.fmt))
            lines.emplace(std::move(*key), line);
    }
    if (in.bad())
        throw IoError("cannot read " + a.out);
    return lines;
}

template <class Row>
void collect(const std::vector<Row>& rows, LineFormat fmt, std::map<SweepKey, std::string>& lines)
{
    for (const auto& row : rows) {
        auto [key, line] = sweep_line(row, fmt);
        lines[std::move(key)] = std::move(line);
    }
}

void run_sweep(const SweepArgs& a, std::ostream& out)
{
    const auto pr = IntRange::parse(a.p_range);
    const auto qr = IntRange::parse(a.q_range);

    std::map<SweepKey, std::string> lines;
    std::set<SweepKey> skip;
    if (a.skip_existing) {
        lines = read_existing(a);
        for (const auto& [k, _] : lines)
            skip.insert(k);
    }

    SweepOptions opt;
    opt.exec = a.serial ? Execution::serial : Execution::parallel;
    opt.jobs = a.jobs > 0 ? a.jobs : default_jobs();
    opt.tolerance = a.tol;
    opt.skip = &skip;
    if (a.what == "lens")
        collect(sweep_lens(pr, qr, opt), a.fmt, lines);
    else if (a.what == "sums")
        collect(sweep_sums(pr, qr, opt), a.fmt, lines);
    else
        collect(sweep_floer(pr, qr, opt), a.fmt, lines);

    std::ostringstream body;
    if (!lines.empty() && a.fmt == LineFormat::csv)
        body << sweep_header(a.what) << "\n";
    for (const auto& [_, line] : lines)
        body << line << "\n";

    if (a.out == "-") {
        out << body.str();
        return;
    }
    const std::string tmp = a.out + ".tmp";
    {
        std::ofstream f(tmp, std::ios::trunc);
        if (!f)
            throw IoError("cannot open " + tmp + " for writing");
        f << body.str();
        if (!f.flush())
            throw IoError("write to " + tmp + " failed");
    }
    if (std::rename(tmp.c_str(), a.out.c_str()) != 0)
        throw IoError("cannot replace " + a.out);
}

int run_verify_cmd(std::int64_t max_p, double tol, int jobs, std::ostream& out)
{
    VerifyOptions opt;
    opt.max_p = max_p;
    opt.tolerance = tol;
    opt.jobs = jobs > 0 ? jobs : default_jobs();
    const auto report = run_verify(opt);
    for (const auto& c : report.checks) {
        out << (c.passed() ? "PASS " : "FAIL ") << c.name << "  cases=" << c.cases
            << " failures=" << c.failures;
        if (!c.passed())
            out << "  first counterexample: " << c.counterexample;
        out << "\n";
    }
    out << (report.passed() ? "verify: all checks passed" : "verify: FAILED") << "\n";
    return report.passed() ? kOk : kVerifyFailed;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Equivariant rho-invariants of lens spaces, cotangent sums and Floer gradings "
                 "of Sigma(2,p,q)",
                 "rholat"};
    app.require_subcommand(1);

    LensArgs lens;
    auto* lens_cmd = app.add_subcommand("lens-rho", "rho-invariant of L(p,q) under an involution");
    lens_cmd->add_option("-p", lens.p, "order of the lens space")->required();
    lens_cmd->add_option("-q", lens.q, "lens space parameter, coprime to p")->required();
    lens_cmd->add_option("-l", lens.ell, "weight of the U(1) representation")->required();
    std::string inv_name = "B";
    lens_cmd->add_option("--involution", inv_name, "A, B or Bprime")
        ->transform(CLI::CheckedTransformer(kInvolutionNames));
    lens_cmd->add_option("--format", lens.fmt, "json, csv or table")
        ->transform(CLI::CheckedTransformer(kFormats));
    lens_cmd->add_option("--tolerance", lens.tol, "allowed float/exact gap")
        ->check(CLI::NonNegativeNumber);

    SumArgs sums;
    auto* sums_cmd = app.add_subcommand("sums", "individual cotangent and Dedekind-type sums");
    sums_cmd->require_subcommand(1);
    auto add_common = [&](CLI::App* c) {
        c->add_option("--format", sums.fmt, "json, csv or table")
            ->transform(CLI::CheckedTransformer(kFormats));
        c->add_option("--tolerance", sums.tol, "allowed float/exact gap")
            ->check(CLI::NonNegativeNumber);
    };
    for (const char* name : {"delta", "delta-tau"}) {
        auto* c = sums_cmd->add_subcommand(name, std::string(name) + "(p; q, l)");
        c->add_option("-p", sums.p)->required();
        c->add_option("-q", sums.q)->required();
        c->add_option("-l", sums.ell)->required();
        add_common(c);
    }
    auto* dd = sums_cmd->add_subcommand("dedekind-D", "D(p; b) = 16 s(2b,p) - 8 s(b,p)");
    dd->add_option("-p", sums.p)->required();
    dd->add_option("-b", sums.b)->required();
    add_common(dd);
    auto* ln = sums_cmd->add_subcommand("lawson-N", "Lawson's count N(q, 2b, l) mod 4");
    ln->add_option("-q", sums.q)->required();
    ln->add_option("--twob", sums.twob)->required();
    ln->add_option("-l", sums.ell)->required();
    add_common(ln);

    FloerArgs floer;
    auto* floer_cmd = app.add_subcommand("floer", "I+ of Sigma(2,p,q) and IC-natural of T(p,q)");
    floer_cmd->add_option("-p", floer.p)->required();
    floer_cmd->add_option("-q", floer.q)->required();
    floer_cmd->add_option("--format", floer.fmt, "table, json or csv")
        ->transform(CLI::CheckedTransformer(kFormats));
    floer_cmd->add_flag("--table", floer.table, "list every representation in table output");
    floer_cmd->add_option("--tolerance", floer.tol)->check(CLI::NonNegativeNumber);
    floer_cmd->add_option("--jobs", floer.jobs, "worker threads (default RHO_LATTICE_JOBS)")
        ->check(CLI::NonNegativeNumber);

    SweepArgs sweep;
    auto* sweep_cmd = app.add_subcommand("sweep", "evaluate a parameter grid");
    sweep_cmd->add_option("--what", sweep.what, "lens, floer or sums")
        ->check(CLI::IsMember({"lens", "floer", "sums"}));
    sweep_cmd->add_option("--p-range", sweep.p_range, "first:last[:step]")->required();
    sweep_cmd->add_option("--q-range", sweep.q_range, "first:last[:step]")->required();
    sweep_cmd->add_option("--jobs", sweep.jobs, "worker threads (default RHO_LATTICE_JOBS)")
        ->check(CLI::NonNegativeNumber);
    sweep_cmd->add_option("--out", sweep.out, "output file, - for stdout");
    sweep_cmd->add_option("--format", sweep.fmt, "csv or jsonl")
        ->transform(CLI::CheckedTransformer(kLineFormats));
    sweep_cmd->add_flag("--skip-existing", sweep.skip_existing,
                        "keep rows already in --out and compute only the missing keys");
    sweep_cmd->add_flag("--serial", sweep.serial, "use the serial reference path");
    sweep_cmd->add_option("--tolerance", sweep.tol)->check(CLI::NonNegativeNumber);

    std::int64_t max_p = 51;
    double verify_tol = kDefaultTolerance;
    int verify_jobs = 0;
    auto* verify_cmd = app.add_subcommand("verify", "cross-check every route against the others");
    verify_cmd->add_option("--max-p", max_p)->check(CLI::Range(std::int64_t{3}, std::int64_t{100000}));
    verify_cmd->add_option("--tolerance", verify_tol)->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--jobs", verify_jobs)->check(CLI::NonNegativeNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kDomainError;
    }

    try {
        if (*lens_cmd) {
            lens.inv = *parse_involution(inv_name);
            out << render(lens_record(lens), lens.fmt);
        } else if (*sums_cmd) {
            for (auto* sub : sums_cmd->get_subcommands())
                sums.which = sub->get_name();
            out << render(sums_record(sums), sums.fmt);
        } else if (*floer_cmd) {
            const auto s = BrieskornSphere::make(floer.p, floer.q);
            const int jobs = floer.jobs > 0 ? floer.jobs : default_jobs();
            const auto rep = floer_report(s, Execution::parallel, jobs, floer.tol);
            out << render(rep, floer.fmt, floer.table, floer.tol);
        } else if (*sweep_cmd) {
            run_sweep(sweep, out);
        } else if (*verify_cmd) {
            return run_verify_cmd(max_p, verify_tol, verify_jobs, out);
        }
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return kDomainError;
    } catch (const ConsistencyError& e) {
        err << "consistency error: " << e.what() << "\n";
        return kConsistencyError;
    } catch (const IoError& e) {
        err << "i/o error: " << e.what() << "\n";
        return kIoError;
    }
    return kOk;
}

} // namespace rholat::cli
