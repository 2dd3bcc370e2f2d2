#include <numeric>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "cli.hpp"
#include "format.hpp"
#include "rholat/errors.hpp"
#include "rholat/sweep.hpp"
#include "rholat/verify.hpp"

using namespace rholat;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run invoke(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::filesystem::path temp_file(const std::string& name)
{
    auto p = std::filesystem::temp_directory_path() / ("rholat_test_" + name);
    std::filesystem::remove(p);
    return p;
}

} // namespace

TEST(Sweep, RangeParsing)
{
    EXPECT_EQ(IntRange::parse("3:9:2").values(), (std::vector<std::int64_t>{3, 5, 7, 9}));
    EXPECT_EQ(IntRange::parse("5").values(), (std::vector<std::int64_t>{5}));
    EXPECT_TRUE(IntRange::parse("9:3").values().empty());
    EXPECT_THROW(IntRange::parse("a:b"), DomainError);
    EXPECT_THROW(IntRange::parse("1:5:0"), DomainError);
}

TEST(Sweep, ParallelMatchesSerial)
{
    SweepOptions serial{Execution::serial, 1, kDefaultTolerance, nullptr};
    SweepOptions parallel{Execution::parallel, 4, kDefaultTolerance, nullptr};
    const auto pr = IntRange::parse("3:25"), qr = IntRange::parse("1:25");

    const auto a = sweep_lens(pr, qr, serial), b = sweep_lens(pr, qr, parallel);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].key, b[i].key);
        EXPECT_EQ(a[i].exact, b[i].exact);
        EXPECT_EQ(a[i].numeric.value, b[i].numeric.value);
    }
    EXPECT_TRUE(std::is_sorted(a.begin(), a.end(), [](auto& x, auto& y) { return x.key < y.key; }));

    const auto fs = sweep_floer(IntRange::parse("3:15"), IntRange::parse("3:21"), serial);
    const auto fp = sweep_floer(IntRange::parse("3:15"), IntRange::parse("3:21"), parallel);
    ASSERT_EQ(fs.size(), fp.size());
    for (std::size_t i = 0; i < fs.size(); ++i) {
        EXPECT_EQ(fs[i].key, fp[i].key);
        EXPECT_EQ(fs[i].instanton, fp[i].instanton);
        EXPECT_EQ(fs[i].ic_natural, fp[i].ic_natural);
    }

    const auto ss = sweep_sums(IntRange::parse("3:21"), IntRange::parse("1:20"), serial);
    const auto sp = sweep_sums(IntRange::parse("3:21"), IntRange::parse("1:20"), parallel);
    ASSERT_EQ(ss.size(), sp.size());
    for (std::size_t i = 0; i < ss.size(); ++i) {
        EXPECT_EQ(ss[i].delta, sp[i].delta);
        EXPECT_EQ(ss[i].delta_tau, sp[i].delta_tau);
    }
}

TEST(Sweep, SkipSetDropsKeys)
{
    std::set<SweepKey> skip{{3, 5}, {5, 7}};
    SweepOptions opt{Execution::serial, 1, kDefaultTolerance, &skip};
    const auto rows = sweep_floer(IntRange::parse("3:5"), IntRange::parse("5:7"), opt);
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_EQ(rows[0].key, (SweepKey{3, 7}));
}

TEST(Sweep, ThreeFamilyIcRows)
{
    SweepOptions opt{Execution::parallel, 2, kDefaultTolerance, nullptr};
    const auto rows = sweep_floer(IntRange::parse("3"), IntRange::parse("7:121:6"), opt);
    ASSERT_EQ(rows.size(), 20u);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const std::int64_t n = static_cast<std::int64_t>(i) + 1;
        EXPECT_EQ(rows[i].ic_natural.ranks, (std::array<std::int64_t, 4>{2 * n + 1, 2 * n, 2 * n, 2 * n}));
    }
}

TEST(Cli, LensRhoJson)
{
    const auto r = invoke({"lens-rho", "-p", "3", "-q", "2", "-l", "2", "--involution", "B", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["exact"]["num"], "1");
    EXPECT_EQ(j["exact"]["den"], "1");
    EXPECT_EQ(j["tolerance"], 1e-8);
    EXPECT_LE(j["diagnostics"]["route_agreement"].get<double>(), 1e-8);
    EXPECT_EQ(j["diagnostics"]["terms"], 2);
}

TEST(Cli, LensRhoTrivialAndEven)
{
    auto r = invoke({"lens-rho", "-p", "5", "-q", "1", "-l", "0", "--involution", "Bprime"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(json::parse(r.out)["exact"]["num"], "0");
    r = invoke({"lens-rho", "-p", "4", "-q", "1", "-l", "1", "--involution", "B"});
    ASSERT_EQ(r.code, 0);
    const auto j = json::parse(r.out);
    EXPECT_TRUE(j["exact"].is_null());
    EXPECT_GE(j["diagnostics"]["skipped"].get<int>(), 1);
    r = invoke({"lens-rho", "-p", "9", "-q", "4", "-l", "5", "--involution", "A", "--format", "csv"});
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("lens-rho,9,4,5,A,0,1,0,0,0,0,1e-08"), std::string::npos) << r.out;
}

TEST(Cli, Sums)
{
    auto r = invoke({"sums", "delta", "-p", "3", "-q", "2", "-l", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(json::parse(r.out)["exact"], (json{{"num", "-1"}, {"den", "3"}}));
    r = invoke({"sums", "dedekind-D", "-p", "7", "-b", "6"});
    EXPECT_EQ(json::parse(r.out)["exact"], (json{{"num", "12"}, {"den", "7"}}));
    r = invoke({"sums", "delta-tau", "-p", "7", "-q", "6", "-l", "2"});
    EXPECT_EQ(json::parse(r.out)["exact"]["num"], "1");
    r = invoke({"sums", "lawson-N", "-q", "13", "--twob", "9", "-l", "6"});
    EXPECT_EQ(json::parse(r.out)["exact"]["num"], "1");
    EXPECT_TRUE(json::parse(r.out)["float"].is_null());
}

TEST(Cli, Floer)
{
    auto r = invoke({"floer", "-p", "3", "-q", "7", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = json::parse(r.out);
    EXPECT_EQ(j["ic_natural_ranks"], json::array({3, 2, 2, 2}));
    EXPECT_EQ(j["representations"][0]["mu"], "87");
    EXPECT_EQ(j["representations"][1]["mu"], "125");
    r = invoke({"floer", "-p", "3", "-q", "13", "--format", "json"});
    EXPECT_EQ(json::parse(r.out)["ic_natural_ranks"], json::array({5, 4, 4, 4}));
    r = invoke({"floer", "-p", "3", "-q", "5", "--format", "json"});
    j = json::parse(r.out);
    int total = 0;
    for (auto& v : j["ic_natural_ranks"])
        total += v.get<int>();
    EXPECT_EQ(total, 9);
    r = invoke({"floer", "-p", "3", "-q", "7", "--table"});
    EXPECT_NE(r.out.find("(3,2,2,2)"), std::string::npos);
    EXPECT_NE(r.out.find("87"), std::string::npos);
}

TEST(Cli, ExitCodes)
{
    EXPECT_EQ(invoke({"lens-rho", "-p", "6", "-q", "3", "-l", "2"}).code, cli::kDomainError);
    EXPECT_EQ(invoke({"lens-rho", "-p", "6"}).code, cli::kDomainError);
    EXPECT_EQ(invoke({"lens-rho", "-p", "7", "-q", "3", "-l", "2", "--involution", "C"}).code, cli::kDomainError);
    EXPECT_EQ(invoke({"floer", "-p", "3", "-q", "9"}).code, cli::kDomainError);
    EXPECT_EQ(invoke({"sums", "dedekind-D", "-p", "9", "-b", "3"}).code, cli::kDomainError);
    EXPECT_EQ(invoke({"lens-rho", "-p", "7", "-q", "3", "-l", "4", "--tolerance", "0"}).code,
              cli::kConsistencyError);
    EXPECT_EQ(invoke({"sweep", "--what", "lens", "--p-range", "3:5", "--q-range", "1:2", "--out",
                   "/nonexistent-dir/x.csv"})
                  .code,
              cli::kIoError);
    EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST(Cli, SweepIsSortedAndDeterministic)
{
    const auto path = temp_file("det.csv");
    auto a = invoke({"sweep", "--what", "lens", "--p-range", "3:9", "--q-range", "1:8", "--out", path.string(), "--jobs", "3"});
    ASSERT_EQ(a.code, 0) << a.err;
    const auto first = slurp(path);
    a = invoke({"sweep", "--what", "lens", "--p-range", "3:9", "--q-range", "1:8", "--out", path.string(), "--serial"});
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(first, slurp(path));
    EXPECT_EQ(first.rfind("p,q,ell,involution", 0), 0u);
    std::filesystem::remove(path);
}

TEST(Cli, EmptyRangeWritesEmptyFile)
{
    const auto path = temp_file("empty.csv");
    const auto r = invoke({"sweep", "--what", "floer", "--p-range", "9:3", "--q-range", "5:7", "--out", path.string()});
    ASSERT_EQ(r.code, 0);
    EXPECT_TRUE(std::filesystem::exists(path));
    EXPECT_EQ(std::filesystem::file_size(path), 0u);
    std::filesystem::remove(path);
}

TEST(Cli, SkipExistingMergesInOrder)
{
    for (const std::string fmt : {"csv", "jsonl"}) {
        const auto path = temp_file("merge." + fmt);
        const auto full = temp_file("full." + fmt);
        ASSERT_EQ(invoke({"sweep", "--what", "floer", "--p-range", "3:11", "--q-range", "3:15", "--format", fmt, "--out", full.string()}).code, 0);
        ASSERT_EQ(invoke({"sweep", "--what", "floer", "--p-range", "3:7", "--q-range", "3:15", "--format", fmt, "--out", path.string()}).code, 0);
        const auto r = invoke({"sweep", "--what", "floer", "--p-range", "3:11", "--q-range", "3:15", "--format", fmt, "--out", path.string(), "--skip-existing"});
        ASSERT_EQ(r.code, 0) << r.err;
        EXPECT_EQ(slurp(path), slurp(full)) << fmt;
        std::filesystem::remove(path);
        std::filesystem::remove(full);
    }
}

TEST(Cli, SweepJsonlRationalsAreStrings)
{
    const auto r = invoke({"sweep", "--what", "sums", "--p-range", "7", "--q-range", "6", "--format", "jsonl"});
    ASSERT_EQ(r.code, 0);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    const auto j = json::parse(line);
    EXPECT_EQ(j["delta"], (json{{"num", "-13"}, {"den", "7"}}));
    EXPECT_EQ(j["delta_tau"], 1);
}

TEST(Cli, KeyParsing)
{
    EXPECT_EQ(cli::parse_sweep_key("lens", "7,3,4,Bprime,-1,1,-1.0,6,0", cli::LineFormat::csv),
              (SweepKey{7, 3, 4, 2}));
    EXPECT_FALSE(cli::parse_sweep_key("lens", "p,q,ell,involution", cli::LineFormat::csv).has_value());
    EXPECT_THROW(cli::parse_sweep_key("floer", "x,y", cli::LineFormat::csv), DomainError);
    EXPECT_THROW(cli::parse_sweep_key("floer", "{bad", cli::LineFormat::jsonl), DomainError);
}

TEST(Verify, PassesAtDefaultToleranceAndFailsAtZero)
{
    VerifyOptions opt;
    opt.max_p = 21;
    opt.jobs = 2;
    EXPECT_TRUE(run_verify(opt).passed());
    opt.tolerance = 0.0;
    const auto rep = run_verify(opt);
    EXPECT_FALSE(rep.passed());
    for (const auto& c : rep.checks)
        if (!c.passed())
            EXPECT_FALSE(c.counterexample.empty());
    EXPECT_EQ(invoke({"verify", "--max-p", "15"}).code, cli::kOk);
    EXPECT_EQ(invoke({"verify", "--max-p", "15", "--tolerance", "0"}).code, cli::kVerifyFailed);
}
