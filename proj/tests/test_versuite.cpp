#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <regex>
#include <sstream>
#include <thread>

#include "intersector/cache.hpp"
#include "intersector/cli.hpp"
#include "intersector/error.hpp"
#include "intersector/interp.hpp"
#include "intersector/residue.hpp"
#include "intersector/verify.hpp"
#include "oracles.hpp"

using namespace intersector;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        std::random_device rd;
        path = fs::temp_directory_path() / ("intersector-test-" + std::to_string(::getpid()) + "-" +
                                            std::to_string(rd()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string strip_timing(const std::string& s) {
    static const std::regex timing("\"elapsed_ms\":[-0-9.e+]+,?");
    return std::regex_replace(s, timing, "");
}

Rational horner(const std::vector<Rational>& c, const Rational& x) {
    Rational v(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
    return v;
}

}  // namespace

TEST_CASE("polynomial interpolation") {
    std::mt19937_64 rng(7);
    for (int deg = 0; deg <= 6; ++deg) {
        std::vector<Rational> c;
        for (int i = 0; i <= deg; ++i) c.emplace_back(static_cast<long>(rng() % 41) - 20, 1 + static_cast<long>(rng() % 5));
        if (c.back().is_zero()) c.back() = Rational(1);
        std::vector<Rational> xs, ys;
        for (int i = 0; i < deg + 3; ++i) {
            xs.emplace_back(2 * i + 3);
            ys.push_back(horner(c, xs.back()));
        }
        auto fit = fit_polynomial(xs, ys, deg + 1);
        CHECK(fit.verified);
        CHECK(fit.degree == deg);
        for (int i = 0; i <= deg; ++i) CHECK(fit.coeffs[i] == c[i]);
    }
    std::vector<Rational> xs{Rational(1), Rational(2)}, ys{Rational(1), Rational(4)};
    try {
        fit_polynomial(xs, ys, 2);
        FAIL("no throw");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InsufficientPoints);
    }
    // exact fit with no spare point is not verified
    CHECK_FALSE(fit_polynomial(xs, ys, 1).verified);
}

TEST_CASE("admissible problems") {
    CHECK_FALSE(admissible_problem(2, 1, 2, 5, AClassPoly::one(2)).has_value());
    auto p = admissible_problem(2, 1, 2, 4, AClassPoly::one(2));
    REQUIRE(p.has_value());
    CHECK(p->d % 2 == 1);
    CHECK(p->e == 4 * p->d - 4);
    CHECK(p->M >= 0);
    for (std::uint64_t seed = 1; seed < 6; ++seed) {
        auto P = random_aclass(3, 6, seed);
        CHECK(is_weighted_homogeneous(P));
        CHECK(weighted_degree(P) == 6);
    }
}

TEST_CASE("equivalence grid") {
    GridSpec grid;
    grid.ranks = {2, 3};
    grid.genera = {2};
    grid.Ns = {3, 4, 5, 6, 7};
    grid.d_residues = {1, 2};
    grid.polys = {AClassPoly::one(2), AClassPoly::generator(2, 2), AClassPoly::generator(3, 2)};
    grid.random_polys = 1;
    grid.check_numeric = true;
    grid.threads = 2;
    auto rep = equivalence_report(grid);
    CHECK(rep.ok());
    CHECK(rep.compared >= 5);
    bool saw_inadmissible = false, saw_inapplicable = false;
    for (const auto& e : rep.entries) {
        if (e.status == EquivalenceStatus::Inadmissible) saw_inadmissible = true;
        if (e.status == EquivalenceStatus::ResidueInapplicable) saw_inapplicable = true;
        if (e.status == EquivalenceStatus::Equal) {
            CHECK(*e.vi == *e.residue);
            REQUIRE(e.numeric_error.has_value());
            CHECK(*e.numeric_error < 1e-15);
        }
        CHECK(e.status != EquivalenceStatus::Mismatch);
    }
    CHECK(saw_inadmissible);
    CHECK(saw_inapplicable);
}

TEST_CASE("leading coefficient in N") {
    auto a = asymptotic_extract(2, 1, 2, AClassPoly::one(2), {4, 6, 8, 10, 12, 14, 16, 18});
    CHECK(a.leading_exponent == 5);
    REQUIRE(a.interpolated.has_value());
    CHECK(*a.interpolated == Rational(1, 48));
    CHECK(a.target == oracle::rank2_volume(2) / Rational(4));
    CHECK(a.verdict());
    auto b = asymptotic_extract(2, 1, 2, AClassPoly::generator(2, 2), {4, 6, 8, 10, 12, 14});
    CHECK(b.leading_exponent == 3);
    REQUIRE(b.interpolated.has_value());
    CHECK(*b.interpolated == Rational(1, 8));
    auto c = asymptotic_extract(2, 1, 2, AClassPoly::generator(2, 2, 2), {4, 6, 8, 10, 12});
    REQUIRE(c.interpolated.has_value());
    CHECK(*c.interpolated == Rational(0));
    CHECK(c.verdict());
    CHECK_THROWS_AS(asymptotic_extract(2, 1, 2, AClassPoly::one(2), {4, 6}), Error);
}

TEST_CASE("Verlinde numbers from Quot schemes") {
    for (long s = 1; s <= 3; ++s) {
        auto m = verlinde_mapcount(2, 1, 2, s);
        CHECK(m.value == oracle::koszul(s));
        CHECK(m.N == 2 * (s + 1));
    }
    CHECK(verlinde_mapcount(2, 3, 2, 1).value == Rational(6));
    for (int r : {2, 3})
        for (int g : {2, 3})
            for (long s = 1; s <= 2; ++s)
                for (long d = 1; d < r; ++d) CHECK(verlinde_mapcount(r, d, g, s, 2).value == verlinde_chi(r, d, g, s));
}

TEST_CASE("vanishing instances") {
    auto v = vanishing_check(2, 5, 2, 10, AClassPoly::generator(2, 2, 2));
    CHECK(v.vanished());
    SClassPoly S(2, MPoly::monomial({2, 0}, Rational(1)));
    CHECK(vanishing_check(2, 3, 2, 14, AClassPoly::generator(2, 2, 2), S).vanished());
    try {
        vanishing_check(2, 1, 2, 6, AClassPoly::generator(2, 2));
        FAIL("no throw");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::HypothesisViolated);
    }
}

TEST_CASE("result cache") {
    TempDir tmp;
    ResultCache cache(tmp.path / "c");
    CHECK(cache.enabled());
    CHECK_FALSE(cache.get("0123456789abcdef").has_value());
    CacheEntry e{"0123456789abcdef", "vi-exact", "171", kEngineVersion, 1};
    CHECK(cache.put(e));
    auto back = cache.get(e.fingerprint);
    REQUIRE(back.has_value());
    CHECK(back->value == "171");
    CHECK(back->method == "vi-exact");

    // stale engine versions and corrupt files are misses
    CacheEntry old = e;
    old.fingerprint = "fedcba9876543210";
    old.engine_version = "0.0.0";
    CHECK(cache.put(old));
    CHECK_FALSE(cache.get(old.fingerprint).has_value());
    std::ofstream(tmp.path / "c" / "1111111111111111.json") << "{not json";
    CHECK_FALSE(cache.get("1111111111111111").has_value());

    CHECK_FALSE(ResultCache().enabled());
    CHECK_FALSE(ResultCache().get(e.fingerprint).has_value());
    CHECK(ResultCache::from_environment(tmp.path).directory() == tmp.path);
}

TEST_CASE("concurrent cache writers") {
    TempDir tmp;
    ResultCache cache(tmp.path);
    std::vector<std::thread> pool;
    for (int t = 0; t < 8; ++t)
        pool.emplace_back([&, t] {
            for (int i = 0; i < 50; ++i) cache.put({"aaaaaaaaaaaaaaaa", "vi-exact", std::to_string(t), kEngineVersion, i});
        });
    for (auto& th : pool) th.join();
    std::vector<pid_t> kids;
    for (int k = 0; k < 4; ++k) {
        pid_t pid = ::fork();
        if (pid == 0) {
            for (int i = 0; i < 50; ++i) cache.put({"aaaaaaaaaaaaaaaa", "vi-exact", "9", kEngineVersion, i});
            ::_exit(0);
        }
        kids.push_back(pid);
    }
    for (pid_t pid : kids) {
        int status = 0;
        ::waitpid(pid, &status, 0);
        CHECK(WIFEXITED(status));
    }
    auto got = cache.get("aaaaaaaaaaaaaaaa");
    REQUIRE(got.has_value());
    CHECK(got->value.size() == 1);
    std::size_t files = 0;
    for (const auto& entry : fs::directory_iterator(tmp.path)) {
        ++files;
        CHECK(entry.path().filename() == "aaaaaaaaaaaaaaaa.json");
    }
    CHECK(files == 1);
}

TEST_CASE("command line") {
    TempDir tmp;
    const std::string dir = (tmp.path / "cache").string();
    auto a = cli({"verlinde", "--r", "2", "--d", "1", "--g", "2", "--s", "1", "--cache-dir", dir});
    CHECK(a.code == 0);
    CHECK(a.out.find("\"value\":\"6\"") != std::string::npos);
    auto b = cli({"verlinde", "--r", "2", "--d", "1", "--g", "2", "--s", "1", "--cache-dir", dir});
    CHECK(strip_timing(a.out) == strip_timing(b.out));
    CHECK(!fs::is_empty(dir));
    auto c = cli({"--no-cache", "verlinde", "--r", "2", "--d", "1", "--g", "2", "--s", "1"});
    CHECK(strip_timing(a.out) == strip_timing(c.out));

    auto v1 = cli({"--no-cache", "--threads", "1", "vi", "--r", "2", "--d", "5", "--g", "2", "--N", "6"});
    auto v4 = cli({"--no-cache", "--threads", "4", "vi", "--r", "2", "--d", "5", "--g", "2", "--N", "6"});
    CHECK(v1.code == 0);
    CHECK(v1.out.find("\"value\":\"171\"") != std::string::npos);
    CHECK(strip_timing(v1.out) == strip_timing(v4.out));

    const auto bad = tmp.path / "bad.json";
    std::ofstream(bad) << R"({"rank": 2, "terms": [{"exps": [1, 2], "coeff": "1"}]})";
    auto m = cli({"--no-cache", "moduli", "--r", "2", "--d", "1", "--g", "2", "--poly", bad.string()});
    CHECK(m.code == 2);
    CHECK(m.out.find("\"kind\":\"ParseError\"") != std::string::npos);

    const auto good = tmp.path / "p.json";
    std::ofstream(good) << R"({"rank": 2, "vars": ["a2"], "terms": [{"exps": [1], "coeff": "1"}]})";
    auto mp = cli({"--no-cache", "moduli", "--r", "2", "--d", "1", "--g", "2", "--poly", good.string()});
    CHECK(mp.code == 0);
    CHECK(mp.out.find("\"value\":\"1/2\"") != std::string::npos);

    CHECK(cli({"verlinde", "--r", "2"}).code == 2);
    CHECK(cli({"no-such-command"}).code == 2);
    auto nc = cli({"--no-cache", "moduli", "--r", "4", "--d", "2", "--g", "2"});
    CHECK(nc.code == 2);
    CHECK(nc.out.find("NotCoprime") != std::string::npos);
}
