#include "intersector/cli.hpp"

#include <functional>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "intersector/acceptance.hpp"
#include "intersector/cache.hpp"
#include "intersector/error.hpp"
#include "intersector/fingerprint.hpp"
#include "intersector/io.hpp"
#include "intersector/quot.hpp"
#include "intersector/residue.hpp"
#include "intersector/verify.hpp"
#include "intersector/witten.hpp"

namespace intersector {

namespace {

using nlohmann::json;

struct Globals {
    std::string cache_dir;
    bool no_cache = false;
    unsigned threads = 1;
    int indent = -1;
};

int exit_code_for(ErrorKind k) {
    switch (k) {
        case ErrorKind::NotRational:
        case ErrorKind::TruncationUnstable:
        case ErrorKind::NonIntegerResult:
        case ErrorKind::NonPositiveDimension:
        case ErrorKind::PrecisionExhausted: return 1;
        default: return 2;
    }
}

json error_json(std::string_view kind, const std::string& message) {
    return json{{"error", {{"kind", kind}, {"message", message}}}};
}

long digits_for(long bits) { return std::max(10L, bits * 30103 / 100000); }

/// Looks up an exact value by fingerprint, computing and storing it on a miss.
Rational cached_value(const ResultCache& cache, const std::string& fp, std::string_view method,
                      const std::function<Rational()>& compute) {
    if (auto hit = cache.get(fp); hit && hit->method == method) {
        try {
            return Rational::parse(hit->value);
        } catch (const Error&) {
        }
    }
    Rational v = compute();
    CacheEntry e;
    e.fingerprint = fp;
    e.method = std::string(method);
    e.value = v.str();
    cache.put(e);
    return v;
}

json result_json(const Rational& value, Method m, const std::string& fp, double ms) {
    return json{{"value", value.str()}, {"method", to_string(m)}, {"fingerprint", fp}, {"elapsed_ms", ms}};
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

struct ProblemArgs {
    int r = 2;
    long d = 1;
    int g = 2;
    int N = 4;
    std::string poly;
    std::string spoly;
};

void add_rdg(CLI::App* sub, ProblemArgs& a) {
    sub->add_option("--r", a.r, "rank")->required();
    sub->add_option("--d", a.d, "degree")->required();
    sub->add_option("--g", a.g, "genus")->required();
}

AClassPoly load_P(const std::string& path, int r) {
    if (path.empty()) return AClassPoly::one(r);
    AClassPoly p = load_aclass(path);
    if (p.rank != r)
        fail(ErrorKind::InvalidInput, "polynomial file has rank " + std::to_string(p.rank) + " but --r is " +
                                          std::to_string(r));
    return p;
}

std::optional<SClassPoly> load_S(const std::string& path, int r) {
    if (path.empty()) return std::nullopt;
    SClassPoly s = load_sclass(path);
    if (s.rank != r) fail(ErrorKind::InvalidInput, "S polynomial file has the wrong rank");
    return s;
}

json warnings_json(const QuotProblem& q) { return json(q.warnings); }

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Intersection numbers on Quot schemes and moduli of bundles", "intersector"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals G;
    app.add_option("--cache-dir", G.cache_dir, "result cache directory");
    app.add_flag("--no-cache", G.no_cache, "disable the result cache");
    app.add_option("--threads", G.threads, "worker threads")->check(CLI::Range(1u, 1024u));
    app.add_option("--json-indent", G.indent, "indent JSON output (-1 for compact)");

    ProblemArgs a;
    bool numeric = false;
    long precision = kDefaultPrecisionBits;
    long s = 1;
    std::string verlinde_method = "residue";
    long height = 200;
    std::vector<int> Ns;
    std::vector<int> ranks{2}, genera{2};
    std::vector<long> residues{1};
    std::vector<std::string> poly_files;
    int random_polys = 0, max_degree = 4;
    std::uint64_t seed = 1;

    auto* vi = app.add_subcommand("vi", "root-of-unity sum for a Quot problem");
    add_rdg(vi, a);
    vi->add_option("--N", a.N, "number of sections")->required();
    vi->add_option("--poly", a.poly, "P polynomial file");
    vi->add_option("--spoly", a.spoly, "S polynomial file");
    vi->add_flag("--numeric", numeric, "evaluate in floating point");
    vi->add_option("--precision", precision, "bits for --numeric")->check(CLI::Range(kMinPrecisionBits, 1L << 20));

    auto* qr = app.add_subcommand("quot-residue", "iterated residue for a Quot problem");
    add_rdg(qr, a);
    qr->add_option("--N", a.N, "number of sections")->required();
    qr->add_option("--poly", a.poly, "P polynomial file");
    qr->add_option("--spoly", a.spoly, "S polynomial file");

    auto* mod = app.add_subcommand("moduli", "pairing with exp(fbar_2) on the moduli space");
    add_rdg(mod, a);
    mod->add_option("--poly", a.poly, "P polynomial file");

    auto* ver = app.add_subcommand("verlinde", "Euler characteristic of L^s");
    add_rdg(ver, a);
    ver->add_option("--s", s, "power of L")->required()->check(CLI::NonNegativeNumber);
    ver->add_option("--method", verlinde_method, "residue or mapcount")
        ->check(CLI::IsMember({"residue", "mapcount"}));

    auto* wit = app.add_subcommand("witten", "truncated sum over representations");
    add_rdg(wit, a);
    wit->add_option("--poly", a.poly, "P polynomial file");
    wit->add_option("--height", height, "height cutoff")->check(CLI::PositiveNumber);
    wit->add_option("--precision", precision, "bits")->check(CLI::Range(kMinPrecisionBits, 1L << 20));

    auto* asy = app.add_subcommand("asymptote", "leading coefficient in N");
    add_rdg(asy, a);
    asy->add_option("--poly", a.poly, "P polynomial file");
    asy->add_option("--N", Ns, "values of N")->required()->delimiter(',');

    auto* van = app.add_subcommand("vanish", "check a vanishing instance");
    add_rdg(van, a);
    van->add_option("--N", a.N, "number of sections")->required();
    van->add_option("--poly", a.poly, "P polynomial file");
    van->add_option("--spoly", a.spoly, "S polynomial file");

    auto* eqv = app.add_subcommand("equivalence", "compare the sum and residue paths on a grid");
    eqv->add_option("--ranks", ranks)->delimiter(',');
    eqv->add_option("--genera", genera)->delimiter(',');
    eqv->add_option("--N", Ns, "values of N")->required()->delimiter(',');
    eqv->add_option("--d-residues", residues)->delimiter(',');
    eqv->add_option("--poly", poly_files, "P polynomial files (default: 1 and each abar_k)");
    eqv->add_option("--random", random_polys, "random insertions per rank and genus");
    eqv->add_option("--max-degree", max_degree, "largest weighted degree of random insertions");
    eqv->add_option("--seed", seed);
    eqv->add_flag("--numeric", numeric, "also compare against the floating sum");

    auto* self = app.add_subcommand("selftest", "run the acceptance suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        out << error_json("usage", e.what()).dump(G.indent) << '\n';
        return 2;
    }

    const ResultCache cache = G.no_cache ? ResultCache()
                                         : ResultCache::from_environment(
                                               G.cache_dir.empty() ? std::nullopt
                                                                   : std::optional<std::filesystem::path>(G.cache_dir));
    const auto t0 = std::chrono::steady_clock::now();
    json result;
    int code = 0;
    try {
        if (*vi) {
            auto q = build_problem(a.r, a.d, a.g, a.N, load_P(a.poly, a.r), load_S(a.spoly, a.r));
            if (numeric) {
                auto n = vi_evaluate_numeric(q, precision);
                const long digits = digits_for(precision);
                result = json{{"value", n.value.to_string(digits)},
                              {"imag_max", n.imag_abs.to_string(6)},
                              {"precision", precision},
                              {"method", to_string(Method::ViNumeric)},
                              {"fingerprint", fingerprint_of("vi-numeric|" + std::to_string(precision) + "|" +
                                                             q.canonical())},
                              {"elapsed_ms", ms_since(t0)}};
            } else {
                const std::string fp = fingerprint_of("vi|" + q.canonical());
                Rational v = cached_value(cache, fp, to_string(Method::ViExact),
                                          [&] { return vi_evaluate(q, G.threads).value; });
                result = result_json(v, Method::ViExact, fp, ms_since(t0));
            }
            if (!q.warnings.empty()) result["warnings"] = warnings_json(q);
        } else if (*qr) {
            auto q = build_problem(a.r, a.d, a.g, a.N, load_P(a.poly, a.r), load_S(a.spoly, a.r));
            const std::string fp = fingerprint_of("quot-residue|" + q.canonical());
            Rational v = cached_value(cache, fp, to_string(Method::QuotResidue), [&] { return quot_residue(q).value; });
            result = result_json(v, Method::QuotResidue, fp, ms_since(t0));
            if (!q.warnings.empty()) result["warnings"] = warnings_json(q);
        } else if (*mod) {
            AClassPoly P = load_P(a.poly, a.r);
            const std::string fp = fingerprint_of("moduli|r=" + std::to_string(a.r) + "|d=" + std::to_string(a.d) +
                                                  "|g=" + std::to_string(a.g) + "|P=" + canonical_poly(P.poly));
            Rational v = cached_value(cache, fp, to_string(Method::ModuliResidue),
                                      [&] { return moduli_pairing(a.r, a.d, a.g, P); });
            result = result_json(v, Method::ModuliResidue, fp, ms_since(t0));
        } else if (*ver) {
            const bool mapcount = verlinde_method == "mapcount";
            const Method m = mapcount ? Method::VerlindeMapcount : Method::VerlindeResidue;
            const std::string fp = fingerprint_of(std::string(to_string(m)) + "|r=" + std::to_string(a.r) +
                                                  "|d=" + std::to_string(a.d) + "|g=" + std::to_string(a.g) +
                                                  "|s=" + std::to_string(s));
            Rational v = cached_value(cache, fp, to_string(m), [&] {
                return mapcount ? verlinde_mapcount(a.r, a.d, a.g, s, G.threads).value
                                : verlinde_chi(a.r, a.d, a.g, s);
            });
            result = result_json(v, m, fp, ms_since(t0));
        } else if (*wit) {
            auto w = witten_sum(a.r, a.d, a.g, load_P(a.poly, a.r), height, precision, G.threads);
            const long digits = digits_for(precision);
            result = json{{"value", w.value.to_string(digits)},
                          {"tail", w.tail.to_string(6)},
                          {"imag_max", w.imag_max.to_string(6)},
                          {"decay_exponent", w.decay_exponent},
                          {"weights", w.weights},
                          {"height", height},
                          {"precision", precision},
                          {"elapsed_ms", ms_since(t0)}};
        } else if (*asy) {
            auto rep = asymptotic_extract(a.r, a.d, a.g, load_P(a.poly, a.r), Ns, G.threads);
            json values = json::array();
            for (std::size_t i = 0; i < rep.Ns.size(); ++i)
                values.push_back({{"N", rep.Ns[i]},
                                  {"d", rep.ds[i]},
                                  {"value", rep.values[i].str()},
                                  {"method", rep.methods[i]},
                                  {"ratio", rep.ratios[i].str()}});
            json poly = json::array();
            for (const auto& c : rep.polynomial) poly.push_back(c.str());
            result = json{{"leading_exponent", rep.leading_exponent},
                          {"samples", values},
                          {"interpolated", rep.interpolated ? json(rep.interpolated->str()) : json(nullptr)},
                          {"polynomial", poly},
                          {"target", rep.target.str()},
                          {"interpolation_matches", rep.interpolation_matches},
                          {"ratio_route_passes", rep.ratio_route_passes},
                          {"verdict", rep.verdict()},
                          {"notes", rep.notes},
                          {"elapsed_ms", ms_since(t0)}};
            if (!rep.verdict()) code = 1;
        } else if (*van) {
            auto v = vanishing_check(a.r, a.d, a.g, a.N, load_P(a.poly, a.r), load_S(a.spoly, a.r), G.threads);
            result = json{{"value", v.value.str()},
                          {"method", to_string(v.method)},
                          {"M", v.M},
                          {"vanished", v.vanished()},
                          {"elapsed_ms", ms_since(t0)}};
            if (!v.vanished()) code = 1;
        } else if (*eqv) {
            GridSpec grid;
            grid.ranks = ranks;
            grid.genera = genera;
            grid.Ns = Ns;
            grid.d_residues = residues;
            for (const auto& f : poly_files) grid.polys.push_back(load_aclass(f));
            if (poly_files.empty()) {
                for (int r : ranks) {
                    grid.polys.push_back(AClassPoly::one(r));
                    for (int k = 2; k <= r; ++k) grid.polys.push_back(AClassPoly::generator(r, k));
                }
            }
            grid.random_polys = random_polys;
            grid.random_max_degree = max_degree;
            grid.seed = seed;
            grid.check_numeric = numeric;
            grid.threads = G.threads;
            auto rep = equivalence_report(grid);
            json entries = json::array();
            for (const auto& e : rep.entries) {
                json je{{"r", e.r}, {"d", e.d}, {"g", e.g}, {"N", e.N},
                        {"P", json::parse(aclass_to_json(e.P))}, {"status", to_string(e.status)}};
                if (e.vi) je["vi"] = e.vi->str();
                if (e.residue) je["residue"] = e.residue->str();
                if (e.numeric_error) je["numeric_error"] = *e.numeric_error;
                if (!e.note.empty()) je["note"] = e.note;
                entries.push_back(je);
            }
            result = json{{"compared", rep.compared},
                          {"failures", rep.failures},
                          {"entries", entries},
                          {"elapsed_ms", ms_since(t0)}};
            if (!rep.ok()) code = 1;
        } else if (*self) {
            AcceptanceOptions opts;
            opts.threads = G.threads;
            auto outcomes = run_acceptance(err, opts);
            json crit = json::array();
            bool all = true;
            for (const auto& c : outcomes) {
                crit.push_back({{"id", c.id}, {"title", c.title}, {"passed", c.passed}, {"detail", c.detail},
                                {"seconds", c.seconds}});
                all = all && c.passed;
            }
            result = json{{"criteria", crit}, {"passed", all}};
            if (!all) code = 1;
        }
    } catch (const Error& e) {
        out << error_json(to_string(e.kind()), e.what()).dump(G.indent) << '\n';
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        out << error_json("internal", e.what()).dump(G.indent) << '\n';
        return 1;
    }
    out << result.dump(G.indent) << '\n';
    return code;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"intersector"};
    for (const auto& s : args) argv.push_back(s.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace intersector
