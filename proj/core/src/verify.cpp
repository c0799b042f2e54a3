#include "intersector/verify.hpp"

#include <algorithm>
#include <random>

#include "intersector/error.hpp"
#include "intersector/interp.hpp"
#include "intersector/residue.hpp"

namespace intersector {

std::string_view to_string(EquivalenceStatus s) {
    switch (s) {
        case EquivalenceStatus::Equal: return "equal";
        case EquivalenceStatus::Mismatch: return "mismatch";
        case EquivalenceStatus::ResidueInapplicable: return "residue-path-inapplicable";
        case EquivalenceStatus::Inadmissible: return "inadmissible";
    }
    return "unknown";
}

std::optional<QuotProblem> admissible_problem(int r, long d0, int g, int N, const AClassPoly& P,
                                              const std::optional<SClassPoly>& S) {
    if (gcd_long(r, d0) != 1) fail(ErrorKind::NotCoprime, "gcd(r, d) must be 1");
    const long degP = weighted_degree(P).value_or(0);
    const long degS = S ? weighted_degree(*S).value_or(0) : 0;
    if (mod_floor(static_cast<long>(N) * d0 - degP - degS, r) != 0) return std::nullopt;
    // N d >= r (N - r) gbar + deg P + deg S
    const long need = static_cast<long>(r) * (N - r) * (g - 1) + degP + degS;
    long d = mod_floor(d0, r);
    if (d == 0) d = r;
    while (static_cast<long>(N) * d < need) d += r;
    return build_problem(r, d, g, N, P, S);
}

AClassPoly random_aclass(int r, int degree, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(-3, 3);
    MPoly p(r - 1);
    Exponents e(r - 1, 0);
    // every exponent vector with sum_i (i + 2) e_i = degree
    auto rec = [&](auto& self, int pos, int left) -> void {
        if (pos == r - 1) {
            if (left == 0) {
                int c = coeff(rng);
                if (c) p.add_term(e, Rational(c));
            }
            return;
        }
        for (int k = 0; (pos + 2) * k <= left; ++k) {
            e[pos] = k;
            self(self, pos + 1, left - (pos + 2) * k);
        }
        e[pos] = 0;
    };
    rec(rec, 0, degree);
    return AClassPoly(r, p);
}

EvalResult evaluate_quot(const QuotProblem& problem, unsigned threads) {
    if (validity_check(problem).valid()) return quot_residue(problem);
    return vi_evaluate(problem, threads);
}

EquivalenceReport equivalence_report(const GridSpec& grid) {
    EquivalenceReport rep;
    for (int r : grid.ranks) {
        for (int g : grid.genera) {
            std::vector<AClassPoly> polys;
            for (const auto& p : grid.polys)
                if (p.rank == r) polys.push_back(p);
            std::mt19937_64 rng(grid.seed + 1000003ULL * r + g);
            for (int k = 0; k < grid.random_polys; ++k) {
                const int deg = 2 + static_cast<int>(rng() % std::max(1, grid.random_max_degree - 1));
                AClassPoly p = random_aclass(r, deg, rng());
                if (!p.poly.is_zero()) polys.push_back(p);
            }
            for (int N : grid.Ns) {
                if (N < r) continue;
                for (long d0 : grid.d_residues) {
                    if (gcd_long(r, d0) != 1) continue;
                    for (const auto& P : polys) {
                        EquivalenceEntry e;
                        e.r = r;
                        e.g = g;
                        e.N = N;
                        e.d = d0;
                        e.P = P;
                        auto problem = admissible_problem(r, d0, g, N, P);
                        if (!problem) {
                            e.status = EquivalenceStatus::Inadmissible;
                            e.note = "N d - deg P is not divisible by r";
                            rep.entries.push_back(std::move(e));
                            continue;
                        }
                        e.d = problem->d;
                        e.vi = vi_evaluate(*problem, grid.threads).value;
                        if (grid.check_numeric) {
                            auto num = vi_evaluate_numeric(*problem, grid.numeric_precision);
                            BigFloat exact(*e.vi, grid.numeric_precision);
                            e.numeric_error = (num.value - exact).abs().to_double();
                            e.numeric_imag = num.imag_abs.to_double();
                        }
                        if (!validity_check(*problem).valid()) {
                            e.status = EquivalenceStatus::ResidueInapplicable;
                            rep.entries.push_back(std::move(e));
                            continue;
                        }
                        try {
                            e.residue = quot_residue(*problem).value;
                            e.status = *e.residue == *e.vi ? EquivalenceStatus::Equal : EquivalenceStatus::Mismatch;
                        } catch (const Error& err) {
                            e.status = EquivalenceStatus::Mismatch;
                            e.note = err.what();
                        }
                        ++rep.compared;
                        if (e.status == EquivalenceStatus::Mismatch) ++rep.failures;
                        rep.entries.push_back(std::move(e));
                    }
                }
            }
        }
    }
    return rep;
}

AsymptoticReport asymptotic_extract(int r, long d0, int g, const AClassPoly& P, const std::vector<int>& Ns,
                                    unsigned threads) {
    if (gcd_long(r, d0) != 1) fail(ErrorKind::NotCoprime, "gcd(r, d) must be 1");
    if (!is_weighted_homogeneous(P)) fail(ErrorKind::DegreeMismatch, "P must be weighted-homogeneous");
    AsymptoticReport rep;
    rep.r = r;
    rep.d0 = d0;
    rep.g = g;
    rep.P = P;
    const int gbar = g - 1;
    const int degP = weighted_degree(P).value_or(0);
    rep.leading_exponent = r * r * gbar + 1 - degP;
    if (static_cast<int>(Ns.size()) < rep.leading_exponent + 2)
        fail(ErrorKind::InsufficientPoints, "need at least e(P) + 2 = " + std::to_string(rep.leading_exponent + 2) +
                                                " values of N, got " + std::to_string(Ns.size()));
    rep.target = moduli_pairing(r, d0, g, P) / pow(Rational(r), g);
    std::vector<Rational> xs;
    for (int N : Ns) {
        auto problem = admissible_problem(r, d0, g, N, P);
        if (!problem)
            fail(ErrorKind::InvalidInput, "N=" + std::to_string(N) + " is outside the admissible progression");
        auto res = evaluate_quot(*problem, threads);
        rep.Ns.push_back(N);
        rep.ds.push_back(problem->d);
        rep.values.push_back(res.value);
        rep.methods.emplace_back(to_string(res.method));
        rep.ratios.push_back(res.value / pow(Rational(N), rep.leading_exponent));
        xs.emplace_back(N);
    }
    const int e = rep.leading_exponent;
    if (e >= 0) {
        auto fit = fit_polynomial(xs, rep.values, e);
        if (fit.verified) {
            rep.polynomial = fit.coeffs;
            rep.interpolated = fit.degree >= e ? fit.coeffs[e] : Rational(0);
            rep.interpolation_matches = *rep.interpolated == rep.target;
        } else {
            rep.notes.push_back("divided differences above degree e(P) do not vanish; no exact interpolation");
        }
    }
    // ratio route: |ratio - target| nonincreasing and N |ratio - target| not growing
    std::vector<Rational> err;
    for (const auto& q : rep.ratios) err.push_back(abs(q - rep.target));
    bool monotone = true;
    for (std::size_t i = 1; i < err.size(); ++i)
        if (err[i] > err[i - 1]) monotone = false;
    const std::size_t mid = err.size() / 2, last = err.size() - 1;
    const Rational c_mid = err[mid] * Rational(rep.Ns[mid]);
    const Rational c_last = err[last] * Rational(rep.Ns[last]);
    rep.ratio_route_passes = monotone && c_last <= c_mid * Rational(3, 2);
    rep.notes.push_back("large-N and large-d hypotheses are not enforced; values are virtual numbers");
    return rep;
}

MapcountResult verlinde_mapcount(int r, long d, int g, long s, unsigned threads) {
    if (s < 1) fail(ErrorKind::InvalidInput, "s must be at least 1");
    if (gcd_long(r, d) != 1) fail(ErrorKind::NotCoprime, "gcd(r, d) must be 1");
    const long gbar = g - 1;
    MapcountResult out;
    out.N = static_cast<int>(r * (s + 1));
    long du = d;
    while (s * (du - r * gbar) + du < 0) du += r;
    if (du != d)
        out.notes.push_back("d shifted from " + std::to_string(d) + " to " + std::to_string(du) +
                            " within its class mod r so that M is nonnegative");
    const long printed_M = s * (du - r * gbar) + du;
    QuotProblem problem = build_problem(r, du, g, out.N, AClassPoly::one(r));
    if (problem.M != printed_M)
        fail(ErrorKind::DegreeMismatch, "exponent s(d - r gbar) + d = " + std::to_string(printed_M) +
                                            " disagrees with the degree count M = " + std::to_string(problem.M));
    auto res = evaluate_quot(problem, threads);
    out.value = res.value / pow(Rational(s + 1), g);
    out.d_used = du;
    out.M = problem.M;
    out.method = res.method;
    return out;
}

VanishingVerdict vanishing_check(int r, long d, int g, int N, const AClassPoly& P, const std::optional<SClassPoly>& S,
                                 unsigned threads) {
    std::vector<std::string> failed;
    const long degP = weighted_degree(P).value_or(0);
    const long degS = S ? weighted_degree(*S).value_or(0) : 0;
    const long bound = static_cast<long>(r) * (r - 1) * (g - 1);
    if (degP <= bound)
        failed.push_back("deg P = " + std::to_string(degP) + " is not greater than r(r-1)(g-1) = " +
                         std::to_string(bound));
    if (r * (degP + degS) >= N)
        failed.push_back("deg P + deg S = " + std::to_string(degP + degS) + " is not below N/r");
    std::optional<QuotProblem> problem;
    try {
        problem = build_problem(r, d, g, N, P, S);
        if (problem->M <= 0) failed.push_back("M = " + std::to_string(problem->M) + " is not positive");
    } catch (const Error& e) {
        failed.push_back(std::string("no admissible exponent M: ") + e.what());
    }
    if (!failed.empty()) {
        std::string msg;
        for (const auto& f : failed) msg += (msg.empty() ? "" : "; ") + f;
        fail(ErrorKind::HypothesisViolated, msg);
    }
    auto res = evaluate_quot(*problem, threads);
    return VanishingVerdict{res.value, res.method, problem->M};
}

}  // namespace intersector
