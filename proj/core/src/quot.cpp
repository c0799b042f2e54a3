#include "intersector/quot.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <thread>

#include "intersector/error.hpp"
#include "intersector/fingerprint.hpp"

namespace intersector {

std::string_view to_string(Method m) {
    switch (m) {
        case Method::ViExact: return "vi-exact";
        case Method::ViNumeric: return "vi-numeric";
        case Method::QuotResidue: return "quot-residue";
        case Method::ModuliResidue: return "moduli-residue";
        case Method::VerlindeResidue: return "verlinde-residue";
        case Method::VerlindeMapcount: return "verlinde-mapcount";
    }
    return "unknown";
}

std::string QuotProblem::canonical() const {
    return "quot|r=" + std::to_string(r) + "|d=" + std::to_string(d) + "|g=" + std::to_string(g) +
           "|N=" + std::to_string(N) + "|P=" + canonical_poly(P.poly) + "|S=" + canonical_poly(S.poly);
}

QuotProblem build_problem(int r, long d, int g, int N, const AClassPoly& P, const std::optional<SClassPoly>& S) {
    if (r < 2) fail(ErrorKind::InvalidInput, "rank r must be at least 2");
    if (g < 2) fail(ErrorKind::InvalidInput, "genus g must be at least 2");
    if (N < r) fail(ErrorKind::InvalidInput, "N=" + std::to_string(N) + " is smaller than r=" + std::to_string(r));
    if (gcd_long(r, d) != 1)
        fail(ErrorKind::NotCoprime, "gcd(r, d) = " + std::to_string(gcd_long(r, d)) + " for r=" + std::to_string(r) +
                                        ", d=" + std::to_string(d));
    if (P.rank != r) fail(ErrorKind::InvalidInput, "P has rank " + std::to_string(P.rank) + ", expected " + std::to_string(r));
    SClassPoly s = S.value_or(SClassPoly::one(r));
    if (s.rank != r) fail(ErrorKind::InvalidInput, "S has rank " + std::to_string(s.rank) + ", expected " + std::to_string(r));
    if (P.poly.is_zero()) fail(ErrorKind::InvalidInput, "P is the zero polynomial");
    if (s.poly.is_zero()) fail(ErrorKind::InvalidInput, "S is the zero polynomial");
    if (!is_weighted_homogeneous(P)) fail(ErrorKind::DegreeMismatch, "P must be weighted-homogeneous");
    if (!is_weighted_homogeneous(s)) fail(ErrorKind::DegreeMismatch, "S must be weighted-homogeneous");

    QuotProblem q;
    q.r = r;
    q.d = d;
    q.g = g;
    q.N = N;
    q.P = P;
    q.S = s;
    const long gbar = g - 1;
    q.e = static_cast<long>(N) * d - static_cast<long>(r) * (N - r) * gbar;
    const long degP = *weighted_degree(P);
    const long degS = *weighted_degree(s);
    const long rem = q.e - degP - degS;
    if (rem < 0 || rem % r != 0) {
        fail(ErrorKind::DegreeMismatch,
             "e - deg P - deg S = " + std::to_string(rem) + " is not a nonnegative multiple of r=" + std::to_string(r) +
                 " (e=" + std::to_string(q.e) + ", deg P=" + std::to_string(degP) + ", deg S=" + std::to_string(degS) +
                 ")");
    }
    q.M = rem / r;
    for (int i = 1; i < r; ++i) q.m.push_back(mod_floor(i * (q.M - gbar), N));
    const long sign_exp = gbar * r * (r - 1) / 2 + d * (r - 1);
    q.u = mod_floor(sign_exp, 2) == 0 ? 1 : -1;
    q.chern_q = aclass_to_chern(P);
    q.chern_t = sclass_to_chern(s);
    if (N == r) q.warnings.push_back("N equals r: the Quot scheme is the degenerate case N = r");
    return q;
}

namespace {

/// Shared precomputation for summands of one problem.
class ViKernel {
public:
    explicit ViKernel(const QuotProblem& p) : p_(p), qt_(p.chern_q * p.chern_t) {
        inv_diff_.reserve(p.N);
        inv_diff_.emplace_back(p.N);
        for (int k = 1; k < p.N; ++k) {
            CycloNum z = CycloNum::zeta_power(p.N, k) - CycloNum(p.N, Rational(1));
            inv_diff_.push_back(cyclo_inverse(z).pow(2 * p.gbar()));
        }
    }

    CycloNum summand(std::span<const int> k) const {
        const int N = p_.N;
        const long gbar = p_.gbar();
        std::vector<Rational> table(N);
        long ksum = 0;
        for (int v : k) ksum += v;
        const long shift = (p_.M - gbar) * ksum;
        for (const auto& [e, c] : qt_.terms()) {
            long s = shift;
            for (std::size_t i = 0; i < e.size(); ++i) s += static_cast<long>(e[i]) * k[i];
            table[mod_floor(s, N)] += c;
        }
        CycloNum out = CycloNum::from_exponent_table(N, table);
        // (zeta^a - zeta^b)^{-1} = zeta^{-b} (zeta^{a-b} - 1)^{-1}
        long rot = 0;
        for (std::size_t i = 0; i < k.size(); ++i) {
            for (std::size_t j = i + 1; j < k.size(); ++j) {
                out *= inv_diff_[mod_floor(k[i] - k[j], N)];
                rot += k[j];
            }
        }
        return out * CycloNum::zeta_power(N, mod_floor(-2 * gbar * rot, N));
    }

private:
    const QuotProblem& p_;
    MPoly qt_;
    std::vector<CycloNum> inv_diff_;
};

void check_subset(const QuotProblem& p, std::span<const int> subset) {
    if (static_cast<int>(subset.size()) != p.r)
        fail(ErrorKind::InvalidInput, "subset must have exactly r=" + std::to_string(p.r) + " entries");
    std::vector<int> sorted(subset.begin(), subset.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        fail(ErrorKind::InvalidInput, "subset entries must be distinct");
    if (sorted.front() < 0 || sorted.back() >= p.N) fail(ErrorKind::OutOfRange, "subset entries must lie in [0, N)");
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

CycloNum vi_summand(const QuotProblem& problem, std::span<const int> subset) {
    check_subset(problem, subset);
    return ViKernel(problem).summand(subset);
}

std::vector<std::vector<int>> colex_subsets(int N, int r) {
    std::vector<std::vector<int>> out;
    if (r < 0 || r > N) return out;
    std::vector<int> c(r);
    std::iota(c.begin(), c.end(), 0);
    while (true) {
        out.push_back(c);
        // colex successor: bump the first entry that can move up
        int i = 0;
        while (i < r && ((i + 1 < r && c[i] + 1 == c[i + 1]) || (i + 1 == r && c[i] + 1 == N))) ++i;
        if (i == r) break;
        ++c[i];
        for (int j = 0; j < i; ++j) c[j] = j;
    }
    return out;
}

EvalResult vi_evaluate(const QuotProblem& problem, unsigned threads) {
    auto t0 = std::chrono::steady_clock::now();
    const auto subsets = colex_subsets(problem.N, problem.r);
    ViKernel kernel(problem);
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(subsets.size())));
    std::vector<CycloNum> partial(threads, CycloNum(problem.N));
    const std::size_t chunk = (subsets.size() + threads - 1) / threads;
    auto work = [&](unsigned t) {
        const std::size_t lo = t * chunk, hi = std::min(subsets.size(), lo + chunk);
        for (std::size_t i = lo; i < hi; ++i) partial[t] += kernel.summand(subsets[i]);
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    }
    CycloNum total(problem.N);
    for (const auto& part : partial) total += part;
    Rational scale = Rational(problem.u) * pow(Rational(problem.N), static_cast<long>(problem.r) * problem.gbar());
    EvalResult res;
    res.value = cyclo_to_rational(total) * scale;
    res.method = Method::ViExact;
    res.fingerprint = fingerprint_of("vi|" + problem.canonical());
    res.elapsed_ms = ms_since(t0);
    return res;
}

NumericEval vi_evaluate_numeric(const QuotProblem& problem, long precision_bits) {
    auto t0 = std::chrono::steady_clock::now();
    const long prec = precision_bits;
    const long work = prec + 32;
    const int N = problem.N;
    const long gbar = problem.gbar();
    std::vector<BigComplex> roots;
    roots.reserve(N);
    for (int k = 0; k < N; ++k) roots.push_back(BigComplex::unit_root(k, N, work));
    std::vector<std::pair<Exponents, BigFloat>> qt;
    const MPoly qt_poly = problem.chern_q * problem.chern_t;
    for (const auto& [e, c] : qt_poly.terms()) qt.emplace_back(e, BigFloat(c, work));

    BigComplex total(work);
    for (const auto& k : colex_subsets(N, problem.r)) {
        long ksum = std::accumulate(k.begin(), k.end(), 0L);
        const long shift = (problem.M - gbar) * ksum;
        BigComplex num(work);
        for (const auto& [e, c] : qt) {
            long s = shift;
            for (std::size_t i = 0; i < e.size(); ++i) s += static_cast<long>(e[i]) * k[i];
            num += roots[mod_floor(s, N)].scaled(c);
        }
        BigComplex den(BigFloat(1L, work), BigFloat(0L, work));
        for (std::size_t i = 0; i < k.size(); ++i)
            for (std::size_t j = i + 1; j < k.size(); ++j) den *= roots[k[i]] - roots[k[j]];
        total += num / den.pow(2 * gbar);
    }
    BigFloat scale(Rational(problem.u) * pow(Rational(N), static_cast<long>(problem.r) * gbar), work);
    total = total.scaled(scale);
    NumericEval out;
    out.value = total.re().with_precision(prec);
    out.imag_abs = total.im().abs().with_precision(prec);
    out.precision = prec;
    out.elapsed_ms = ms_since(t0);
    return out;
}

bool ValidityReport::valid() const {
    return exponents_in_range &&
           std::all_of(certificates.begin(), certificates.end(), [](const auto& c) { return c.regular(); });
}

ValidityReport validity_check(const QuotProblem& problem) {
    ValidityReport rep;
    const int r = problem.r;
    const long N = problem.N;
    const long gbar = problem.gbar();
    rep.exponents_in_range =
        std::all_of(problem.m.begin(), problem.m.end(), [&](long mj) { return mj >= 1 && mj <= N - 1; });
    if (!rep.exponents_in_range) rep.notes.push_back("some reduced exponent m_j lies outside [1, N-1]");
    const MPoly qt = problem.chern_q * problem.chern_t;
    std::vector<std::size_t> vars;
    for (int j = 1; j < r; ++j) {
        vars.push_back(static_cast<std::size_t>(j - 1));
        auto range = qt.degree_range(vars).value_or(std::pair{0, 0});
        const long cj2 = static_cast<long>(j) * (j - 1) / 2;
        const long mj = problem.m[j - 1];
        RegularityCertificate c;
        c.variable = j;
        c.order_at_zero = mj + range.first - 2 * gbar * cj2 - 1;
        c.order_at_infinity = N - mj - range.second + 2 * gbar * (cj2 + static_cast<long>(j) * (r - j)) - 1;
        if (!c.regular()) rep.notes.push_back("y_" + std::to_string(j) + " may have a pole away from 1");
        rep.certificates.push_back(c);
    }
    for (const auto& w : problem.warnings) rep.notes.push_back(w);
    return rep;
}

}  // namespace intersector
