#include "intersector/residue.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <string>

#include "intersector/error.hpp"
#include "intersector/fingerprint.hpp"
#include "intersector/series.hpp"

namespace intersector {

namespace {

std::atomic<std::size_t> certified_count{0};

/// One factor of a residue integrand together with a lower bound on its
/// weighted valuation.
struct Factor {
    std::function<IterLaurent(const SeriesContext&)> make;
    int valuation = 0;
};

std::vector<std::string> names(const char* prefix, int m) {
    std::vector<std::string> out;
    for (int i = 1; i <= m; ++i) out.push_back(prefix + std::to_string(i));
    return out;
}

Rational residue_at_bound(const std::vector<std::string>& vars, const std::vector<Factor>& factors, int bound) {
    SeriesContext ctx(vars, bound);
    IterLaurent prod = IterLaurent::constant(ctx, Rational(1));
    for (const auto& f : factors) {
        prod = prod * f.make(ctx);
        if (prod.is_zero()) return Rational(0);
    }
    for (auto it = vars.rbegin(); it != vars.rend(); ++it) prod = inner_residue(prod, *it);
    return prod.coefficient(Exponents{});
}

/// Coefficient of v_1^{-1}..v_m^{-1} in the product, certified by repeating
/// the expansion three weighted degrees deeper.
Rational iterated_residue(const std::vector<std::string>& vars, const std::vector<Factor>& factors) {
    const int m = static_cast<int>(vars.size());
    int bound = -m * (m + 1) / 2;
    for (const auto& f : factors) bound -= std::min(0, f.valuation);
    Rational a = residue_at_bound(vars, factors, bound);
    Rational b = residue_at_bound(vars, factors, bound + 3);
    if (a != b)
        fail(ErrorKind::TruncationUnstable, "residue changed from " + a.str() + " to " + b.str() + " between bounds " +
                                                std::to_string(bound) + " and " + std::to_string(bound + 3));
    ++certified_count;
    return a;
}

/// Series coefficients are needed through exponent bound / weight, plus slack
/// for a negative valuation elsewhere in the same variable.
int series_order(const SeriesContext& ctx, std::size_t var) {
    int w = SeriesContext::weight(var);
    return std::max(0, ctx.bound) / w + 2;
}

/// (1+t)^n through t^T.
Series1 binomial_series(long n, int T) {
    Series1 s;
    for (int k = 0; k <= T; ++k) s.coeffs.emplace_back(binomial(n, k));
    return s;
}

/// N / ((1+t)^N - 1) through t^T.
Series1 root_sum_kernel(int N, int T) {
    Series1 h;
    for (int k = 1; k <= T + 2; ++k) h.coeffs.push_back(Rational(binomial(N, k)) / Rational(N));
    Series1 inv = power_series_inverse(h, T + 1);
    inv.valuation = -1;
    return inv;
}

Series1 scaled_exp(const Rational& l, int T) {
    Series1 s = exp_series(T);
    Rational p(1);
    for (auto& c : s.coeffs) {
        c *= p;
        p *= l;
    }
    return s;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

void check_moduli_input(int r, long d, int g) {
    if (r < 2) fail(ErrorKind::InvalidInput, "rank r must be at least 2");
    if (g < 2) fail(ErrorKind::InvalidInput, "genus g must be at least 2");
    if (gcd_long(r, d) != 1) fail(ErrorKind::NotCoprime, "gcd(r, d) must be 1");
}

}  // namespace

std::size_t certified_residue_count() { return certified_count.load(); }

LForm build_L_form(int r, long d) {
    if (r < 2) fail(ErrorKind::InvalidInput, "rank r must be at least 2");
    if (gcd_long(r, d) != 1) fail(ErrorKind::NotCoprime, "gcd(r, d) must be 1");
    LForm l{r, d, {}};
    for (int i = 1; i < r; ++i) l.coeffs.push_back(fractional_part(Rational(d * i, r)));
    return l;
}

XYSystem build_xy_system(int r) {
    if (r < 2) fail(ErrorKind::InvalidInput, "rank r must be at least 2");
    const std::size_t m = r - 1;
    XYSystem s{r, {}};
    for (int i = 1; i <= r; ++i) {
        std::vector<Rational> c(m);
        for (int j = 1; j < r; ++j) c[j - 1] = Rational(j >= i ? 1 : 0) - Rational(j, r);
        s.x.push_back(MPoly::linear(c));
    }
    return s;
}

EvalResult quot_residue(const QuotProblem& p) {
    auto t0 = std::chrono::steady_clock::now();
    const ValidityReport rep = validity_check(p);
    if (!rep.valid()) {
        std::string why;
        for (const auto& n : rep.notes) why += (why.empty() ? "" : "; ") + n;
        fail(ErrorKind::ResiduePathInvalid, "residue path not applicable: " + why);
    }
    const int r = p.r;
    const int m = r - 1;
    const long gbar = p.gbar();
    std::vector<Factor> factors;

    // y_k^{m_k - 1 - 2 gbar C(k,2)} N / (y_k^N - 1)
    for (int k = 1; k <= m; ++k) {
        const long shift = p.m[k - 1] - 1 - 2 * gbar * (static_cast<long>(k) * (k - 1) / 2);
        const int N = p.N;
        factors.push_back({[k, shift, N](const SeriesContext& ctx) {
                               int T = series_order(ctx, k - 1);
                               return IterLaurent::from_univariate(
                                   ctx, k - 1, multiply(binomial_series(shift, T + 1), root_sum_kernel(N, T + 1), T));
                           },
                           -SeriesContext::weight(k - 1)});
    }
    // (y_i..y_{j-1} - 1)^{-2 gbar}
    for (int i = 1; i <= m; ++i) {
        for (int j = i + 1; j <= r; ++j) {
            MPoly prod = MPoly::constant(m, Rational(1));
            for (int k = i; k < j; ++k) prod = prod * (MPoly::constant(m, Rational(1)) + MPoly::variable(m, k - 1));
            prod -= MPoly::constant(m, Rational(1));
            factors.push_back({[prod, gbar](const SeriesContext& ctx) {
                                   return reciprocal(prod, static_cast<int>(2 * gbar), ctx);
                               },
                               static_cast<int>(-2 * gbar * SeriesContext::weight(i - 1))});
        }
    }
    // Q T at x_i = y_i..y_{r-1}
    std::vector<MPoly> xs;
    for (int i = 1; i <= r; ++i) {
        MPoly x = MPoly::constant(m, Rational(1));
        for (int k = i; k <= m; ++k) x = x * (MPoly::constant(m, Rational(1)) + MPoly::variable(m, k - 1));
        xs.push_back(x);
    }
    const MPoly qt = (p.chern_q * p.chern_t).substitute(xs);
    factors.push_back({[qt](const SeriesContext& ctx) { return IterLaurent::from_poly(ctx, qt); }, 0});

    const Rational res = iterated_residue(names("t", m), factors);
    Rational scale = Rational(p.u) * pow(Rational(p.N), static_cast<long>(r) * gbar + 1) / Rational(r);
    if (m % 2 == 1) scale = -scale;
    EvalResult out;
    out.value = scale * res;
    out.method = Method::QuotResidue;
    out.fingerprint = fingerprint_of("quot-residue|" + p.canonical());
    out.elapsed_ms = ms_since(t0);
    return out;
}

Rational moduli_pairing_chern(int r, long d, int g, const MPoly& Q) {
    check_moduli_input(r, d, g);
    if (Q.nvars() != static_cast<std::size_t>(r))
        fail(ErrorKind::InvalidInput, "Chern-root polynomial must have r variables");
    const int m = r - 1;
    const long gbar = g - 1;
    const LForm L = build_L_form(r, d);
    const XYSystem xy = build_xy_system(r);
    std::vector<Factor> factors;
    for (int k = 1; k <= m; ++k) {
        const Rational l = L.coeffs[k - 1];
        factors.push_back({[k, l](const SeriesContext& ctx) {
                               int T = series_order(ctx, k - 1);
                               return IterLaurent::from_univariate(
                                   ctx, k - 1, multiply(reciprocal_expm1_series(T + 1), scaled_exp(l, T + 1), T));
                           },
                           -SeriesContext::weight(k - 1)});
    }
    for (int i = 1; i <= m; ++i) {
        for (int j = i + 1; j <= r; ++j) {
            std::vector<Rational> form(m);
            for (int k = i; k < j; ++k) form[k - 1] = Rational(1);
            factors.push_back({[form, gbar](const SeriesContext& ctx) {
                                   return cone_reciprocal(form, static_cast<int>(2 * gbar), ctx);
                               },
                               static_cast<int>(-2 * gbar * SeriesContext::weight(i - 1))});
        }
    }
    const MPoly qy = Q.substitute(xy.x);
    factors.push_back({[qy](const SeriesContext& ctx) { return IterLaurent::from_poly(ctx, qy); }, 0});
    Rational res = iterated_residue(names("Y", m), factors);
    const long sign_exp = gbar * r * (r - 1) / 2;
    Rational scale = pow(Rational(r), gbar);
    if (sign_exp % 2 != 0) scale = -scale;
    return scale * res;
}

Rational moduli_pairing(int r, long d, int g, const AClassPoly& P) {
    if (P.rank != r) fail(ErrorKind::InvalidInput, "P has the wrong rank");
    if (P.poly.is_zero()) return Rational(0);
    return moduli_pairing_chern(r, d, g, aclass_to_chern(P));
}

Rational moduli_exp_pairing(int r, long d, int g, const Rational& c, const std::vector<AClassPoly>& components) {
    check_moduli_input(r, d, g);
    const long top = static_cast<long>(r * r - 1) * (g - 1);
    MPoly q(r);
    for (const auto& comp : components) {
        if (comp.rank != r) fail(ErrorKind::InvalidInput, "component has the wrong rank");
        for (const auto& [k, part] : weighted_components(comp)) {
            // classes above the dimension vanish
            if (k > top) continue;
            q += aclass_to_chern(part) * pow(c, top - k);
        }
    }
    if (q.is_zero()) return Rational(0);
    return moduli_pairing_chern(r, d, g, q);
}

MPoly ahat_in_chern_roots(int r, int g, int degree) {
    const long gbar = g - 1;
    const Series1 a = ahat_factor_series(degree);
    auto truncate = [degree](const MPoly& p) {
        MPoly out(p.nvars());
        for (const auto& [e, c] : p.terms()) {
            int s = 0;
            for (int v : e) s += v;
            if (s <= degree) out.add_term(e, c);
        }
        return out;
    };
    MPoly total = MPoly::constant(r, Rational(1));
    for (int i = 0; i < r; ++i) {
        for (int j = i + 1; j < r; ++j) {
            const MPoly u = MPoly::variable(r, i) - MPoly::variable(r, j);
            MPoly f(r);
            MPoly upow = MPoly::constant(r, Rational(1));
            for (int k = 0; k <= degree; ++k) {
                if (!a.coeff(k).is_zero()) f += upow * a.coeff(k);
                upow = upow * u;
            }
            for (long p = 0; p < 2 * gbar; ++p) total = truncate(total * f);
        }
    }
    return total;
}

Rational verlinde_chi(int r, long d, int g, long s) {
    check_moduli_input(r, d, g);
    if (s < 0) fail(ErrorKind::InvalidInput, "s must be nonnegative");
    const int top = (r * r - 1) * (g - 1);
    const MPoly ahat = ahat_in_chern_roots(r, g, top);
    const Rational c = Rational(s + 1) * Rational(r);
    MPoly q(r);
    for (int k = 0; k <= top; ++k) q += ahat.homogeneous_part(k) * pow(c, top - k);
    Rational v = moduli_pairing_chern(r, d, g, q);
    if (!v.is_integer()) fail(ErrorKind::NonIntegerResult, "Euler characteristic came out as " + v.str());
    return v;
}

}  // namespace intersector
