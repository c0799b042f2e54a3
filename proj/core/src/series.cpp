#include "intersector/series.hpp"

#include <algorithm>
#include <set>

#include "intersector/error.hpp"

namespace intersector {

Rational Series1::coeff(int exponent) const {
    if (exponent < valuation || exponent > max_exponent()) return Rational(0);
    return coeffs[static_cast<std::size_t>(exponent - valuation)];
}

Series1 multiply(const Series1& a, const Series1& b, int T) {
    Series1 out;
    out.valuation = a.valuation + b.valuation;
    // exact through min(a.max + b.val, b.max + a.val)
    int top = std::min({T, a.max_exponent() + b.valuation, b.max_exponent() + a.valuation});
    out.coeffs.assign(static_cast<std::size_t>(std::max(0, top - out.valuation + 1)), Rational(0));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
            std::size_t k = i + j;
            if (k >= out.coeffs.size()) break;
            out.coeffs[k] += a.coeffs[i] * b.coeffs[j];
        }
    }
    return out;
}

Series1 power_series_inverse(const Series1& f, int T) {
    if (f.valuation != 0 || f.coeffs.empty() || f.coeffs[0].is_zero()) {
        fail(ErrorKind::DivisionByZero, "power series inverse needs a nonzero constant term");
    }
    if (f.max_exponent() < T) fail(ErrorKind::InvalidInput, "series not known to the requested order");
    Series1 out;
    out.coeffs.assign(static_cast<std::size_t>(T + 1), Rational(0));
    Rational inv0 = Rational(1) / f.coeffs[0];
    out.coeffs[0] = inv0;
    for (int n = 1; n <= T; ++n) {
        Rational acc(0);
        for (int k = 1; k <= n; ++k) acc += f.coeff(k) * out.coeffs[static_cast<std::size_t>(n - k)];
        out.coeffs[static_cast<std::size_t>(n)] = -acc * inv0;
    }
    return out;
}

Series1 exp_series(int T) {
    Series1 out;
    Rational term(1);
    for (int n = 0; n <= T; ++n) {
        if (n > 0) term /= Rational(n);
        out.coeffs.push_back(term);
    }
    return out;
}

Series1 reciprocal_expm1_series(int T) {
    if (T < -1) fail(ErrorKind::OutOfRange, "reciprocal_expm1_series needs T >= -1");
    // 1/(e^Y - 1) = Y^{-1} * [ (e^Y - 1)/Y ]^{-1}
    Series1 quotient;
    Rational term(1);
    for (int n = 1; n <= T + 2; ++n) {
        term /= Rational(n);
        quotient.coeffs.push_back(term);  // coefficient of Y^{n-1} is 1/n!
    }
    Series1 inv = power_series_inverse(quotient, T + 1);
    inv.valuation = -1;
    return inv;
}

Series1 ahat_factor_series(int T) {
    if (T < 0) fail(ErrorKind::OutOfRange, "ahat_factor_series needs T >= 0");
    // 2 sinh(u/2) / u = sum_k u^{2k} / (4^k (2k+1)!)
    Series1 sinh_ratio;
    for (int n = 0; n <= T; ++n) {
        if (n % 2) {
            sinh_ratio.coeffs.emplace_back(0);
        } else {
            sinh_ratio.coeffs.push_back(Rational(1) /
                                        (Rational(factorial(n + 1)) * intersector::pow(Rational(2), n)));
        }
    }
    return power_series_inverse(sinh_ratio, T);
}

SeriesContext::SeriesContext(std::vector<std::string> n, int b) : names(std::move(n)), bound(b) {
    std::set<std::string> seen(names.begin(), names.end());
    if (seen.size() != names.size()) fail(ErrorKind::InvalidInput, "series variable names must be unique");
}

int SeriesContext::weighted_degree(const Exponents& e) const {
    int d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += weight(i) * e[i];
    return d;
}

IterLaurent IterLaurent::constant(const SeriesContext& ctx, const Rational& c) {
    return monomial(ctx, Exponents(ctx.size(), 0), c);
}

IterLaurent IterLaurent::monomial(const SeriesContext& ctx, const Exponents& e, const Rational& c) {
    IterLaurent out(ctx);
    out.add_term(e, c);
    return out;
}

IterLaurent IterLaurent::from_poly(const SeriesContext& ctx, const MPoly& p) {
    if (p.nvars() != ctx.size()) fail(ErrorKind::InvalidInput, "polynomial does not match the series context");
    IterLaurent out(ctx);
    for (const auto& [e, c] : p.terms()) out.add_term(e, c);
    return out;
}

IterLaurent IterLaurent::from_univariate(const SeriesContext& ctx, std::size_t var, const Series1& s) {
    if (var >= ctx.size()) fail(ErrorKind::InvalidInput, "series variable index out of range");
    const int w = SeriesContext::weight(var);
    // largest exponent k with k * w <= bound
    int needed = ctx.bound >= 0 ? ctx.bound / w : -((-ctx.bound + w - 1) / w);
    if (s.max_exponent() < needed) {
        fail(ErrorKind::InvalidInput, "univariate series known through " + std::to_string(s.max_exponent()) +
                                          " but the bound needs " + std::to_string(needed));
    }
    IterLaurent out(ctx);
    Exponents e(ctx.size(), 0);
    for (int k = s.valuation; k <= needed; ++k) {
        e[var] = k;
        out.add_term(e, s.coeff(k));
    }
    return out;
}

IterLaurent IterLaurent::compose(const SeriesContext& ctx, const Series1& f, const MPoly& arg) {
    if (f.valuation < 0) fail(ErrorKind::InvalidInput, "compose needs a power series");
    IterLaurent a = from_poly(ctx, arg);
    auto val = a.valuation();
    if (val && *val <= 0) fail(ErrorKind::InvalidInput, "compose needs an argument of positive valuation");
    IterLaurent out = constant(ctx, f.coeff(0));
    if (!val) return out;
    IterLaurent power = constant(ctx, Rational(1));
    for (int n = 1; n * *val <= ctx.bound; ++n) {
        if (n > f.max_exponent()) fail(ErrorKind::InvalidInput, "power series too short for the bound");
        power = power * a;
        if (power.is_zero()) break;
        out += power * f.coeff(n);
    }
    return out;
}

Rational IterLaurent::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> IterLaurent::valuation() const {
    std::optional<int> best;
    for (const auto& [e, c] : terms_) {
        int d = ctx_.weighted_degree(e);
        if (!best || d < *best) best = d;
    }
    return best;
}

void IterLaurent::add_term(const Exponents& e, const Rational& c) {
    if (e.size() != ctx_.size()) fail(ErrorKind::InvalidInput, "exponent vector does not match the context");
    if (c.is_zero() || ctx_.weighted_degree(e) > ctx_.bound) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

IterLaurent& IterLaurent::operator+=(const IterLaurent& o) {
    if (o.ctx_.names != ctx_.names) fail(ErrorKind::InvalidInput, "series over different contexts");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

IterLaurent& IterLaurent::operator*=(const Rational& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

IterLaurent operator*(const IterLaurent& a, const IterLaurent& b) {
    if (a.ctx_.names != b.ctx_.names) fail(ErrorKind::InvalidInput, "series over different contexts");
    SeriesContext ctx = a.ctx_.bound <= b.ctx_.bound ? a.ctx_ : b.ctx_;
    IterLaurent out(ctx);
    // sort b by weighted degree so the inner loop can stop early
    std::vector<std::pair<int, const std::pair<const Exponents, Rational>*>> bs;
    bs.reserve(b.terms_.size());
    for (const auto& t : b.terms_) bs.emplace_back(ctx.weighted_degree(t.first), &t);
    std::sort(bs.begin(), bs.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    Exponents e(ctx.size());
    for (const auto& [ea, ca] : a.terms_) {
        int da = ctx.weighted_degree(ea);
        for (const auto& [db, tb] : bs) {
            if (da + db > ctx.bound) break;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + tb->first[i];
            out.add_term(e, ca * tb->second);
        }
    }
    return out;
}

IterLaurent IterLaurent::truncated(int bound) const {
    IterLaurent out(ctx_.with_bound(bound));
    for (const auto& [e, c] : terms_) out.add_term(e, c);
    return out;
}

IterLaurent reciprocal(const MPoly& f, int power, const SeriesContext& ctx) {
    if (f.nvars() != ctx.size()) fail(ErrorKind::InvalidInput, "polynomial does not match the series context");
    if (f.is_zero()) fail(ErrorKind::ZeroForm, "reciprocal of the zero polynomial");
    if (power < 1) fail(ErrorKind::OutOfRange, "reciprocal power must be positive");
    // leading term: smallest exponent of the innermost variable, then the next, ...
    auto nested_less = [](const Exponents& x, const Exponents& y) {
        return std::lexicographical_compare(x.rbegin(), x.rend(), y.rbegin(), y.rend());
    };
    auto lead = f.terms().begin();
    for (auto it = f.terms().begin(); it != f.terms().end(); ++it) {
        if (nested_less(it->first, lead->first)) lead = it;
    }
    const Exponents& a = lead->first;
    const Rational c = lead->second;
    const int lead_deg = ctx.weighted_degree(a);

    // f = c x^a (1 + w); (1 + w)^{-p} is needed through bound + p * lead_deg
    const int inner_bound = ctx.bound + power * lead_deg;
    SeriesContext inner = ctx.with_bound(inner_bound);
    IterLaurent w(inner);
    Exponents shifted(ctx.size());
    for (const auto& [e, coeff] : f.terms()) {
        if (&e == &a) continue;
        for (std::size_t i = 0; i < e.size(); ++i) shifted[i] = e[i] - a[i];
        if (ctx.weighted_degree(shifted) <= 0) {
            fail(ErrorKind::InvalidInput, "polynomial is not expandable about its leading term in this context");
        }
        w.add_term(shifted, coeff / c);
    }
    IterLaurent sum = IterLaurent::constant(inner, Rational(1));
    IterLaurent wn = IterLaurent::constant(inner, Rational(1));
    for (long n = 1; !w.is_zero(); ++n) {
        wn = wn * w;
        if (wn.is_zero()) break;
        sum += wn * Rational(binomial(-power, n));
    }
    IterLaurent out(ctx);
    const Rational scale = intersector::pow(c, -power);
    Exponents e(ctx.size());
    for (const auto& [s, coeff] : sum.terms()) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = s[i] - power * a[i];
        out.add_term(e, coeff * scale);
    }
    return out;
}

IterLaurent cone_reciprocal(std::span<const Rational> form, int power, const SeriesContext& ctx) {
    if (form.size() != ctx.size()) fail(ErrorKind::InvalidInput, "linear form does not match the series context");
    if (std::all_of(form.begin(), form.end(), [](const Rational& c) { return c.is_zero(); })) {
        fail(ErrorKind::ZeroForm, "cone_reciprocal of the zero form");
    }
    return reciprocal(MPoly::linear(form), power, ctx);
}

IterLaurent inner_residue(const IterLaurent& f, const std::string& var) {
    const auto& ctx = f.context();
    if (ctx.size() == 0 || ctx.names.back() != var) {
        fail(ErrorKind::WrongVariableOrder,
             "residue variable '" + var + "' is not the innermost variable of the context");
    }
    std::vector<std::string> rest(ctx.names.begin(), ctx.names.end() - 1);
    const int w = SeriesContext::weight(ctx.size() - 1);
    IterLaurent out(SeriesContext(rest, ctx.bound + w));
    for (const auto& [e, c] : f.terms()) {
        if (e.back() == -1) out.add_term(Exponents(e.begin(), e.end() - 1), c);
    }
    return out;
}

}  // namespace intersector
