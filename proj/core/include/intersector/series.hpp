#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "intersector/mpoly.hpp"
#include "intersector/rational.hpp"

namespace intersector {

/// Truncated one-variable Laurent series: coeffs[i] multiplies u^(valuation + i).
/// Terms are known exactly through max_exponent().
struct Series1 {
    int valuation = 0;
    std::vector<Rational> coeffs;

    int max_exponent() const { return valuation + static_cast<int>(coeffs.size()) - 1; }
    Rational coeff(int exponent) const;
};

/// Laurent expansion of 1/(e^Y - 1) through Y^T (T >= -1).
Series1 reciprocal_expm1_series(int T);
/// Expansion of u / (2 sinh(u/2)) through u^T (T >= 0).
Series1 ahat_factor_series(int T);
/// Expansion of e^u through u^T.
Series1 exp_series(int T);
/// 1 / f for a power series with nonzero constant term, through u^T.
Series1 power_series_inverse(const Series1& f, int T);
Series1 multiply(const Series1& a, const Series1& b, int T);

/// Ordered variables v_1..v_m for iterated Laurent expansions. Later variables
/// are infinitesimal against earlier ones. Variable v_j carries weight j and
/// `bound` is the largest weighted degree retained.
struct SeriesContext {
    std::vector<std::string> names;
    int bound = 0;

    SeriesContext() = default;
    SeriesContext(std::vector<std::string> n, int b);

    std::size_t size() const { return names.size(); }
    static int weight(std::size_t index) { return static_cast<int>(index) + 1; }
    int weighted_degree(const Exponents& e) const;
    SeriesContext with_bound(int b) const { return SeriesContext(names, b); }
};

/// Element of the iterated Laurent series field in the context's variables,
/// truncated above the context bound.
class IterLaurent {
public:
    explicit IterLaurent(SeriesContext ctx) : ctx_(std::move(ctx)) {}

    static IterLaurent constant(const SeriesContext& ctx, const Rational& c);
    static IterLaurent monomial(const SeriesContext& ctx, const Exponents& e, const Rational& c);
    static IterLaurent from_poly(const SeriesContext& ctx, const MPoly& p);
    /// Places a one-variable series in variable `var`. The series must be
    /// known through every exponent the bound can retain.
    static IterLaurent from_univariate(const SeriesContext& ctx, std::size_t var, const Series1& s);
    /// f(arg) for a power series f and a polynomial arg with positive valuation.
    static IterLaurent compose(const SeriesContext& ctx, const Series1& f, const MPoly& arg);

    const SeriesContext& context() const { return ctx_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const Exponents& e) const;
    /// Smallest weighted degree present; nullopt for zero.
    std::optional<int> valuation() const;

    void add_term(const Exponents& e, const Rational& c);
    IterLaurent& operator+=(const IterLaurent& o);
    IterLaurent& operator*=(const Rational& s);
    friend IterLaurent operator+(IterLaurent a, const IterLaurent& b) { return a += b; }
    friend IterLaurent operator*(const IterLaurent& a, const IterLaurent& b);
    friend IterLaurent operator*(IterLaurent a, const Rational& s) { return a *= s; }
    friend bool operator==(const IterLaurent& a, const IterLaurent& b) { return a.terms_ == b.terms_; }

    IterLaurent truncated(int bound) const;

private:
    SeriesContext ctx_;
    std::map<Exponents, Rational> terms_;
};

/// f^(-power) for a nonzero polynomial f, expanded about its leading term in
/// the nested order (innermost variable compared first).
IterLaurent reciprocal(const MPoly& f, int power, const SeriesContext& ctx);

/// form^(-power) for a linear form sum_i coeffs[i] v_i: the earliest variable
/// present dominates and the rest is expanded geometrically.
IterLaurent cone_reciprocal(std::span<const Rational> form, int power, const SeriesContext& ctx);

/// Coefficient of var^(-1), where var must be the innermost variable.
IterLaurent inner_residue(const IterLaurent& f, const std::string& var);

}  // namespace intersector
