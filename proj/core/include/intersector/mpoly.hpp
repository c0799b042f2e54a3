#pragma once

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "intersector/rational.hpp"

namespace intersector {

using Exponents = std::vector<int>;

/// Sparse multivariate polynomial with exact rational coefficients. Exponent
/// vectors are dense and all have length nvars(); no zero coefficient is stored.
class MPoly {
public:
    explicit MPoly(std::size_t nvars = 0) : nvars_(nvars) {}

    static MPoly constant(std::size_t nvars, const Rational& c);
    static MPoly variable(std::size_t nvars, std::size_t index);
    static MPoly monomial(Exponents exps, const Rational& c);
    /// sum_i coeffs[i] * x_i
    static MPoly linear(std::span<const Rational> coeffs);

    std::size_t nvars() const { return nvars_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exponents& exps, const Rational& c);
    Rational coefficient(const Exponents& exps) const;

    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly& operator*=(const Rational& s);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend MPoly operator*(MPoly a, const Rational& s) { return a *= s; }
    friend MPoly operator*(const Rational& s, MPoly a) { return a *= s; }
    MPoly operator-() const { return *this * Rational(-1); }
    friend bool operator==(const MPoly& a, const MPoly& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }

    MPoly pow(unsigned exponent) const;

    /// Total degree; nullopt for the zero polynomial.
    std::optional<int> total_degree() const;
    /// Smallest and largest degree in the given subset of variables over all
    /// terms; nullopt for the zero polynomial.
    std::optional<std::pair<int, int>> degree_range(std::span<const std::size_t> vars) const;
    /// Part of total degree exactly k.
    MPoly homogeneous_part(int k) const;

    /// Replaces x_i by images[i]; all images must share one variable count.
    MPoly substitute(const std::vector<MPoly>& images) const;
    Rational evaluate(std::span<const Rational> point) const;
    /// Polynomial with x_i renamed to x_{perm[i]}.
    MPoly permuted(std::span<const std::size_t> perm) const;
    /// Same polynomial viewed in a ring with `extra` more variables appended.
    MPoly extended(std::size_t extra) const;

private:
    std::size_t nvars_;
    std::map<Exponents, Rational> terms_;
};

MPoly elementary_symmetric(int k, int n);

/// Polynomial in the normalized classes abar_2..abar_r (variable i carries
/// abar_{i+2}, weight i+2).
struct AClassPoly {
    int rank = 2;
    MPoly poly{1};

    AClassPoly() = default;
    AClassPoly(int r, MPoly p);
    static AClassPoly one(int r);
    /// abar_k^power as a monomial.
    static AClassPoly generator(int r, int k, int power = 1);
};

/// Polynomial in the plain classes a_1..a_r (variable i carries a_{i+1},
/// weight i+1).
struct SClassPoly {
    int rank = 2;
    MPoly poly{2};

    SClassPoly() = default;
    SClassPoly(int r, MPoly p);
    static SClassPoly one(int r);
};

/// Max over terms of sum_i i*e_i; nullopt flags the zero polynomial.
std::optional<int> weighted_degree(const AClassPoly& p);
std::optional<int> weighted_degree(const SClassPoly& p);
bool is_weighted_homogeneous(const AClassPoly& p);
bool is_weighted_homogeneous(const SClassPoly& p);
/// Components keyed by weighted degree.
std::map<int, AClassPoly> weighted_components(const AClassPoly& p);

/// Q(x_1..x_r) = P(s_2(xbar), ..., s_r(xbar)) with xbar_i = x_i - (x_1+...+x_r)/r.
MPoly aclass_to_chern(const AClassPoly& p);
/// T(x_1..x_r) = S(s_1(x), ..., s_r(x)).
MPoly sclass_to_chern(const SClassPoly& s);

}  // namespace intersector
