#pragma once

#include <memory>
#include <vector>

#include "intersector/bigfloat.hpp"
#include "intersector/rational.hpp"

namespace intersector {

/// Coefficients of the n-th cyclotomic polynomial, constant term first.
std::vector<BigInt> cyclotomic_polynomial(long n);

long euler_phi(long n);

namespace detail {
struct CycloField;
}

/// Element of Q(zeta_N), stored as the canonical residue in Q[x]/Phi_N(x)
/// (exactly phi(N) coefficients, constant term first). Arithmetic between
/// elements of different order is an error.
class CycloNum {
public:
    CycloNum() : CycloNum(1) {}
    explicit CycloNum(long order);
    CycloNum(long order, const Rational& value);
    /// Coefficients need not be reduced; they are reduced mod Phi_N.
    CycloNum(long order, std::vector<Rational> coeffs);

    /// Class of x^k, i.e. zeta^k (k may be negative).
    static CycloNum zeta_power(long order, long k);
    /// Sum_k values[k] zeta^k for a vector indexed by exponent mod N.
    static CycloNum from_exponent_table(long order, const std::vector<Rational>& values);

    long order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const;
    /// Monic Phi_N with rational coefficients, constant term first.
    const std::vector<Rational>& modulus() const;

    CycloNum& operator+=(const CycloNum& o);
    CycloNum& operator-=(const CycloNum& o);
    CycloNum& operator*=(const CycloNum& o);
    CycloNum& operator*=(const Rational& s);
    friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
    friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
    friend CycloNum operator*(CycloNum a, const CycloNum& b) { return a *= b; }
    friend CycloNum operator*(CycloNum a, const Rational& s) { return a *= s; }
    friend CycloNum operator*(const Rational& s, CycloNum a) { return a *= s; }
    CycloNum operator-() const;
    friend bool operator==(const CycloNum& a, const CycloNum& b) {
        return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
    }

    /// Integer power; negative exponents invert first.
    CycloNum pow(long exponent) const;

    /// Image under the Galois automorphism zeta -> zeta^k, gcd(k, N) = 1.
    CycloNum galois_conjugate(long k) const;

private:
    void check_same_order(const CycloNum& o) const;

    long order_;
    std::shared_ptr<const detail::CycloField> field_;
    std::vector<Rational> coeffs_;
};

/// Multiplicative inverse via the extended Euclidean algorithm over Q[x].
/// Throws Error(DivisionByZero) for zero.
CycloNum cyclo_inverse(const CycloNum& a);

/// Returns the constant coefficient; throws Error(NotRational) naming the
/// first nonzero nonconstant coefficient otherwise.
Rational cyclo_to_rational(const CycloNum& a);

/// Evaluates the representative at e^{2 pi i / N}.
BigComplex complex_eval(const CycloNum& a, long precision_bits = kDefaultPrecisionBits);

}  // namespace intersector
