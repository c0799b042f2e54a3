#pragma once

#include <mpfr.h>

#include <string>

#include "intersector/rational.hpp"

namespace intersector {

inline constexpr long kMinPrecisionBits = 64;
inline constexpr long kDefaultPrecisionBits = 128;

/// Binary floating value with an explicit mantissa precision (MPFR-backed).
/// Results of binary operations carry the larger operand precision.
class BigFloat {
public:
    explicit BigFloat(long precision_bits = kDefaultPrecisionBits);
    BigFloat(const Rational& value, long precision_bits);
    BigFloat(long value, long precision_bits);
    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    long precision() const { return static_cast<long>(mpfr_get_prec(v_)); }

    static BigFloat pi(long precision_bits);
    /// 2^exponent exactly.
    static BigFloat exp2(long exponent, long precision_bits);

    BigFloat& operator+=(const BigFloat& o);
    BigFloat& operator-=(const BigFloat& o);
    BigFloat& operator*=(const BigFloat& o);
    BigFloat& operator/=(const BigFloat& o);
    friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
    friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
    friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
    friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }
    BigFloat operator-() const;

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return b < a; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return b <= a; }

    BigFloat abs() const;
    BigFloat sqrt() const;
    BigFloat sin() const;
    BigFloat cos() const;
    BigFloat pow(long exponent) const;
    /// Copy rounded to a different precision.
    BigFloat with_precision(long precision_bits) const;

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    /// Decimal rendering with the given number of significant digits.
    std::string to_string(int digits = 30) const;

    mpfr_srcptr raw() const { return v_; }

private:
    mpfr_t v_;
};

/// Complex number with BigFloat parts; both parts share a precision.
class BigComplex {
public:
    explicit BigComplex(long precision_bits = kDefaultPrecisionBits);
    BigComplex(BigFloat re, BigFloat im);

    const BigFloat& re() const { return re_; }
    const BigFloat& im() const { return im_; }
    long precision() const { return re_.precision(); }

    /// e^{2 pi i k / n}.
    static BigComplex unit_root(long k, long n, long precision_bits);

    BigComplex& operator+=(const BigComplex& o);
    BigComplex& operator-=(const BigComplex& o);
    BigComplex& operator*=(const BigComplex& o);
    BigComplex& operator/=(const BigComplex& o);
    friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
    friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
    friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
    friend BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }
    BigComplex scaled(const BigFloat& s) const { return BigComplex(re_ * s, im_ * s); }

    BigComplex pow(long exponent) const;
    BigFloat norm() const;  // |z|

private:
    BigFloat re_;
    BigFloat im_;
};

}  // namespace intersector
