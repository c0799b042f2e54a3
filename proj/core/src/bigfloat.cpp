#include "intersector/bigfloat.hpp"

#include <algorithm>
#include <vector>

#include "intersector/error.hpp"

namespace intersector {

namespace {

long checked_precision(long bits) {
    if (bits < kMinPrecisionBits) {
        fail(ErrorKind::OutOfRange, "precision must be at least 64 bits, got " + std::to_string(bits));
    }
    return bits;
}

}  // namespace

BigFloat::BigFloat(long precision_bits) {
    mpfr_init2(v_, checked_precision(precision_bits));
    mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(const Rational& value, long precision_bits) {
    mpfr_init2(v_, checked_precision(precision_bits));
    mpfr_set_q(v_, value.raw().get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(long value, long precision_bits) {
    mpfr_init2(v_, checked_precision(precision_bits));
    mpfr_set_si(v_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_swap(v_, other.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
    if (this != &other) {
        mpfr_set_prec(v_, mpfr_get_prec(other.v_));
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::pi(long precision_bits) {
    BigFloat out(precision_bits);
    mpfr_const_pi(out.v_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::exp2(long exponent, long precision_bits) {
    BigFloat out(precision_bits);
    mpfr_set_ui_2exp(out.v_, 1, exponent, MPFR_RNDN);
    return out;
}

#define INTERSECTOR_BIGFLOAT_OP(op, fn)                                                  \
    BigFloat& BigFloat::operator op(const BigFloat& o) {                                 \
        if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_)) mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN); \
        fn(v_, v_, o.v_, MPFR_RNDN);                                                     \
        return *this;                                                                    \
    }
INTERSECTOR_BIGFLOAT_OP(+=, mpfr_add)
INTERSECTOR_BIGFLOAT_OP(-=, mpfr_sub)
INTERSECTOR_BIGFLOAT_OP(*=, mpfr_mul)
INTERSECTOR_BIGFLOAT_OP(/=, mpfr_div)
#undef INTERSECTOR_BIGFLOAT_OP

BigFloat BigFloat::operator-() const {
    BigFloat out(*this);
    mpfr_neg(out.v_, out.v_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::abs() const {
    BigFloat out(*this);
    mpfr_abs(out.v_, out.v_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::sqrt() const {
    BigFloat out(*this);
    mpfr_sqrt(out.v_, out.v_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::sin() const {
    BigFloat out(*this);
    mpfr_sin(out.v_, v_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::cos() const {
    BigFloat out(*this);
    mpfr_cos(out.v_, v_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::pow(long exponent) const {
    BigFloat out(*this);
    mpfr_pow_si(out.v_, v_, exponent, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::with_precision(long precision_bits) const {
    BigFloat out(*this);
    mpfr_prec_round(out.v_, checked_precision(precision_bits), MPFR_RNDN);
    return out;
}

std::string BigFloat::to_string(int digits) const {
    if (mpfr_zero_p(v_)) return "0";
    std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v_);
    return std::string(buf.data());
}

BigComplex::BigComplex(long precision_bits) : re_(precision_bits), im_(precision_bits) {}

BigComplex::BigComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {}

BigComplex BigComplex::unit_root(long k, long n, long precision_bits) {
    // angle = 2 pi k / n, with k reduced first so large k costs no accuracy
    long kk = mod_floor(k, n);
    BigFloat angle = BigFloat::pi(precision_bits + 16) * BigFloat(Rational(2 * kk, n), precision_bits + 16);
    return BigComplex(angle.cos().with_precision(precision_bits), angle.sin().with_precision(precision_bits));
}

BigComplex& BigComplex::operator+=(const BigComplex& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& o) {
    BigFloat re = re_ * o.re_ - im_ * o.im_;
    BigFloat im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& o) {
    BigFloat den = o.re_ * o.re_ + o.im_ * o.im_;
    if (mpfr_zero_p(den.raw())) fail(ErrorKind::DivisionByZero, "complex division by zero");
    BigFloat re = (re_ * o.re_ + im_ * o.im_) / den;
    BigFloat im = (im_ * o.re_ - re_ * o.im_) / den;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

BigComplex BigComplex::pow(long exponent) const {
    if (exponent < 0) {
        BigComplex one(BigFloat(1, precision()), BigFloat(precision()));
        return (one / *this).pow(-exponent);
    }
    BigComplex result(BigFloat(1, precision()), BigFloat(precision()));
    BigComplex base = *this;
    while (exponent > 0) {
        if (exponent & 1) result *= base;
        base *= base;
        exponent >>= 1;
    }
    return result;
}

BigFloat BigComplex::norm() const { return (re_ * re_ + im_ * im_).sqrt(); }

}  // namespace intersector
