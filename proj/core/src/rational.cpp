#include "intersector/rational.hpp"

#include <cctype>
#include <numeric>

#include "intersector/error.hpp"

namespace intersector {

namespace {

bool parse_integer(std::string_view text, BigInt& out) {
    if (text.empty()) return false;
    std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (i == text.size()) return false;
    for (std::size_t j = i; j < text.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(text[j]))) return false;
    }
    std::string digits(text.substr(text[0] == '+' ? 1 : 0));
    return out.set_str(digits, 10) == 0;
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) fail(ErrorKind::DivisionByZero, "rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    BigInt num;
    BigInt den = 1;
    if (slash == std::string_view::npos) {
        if (!parse_integer(text, num)) fail(ErrorKind::ParseError, "malformed rational '" + std::string(text) + "'");
    } else {
        auto tail = text.substr(slash + 1);
        if (!parse_integer(text.substr(0, slash), num) || tail.empty() || tail[0] == '-' || tail[0] == '+' ||
            !parse_integer(tail, den)) {
            fail(ErrorKind::ParseError, "malformed rational '" + std::string(text) + "'");
        }
        if (den == 0) fail(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
    }
    return Rational(num, den);
}

std::string Rational::str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) fail(ErrorKind::DivisionByZero, "rational division by zero");
    q_ /= o.q_;
    return *this;
}

Rational pow(const Rational& base, long exponent) {
    if (exponent < 0) {
        if (base.is_zero()) fail(ErrorKind::DivisionByZero, "zero to a negative power");
        return pow(Rational(1) / base, -exponent);
    }
    BigInt num, den;
    mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(num, den);
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational fractional_part(const Rational& x) {
    BigInt fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.numerator().get_mpz_t(), x.denominator().get_mpz_t());
    return x - Rational(fl);
}

BigInt binomial(long n, long k) {
    if (k < 0) return 0;
    BigInt out;
    if (n >= 0) {
        mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    } else {
        // binom(n, k) = (-1)^k binom(k - n - 1, k) for negative n
        mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(k - n - 1), static_cast<unsigned long>(k));
        if (k % 2) out = -out;
    }
    return out;
}

BigInt factorial(long n) {
    if (n < 0) fail(ErrorKind::OutOfRange, "factorial of a negative number");
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

long mod_floor(long a, long n) {
    long m = a % n;
    return m < 0 ? m + n : m;
}

long gcd_long(long a, long b) { return std::gcd(a, b); }

}  // namespace intersector
