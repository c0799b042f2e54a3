#include "intersector/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <string>

#include "intersector/error.hpp"

namespace intersector {

namespace detail {

struct CycloField {
    long order = 1;
    long degree = 1;
    std::vector<Rational> modulus;              // monic Phi_N, constant first
    std::vector<std::vector<Rational>> powers;  // x^k mod Phi_N for k in [0, N)
};

}  // namespace detail

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// Remainder of p modulo a monic polynomial m.
Poly reduce_monic(Poly p, const Poly& m) {
    const std::size_t deg = m.size() - 1;
    for (std::size_t top = p.size(); top-- > deg;) {
        if (p[top].is_zero()) continue;
        Rational lead = p[top];
        const std::size_t shift = top - deg;
        for (std::size_t i = 0; i <= deg; ++i) p[shift + i] -= lead * m[i];
    }
    p.resize(deg);
    return p;
}

std::vector<BigInt> exact_divide(std::vector<BigInt> num, const std::vector<BigInt>& den) {
    // den is monic up to sign (cyclotomic polynomials are monic)
    const std::size_t dd = den.size() - 1;
    std::vector<BigInt> quot(num.size() - dd, 0);
    for (std::size_t top = num.size(); top-- > dd;) {
        BigInt c = num[top] / den[dd];
        quot[top - dd] = c;
        for (std::size_t i = 0; i <= dd; ++i) num[top - dd + i] -= c * den[i];
    }
    return quot;
}

std::shared_ptr<const detail::CycloField> field_for(long order) {
    static std::mutex mu;
    static std::map<long, std::shared_ptr<const detail::CycloField>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(order);
    if (it != cache.end()) return it->second;

    auto field = std::make_shared<detail::CycloField>();
    field->order = order;
    for (const auto& c : cyclotomic_polynomial(order)) field->modulus.emplace_back(c);
    field->degree = static_cast<long>(field->modulus.size()) - 1;
    field->powers.reserve(static_cast<std::size_t>(order));
    for (long k = 0; k < order; ++k) {
        Poly xk(static_cast<std::size_t>(k) + 1, Rational(0));
        xk[static_cast<std::size_t>(k)] = 1;
        Poly red = reduce_monic(std::move(xk), field->modulus);
        red.resize(static_cast<std::size_t>(field->degree), Rational(0));
        field->powers.push_back(std::move(red));
    }
    cache.emplace(order, field);
    return field;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

Poly poly_sub(Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

// Division with remainder over Q; b must be nonzero (trimmed).
void poly_divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    r = a;
    trim(r);
    q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, Rational(0));
    const Rational& lead = b.back();
    while (!r.empty() && r.size() >= b.size()) {
        std::size_t shift = r.size() - b.size();
        Rational c = r.back() / lead;
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
        trim(r);
    }
}

}  // namespace

std::vector<BigInt> cyclotomic_polynomial(long n) {
    if (n < 1) fail(ErrorKind::OutOfRange, "cyclotomic order must be positive");
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    std::vector<BigInt> num(static_cast<std::size_t>(n) + 1, 0);
    num[0] = -1;
    num[static_cast<std::size_t>(n)] = 1;
    for (long d = 1; d < n; ++d) {
        if (n % d == 0) num = exact_divide(std::move(num), cyclotomic_polynomial(d));
    }
    return num;
}

long euler_phi(long n) {
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

CycloNum::CycloNum(long order) : order_(order) {
    if (order < 1) fail(ErrorKind::OutOfRange, "cyclotomic order must be positive");
    field_ = field_for(order);
    coeffs_.assign(static_cast<std::size_t>(field_->degree), Rational(0));
}

CycloNum::CycloNum(long order, const Rational& value) : CycloNum(order) { coeffs_[0] = value; }

CycloNum::CycloNum(long order, std::vector<Rational> coeffs) : CycloNum(order) {
    if (coeffs.empty()) return;
    Poly red = reduce_monic(std::move(coeffs), field_->modulus);
    for (std::size_t i = 0; i < red.size(); ++i) coeffs_[i] = red[i];
}

CycloNum CycloNum::zeta_power(long order, long k) {
    CycloNum out(order);
    out.coeffs_ = out.field_->powers[static_cast<std::size_t>(mod_floor(k, order))];
    return out;
}

CycloNum CycloNum::from_exponent_table(long order, const std::vector<Rational>& values) {
    CycloNum out(order);
    if (static_cast<long>(values.size()) != order) {
        fail(ErrorKind::InvalidInput, "exponent table length must equal the order");
    }
    for (long k = 0; k < order; ++k) {
        const Rational& v = values[static_cast<std::size_t>(k)];
        if (v.is_zero()) continue;
        const auto& xk = out.field_->powers[static_cast<std::size_t>(k)];
        for (std::size_t i = 0; i < xk.size(); ++i) {
            if (!xk[i].is_zero()) out.coeffs_[i] += v * xk[i];
        }
    }
    return out;
}

bool CycloNum::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
}

const std::vector<Rational>& CycloNum::modulus() const { return field_->modulus; }

void CycloNum::check_same_order(const CycloNum& o) const {
    if (order_ != o.order_) {
        fail(ErrorKind::InvalidInput, "cyclotomic orders differ: " + std::to_string(order_) + " vs " +
                                          std::to_string(o.order_));
    }
}

CycloNum& CycloNum::operator+=(const CycloNum& o) {
    check_same_order(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& o) {
    check_same_order(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

CycloNum& CycloNum::operator*=(const CycloNum& o) {
    check_same_order(o);
    Poly red = reduce_monic(poly_mul(coeffs_, o.coeffs_), field_->modulus);
    red.resize(coeffs_.size(), Rational(0));
    coeffs_ = std::move(red);
    return *this;
}

CycloNum& CycloNum::operator*=(const Rational& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
}

CycloNum CycloNum::operator-() const {
    CycloNum out(*this);
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

CycloNum CycloNum::pow(long exponent) const {
    if (exponent < 0) return cyclo_inverse(*this).pow(-exponent);
    CycloNum result(order_, Rational(1));
    CycloNum base = *this;
    while (exponent > 0) {
        if (exponent & 1) result *= base;
        exponent >>= 1;
        if (exponent) base *= base;
    }
    return result;
}

CycloNum CycloNum::galois_conjugate(long k) const {
    if (std::gcd(k, order_) != 1) fail(ErrorKind::InvalidInput, "Galois exponent must be coprime to the order");
    std::vector<Rational> table(static_cast<std::size_t>(order_), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        table[static_cast<std::size_t>(mod_floor(static_cast<long>(i) * k, order_))] += coeffs_[i];
    }
    return from_exponent_table(order_, table);
}

CycloNum cyclo_inverse(const CycloNum& a) {
    if (a.is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero in Q(zeta_" + std::to_string(a.order()) + ")");
    // Extended Euclid on (Phi_N, a): track s with s * a == r (mod Phi_N).
    Poly r0 = a.modulus();
    Poly r1 = a.coeffs();
    trim(r1);
    Poly s0;          // coefficient of a for r0
    Poly s1{Rational(1)};
    while (r1.size() > 1) {
        Poly q, rem;
        poly_divmod(r0, r1, q, rem);
        Poly s2 = poly_sub(s0, poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r1 is a nonzero constant since Phi_N is irreducible and a != 0
    Rational inv = Rational(1) / r1[0];
    for (auto& c : s1) c *= inv;
    return CycloNum(a.order(), s1);
}

Rational cyclo_to_rational(const CycloNum& a) {
    const auto& c = a.coeffs();
    for (std::size_t i = 1; i < c.size(); ++i) {
        if (!c[i].is_zero()) {
            fail(ErrorKind::NotRational, "coefficient of zeta^" + std::to_string(i) + " is " + c[i].str() +
                                             " (order " + std::to_string(a.order()) + ")");
        }
    }
    return c[0];
}

BigComplex complex_eval(const CycloNum& a, long precision_bits) {
    const long work = precision_bits + 32;
    BigComplex zeta = BigComplex::unit_root(1, a.order(), work);
    BigComplex acc(work);
    const auto& c = a.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
        acc *= zeta;
        acc += BigComplex(BigFloat(c[i], work), BigFloat(work));
    }
    return BigComplex(acc.re().with_precision(precision_bits), acc.im().with_precision(precision_bits));
}

}  // namespace intersector
