#include "intersector/witten.hpp"

#include <algorithm>
#include <thread>

#include "intersector/error.hpp"

namespace intersector {

long WeightSU::height() const {
    long h = 0;
    for (long x : gaps) h += x;
    return h;
}

std::vector<Rational> WeightSU::shifted() const {
    std::vector<Rational> mu = chi;
    for (int i = 1; i <= r; ++i) mu[i - 1] += Rational(r - 2 * i + 1, 2);
    return mu;
}

WeightSU weight_from_gaps(int r, std::vector<long> gaps) {
    if (r < 2 || static_cast<int>(gaps.size()) != r - 1) fail(ErrorKind::InvalidInput, "need r-1 gaps");
    WeightSU w;
    w.r = r;
    Rational mean(0);
    for (int j = 1; j < r; ++j) {
        if (gaps[j - 1] < 0) fail(ErrorKind::InvalidInput, "gaps must be nonnegative");
        mean += Rational(j * gaps[j - 1], r);
    }
    for (int i = 1; i <= r; ++i) {
        Rational c(0);
        for (int j = i; j < r; ++j) c += Rational(gaps[j - 1]);
        w.chi.push_back(c - mean);
    }
    w.gaps = std::move(gaps);
    return w;
}

std::vector<WeightSU> weight_shell(int r, long h) {
    std::vector<WeightSU> out;
    std::vector<long> gaps(r - 1, 0);
    // lexicographic walk over compositions of h into r-1 nonnegative parts
    auto rec = [&](auto& self, int pos, long left) -> void {
        if (pos == r - 2) {
            gaps[pos] = left;
            out.push_back(weight_from_gaps(r, gaps));
            return;
        }
        for (long v = 0; v <= left; ++v) {
            gaps[pos] = v;
            self(self, pos + 1, left - v);
        }
    };
    rec(rec, 0, h);
    return out;
}

std::vector<WeightSU> enumerate_dominant_weights(int r, long H) {
    if (r < 2) fail(ErrorKind::InvalidInput, "rank r must be at least 2");
    std::vector<WeightSU> out;
    for (long h = 0; h <= H; ++h) {
        auto shell = weight_shell(r, h);
        out.insert(out.end(), shell.begin(), shell.end());
    }
    return out;
}

BigInt weyl_dimension(const WeightSU& w) {
    const auto mu = w.shifted();
    Rational dim(1);
    for (int i = 0; i < w.r; ++i)
        for (int j = i + 1; j < w.r; ++j) dim *= (mu[i] - mu[j]) / Rational(j - i);
    if (!dim.is_integer() || dim.sign() <= 0)
        fail(ErrorKind::NonPositiveDimension, "Weyl dimension came out as " + dim.str());
    return dim.numerator();
}

CycloNum central_trace(const WeightSU& w, long d) {
    const long r = w.r;
    if (gcd_long(r, d) != 1) fail(ErrorKind::NotCoprime, "gcd(r, d) must be 1");
    const Rational twice = w.shifted().back() * Rational(2 * r);
    if (!twice.is_integer()) fail(ErrorKind::InvalidInput, "weight is not integral");
    const long mu2r = twice.numerator().get_si();
    const long k = mod_floor(-d * mu2r + r * mod_floor(d * (r - 1), 2), 2 * r);
    return CycloNum::zeta_power(2 * r, k) * Rational(weyl_dimension(w));
}

long witten_decay_exponent(int r, int g, int degP) {
    return 2L * (g - 1) * (r - 1) - degP - (r - 2);
}

namespace {

struct ShellSum {
    BigComplex total;
    BigFloat abs_total;
};

}  // namespace

WittenResult witten_sum(int r, long d, int g, const AClassPoly& P, long H, long precision_bits, unsigned threads) {
    if (r < 2 || g < 2) fail(ErrorKind::InvalidInput, "need r >= 2 and g >= 2");
    if (gcd_long(r, d) != 1) fail(ErrorKind::NotCoprime, "gcd(r, d) must be 1");
    if (H < 1) fail(ErrorKind::InvalidInput, "height cutoff must be positive");
    if (precision_bits < kMinPrecisionBits) fail(ErrorKind::OutOfRange, "precision below 64 bits");
    if (!is_weighted_homogeneous(P)) fail(ErrorKind::DegreeMismatch, "P must be weighted-homogeneous");
    const auto deg = weighted_degree(P);
    const int k = deg.value_or(0);
    const long p = witten_decay_exponent(r, g, k);
    if (p < 2)
        fail(ErrorKind::ConvergenceNotGuaranteed,
             "summand decays like height^-" + std::to_string(p) + ", need exponent at least 2");
    const long gbar = g - 1;
    const long work = precision_bits + 32;
    const MPoly q = aclass_to_chern(P);

    // C (2 pi i)^k = r^g (2 pi)^{k - r(r-1) gbar} i^k / prod (k!)^{2 gbar}
    Rational rat = pow(Rational(r), g);
    for (int j = 1; j < r; ++j) rat /= pow(Rational(factorial(j)), 2 * gbar);
    const BigFloat two_pi = BigFloat::pi(work) * BigFloat(2L, work);
    const BigFloat scale = BigFloat(rat, work) * two_pi.pow(k - static_cast<long>(r) * (r - 1) * gbar);
    const BigComplex ik = BigComplex::unit_root(mod_floor(k, 4), 4, work);
    std::vector<BigComplex> zeta;
    for (int j = 0; j < 2 * r; ++j) zeta.push_back(BigComplex::unit_root(j, 2 * r, work));

    auto shell_sum = [&](long h) {
        ShellSum s{BigComplex(work), BigFloat(0L, work)};
        for (const auto& w : weight_shell(r, h)) {
            if (P.poly.is_zero()) break;
            const Rational qv = q.evaluate(w.shifted());
            if (qv.is_zero()) continue;
            const BigInt dim = weyl_dimension(w);
            const Rational twice = w.shifted().back() * Rational(2 * r);
            const long j = mod_floor(-d * twice.numerator().get_si() + r * mod_floor(d * (r - 1), 2), 2 * r);
            const BigFloat mag = BigFloat(qv / pow(Rational(dim), 2 * gbar), work);
            s.total += zeta[j].scaled(mag);
            s.abs_total += mag.abs();
        }
        return s;
    };

    std::vector<ShellSum> shells(H + 1, ShellSum{BigComplex(work), BigFloat(0L, work)});
    threads = std::max(1u, threads);
    if (threads == 1) {
        for (long h = 0; h <= H; ++h) shells[h] = shell_sum(h);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&, t] {
                for (long h = t; h <= H; h += threads) shells[h] = shell_sum(h);
            });
    }
    BigComplex total(work);
    for (const auto& s : shells) total += s.total;
    total = (total * ik).scaled(scale);

    // K = max over the upper half of the shells of |shell(h)| (h+1)^p
    BigFloat K(0L, work);
    for (long h = std::max(1L, H / 2); h <= H; ++h) {
        BigFloat v = shells[h].abs_total * scale.abs() * BigFloat(h + 1, work).pow(p);
        if (v > K) K = v;
    }
    BigFloat tail = BigFloat(4L, work) * K / BigFloat(H + 1, work).pow(p - 1) / BigFloat(p - 1, work);

    WittenResult out;
    out.value = total.re().with_precision(precision_bits);
    out.imag_max = total.im().abs().with_precision(precision_bits);
    out.tail = tail.with_precision(precision_bits);
    out.decay_exponent = p;
    for (long h = 0; h <= H; ++h) out.weights += static_cast<long>(weight_shell(r, h).size());
    BigFloat tol = BigFloat::exp2(-precision_bits / 2, work) * (BigFloat(1L, work) + out.value.abs());
    if (tol < out.imag_max)
        fail(ErrorKind::PrecisionExhausted, "imaginary part " + out.imag_max.to_string(6) + " exceeds tolerance");
    return out;
}

}  // namespace intersector
