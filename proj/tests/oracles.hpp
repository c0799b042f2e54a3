#pragma once

// Reference computations for the tests, written without the library's
// series and residue code.

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "intersector/rational.hpp"

namespace oracle {

using intersector::Rational;

/// B_0..B_n with B_1 = -1/2, by the Akiyama-Tanigawa algorithm.
inline std::vector<Rational> bernoulli(int n) {
    std::vector<Rational> out, a(n + 1);
    for (int m = 0; m <= n; ++m) {
        a[m] = Rational(1, m + 1);
        for (int j = m; j >= 1; --j) a[j - 1] = Rational(j) * (a[j - 1] - a[j]);
        out.push_back(a[0]);
    }
    if (n >= 1) out[1] = Rational(-1, 2);
    return out;
}

inline Rational factorial(int n) {
    Rational f(1);
    for (int i = 2; i <= n; ++i) f *= Rational(i);
    return f;
}

inline Rational binom(long n, long k) {
    if (k < 0) return Rational(0);
    Rational b(1);
    for (long i = 0; i < k; ++i) b = b * Rational(n - i) / Rational(i + 1);
    return b;
}

/// int exp(fbar_2) over the rank-2 odd-degree moduli space from the
/// alternating zeta value: 2^g (1 - 2^{3-2g}) |B_{2g-2}| / (2 (2g-2)!).
inline Rational rank2_volume(int g) {
    auto B = bernoulli(2 * g - 2);
    Rational b = B[2 * g - 2];
    if (b.sign() < 0) b = -b;
    Rational eta = Rational(1) - intersector::pow(Rational(2), 3 - 2 * g);
    return intersector::pow(Rational(2), g) * eta * b / (Rational(2) * factorial(2 * g - 2));
}

/// Twisted SU(2) Verlinde number at level k = 2s, in floating point.
inline double su2_twisted_verlinde(int g, long s) {
    const double k = 2.0 * s;
    double sum = 0;
    for (long j = 1; j <= 2 * s + 1; ++j) {
        double sn = std::sin(j * std::numbers::pi / (k + 2));
        sum += ((j % 2) ? 1.0 : -1.0) / std::pow(sn, 2 * g - 2);
    }
    return std::pow((k + 2) / 2, g - 1) * sum;
}

/// Euler characteristic of O(s) on the intersection of two quadrics in P^5.
inline Rational koszul(long s) {
    return binom(s + 5, 5) - Rational(2) * binom(s + 3, 5) + binom(s + 1, 5);
}

}  // namespace oracle
