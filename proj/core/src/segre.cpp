#include "intersector/segre.hpp"

#include <functional>

#include "intersector/error.hpp"

namespace intersector {

std::vector<Rational> negative_binomial_in_n(int j) {
    // prod_{i<j} (-N - i) / j!
    std::vector<Rational> poly{Rational(1)};
    for (int i = 0; i < j; ++i) {
        std::vector<Rational> next(poly.size() + 1, Rational(0));
        for (std::size_t t = 0; t < poly.size(); ++t) {
            next[t] += poly[t] * Rational(-i);
            next[t + 1] += poly[t] * Rational(-1);
        }
        poly = std::move(next);
    }
    Rational inv = Rational(1) / Rational(factorial(j));
    for (auto& c : poly) c *= inv;
    return poly;
}

SegreExpansion segre_leading_coefficient(int s, int k) {
    if (s < 1 || k < 0) fail(ErrorKind::OutOfRange, "segre_leading_coefficient needs s >= 1 and k >= 0");
    const auto n = static_cast<std::size_t>(s);
    SegreExpansion out;
    out.by_power_of_n.assign(static_cast<std::size_t>(k) + 1, MPoly(n));

    std::vector<std::vector<Rational>> binoms;
    for (int j = 0; j <= k; ++j) binoms.push_back(negative_binomial_in_n(j));

    Exponents parts(n, 0);
    // enumerate compositions k_1 + ... + k_s = k
    std::function<void(std::size_t, int)> walk = [&](std::size_t idx, int left) {
        if (idx + 1 == n) {
            parts[idx] = left;
            std::vector<Rational> prod{Rational(1)};
            for (int kj : parts) {
                const auto& b = binoms[static_cast<std::size_t>(kj)];
                std::vector<Rational> next(prod.size() + b.size() - 1, Rational(0));
                for (std::size_t x = 0; x < prod.size(); ++x) {
                    for (std::size_t y = 0; y < b.size(); ++y) next[x + y] += prod[x] * b[y];
                }
                prod = std::move(next);
            }
            for (std::size_t p = 0; p < prod.size(); ++p) {
                out.by_power_of_n[p].add_term(parts, prod[p]);
            }
            return;
        }
        for (int v = 0; v <= left; ++v) {
            parts[idx] = v;
            walk(idx + 1, left - v);
        }
    };
    walk(0, k);

    out.leading = out.by_power_of_n[static_cast<std::size_t>(k)];
    MPoly c1(n);
    for (std::size_t i = 0; i < n; ++i) c1 += MPoly::variable(n, i);
    Rational scale = Rational(k % 2 ? -1 : 1) / Rational(factorial(k));
    MPoly expected = c1.pow(static_cast<unsigned>(k)) * scale;
    out.matches_expected = (out.leading == expected);
    return out;
}

}  // namespace intersector
