#include "intersector/interp.hpp"

#include "intersector/error.hpp"

namespace intersector {

std::vector<Rational> divided_differences(std::span<const Rational> xs, std::span<const Rational> ys) {
    if (xs.size() != ys.size()) fail(ErrorKind::InvalidInput, "abscissae and values differ in length");
    std::vector<Rational> table(ys.begin(), ys.end());
    std::vector<Rational> out;
    const std::size_t n = xs.size();
    for (std::size_t k = 0; k < n; ++k) {
        out.push_back(table[0]);
        for (std::size_t i = 0; i + k + 1 < n; ++i) {
            Rational dx = xs[i + k + 1] - xs[i];
            if (dx.is_zero()) fail(ErrorKind::InvalidInput, "repeated abscissa");
            table[i] = (table[i + 1] - table[i]) / dx;
        }
    }
    return out;
}

std::vector<Rational> newton_to_monomial(std::span<const Rational> xs, std::span<const Rational> diffs) {
    std::vector<Rational> coeffs;
    // Horner on the Newton form, from the innermost difference outwards
    for (std::size_t k = diffs.size(); k-- > 0;) {
        std::vector<Rational> next(coeffs.size() + 1);
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            next[i + 1] += coeffs[i];
            next[i] -= coeffs[i] * xs[k];
        }
        next[0] += diffs[k];
        coeffs = std::move(next);
    }
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
    return coeffs;
}

PolynomialFit fit_polynomial(std::span<const Rational> xs, std::span<const Rational> ys, int max_degree) {
    if (max_degree < 0) fail(ErrorKind::InvalidInput, "max_degree must be nonnegative");
    if (xs.size() < static_cast<std::size_t>(max_degree) + 1)
        fail(ErrorKind::InsufficientPoints, "need at least " + std::to_string(max_degree + 1) + " points");
    const auto diffs = divided_differences(xs, ys);
    PolynomialFit fit;
    fit.verified = diffs.size() > static_cast<std::size_t>(max_degree) + 1;
    for (std::size_t k = max_degree + 1; k < diffs.size(); ++k)
        if (!diffs[k].is_zero()) fit.verified = false;
    const std::size_t keep = std::min(diffs.size(), static_cast<std::size_t>(max_degree) + 1);
    fit.coeffs = newton_to_monomial(xs, std::span(diffs).first(keep));
    fit.degree = static_cast<int>(fit.coeffs.size()) - 1;
    return fit;
}

}  // namespace intersector
