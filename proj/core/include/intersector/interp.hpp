#pragma once

#include <span>
#include <vector>

#include "intersector/rational.hpp"

namespace intersector {

/// Newton divided differences f[x_0], f[x_0,x_1], ..., f[x_0..x_n].
std::vector<Rational> divided_differences(std::span<const Rational> xs, std::span<const Rational> ys);

/// Monomial coefficients (constant first) of the interpolating polynomial.
std::vector<Rational> newton_to_monomial(std::span<const Rational> xs, std::span<const Rational> diffs);

struct PolynomialFit {
    std::vector<Rational> coeffs;  // constant first, length degree + 1
    int degree = -1;               // -1 for the zero polynomial
    /// Every divided difference above the fitted degree vanished and at least
    /// one such difference was available as a check.
    bool verified = false;
};

/// Fits a polynomial of degree <= max_degree and checks the remaining
/// divided differences vanish.
PolynomialFit fit_polynomial(std::span<const Rational> xs, std::span<const Rational> ys, int max_degree);

}  // namespace intersector
