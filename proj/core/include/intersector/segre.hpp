#pragma once

#include <vector>

#include "intersector/mpoly.hpp"

namespace intersector {

/// Degree-k part of prod_{i=1..s} (1 + h_i)^{-N}, kept symbolic in N.
struct SegreExpansion {
    /// by_power_of_n[j] is the coefficient of N^j, a polynomial in h_1..h_s.
    std::vector<MPoly> by_power_of_n;
    /// Coefficient of N^k.
    MPoly leading;
    /// Whether leading == (-1)^k (h_1 + ... + h_s)^k / k!.
    bool matches_expected = false;
};

SegreExpansion segre_leading_coefficient(int s, int k);

/// Coefficients (constant first) of binom(-N, j) as a polynomial in N.
std::vector<Rational> negative_binomial_in_n(int j);

}  // namespace intersector
