#pragma once

#include <vector>

#include "intersector/bigfloat.hpp"
#include "intersector/cyclotomic.hpp"
#include "intersector/mpoly.hpp"
#include "intersector/rational.hpp"

namespace intersector {

/// Dominant weight of SU(r): chi_1 >= ... >= chi_r, integer gaps, zero sum.
struct WeightSU {
    int r = 2;
    std::vector<Rational> chi;
    std::vector<long> gaps;  // chi_i - chi_{i+1}

    long height() const;
    /// chi + rho with rho_i = (r - 2i + 1) / 2.
    std::vector<Rational> shifted() const;
};

WeightSU weight_from_gaps(int r, std::vector<long> gaps);

/// All dominant weights of height <= H, by increasing height, each height
/// shell in lexicographic order of gap vectors.
std::vector<WeightSU> enumerate_dominant_weights(int r, long H);

/// Weights of height exactly h.
std::vector<WeightSU> weight_shell(int r, long h);

BigInt weyl_dimension(const WeightSU& w);

/// Trace of exp(2 pi i d / r) I on the representation, in Q(zeta_{2r}).
CycloNum central_trace(const WeightSU& w, long d);

struct WittenResult {
    BigFloat value;
    BigFloat tail;      // estimate of the omitted part
    BigFloat imag_max;  // |imaginary part| of the partial sum
    long decay_exponent = 0;
    long weights = 0;
};

/// Summand decay exponent over height shells used for convergence and tails.
long witten_decay_exponent(int r, int g, int degP);

/// Partial Witten sum over weights of height <= H.
WittenResult witten_sum(int r, long d, int g, const AClassPoly& P, long H,
                        long precision_bits = kDefaultPrecisionBits, unsigned threads = 1);

}  // namespace intersector
