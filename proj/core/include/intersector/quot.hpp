#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "intersector/bigfloat.hpp"
#include "intersector/cyclotomic.hpp"
#include "intersector/mpoly.hpp"
#include "intersector/rational.hpp"

namespace intersector {

/// A fully resolved intersection problem int P(abar) S(a) a_r^M on the Quot
/// scheme of rank-r, degree-d quotients of O^N over a genus-g curve.
struct QuotProblem {
    int r = 2;
    long d = 1;
    int g = 2;
    int N = 3;
    AClassPoly P;
    SClassPoly S;
    long e = 0;            // expected dimension N d - r (N - r) (g - 1)
    long M = 0;            // exponent of a_r
    std::vector<long> m;   // reduced exponents m_1..m_{r-1}
    int u = 1;             // sign (-1)^{(g-1) r(r-1)/2 + d(r-1)}
    MPoly chern_q;         // P translated to Chern roots
    MPoly chern_t;         // S translated to Chern roots
    std::vector<std::string> warnings;

    int gbar() const { return g - 1; }
    /// Canonical text of every defining parameter.
    std::string canonical() const;
};

enum class Method { ViExact, ViNumeric, QuotResidue, ModuliResidue, VerlindeResidue, VerlindeMapcount };

std::string_view to_string(Method m);

struct EvalResult {
    Rational value;
    Method method = Method::ViExact;
    std::string fingerprint;
    double elapsed_ms = 0;
};

/// Solves the degree bookkeeping for M, the reduced exponents and the sign.
/// Throws NotCoprime, DegreeMismatch, or InvalidInput.
QuotProblem build_problem(int r, long d, int g, int N, const AClassPoly& P,
                          const std::optional<SClassPoly>& S = std::nullopt);

/// Summand A(lambda) (prod lambda)^{-gbar} / prod_{i<j} (lambda_i - lambda_j)^{2 gbar}
/// at lambda_j = zeta^{k_j}, zeta = e^{2 pi i / N}.
CycloNum vi_summand(const QuotProblem& problem, std::span<const int> subset);

/// All r-subsets of {0..N-1} in colexicographic order.
std::vector<std::vector<int>> colex_subsets(int N, int r);

/// u N^{r gbar} times the sum of vi_summand over unordered r-subsets of the
/// N-th roots of unity. Exact; the cyclotomic total must be rational.
EvalResult vi_evaluate(const QuotProblem& problem, unsigned threads = 1);

struct NumericEval {
    BigFloat value;      // real part of the total
    BigFloat imag_abs;   // |imaginary part| of the total
    long precision = kDefaultPrecisionBits;
    double elapsed_ms = 0;
};

NumericEval vi_evaluate_numeric(const QuotProblem& problem, long precision_bits = kDefaultPrecisionBits);

/// Pole-order bounds at 0 and infinity for the one-form in variable y_j.
struct RegularityCertificate {
    int variable = 1;
    long order_at_zero = 0;      // lower bound on the order of the form at y_j = 0
    long order_at_infinity = 0;  // lower bound on the order at y_j = infinity
    bool regular() const { return order_at_zero >= 0 && order_at_infinity >= 0; }
};

struct ValidityReport {
    bool exponents_in_range = false;
    std::vector<RegularityCertificate> certificates;
    std::vector<std::string> notes;

    bool valid() const;
};

/// Whether the iterated-residue evaluation applies to this problem.
ValidityReport validity_check(const QuotProblem& problem);

}  // namespace intersector
