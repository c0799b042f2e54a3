#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "intersector/mpoly.hpp"
#include "intersector/quot.hpp"
#include "intersector/rational.hpp"

namespace intersector {

struct GridSpec {
    std::vector<int> ranks{2};
    std::vector<int> genera{2};
    std::vector<int> Ns{4};
    /// Residues of d modulo r; those not coprime to r are skipped.
    std::vector<long> d_residues{1};
    /// Fixed insertions; each is used with every rank it matches.
    std::vector<AClassPoly> polys;
    /// Random weighted-homogeneous insertions per (r, g), drawn from `seed`.
    int random_polys = 0;
    int random_max_degree = 4;
    std::uint64_t seed = 1;
    bool check_numeric = false;
    long numeric_precision = 128;
    unsigned threads = 1;
};

enum class EquivalenceStatus { Equal, Mismatch, ResidueInapplicable, Inadmissible };

std::string_view to_string(EquivalenceStatus s);

struct EquivalenceEntry {
    int r = 2;
    long d = 1;
    int g = 2;
    int N = 4;
    AClassPoly P;
    EquivalenceStatus status = EquivalenceStatus::Inadmissible;
    std::optional<Rational> vi;
    std::optional<Rational> residue;
    /// |numeric - exact| and |imaginary part|, when requested.
    std::optional<double> numeric_error;
    std::optional<double> numeric_imag;
    std::string note;
};

struct EquivalenceReport {
    std::vector<EquivalenceEntry> entries;
    std::size_t compared = 0;
    std::size_t failures = 0;
    bool ok() const { return failures == 0; }
};

/// Smallest d in the class d0 mod r making the problem admissible, if N is
/// in the admissible progression for that class.
std::optional<QuotProblem> admissible_problem(int r, long d0, int g, int N, const AClassPoly& P,
                                              const std::optional<SClassPoly>& S = std::nullopt);

/// Random weighted-homogeneous polynomial of weighted degree `degree`.
AClassPoly random_aclass(int r, int degree, std::uint64_t seed);

EquivalenceReport equivalence_report(const GridSpec& grid);

/// Exact value of a Quot problem by the residue path when it applies and
/// the root-of-unity sum otherwise.
EvalResult evaluate_quot(const QuotProblem& problem, unsigned threads = 1);

struct AsymptoticReport {
    int r = 2;
    long d0 = 1;
    int g = 2;
    AClassPoly P;
    int leading_exponent = 0;  // e(P) = r^2 gbar + 1 - deg P
    std::vector<int> Ns;
    std::vector<long> ds;  // degree used for each N
    std::vector<Rational> values;
    std::vector<std::string> methods;
    std::vector<Rational> ratios;  // V(N) / N^{e(P)}
    std::optional<Rational> interpolated;  // exact leading coefficient
    std::vector<Rational> polynomial;      // full fit, constant first
    Rational target;
    bool interpolation_matches = false;
    bool ratio_route_passes = false;
    bool verdict() const { return interpolation_matches || ratio_route_passes; }
    std::vector<std::string> notes;
};

AsymptoticReport asymptotic_extract(int r, long d0, int g, const AClassPoly& P, const std::vector<int>& Ns,
                                    unsigned threads = 1);

struct MapcountResult {
    Rational value;
    long d_used = 1;
    int N = 0;
    long M = 0;
    Method method = Method::ViExact;
    std::vector<std::string> notes;
};

/// Quot value on N = r(s+1) with P = S = 1 divided by (s+1)^g.
MapcountResult verlinde_mapcount(int r, long d, int g, long s, unsigned threads = 1);

struct VanishingVerdict {
    Rational value;
    Method method = Method::ViExact;
    long M = 0;
    bool vanished() const { return value.is_zero(); }
};

/// Checks the hypotheses of the vanishing statement (throws
/// HypothesisViolated listing each failure) and evaluates.
VanishingVerdict vanishing_check(int r, long d, int g, int N, const AClassPoly& P,
                                 const std::optional<SClassPoly>& S = std::nullopt, unsigned threads = 1);

}  // namespace intersector
