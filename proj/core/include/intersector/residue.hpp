#pragma once

#include <cstddef>
#include <vector>

#include "intersector/mpoly.hpp"
#include "intersector/quot.hpp"
#include "intersector/rational.hpp"

namespace intersector {

/// Coefficients {d i / r} for i = 1..r-1.
struct LForm {
    int r = 2;
    long d = 1;
    std::vector<Rational> coeffs;
};

LForm build_L_form(int r, long d);

/// X_1..X_r written as linear polynomials in Y_1..Y_{r-1}, with sum X_i = 0
/// and Y_i = X_i - X_{i+1}.
struct XYSystem {
    int r = 2;
    std::vector<MPoly> x;
};

XYSystem build_xy_system(int r);

/// Iterated residue at y_i = 1 of the Quot one-form; equals vi_evaluate when
/// validity_check passes. Throws ResiduePathInvalid otherwise.
EvalResult quot_residue(const QuotProblem& problem);

/// int exp(fbar_2) P(abar) over the moduli space of stable bundles.
Rational moduli_pairing(int r, long d, int g, const AClassPoly& P);

/// Same pairing for a polynomial already written in the Chern roots X_1..X_r.
Rational moduli_pairing_chern(int r, long d, int g, const MPoly& Q);

/// int exp(c fbar_2) times the sum of the given components.
Rational moduli_exp_pairing(int r, long d, int g, const Rational& c, const std::vector<AClassPoly>& components);

/// Ahat class of the moduli space in the Chern roots, through total degree
/// `degree`.
MPoly ahat_in_chern_roots(int r, int g, int degree);

/// chi(L^s) for the ample generator L.
Rational verlinde_chi(int r, long d, int g, long s);

/// Number of residues so far whose value was unchanged when recomputed with
/// a deeper truncation.
std::size_t certified_residue_count();

}  // namespace intersector
