#include <doctest.h>

#include <cmath>

#include "intersector/error.hpp"
#include "intersector/residue.hpp"
#include "intersector/series.hpp"
#include "intersector/verify.hpp"
#include "oracles.hpp"

using namespace intersector;

namespace {

/// int exp(fbar_2) abar_2^k for r = 2 and odd d, from alternating zeta values:
/// 2^g 4^{-k} eta(2m) / (2 pi)^{2m} with m = g - 1 - k.
Rational rank2_pairing(int g, int k) {
    const int m = g - 1 - k;
    if (m < 0) return Rational(0);
    Rational base = pow(Rational(2), g) / pow(Rational(4), k);
    if (m == 0) return base / Rational(2);
    auto B = oracle::bernoulli(2 * m);
    Rational b = B[2 * m];
    if (b.sign() < 0) b = -b;
    return base * (Rational(1) - pow(Rational(2), 1 - 2 * m)) * b / (Rational(2) * oracle::factorial(2 * m));
}

}  // namespace

TEST_CASE("L forms") {
    CHECK(build_L_form(2, 1).coeffs == std::vector<Rational>{Rational(1, 2)});
    CHECK(build_L_form(3, 1).coeffs == std::vector<Rational>{Rational(1, 3), Rational(2, 3)});
    CHECK(build_L_form(3, 2).coeffs == std::vector<Rational>{Rational(2, 3), Rational(1, 3)});
    CHECK(build_L_form(3, -1).coeffs == std::vector<Rational>{Rational(2, 3), Rational(1, 3)});
    try {
        build_L_form(4, 2);
        FAIL("no throw");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotCoprime);
    }
}

TEST_CASE("X and Y variables") {
    for (int r = 2; r <= 5; ++r) {
        auto s = build_xy_system(r);
        MPoly sum(r - 1);
        for (const auto& x : s.x) sum += x;
        CHECK(sum.is_zero());
        for (int i = 0; i + 1 < r; ++i) CHECK(s.x[i] - s.x[i + 1] == MPoly::variable(r - 1, i));
    }
}

TEST_CASE("Quot residue equals the root-of-unity sum") {
    auto q = build_problem(2, 5, 2, 4, AClassPoly::one(2));
    auto res = quot_residue(q);
    CHECK(res.value == Rational(24));
    CHECK(res.method == Method::QuotResidue);
    int compared = 0;
    for (int g : {2, 3})
        for (int N : {3, 4, 5, 6, 8})
            for (int k : {0, 1, 2}) {
                AClassPoly P = k ? AClassPoly::generator(2, 2, k) : AClassPoly::one(2);
                auto p = admissible_problem(2, 1, g, N, P);
                if (!p || !validity_check(*p).valid()) continue;
                CHECK(quot_residue(*p).value == vi_evaluate(*p).value);
                ++compared;
            }
    CHECK(compared >= 10);
    for (int N : {6, 7, 8})
        for (long d : {1L, 2L})
            for (int k : {2, 3}) {
                auto p = admissible_problem(3, d, 2, N, AClassPoly::generator(3, k));
                if (!p || !validity_check(*p).valid()) continue;
                CHECK(quot_residue(*p).value == vi_evaluate(*p).value);
            }
}

TEST_CASE("Quot residue refuses invalid problems") {
    try {
        quot_residue(build_problem(2, 5, 2, 2, AClassPoly::one(2)));
        FAIL("no throw");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ResiduePathInvalid);
    }
}

TEST_CASE("rank-2 pairings against the zeta-value oracle") {
    CHECK(moduli_pairing(2, 1, 2, AClassPoly::one(2)) == Rational(1, 12));
    CHECK(moduli_pairing(2, 1, 2, AClassPoly::generator(2, 2)) == Rational(1, 2));
    CHECK(moduli_pairing(2, 1, 2, AClassPoly::generator(2, 2, 2)) == Rational(0));
    for (int g = 2; g <= 5; ++g) {
        CHECK(moduli_pairing(2, 1, g, AClassPoly::one(2)) == oracle::rank2_volume(g));
        for (int k = 0; 2 * k <= 3 * (g - 1); ++k) {
            AClassPoly P = k ? AClassPoly::generator(2, 2, k) : AClassPoly::one(2);
            CHECK(moduli_pairing(2, 1, g, P) == rank2_pairing(g, k));
            CHECK(moduli_pairing(2, 3, g, P) == rank2_pairing(g, k));
        }
    }
}

TEST_CASE("pairings depend on d only modulo r") {
    for (int k : {0, 2, 3}) {
        AClassPoly P = k ? AClassPoly::generator(3, k) : AClassPoly::one(3);
        CHECK(moduli_pairing(3, 1, 2, P) == moduli_pairing(3, 4, 2, P));
        CHECK(moduli_pairing(3, 2, 2, P) == moduli_pairing(3, -1, 2, P));
    }
}

TEST_CASE("pairings vanish above degree r(r-1)(g-1)") {
    for (int deg : {7, 8}) {
        for (std::uint64_t seed = 1; seed <= 4; ++seed) {
            AClassPoly P = random_aclass(3, deg, seed);
            CHECK(moduli_pairing(3, 1, 2, P) == Rational(0));
            CHECK(moduli_pairing(3, 2, 2, P) == Rational(0));
        }
    }
    CHECK(moduli_pairing(2, 1, 3, AClassPoly::generator(2, 2, 3)) == Rational(0));
    // the bound is sharp: degree 6 at r = 3, g = 2 pairs nontrivially
    CHECK(moduli_pairing(3, 1, 2, AClassPoly::generator(3, 3, 2)) != Rational(0));
}

TEST_CASE("exponential pairings") {
    std::vector<AClassPoly> comps{AClassPoly::one(2), AClassPoly::generator(2, 2)};
    AClassPoly sum(2, comps[0].poly + comps[1].poly);
    CHECK(moduli_exp_pairing(2, 1, 2, Rational(1), comps) == moduli_pairing(2, 1, 2, sum));
    CHECK(moduli_exp_pairing(2, 1, 2, Rational(2), {AClassPoly::one(2)}) == Rational(2, 3));
    CHECK(moduli_exp_pairing(2, 1, 2, Rational(0), {AClassPoly::one(2)}) == Rational(0));
    // c^{3 - 2} * 1/2 + c^3 / 12 at c = 3
    CHECK(moduli_exp_pairing(2, 1, 2, Rational(3), comps) == Rational(3, 2) + Rational(27, 12));
}

TEST_CASE("Ahat class in Chern roots") {
    MPoly a = ahat_in_chern_roots(2, 2, 4);
    Series1 f = ahat_factor_series(4);
    // (1 - u^2/24 + 7u^4/5760)^2 with u = x1 - x2: coefficient of x1^4 is 2 * 7/5760 + 1/576
    CHECK(a.coefficient({4, 0}) == Rational(2) * f.coeff(4) + f.coeff(2) * f.coeff(2));
    CHECK(a.coefficient({2, 0}) == Rational(2) * f.coeff(2));
    CHECK(a.total_degree() == 4);
    MPoly a3 = ahat_in_chern_roots(3, 2, 4);
    std::vector<std::size_t> swap{1, 0, 2};
    CHECK(a3.permuted(swap) == a3);
}

TEST_CASE("Verlinde numbers") {
    for (long s = 0; s <= 4; ++s) CHECK(verlinde_chi(2, 1, 2, s) == oracle::koszul(s));
    for (int g : {3, 4})
        for (long s = 0; s <= 2; ++s) {
            Rational v = verlinde_chi(2, 1, g, s);
            CHECK(v.is_integer());
            CHECK(std::abs(v.to_double() - oracle::su2_twisted_verlinde(g, s)) < 1e-6);
        }
    CHECK(verlinde_chi(2, 3, 3, 1) == verlinde_chi(2, 1, 3, 1));
    for (long s = 0; s <= 2; ++s) {
        Rational v = verlinde_chi(3, 1, 2, s);
        CHECK(v.is_integer());
        CHECK(v == verlinde_chi(3, 2, 2, s));
    }
    CHECK(verlinde_chi(3, 1, 2, 0) == Rational(1));
    CHECK_THROWS_AS(verlinde_chi(2, 1, 2, -1), Error);
}

TEST_CASE("every residue is certified against a deeper truncation") {
    const auto before = certified_residue_count();
    moduli_pairing(3, 1, 2, AClassPoly::generator(3, 2));
    quot_residue(build_problem(2, 5, 2, 6, AClassPoly::one(2)));
    CHECK(certified_residue_count() == before + 2);
}
