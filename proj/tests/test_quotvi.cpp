#include <doctest.h>

#include <algorithm>
#include <complex>
#include <numbers>
#include <random>

#include "intersector/error.hpp"
#include "intersector/quot.hpp"

using namespace intersector;

namespace {

using cplx = std::complex<long double>;

/// Ordered-tuple sum divided by r!, in long double, with Q and T evaluated
/// from their Chern-root polynomials.
long double brute_force(const QuotProblem& p) {
    const long double pi = std::numbers::pi_v<long double>;
    const int r = p.r, N = p.N;
    const MPoly qt = p.chern_q * p.chern_t;
    std::vector<int> idx(r);
    cplx total = 0;
    auto rec = [&](auto& self, int pos) -> void {
        if (pos == r) {
            std::vector<cplx> lam;
            for (int k : idx) lam.push_back(std::polar(1.0L, 2 * pi * k / N));
            cplx a = 0;
            for (const auto& [e, c] : qt.terms()) {
                cplx m = static_cast<long double>(c.to_double());
                for (int i = 0; i < r; ++i) m *= std::pow(lam[i], e[i]);
                a += m;
            }
            cplx prod = 1;
            for (auto l : lam) prod *= l;
            cplx den = 1;
            for (int i = 0; i < r; ++i)
                for (int j = i + 1; j < r; ++j) den *= std::pow(lam[i] - lam[j], 2 * p.gbar());
            total += a * std::pow(prod, p.M - p.gbar()) / den;
            return;
        }
        for (int k = 0; k < N; ++k) {
            if (std::find(idx.begin(), idx.begin() + pos, k) != idx.begin() + pos) continue;
            idx[pos] = k;
            self(self, pos + 1);
        }
    };
    rec(rec, 0);
    long double rfact = 1;
    for (int i = 2; i <= r; ++i) rfact *= i;
    CHECK(std::abs(total.imag()) < 1e-9L * (1 + std::abs(total.real())));
    return p.u * std::pow(static_cast<long double>(N), r * p.gbar()) * total.real() / rfact;
}

}  // namespace

TEST_CASE("problem bookkeeping") {
    auto q = build_problem(2, 5, 2, 4, AClassPoly::one(2));
    CHECK(q.e == 16);
    CHECK(q.M == 8);
    CHECK(q.m == std::vector<long>{3});
    CHECK(q.u == 1);
    CHECK(q.warnings.empty());

    auto q2 = build_problem(2, 5, 2, 2, AClassPoly::one(2));
    CHECK(q2.e == 10);
    CHECK(q2.M == 5);
    CHECK(q2.m == std::vector<long>{0});
    CHECK(q2.u == 1);
    CHECK(q2.warnings.size() == 1);

    try {
        build_problem(2, 4, 2, 4, AClassPoly::one(2));
        FAIL("no throw");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotCoprime);
    }
    CHECK_THROWS_AS(build_problem(3, 1, 2, 2, AClassPoly::one(3)), Error);
    // N = 5 and r = 3 need 5d = 0 mod 3 for P = 1, impossible with gcd(3, d) = 1
    for (long d : {1L, 2L, 4L, 5L}) {
        try {
            build_problem(3, d, 2, 5, AClassPoly::one(3));
            FAIL("no throw");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::DegreeMismatch);
        }
    }
    auto q3 = build_problem(3, 2, 2, 4, AClassPoly::generator(3, 2));
    CHECK(q3.e == 5);
    CHECK(q3.M == 1);
    CHECK(q3.m == std::vector<long>{0, 0});
    // (-1)^{1*3 + 2*2}
    CHECK(q3.u == -1);
    AClassPoly mixed(2, MPoly::monomial({1}, Rational(1)) + MPoly::constant(1, Rational(1)));
    try {
        build_problem(2, 5, 2, 4, mixed);
        FAIL("no throw");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DegreeMismatch);
    }
}

TEST_CASE("colexicographic subsets") {
    auto s = colex_subsets(4, 2);
    std::vector<std::vector<int>> expect{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}};
    CHECK(s == expect);
    CHECK(colex_subsets(7, 3).size() == 35);
}

TEST_CASE("single summands by hand") {
    auto q = build_problem(2, 5, 2, 2, AClassPoly::one(2));
    std::vector<int> pair{0, 1};
    CHECK(cyclo_to_rational(vi_summand(q, pair)) == Rational(1, 4));
    auto q4 = build_problem(2, 5, 2, 4, AClassPoly::one(2));
    std::vector<int> ii{1, 3};
    CHECK(cyclo_to_rational(vi_summand(q4, ii)) == Rational(-1, 4));
    CHECK(vi_summand(q4, ii) == vi_summand(q4, ii));
    std::vector<int> bad{1, 1};
    CHECK_THROWS_AS(vi_summand(q4, bad), Error);
}

TEST_CASE("hand-enumerated totals") {
    CHECK(vi_evaluate(build_problem(2, 5, 2, 2, AClassPoly::one(2))).value == Rational(1));
    auto r = vi_evaluate(build_problem(2, 5, 2, 4, AClassPoly::one(2)));
    CHECK(r.value == Rational(24));
    CHECK(r.method == Method::ViExact);
    CHECK(r.fingerprint.size() == 16);
    CHECK(vi_evaluate(build_problem(2, 3, 2, 4, AClassPoly::generator(2, 2, 2))).value == Rational(0));
}

TEST_CASE("exact sums agree with a floating brute force over ordered tuples") {
    std::vector<QuotProblem> cases{
        build_problem(2, 5, 2, 4, AClassPoly::one(2)),
        build_problem(2, 5, 2, 6, AClassPoly::generator(2, 2)),
        build_problem(2, 7, 3, 6, AClassPoly::one(2)),
        build_problem(3, 2, 2, 4, AClassPoly::generator(3, 2)),
        build_problem(3, 2, 2, 6, AClassPoly::generator(3, 3)),
        build_problem(2, 3, 2, 14, AClassPoly::generator(2, 2, 2), SClassPoly(2, MPoly::monomial({2, 0}, Rational(1)))),
    };
    for (const auto& q : cases) {
        const long double ref = brute_force(q);
        const long double exact = static_cast<long double>(vi_evaluate(q).value.to_double());
        CHECK(std::abs(ref - exact) <= 1e-6L * (1 + std::abs(exact)));
    }
}

TEST_CASE("numeric path agrees to 2^-64") {
    const double tol = std::ldexp(1.0, -64);
    for (const auto& q : {build_problem(2, 5, 2, 4, AClassPoly::one(2)), build_problem(2, 5, 2, 2, AClassPoly::one(2)),
                          build_problem(3, 2, 2, 4, AClassPoly::generator(3, 2))}) {
        auto n = vi_evaluate_numeric(q, 128);
        Rational exact = vi_evaluate(q).value;
        CHECK((n.value - BigFloat(exact, 128)).abs().to_double() < tol);
        CHECK(n.imag_abs.to_double() < tol);
        CHECK(n.precision == 128);
    }
}

TEST_CASE("summand symmetry and rescaling invariance") {
    std::mt19937_64 rng(23);
    for (const auto& q : {build_problem(3, 2, 2, 7, AClassPoly::generator(3, 2)),
                          build_problem(2, 5, 2, 8, AClassPoly::generator(2, 2))}) {
        for (int t = 0; t < 8; ++t) {
            std::vector<int> all(q.N);
            for (int i = 0; i < q.N; ++i) all[i] = i;
            std::shuffle(all.begin(), all.end(), rng);
            std::vector<int> sub(all.begin(), all.begin() + q.r);
            CycloNum base = vi_summand(q, sub);
            std::vector<int> perm = sub;
            std::sort(perm.begin(), perm.end());
            do {
                CHECK(vi_summand(q, perm) == base);
            } while (std::next_permutation(perm.begin(), perm.end()));
            for (int c = 1; c < q.N; ++c) {
                std::vector<int> shifted;
                for (int k : sub) shifted.push_back((k + c) % q.N);
                CHECK(vi_summand(q, shifted) == base);
            }
        }
    }
}

TEST_CASE("values depend on d only modulo r") {
    for (int N : {4, 6}) {
        Rational a = vi_evaluate(build_problem(2, 5, 2, N, AClassPoly::one(2))).value;
        CHECK(vi_evaluate(build_problem(2, 7, 2, N, AClassPoly::one(2))).value == a);
        CHECK(vi_evaluate(build_problem(2, 9, 2, N, AClassPoly::one(2))).value == a);
    }
}

TEST_CASE("parallel evaluation is deterministic") {
    auto q = build_problem(3, 5, 2, 9, AClassPoly::generator(3, 3));
    auto a = vi_evaluate(q, 1), b = vi_evaluate(q, 3), c = vi_evaluate(q, 8);
    CHECK(a.value == b.value);
    CHECK(a.value == c.value);
    CHECK(a.fingerprint == c.fingerprint);
}

TEST_CASE("residue path validity") {
    auto bad = validity_check(build_problem(2, 5, 2, 2, AClassPoly::one(2)));
    CHECK_FALSE(bad.exponents_in_range);
    CHECK_FALSE(bad.valid());
    auto good = validity_check(build_problem(2, 5, 2, 4, AClassPoly::one(2)));
    CHECK(good.valid());
    REQUIRE(good.certificates.size() == 1);
    // m = 3: order at 0 is 3 - 1, at infinity 4 - 3 + 2 - 1
    CHECK(good.certificates[0].order_at_zero == 2);
    CHECK(good.certificates[0].order_at_infinity == 2);
    auto r3 = validity_check(build_problem(3, 2, 2, 6, AClassPoly::generator(3, 3)));
    CHECK(r3.certificates.size() == 2);
}
