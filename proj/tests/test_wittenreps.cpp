#include <doctest.h>

#include <cmath>
#include <functional>

#include "intersector/error.hpp"
#include "intersector/residue.hpp"
#include "intersector/witten.hpp"

using namespace intersector;

namespace {

/// Number of Gelfand-Tsetlin patterns with the given top row.
long gt_count(const std::vector<long>& top) {
    if (top.size() <= 1) return 1;
    std::vector<long> row(top.size() - 1);
    long total = 0;
    std::function<void(std::size_t)> fill = [&](std::size_t i) {
        if (i == row.size()) {
            total += gt_count(row);
            return;
        }
        for (long v = top[i + 1]; v <= top[i]; ++v) {
            row[i] = v;
            fill(i + 1);
        }
    };
    fill(0);
    return total;
}

std::vector<long> partition_of(const WeightSU& w) {
    std::vector<long> lam(w.r, 0);
    for (int i = w.r - 2; i >= 0; --i) lam[i] = lam[i + 1] + w.gaps[i];
    return lam;
}

Rational trace_rational(const CycloNum& c) {
    for (std::size_t i = 1; i < c.coeffs().size(); ++i) REQUIRE(c.coeffs()[i] == Rational(0));
    return c.coeffs().empty() ? Rational(0) : c.coeffs()[0];
}

}  // namespace

TEST_CASE("dominant weight enumeration") {
    CHECK(enumerate_dominant_weights(2, 2).size() == 3);
    CHECK(enumerate_dominant_weights(3, 1).size() == 3);
    CHECK(enumerate_dominant_weights(3, 2).size() == 6);
    CHECK(enumerate_dominant_weights(4, 3).size() == 20);
    auto ws = enumerate_dominant_weights(3, 4);
    for (std::size_t i = 1; i < ws.size(); ++i) CHECK(ws[i - 1].height() <= ws[i].height());
    auto shell = weight_shell(3, 2);
    REQUIRE(shell.size() == 3);
    CHECK(shell[0].gaps == std::vector<long>{0, 2});
    CHECK(shell[2].gaps == std::vector<long>{2, 0});
    WeightSU w = weight_from_gaps(3, {1, 0});
    CHECK(w.chi == std::vector<Rational>{Rational(2, 3), Rational(-1, 3), Rational(-1, 3)});
    CHECK(w.shifted() == std::vector<Rational>{Rational(5, 3), Rational(-1, 3), Rational(-4, 3)});
}

TEST_CASE("Weyl dimensions count Gelfand-Tsetlin patterns") {
    CHECK(weyl_dimension(weight_from_gaps(2, {1})) == BigInt(2));
    CHECK(weyl_dimension(weight_from_gaps(3, {0, 0})) == BigInt(1));
    CHECK(weyl_dimension(weight_from_gaps(3, {1, 1})) == BigInt(8));
    for (int r : {2, 3, 4})
        for (const auto& w : enumerate_dominant_weights(r, r == 4 ? 5 : 8))
            CHECK(weyl_dimension(w) == BigInt(gt_count(partition_of(w))));
}

TEST_CASE("central element traces") {
    CHECK(trace_rational(central_trace(weight_from_gaps(2, {0}), 1)) == Rational(1));
    CHECK(trace_rational(central_trace(weight_from_gaps(2, {1}), 1)) == Rational(-2));
    CHECK(trace_rational(central_trace(weight_from_gaps(2, {3}), 3)) == Rational(-4));
    CHECK(trace_rational(central_trace(weight_from_gaps(2, {2}), 1)) == Rational(3));
    // the centre acts by a scalar root of unity of order dividing 2r
    for (int r : {3, 4})
        for (long d : {1L, r - 1L})
            for (const auto& w : enumerate_dominant_weights(r, 4)) {
                CycloNum t = central_trace(w, d);
                CycloNum p = CycloNum(2 * r, Rational(1));
                for (int k = 0; k < 2 * r; ++k) p *= t;
                Rational dim(weyl_dimension(w));
                CHECK(trace_rational(p) == pow(dim, 2 * r));
            }
}

TEST_CASE("decay exponent and convergence gate") {
    CHECK(witten_decay_exponent(2, 2, 0) == 2);
    CHECK(witten_decay_exponent(2, 2, 2) == 0);
    CHECK(witten_decay_exponent(3, 3, 2) == 5);
    try {
        witten_sum(2, 1, 2, AClassPoly::generator(2, 2), 10);
        FAIL("no throw");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ConvergenceNotGuaranteed);
    }
}

TEST_CASE("first terms by hand") {
    // trivial and fundamental representations: (1 - 1/4) / pi^2
    auto res = witten_sum(2, 1, 2, AClassPoly::one(2), 1);
    CHECK(res.weights == 2);
    CHECK(std::abs(res.value.to_double() - 0.75 / (M_PI * M_PI)) < 1e-15);
}

TEST_CASE("Witten sums converge to the residue pairings") {
    struct Case {
        int r;
        long d;
        int g;
        AClassPoly P;
        long H;
    };
    std::vector<Case> cases{
        {2, 1, 2, AClassPoly::one(2), 200},
        {2, 1, 3, AClassPoly::one(2), 60},
        {2, 1, 3, AClassPoly::generator(2, 2), 60},
        {3, 1, 2, AClassPoly::one(3), 40},
        {3, 2, 3, AClassPoly::generator(3, 2), 20},
    };
    for (const auto& c : cases) {
        auto res = witten_sum(c.r, c.d, c.g, c.P, c.H, 128, 2);
        double exact = moduli_pairing(c.r, c.d, c.g, c.P).to_double();
        double err = std::abs(res.value.to_double() - exact);
        CHECK(err <= res.tail.to_double());
        CHECK(res.imag_max.to_double() < 1e-30);
    }
}

TEST_CASE("tail bounds successive partial sums") {
    for (long H : {20L, 40L}) {
        auto a = witten_sum(2, 1, 2, AClassPoly::one(2), H);
        auto b = witten_sum(2, 1, 2, AClassPoly::one(2), 2 * H);
        CHECK((b.value - a.value).abs() <= a.tail);
        CHECK(b.tail < a.tail);
    }
}

TEST_CASE("Witten sums are independent of the thread count") {
    auto one = witten_sum(3, 1, 3, AClassPoly::generator(3, 3), 15, 128, 1);
    auto four = witten_sum(3, 1, 3, AClassPoly::generator(3, 3), 15, 128, 4);
    CHECK(one.value.to_string(38) == four.value.to_string(38));
    CHECK(one.weights == four.weights);
}
