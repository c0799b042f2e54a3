#include "intersector/mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "intersector/error.hpp"

namespace intersector {

MPoly MPoly::constant(std::size_t nvars, const Rational& c) {
    MPoly out(nvars);
    out.add_term(Exponents(nvars, 0), c);
    return out;
}

MPoly MPoly::variable(std::size_t nvars, std::size_t index) {
    Exponents e(nvars, 0);
    e.at(index) = 1;
    return monomial(std::move(e), Rational(1));
}

MPoly MPoly::monomial(Exponents exps, const Rational& c) {
    MPoly out(exps.size());
    out.add_term(exps, c);
    return out;
}

MPoly MPoly::linear(std::span<const Rational> coeffs) {
    MPoly out(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        Exponents e(coeffs.size(), 0);
        e[i] = 1;
        out.add_term(e, coeffs[i]);
    }
    return out;
}

void MPoly::add_term(const Exponents& exps, const Rational& c) {
    if (exps.size() != nvars_) fail(ErrorKind::InvalidInput, "exponent vector length does not match variable count");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rational MPoly::coefficient(const Exponents& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Rational(0) : it->second;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    if (o.nvars_ != nvars_) fail(ErrorKind::InvalidInput, "polynomials over different variable counts");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    if (o.nvars_ != nvars_) fail(ErrorKind::InvalidInput, "polynomials over different variable counts");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MPoly& MPoly::operator*=(const Rational& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    if (a.nvars_ != b.nvars_) fail(ErrorKind::InvalidInput, "polynomials over different variable counts");
    MPoly out(a.nvars_);
    Exponents e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MPoly MPoly::pow(unsigned exponent) const {
    MPoly result = constant(nvars_, Rational(1));
    MPoly base = *this;
    while (exponent > 0) {
        if (exponent & 1u) result = result * base;
        exponent >>= 1u;
        if (exponent) base = base * base;
    }
    return result;
}

std::optional<int> MPoly::total_degree() const {
    std::optional<int> best;
    for (const auto& [e, c] : terms_) {
        int d = std::accumulate(e.begin(), e.end(), 0);
        if (!best || d > *best) best = d;
    }
    return best;
}

std::optional<std::pair<int, int>> MPoly::degree_range(std::span<const std::size_t> vars) const {
    std::optional<std::pair<int, int>> out;
    for (const auto& [e, c] : terms_) {
        int d = 0;
        for (auto v : vars) d += e.at(v);
        if (!out) {
            out = std::make_pair(d, d);
        } else {
            out->first = std::min(out->first, d);
            out->second = std::max(out->second, d);
        }
    }
    return out;
}

MPoly MPoly::homogeneous_part(int k) const {
    MPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
        if (std::accumulate(e.begin(), e.end(), 0) == k) out.terms_.emplace(e, c);
    }
    return out;
}

MPoly MPoly::substitute(const std::vector<MPoly>& images) const {
    if (images.size() != nvars_) fail(ErrorKind::InvalidInput, "substitution needs one image per variable");
    std::size_t target = images.empty() ? 0 : images[0].nvars();
    MPoly out(target);
    // cache powers of each image, built on demand
    std::vector<std::vector<MPoly>> powers(nvars_);
    auto power_of = [&](std::size_t i, int k) -> const MPoly& {
        auto& pw = powers[i];
        if (pw.empty()) pw.push_back(constant(target, Rational(1)));
        while (static_cast<int>(pw.size()) <= k) pw.push_back(pw.back() * images[i]);
        return pw[static_cast<std::size_t>(k)];
    };
    for (const auto& [e, c] : terms_) {
        MPoly term = constant(target, c);
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (e[i] < 0) fail(ErrorKind::InvalidInput, "cannot substitute into a negative power");
            if (e[i] > 0) term = term * power_of(i, e[i]);
        }
        out += term;
    }
    return out;
}

Rational MPoly::evaluate(std::span<const Rational> point) const {
    if (point.size() != nvars_) fail(ErrorKind::InvalidInput, "evaluation point has the wrong dimension");
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (e[i] != 0) t *= intersector::pow(point[i], e[i]);
        }
        acc += t;
    }
    return acc;
}

MPoly MPoly::permuted(std::span<const std::size_t> perm) const {
    if (perm.size() != nvars_) fail(ErrorKind::InvalidInput, "permutation has the wrong length");
    MPoly out(nvars_);
    Exponents f(nvars_);
    for (const auto& [e, c] : terms_) {
        for (std::size_t i = 0; i < nvars_; ++i) f[perm[i]] = e[i];
        out.add_term(f, c);
    }
    return out;
}

MPoly MPoly::extended(std::size_t extra) const {
    MPoly out(nvars_ + extra);
    for (const auto& [e, c] : terms_) {
        Exponents f = e;
        f.resize(nvars_ + extra, 0);
        out.terms_.emplace(std::move(f), c);
    }
    return out;
}

MPoly elementary_symmetric(int k, int n) {
    if (n < 0 || k < 0 || k > n) {
        fail(ErrorKind::OutOfRange, "elementary_symmetric needs 0 <= k <= n, got k=" + std::to_string(k) +
                                        " n=" + std::to_string(n));
    }
    MPoly out(static_cast<std::size_t>(n));
    // walk all k-subsets via a selection mask
    std::vector<int> mask(static_cast<std::size_t>(n), 0);
    std::fill(mask.begin(), mask.begin() + k, 1);
    std::sort(mask.begin(), mask.end());
    do {
        out.add_term(Exponents(mask.begin(), mask.end()), Rational(1));
    } while (std::next_permutation(mask.begin(), mask.end()));
    return out;
}

AClassPoly::AClassPoly(int r, MPoly p) : rank(r), poly(std::move(p)) {
    if (r < 2) fail(ErrorKind::InvalidInput, "rank must be at least 2");
    if (poly.nvars() != static_cast<std::size_t>(r - 1)) {
        fail(ErrorKind::InvalidInput, "abar-polynomial of rank " + std::to_string(r) + " needs " +
                                          std::to_string(r - 1) + " variables");
    }
}

AClassPoly AClassPoly::one(int r) { return AClassPoly(r, MPoly::constant(static_cast<std::size_t>(r - 1), Rational(1))); }

AClassPoly AClassPoly::generator(int r, int k, int power) {
    if (k < 2 || k > r) fail(ErrorKind::OutOfRange, "abar_k needs 2 <= k <= r");
    Exponents e(static_cast<std::size_t>(r - 1), 0);
    e[static_cast<std::size_t>(k - 2)] = power;
    return AClassPoly(r, MPoly::monomial(std::move(e), Rational(1)));
}

SClassPoly::SClassPoly(int r, MPoly p) : rank(r), poly(std::move(p)) {
    if (r < 2) fail(ErrorKind::InvalidInput, "rank must be at least 2");
    if (poly.nvars() != static_cast<std::size_t>(r)) {
        fail(ErrorKind::InvalidInput, "a-polynomial of rank " + std::to_string(r) + " needs " + std::to_string(r) +
                                          " variables");
    }
}

SClassPoly SClassPoly::one(int r) { return SClassPoly(r, MPoly::constant(static_cast<std::size_t>(r), Rational(1))); }

namespace {

int weighted(const Exponents& e, int first_weight) {
    int d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += (static_cast<int>(i) + first_weight) * e[i];
    return d;
}

std::optional<int> max_weighted(const MPoly& p, int first_weight) {
    std::optional<int> best;
    for (const auto& [e, c] : p.terms()) {
        int d = weighted(e, first_weight);
        if (!best || d > *best) best = d;
    }
    return best;
}

bool homogeneous(const MPoly& p, int first_weight) {
    std::optional<int> seen;
    for (const auto& [e, c] : p.terms()) {
        int d = weighted(e, first_weight);
        if (seen && *seen != d) return false;
        seen = d;
    }
    return true;
}

}  // namespace

std::optional<int> weighted_degree(const AClassPoly& p) { return max_weighted(p.poly, 2); }
std::optional<int> weighted_degree(const SClassPoly& p) { return max_weighted(p.poly, 1); }
bool is_weighted_homogeneous(const AClassPoly& p) { return homogeneous(p.poly, 2); }
bool is_weighted_homogeneous(const SClassPoly& p) { return homogeneous(p.poly, 1); }

std::map<int, AClassPoly> weighted_components(const AClassPoly& p) {
    std::map<int, AClassPoly> out;
    for (const auto& [e, c] : p.poly.terms()) {
        int d = weighted(e, 2);
        auto it = out.find(d);
        if (it == out.end()) it = out.emplace(d, AClassPoly(p.rank, MPoly(p.poly.nvars()))).first;
        it->second.poly.add_term(e, c);
    }
    return out;
}

MPoly aclass_to_chern(const AClassPoly& p) {
    const int r = p.rank;
    const auto n = static_cast<std::size_t>(r);
    MPoly mean(n);
    for (std::size_t i = 0; i < n; ++i) mean.add_term(MPoly::variable(n, i).terms().begin()->first, Rational(1, r));
    std::vector<MPoly> normalized;
    for (std::size_t i = 0; i < n; ++i) normalized.push_back(MPoly::variable(n, i) - mean);
    std::vector<MPoly> images;
    for (int k = 2; k <= r; ++k) images.push_back(elementary_symmetric(k, r).substitute(normalized));
    return p.poly.substitute(images);
}

MPoly sclass_to_chern(const SClassPoly& s) {
    std::vector<MPoly> images;
    for (int k = 1; k <= s.rank; ++k) images.push_back(elementary_symmetric(k, s.rank));
    return s.poly.substitute(images);
}

}  // namespace intersector
