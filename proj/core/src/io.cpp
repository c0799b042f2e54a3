#include "intersector/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "intersector/error.hpp"

namespace intersector {

namespace {

using nlohmann::json;

std::vector<std::string> var_names(int first, int last) {
    std::vector<std::string> v;
    for (int i = first; i <= last; ++i) v.push_back("a" + std::to_string(i));
    return v;
}

/// Parses the shared shape; `first` is the index of the first class.
std::pair<int, MPoly> parse_poly(const std::string& text, int first) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        fail(ErrorKind::ParseError, std::string("polynomial file is not valid JSON: ") + e.what());
    }
    try {
        const int r = j.at("rank").get<int>();
        if (r < 2) fail(ErrorKind::ParseError, "rank must be at least 2");
        const auto expected = var_names(first, r);
        if (j.contains("vars") && j.at("vars").get<std::vector<std::string>>() != expected)
            fail(ErrorKind::ParseError, "vars must be " + json(expected).dump());
        MPoly p(expected.size());
        for (const auto& t : j.at("terms")) {
            auto exps = t.at("exps").get<std::vector<int>>();
            if (exps.size() != expected.size())
                fail(ErrorKind::ParseError, "term has " + std::to_string(exps.size()) + " exponents, expected " +
                                                std::to_string(expected.size()));
            for (int e : exps)
                if (e < 0) fail(ErrorKind::ParseError, "negative exponent");
            const auto& c = t.at("coeff");
            Rational coeff = c.is_string() ? Rational::parse(c.get<std::string>()) : Rational(c.get<long>());
            p.add_term(exps, coeff);
        }
        return {r, p};
    } catch (const json::exception& e) {
        fail(ErrorKind::ParseError, std::string("malformed polynomial: ") + e.what());
    }
}

std::string dump_poly(int r, const MPoly& p, int first, int indent) {
    json j;
    j["rank"] = r;
    j["vars"] = var_names(first, r);
    j["terms"] = json::array();
    for (const auto& [e, c] : p.terms()) j["terms"].push_back({{"exps", e}, {"coeff", c.str()}});
    return j.dump(indent);
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::ParseError, "cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

AClassPoly aclass_from_json(const std::string& text) {
    auto [r, p] = parse_poly(text, 2);
    return AClassPoly(r, p);
}

SClassPoly sclass_from_json(const std::string& text) {
    auto [r, p] = parse_poly(text, 1);
    return SClassPoly(r, p);
}

std::string aclass_to_json(const AClassPoly& p, int indent) { return dump_poly(p.rank, p.poly, 2, indent); }
std::string sclass_to_json(const SClassPoly& p, int indent) { return dump_poly(p.rank, p.poly, 1, indent); }

std::string cyclo_to_json(const CycloNum& a) {
    json j{{"order", a.order()}, {"coeffs", json::array()}};
    for (const auto& c : a.coeffs()) j["coeffs"].push_back(c.str());
    return j.dump();
}

CycloNum cyclo_from_json(const std::string& text) {
    try {
        auto j = json::parse(text);
        const long order = j.at("order").get<long>();
        if (order < 1) fail(ErrorKind::ParseError, "order must be positive");
        std::vector<Rational> coeffs;
        for (const auto& c : j.at("coeffs")) coeffs.push_back(Rational::parse(c.get<std::string>()));
        return CycloNum(order, std::move(coeffs));
    } catch (const json::exception& e) {
        fail(ErrorKind::ParseError, std::string("malformed cyclotomic number: ") + e.what());
    }
}

AClassPoly load_aclass(const std::filesystem::path& path) { return aclass_from_json(slurp(path)); }
SClassPoly load_sclass(const std::filesystem::path& path) { return sclass_from_json(slurp(path)); }

}  // namespace intersector
