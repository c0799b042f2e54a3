#include "intersector/fingerprint.hpp"

#include <cstdint>
#include <cstdio>

namespace intersector {

std::string canonical_poly(const MPoly& p) {
    std::string out = "n" + std::to_string(p.nvars()) + "{";
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        if (!first) out += ';';
        first = false;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(e[i]);
        }
        out += ':' + c.str();
    }
    return out + "}";
}

std::string fingerprint_of(std::string_view canonical) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : canonical) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace intersector
