#pragma once

#include <string>
#include <string_view>

#include "intersector/mpoly.hpp"

namespace intersector {

/// Deterministic text form of a polynomial: terms in exponent order.
std::string canonical_poly(const MPoly& p);

/// 64-bit FNV-1a of the canonical text, as 16 lowercase hex digits.
std::string fingerprint_of(std::string_view canonical);

}  // namespace intersector
