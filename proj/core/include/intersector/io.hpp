#pragma once

#include <filesystem>
#include <string>

#include "intersector/cyclotomic.hpp"
#include "intersector/mpoly.hpp"

namespace intersector {

/// {"rank": r, "vars": ["a2",...,"ar"], "terms": [{"exps": [...], "coeff": "p/q"}]}
AClassPoly aclass_from_json(const std::string& text);
SClassPoly sclass_from_json(const std::string& text);
std::string aclass_to_json(const AClassPoly& p, int indent = -1);
std::string sclass_to_json(const SClassPoly& p, int indent = -1);

/// {"order": N, "coeffs": ["p/q", ...]}
std::string cyclo_to_json(const CycloNum& a);
CycloNum cyclo_from_json(const std::string& text);

AClassPoly load_aclass(const std::filesystem::path& path);
SClassPoly load_sclass(const std::filesystem::path& path);

}  // namespace intersector
