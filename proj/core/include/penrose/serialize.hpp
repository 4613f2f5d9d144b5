#pragma once

#include <string>

#include "penrose/bbw.hpp"
#include "penrose/transform.hpp"

namespace penrose {

enum class Format { text, json, latex };

Format parse_format(const std::string& name);  // "text" | "json" | "latex"

// Deterministic renderings.  JSON emitters produce the documented schema
// (sorted object keys, no timestamps); parse_* invert them exactly.
std::string emit_text(const Complex& c);
std::string emit_json(const Complex& c);
std::string emit_latex(const Complex& c);
Complex parse_complex(const std::string& json_text);

std::string emit_text(const E1Page& page);
std::string emit_json(const E1Page& page);
std::string emit_latex(const E1Page& page);
E1Page parse_page(const std::string& json_text);

std::string emit_text(const CohomologyResult& h);
std::string emit_json_cohomology(const FlagSpace& s, const CohomologyResult& h);

std::string emit_text(const BundleSum& s);
std::string emit_json(const BundleSum& s);
std::string emit_latex(const BundleSum& s);

}  // namespace penrose
