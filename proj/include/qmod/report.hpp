#pragma once

// Machine-readable and text renderings of analysis results.

#include <string>
#include <string_view>

#include "qmod/moduli.hpp"

namespace qmod {

inline constexpr std::string_view kReportSchema = "qmod-report/1";

std::string report_json(const ModuliReport& report);
std::string report_text(const ModuliReport& report);

std::string components_json(const Algebra& algebra, const DimVector& d, const std::vector<Component>& components);
std::string components_text(const Algebra& algebra, const DimVector& d, const std::vector<Component>& components);

std::string validate_json(const Algebra& algebra);
std::string validate_text(const Algebra& algebra);

// {"prime": p, "dim": {"1": 1, ...}, "maps": {"a": [[...], ...], ...}}
Module parse_module(AlgebraPtr algebra, std::string_view document);
std::string module_json(const Module& m);

// "1,-2,0" in declared vertex order.
std::vector<int> parse_int_list(std::string_view text);

}  // namespace qmod
