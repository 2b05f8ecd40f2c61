#pragma once

#include <string>

#include <json.hpp>

#include "drazin/algebra.hpp"
#include "drazin/generators.hpp"
#include "drazin/report.hpp"

namespace drazin {

/// Algebra documents: {"kind":"matrix","k":2} or
/// {"kind":"structure","dim":..,"table":[[..row of coord lists..],..],
///  "unit":[..]} with rationals as strings.  Throws io_error with a path
/// into the document on malformed input; construction itself may throw
/// validation_error.
AlgebraPtr algebra_from_json(const nlohmann::json& doc);
AlgebraPtr load_algebra_file(const std::string& path);
nlohmann::json algebra_to_json(const Algebra& algebra);

/// Element documents: {"coords":[..]} or, for matrix algebras,
/// {"matrix":[[..],..]}.
Element element_from_json(const nlohmann::json& doc, const AlgebraPtr& algebra);
Element load_element_file(const std::string& path, const AlgebraPtr& algebra);
/// Emits coords, plus the matrix layout when the algebra is a matrix
/// algebra.
nlohmann::json element_to_json(const Element& e);

nlohmann::json report_to_json(const TheoremReport& report);
nlohmann::json summary_to_json(const FuzzSummary& summary);

}  // namespace drazin
