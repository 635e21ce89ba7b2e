#ifndef ADDGAL_IO_HPP
#define ADDGAL_IO_HPP

#include <string>

#include <json.hpp>

#include "addgal/census.hpp"
#include "addgal/experiments.hpp"

namespace addgal {

using json = nlohmann::json;

// Compact text forms. A t-polynomial is a comma-separated list of
// coefficients (canonical element indices; plain residues over prime
// fields), low-to-high: "0,1" is t. An additive polynomial joins its
// t-polynomial coefficients with ';': "0,1;1" is X^q + t X.
Poly parse_tpoly_compact(const FieldCtx& F, const std::string& s);
std::string tpoly_compact(const Poly& a);
AdditivePoly parse_additive_compact(const FieldCtx& F, const std::string& s);
std::string additive_compact(const AdditivePoly& f);

// JSON: field elements serialize as F_p coefficient arrays (plain integers
// over prime fields); polynomials as coefficient arrays, low-to-high.
json field_to_json(const FieldCtx& F);
json elem_to_json(const FieldCtx& F, elem a);
elem elem_from_json(const FieldCtx& F, const json& j);
json poly_to_json(const Poly& a);
Poly poly_from_json(const FieldCtx& F, const json& j);
json bipoly_to_json(const BiPoly& b); // array of X-major rows
BiPoly bipoly_from_json(const FieldCtx& F, const json& j);
json additive_to_json(const AdditivePoly& f);
AdditivePoly additive_from_json(const FieldCtx& F, const json& j);
json matrix_to_json(const MatrixGF& m);
json group_params_to_json(const GroupParams& gp);
json delta_to_json(const FieldCtx& F, const DeltaImage& d);
json specialization_to_json(const TowerCtx& T, const SpecializationReport& rep);
json certificate_to_json(const Certificate& c);

const char* mode_name(ExperimentMode m);
ExperimentMode mode_from_name(const std::string& s);
json config_to_json(const ExperimentConfig& cfg);
ExperimentConfig config_from_json(const json& j);

json trend_to_json(const TrendReport& rep);
std::string trend_to_csv(const TrendReport& rep);
json content_to_json(const ContentReport& rep);
std::string content_to_csv(const ContentReport& rep);
json delta_report_to_json(const DeltaReport& rep);
std::string delta_report_to_csv(const DeltaReport& rep);
json specfact_to_json(const SpecFactReport& rep);
std::string specfact_to_csv(const SpecFactReport& rep);

json class_bound_to_json(const ClassBoundReport& rep);

} // namespace addgal

#endif
