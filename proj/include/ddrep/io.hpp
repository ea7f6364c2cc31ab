#pragma once

#include <json.hpp>
#include <string>

#include "ddrep/arseq.hpp"
#include "ddrep/homology.hpp"

namespace ddrep {

using Json = nlohmann::ordered_json;

Json scalar_to_json(const CycScalar& s);
CycScalar scalar_from_json(const Json& j);
// Accepts "inf", an integer or "p/q"; result lives in Q(zeta_order).
EtaParam eta_from_string(const std::string& s, int order);
Json eta_to_json(const EtaParam& e);
EtaParam eta_from_json(const Json& j, int order);

Json weight_to_json(const Weight& w);
Weight weight_from_json(const Json& j);
// "g1,g2|h1,h2"
Weight weight_from_string(const std::string& s);

Json datum_to_json(const GroupDatum& D);
DatumPtr datum_from_json(const Json& j);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, size_t rows, size_t cols);

Json module_to_json(const ModuleRep& M);
// Rebuilds and checks the relations; throws ParameterError on malformed input.
ModuleRep module_from_json(const Json& j);

Json family_tag_to_json(const FamilyTag& t);
FamilyTag family_tag_from_json(const Json& j, int order);

Json relation_report_to_json(const RelationReport& r);
Json loewy_to_json(const LoewyType& t);
Json multiplicities_to_json(const Multiplicities& m);
Json iso_verdict_to_json(const IsoVerdict& v);
Json ses_report_to_json(const SesReport& r);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace ddrep
