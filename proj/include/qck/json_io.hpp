#pragma once

#include <string>

#include <json.hpp>

#include "qck/characters.hpp"
#include "qck/graph.hpp"
#include "qck/tableau.hpp"

namespace qck {

using Json = nlohmann::ordered_json;

Json tableau_to_json(const ShiftedTableau& t);
ShiftedTableau tableau_from_json(const Json& j);

Json element_to_json(const CrystalElement& e);
CrystalElement element_from_json(const Json& j);

Json graph_to_json(const CrystalGraph& g);
CrystalGraph graph_from_json(const Json& j);

Json validation_to_json(const ValidationReport& rep);
Json axiom_report_to_json(const AxiomReport& rep);

}  // namespace qck
