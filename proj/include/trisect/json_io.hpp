#pragma once

#include <json.hpp>

#include "trisect/bounds.hpp"
#include "trisect/diagram.hpp"
#include "trisect/kirby.hpp"
#include "trisect/loops.hpp"
#include "trisect/walk.hpp"

namespace trisect::json {

using nlohmann::json;

// Integers travel as decimal strings; plain JSON integers are accepted on input.
json to_json(const Integer& x);
Integer integer_from_json(const json& j);

json to_json(const HomologyClass& x);
HomologyClass class_from_json(const json& j);

json to_json(const CutSystem& cs);
CutSystem cut_system_from_json(const json& j, std::size_t genus);

json to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const json& j);

json to_json(const PairAnnotation& ann);
PairAnnotation annotation_from_json(const json& j);

json to_json(const TrisectionDiagram& d);
TrisectionDiagram diagram_from_json(const json& j);

json to_json(const ValidationReport& r);
json to_json(const Cokernel& c);
json to_json(const KirbySkeleton& sk);
json to_json(const Pi1Report& r);

json to_json(const LoopSpec& loop);
LoopSpec loop_from_json(const json& j, std::size_t genus);
json to_json(const LengthReport& r);

json to_json(const BoundReport& r);
json to_json(const HarnessSummary& s);

}  // namespace trisect::json
