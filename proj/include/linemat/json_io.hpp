#pragma once

#include <json.hpp>

#include "linemat/flags.hpp"
#include "linemat/pathgraph.hpp"
#include "linemat/schubert.hpp"
#include "linemat/tiling.hpp"
#include "linemat/trees.hpp"

// Wire formats shared by the CLI and the fixtures. All rationals travel as
// decimal strings "p" or "p/q"; every serializer emits canonical key order and
// canonical element order so identical inputs give identical bytes.
namespace linemat::io {

using json = nlohmann::ordered_json;

json point_set_to_json(const core::GroundSet& g, const core::PointSet& s);
std::pair<core::GroundSet, core::PointSet> point_set_from_json(const json& j);

json set_system_to_json(const core::SetSystem& s);
core::SetSystem set_system_from_json(const json& j);

json matrix_to_json(const linalg::Mat& m);
linalg::Mat matrix_from_json(const json& j);

json line_arrangement_to_json(const flags::LineArrangement& l);
flags::LineArrangement line_arrangement_from_json(const json& j);

json flag_family_to_json(const flags::FlagFamily& f);

json tiling_to_json(const tiling::HoleyTriangle& h, const tiling::RhombusTiling& t);
tiling::RhombusTiling tiling_from_json(const json& j);

json tree_to_json(const trees::BipartiteTree& t);
trees::BipartiteTree tree_from_json(const json& j);
json tree_collection_to_json(const trees::TreeCollection& c);
trees::TreeCollection tree_collection_from_json(const json& j);

json weight_matrix_to_json(const trees::WeightMatrix& w);
trees::WeightMatrix weight_matrix_from_json(const json& j);

json survey_report_to_json(const trees::SurveyReport& r);

json floors_to_json(const schubert::Floors& f);
schubert::Floors floors_from_json(const json& j);

json vanishing_verdict_to_json(const schubert::VanishingVerdict& v);

json routing_to_json(const lgv::Routing& r);

} // namespace linemat::io
