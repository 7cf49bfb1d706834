#include "linemat/json_io.hpp"

namespace linemat::io {

namespace {

json rational_row(const std::vector<linalg::Rational>& row) {
    json out = json::array();
    for (const auto& q : row) out.push_back(linalg::to_string(q));
    return out;
}

} // namespace

json point_set_to_json(const core::GroundSet& g, const core::PointSet& s) {
    json j;
    j["n"] = g.n();
    j["d"] = g.d();
    j["points"] = json::array();
    for (const auto& p : s.members()) j["points"].push_back(p);
    return j;
}

std::pair<core::GroundSet, core::PointSet> point_set_from_json(const json& j) {
    core::GroundSet g(j.at("n").get<int>(), j.at("d").get<int>());
    std::vector<core::LatticePoint> pts;
    for (const auto& p : j.at("points")) pts.push_back(p.get<core::LatticePoint>());
    core::PointSet s(g, pts);
    return {std::move(g), std::move(s)};
}

json set_system_to_json(const core::SetSystem& s) {
    json j;
    j["m"] = s.m;
    j["c"] = s.c;
    j["blocks"] = s.blocks;
    return j;
}

core::SetSystem set_system_from_json(const json& j) {
    return core::SetSystem(j.at("m").get<int>(), j.at("c").get<int>(),
                           j.at("blocks").get<std::vector<std::vector<int>>>());
}

json matrix_to_json(const linalg::Mat& m) {
    json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["entries"] = json::array();
    for (int r = 0; r < m.rows(); ++r) j["entries"].push_back(rational_row(m.row(r)));
    return j;
}

linalg::Mat matrix_from_json(const json& j) {
    const int rows = j.at("rows").get<int>();
    const int cols = j.at("cols").get<int>();
    linalg::Mat m(rows, cols);
    const auto& entries = j.at("entries");
    if (static_cast<int>(entries.size()) != rows) throw UsageError("matrix json: row count mismatch");
    for (int r = 0; r < rows; ++r) {
        if (static_cast<int>(entries[r].size()) != cols) throw UsageError("matrix json: column count mismatch");
        for (int c = 0; c < cols; ++c) m.at(r, c) = linalg::parse_rational(entries[r][c].get<std::string>());
    }
    return m;
}

json line_arrangement_to_json(const flags::LineArrangement& l) {
    json j;
    j["n"] = l.n;
    j["d"] = l.d;
    j["lines"] = json::array();
    for (const auto& [p, line] : l.lines) {
        json entry;
        entry["point"] = p;
        entry["line"] = json::array({rational_row(line.generator(0))});
        j["lines"].push_back(entry);
    }
    return j;
}

flags::LineArrangement line_arrangement_from_json(const json& j) {
    flags::LineArrangement l;
    l.n = j.at("n").get<int>();
    l.d = j.at("d").get<int>();
    for (const auto& entry : j.at("lines")) {
        auto p = entry.at("point").get<core::LatticePoint>();
        const auto& rows = entry.at("line");
        if (rows.size() != 1) throw UsageError("line json: expected a single spanning vector");
        std::vector<linalg::Rational> vec;
        for (const auto& s : rows[0]) vec.push_back(linalg::parse_rational(s.get<std::string>()));
        linalg::Subspace line = linalg::Subspace::span(l.n, {vec});
        if (line.dim() != 1) throw UsageError("line json: vector does not span a line");
        l.lines[p] = line;
    }
    return l;
}

json flag_family_to_json(const flags::FlagFamily& f) {
    json j;
    j["n"] = f.n;
    j["d"] = static_cast<int>(f.flags.size());
    j["flags"] = json::array();
    for (const auto& flag : f.flags) {
        // n generators, one per level: row i-1 spans E_i over E_{i-1}.
        json levels = json::array();
        for (int i = 1; i <= f.n; ++i) {
            json level = json::array();
            for (int r = 0; r < flag.subspaces[i].dim(); ++r)
                level.push_back(rational_row(flag.subspaces[i].generator(r)));
            levels.push_back(level);
        }
        j["flags"].push_back(levels);
    }
    return j;
}

namespace {

std::string dir_name(tiling::DownDir d) {
    switch (d) {
        case tiling::DownDir::Left: return "left";
        case tiling::DownDir::Right: return "right";
        case tiling::DownDir::Bottom: return "bottom";
    }
    throw UsageError("tile json: bad direction");
}

tiling::DownDir dir_of(const std::string& s) {
    if (s == "left") return tiling::DownDir::Left;
    if (s == "right") return tiling::DownDir::Right;
    if (s == "bottom") return tiling::DownDir::Bottom;
    throw UsageError("tile json: bad direction '" + s + "'");
}

} // namespace

json tiling_to_json(const tiling::HoleyTriangle& h, const tiling::RhombusTiling& t) {
    json j;
    j["n"] = h.n;
    j["holes"] = json::array();
    for (const auto& p : h.holes.members()) j["holes"].push_back(p);
    j["tiles"] = json::array();
    for (const auto& tile : t.tiles) {
        json tj;
        tj["up"] = tile.up;
        tj["down_dir"] = dir_name(tile.dir);
        j["tiles"].push_back(tj);
    }
    return j;
}

tiling::RhombusTiling tiling_from_json(const json& j) {
    tiling::RhombusTiling t;
    t.n = j.at("n").get<int>();
    for (const auto& tj : j.at("tiles"))
        t.tiles.push_back({tj.at("up").get<core::LatticePoint>(), dir_of(tj.at("down_dir").get<std::string>())});
    std::sort(t.tiles.begin(), t.tiles.end(), [](const tiling::Tile& a, const tiling::Tile& b) {
        return a.up != b.up ? a.up < b.up : a.dir < b.dir;
    });
    return t;
}

json tree_to_json(const trees::BipartiteTree& t) {
    json j;
    j["n"] = t.n;
    j["d"] = t.d;
    j["edges"] = json::array();
    for (const auto& [a, b] : t.edges) j["edges"].push_back(json::array({a, b}));
    return j;
}

trees::BipartiteTree tree_from_json(const json& j) {
    trees::BipartiteTree t;
    t.n = j.at("n").get<int>();
    t.d = j.at("d").get<int>();
    for (const auto& e : j.at("edges")) t.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    std::sort(t.edges.begin(), t.edges.end());
    return t;
}

json tree_collection_to_json(const trees::TreeCollection& c) {
    json j;
    j["n"] = c.n;
    j["d"] = c.d;
    j["trees"] = json::array();
    for (const auto& t : c.trees) {
        json edges = json::array();
        for (const auto& [a, b] : t.edges) edges.push_back(json::array({a, b}));
        j["trees"].push_back(edges);
    }
    return j;
}

trees::TreeCollection tree_collection_from_json(const json& j) {
    trees::TreeCollection c;
    c.n = j.at("n").get<int>();
    c.d = j.at("d").get<int>();
    for (const auto& edges : j.at("trees")) {
        trees::BipartiteTree t;
        t.n = c.n;
        t.d = c.d;
        for (const auto& e : edges) t.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
        std::sort(t.edges.begin(), t.edges.end());
        c.trees.push_back(std::move(t));
    }
    return c;
}

json weight_matrix_to_json(const trees::WeightMatrix& w) {
    json j;
    j["n"] = w.n;
    j["d"] = w.d;
    j["entries"] = json::array();
    for (const auto& row : w.w) j["entries"].push_back(rational_row(row));
    return j;
}

trees::WeightMatrix weight_matrix_from_json(const json& j) {
    trees::WeightMatrix w;
    w.n = j.at("n").get<int>();
    w.d = j.at("d").get<int>();
    for (const auto& row : j.at("entries")) {
        std::vector<linalg::Rational> r;
        for (const auto& s : row) r.push_back(linalg::parse_rational(s.get<std::string>()));
        if (static_cast<int>(r.size()) != w.d) throw UsageError("weights json: row width != d");
        w.w.push_back(std::move(r));
    }
    if (static_cast<int>(w.w.size()) != w.n) throw UsageError("weights json: row count != n");
    return w;
}

json survey_report_to_json(const trees::SurveyReport& r) {
    json j;
    j["n"] = r.n;
    j["d"] = r.d;
    switch (r.mode) {
        case trees::SurveyMode::RandomSeeds: j["mode"] = "random-seeds"; break;
        case trees::SurveyMode::ExhaustiveWeightsGrid: j["mode"] = "exhaustive-weights-grid"; break;
        case trees::SurveyMode::TreeSearch: j["mode"] = "tree-search"; break;
    }
    j["samples"] = r.samples;
    j["generic_samples"] = r.generic_samples;
    int realized = 0;
    j["bases"] = json::array();
    for (const auto& e : r.entries) {
        json entry;
        entry["basis"] = json::array();
        for (const auto& p : e.basis.members()) entry["basis"].push_back(p);
        entry["realized"] = e.realized;
        entry["status"] = e.realized ? "REALIZED" : "OPEN";
        if (e.witness_weights)
            entry["witness_weights"] = weight_matrix_to_json(*e.witness_weights);
        else if (e.witness_trees)
            entry["witness_trees"] = tree_collection_to_json(*e.witness_trees);
        else
            entry["witness_weights"] = nullptr;
        j["bases"].push_back(entry);
        realized += e.realized;
    }
    j["realized_count"] = realized;
    j["open_count"] = static_cast<int>(r.entries.size()) - realized;
    return j;
}

json floors_to_json(const schubert::Floors& f) {
    json j;
    j["n"] = f.n;
    j["d"] = f.d;
    j["floors"] = json::object();
    for (const auto& [k, dots] : f.floors) {
        json arr = json::array();
        for (const auto& d : dots) arr.push_back(d);
        j["floors"][std::to_string(k)] = arr;
    }
    return j;
}

schubert::Floors floors_from_json(const json& j) {
    std::map<int, std::vector<std::vector<int>>> floors;
    for (const auto& [key, dots] : j.at("floors").items())
        floors[std::stoi(key)] = dots.get<std::vector<std::vector<int>>>();
    return schubert::make_floors(j.at("n").get<int>(), j.at("d").get<int>(), std::move(floors));
}

json vanishing_verdict_to_json(const schubert::VanishingVerdict& v) {
    json j;
    j["verdict"] = v.vanishes ? "VANISHES" : "INCONCLUSIVE";
    if (v.vanishes) {
        j["reason"] = v.reason;
        if (v.k) {
            j["k"] = *v.k;
            j["rank"] = v.rank;
            j["intersection"] = json::array();
            for (const auto& p : v.intersection) j["intersection"].push_back(p);
            j["max_independent"] = json::array();
            for (const auto& p : v.max_independent) j["max_independent"].push_back(p);
            if (v.violation) {
                j["violation"] = {{"anchor", v.violation->anchor}, {"size", v.violation->size}};
            }
        }
    }
    return j;
}

json routing_to_json(const lgv::Routing& r) {
    json j;
    j["paths"] = json::array();
    for (const auto& path : r.paths) {
        json pj = json::array();
        for (const auto& v : path) pj.push_back(v);
        j["paths"].push_back(pj);
    }
    return j;
}

} // namespace linemat::io
