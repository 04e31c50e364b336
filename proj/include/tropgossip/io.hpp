// Text and JSON interchange: matrices ("p/q" entries, "inf"), cones, graphs
// with detours, gossip states and enumeration reports.
#pragma once

#include <json.hpp>

#include "detour.hpp"
#include "gossip.hpp"
#include "geom/cone.hpp"

namespace tropgossip {

using nlohmann::json;

// --- matrices ---------------------------------------------------------

/// One row per line, entries separated by commas; rationals as "p/q" or
/// "p", infinity as "inf".
inline TropMatrix parse_matrix_text(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::vector<std::string> row;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) {
            cell.erase(0, cell.find_first_not_of(" \t\r"));
            cell.erase(cell.find_last_not_of(" \t\r") + 1);
            row.push_back(cell);
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("empty matrix text");
    TropMatrix m(int(rows.size()));
    for (int i = 0; i < m.n(); ++i) {
        if (int(rows[i].size()) != m.n())
            throw std::invalid_argument("matrix text is not square");
        for (int j = 0; j < m.n(); ++j) m.set(i, j, parse_trop(rows[i][j]));
    }
    return m;
}

inline std::string matrix_to_text(const TropMatrix& m) { return to_string(m); }

inline json matrix_to_json(const TropMatrix& m) {
    json entries = json::array();
    for (int i = 0; i < m.n(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.n(); ++j) row.push_back(to_string(m.at(i, j)));
        entries.push_back(std::move(row));
    }
    return json{{"n", m.n()}, {"entries", std::move(entries)}};
}

inline TropMatrix matrix_from_json(const json& j) {
    int n = j.at("n").get<int>();
    TropMatrix m(n);
    const json& entries = j.at("entries");
    for (int i = 0; i < n; ++i)
        for (int jj = 0; jj < n; ++jj)
            m.set(i, jj, parse_trop(entries.at(i).at(jj).get<std::string>()));
    return m;
}

// --- cones and subspaces ----------------------------------------------

inline json zvec_to_json(const ZVec& v) {
    json row = json::array();
    for (const Int& x : v) row.push_back(x.str());
    return row;
}

inline ZVec zvec_from_json(const json& j) {
    ZVec v;
    for (const auto& x : j)
        v.push_back(x.is_string() ? Int(x.get<std::string>()) : Int(x.get<long long>()));
    return v;
}

inline json cone_to_json(const PolyCone& c) {
    json rays = json::array(), facets = json::array(), eqs = json::array(), lin = json::array();
    for (const ZVec& r : c.rays) rays.push_back(zvec_to_json(r));
    for (const ZVec& f : c.facets) facets.push_back(zvec_to_json(f));
    for (const ZVec& e : c.equations) eqs.push_back(zvec_to_json(e));
    for (const ZVec& l : c.lineality) lin.push_back(zvec_to_json(l));
    return json{{"ambient", c.ambient}, {"dim", c.dim},      {"rays", std::move(rays)},
                {"facets", std::move(facets)},               {"equations", std::move(eqs)},
                {"lineality", std::move(lin)}};
}

inline json subspace_to_json(const LinearSubspace& s) {
    json basis = json::array();
    for (const ZVec& r : s.basis) basis.push_back(zvec_to_json(r));
    return json{{"ambient", s.ambient}, {"basis", std::move(basis)}};
}

// --- detour graphs ----------------------------------------------------

inline json graph_to_json(const DetourGraph& g) {
    json edges = json::array();
    for (auto& [u, v, w] : g.edges) edges.push_back({u, v, rat_to_string(w)});
    json detours = json::array();
    for (const Detour& d : g.detours)
        detours.push_back({{"from", d.from + 1}, {"to", d.to + 1}, {"walk", d.walk}});
    json labels = json::array();
    for (int v : g.labelling) labels.push_back(v);
    return json{{"vertices", g.num_vertices},
                {"edges", std::move(edges)},
                {"labels", std::move(labels)},
                {"detours", std::move(detours)}};
}

inline DetourGraph graph_from_json(const json& j) {
    DetourGraph g;
    g.num_vertices = j.at("vertices").get<int>();
    for (const auto& e : j.at("edges"))
        g.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>(),
                           parse_rat(e.at(2).get<std::string>())});
    for (const auto& l : j.at("labels")) g.labelling.push_back(l.get<int>());
    if (j.contains("detours"))
        for (const auto& d : j.at("detours")) {
            Detour det;
            det.from = d.at("from").get<int>() - 1;
            det.to = d.at("to").get<int>() - 1;
            for (const auto& v : d.at("walk")) det.walk.push_back(v.get<int>());
            g.detours.push_back(std::move(det));
        }
    return g;
}

// --- gossip states and enumeration reports -----------------------------

/// n followed by the n*n knowledge bits in row-major order.
inline std::string state_to_dump(const GossipState& s) {
    std::string out = std::to_string(s.n) + "\n";
    for (int i = 0; i < s.n; ++i) {
        for (int j = 0; j < s.n; ++j) out += s.knows(i, j) ? '1' : '0';
        out += '\n';
    }
    return out;
}

inline GossipState state_from_dump(const std::string& text) {
    std::istringstream is(text);
    int n = 0;
    is >> n;
    GossipState s{n, 0};
    identity_state(n);  // range check
    std::string bits, line;
    while (is >> line) bits += line;
    if (int(bits.size()) != n * n) throw std::invalid_argument("state dump has wrong bit count");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (bits[i * n + j] == '1') s.bits |= (unsigned __int128)1 << (j * n + i);
    return s;
}

inline json enumeration_to_json(const EnumerationReport& r) {
    json hist = json::object();
    for (auto& [len, count] : r.length_histogram) hist[std::to_string(len)] = count;
    return json{{"n", r.n},
                {"count", r.total_count},
                {"max_length", r.max_length},
                {"complete", r.complete},
                {"histogram", std::move(hist)}};
}

inline std::string enumeration_to_csv(const EnumerationReport& r) {
    std::ostringstream os;
    os << "n,count,max_length";
    for (auto& [len, count] : r.length_histogram) os << ",len" << len;
    os << "\n" << r.n << "," << r.total_count << "," << r.max_length;
    for (auto& [len, count] : r.length_histogram) os << "," << count;
    os << "\n";
    return os.str();
}

}  // namespace tropgossip
