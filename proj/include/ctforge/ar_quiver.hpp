#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "ctforge/orbit_category.hpp"

namespace ctforge {

inline constexpr const char* kArQuiverSchema = "ctforge.arquiver/1";

/// A window of ZQ: the objects tau^l(P_i) for 0 <= l < width, placed at
/// column off_i - 2l (so tau points left) with off_i = off_j + 1 for i -> j.
struct ArQuiverNode {
    DerivedObject object;
    Int column = 0;
    int row = 0;
    bool marked = false;
};

struct ArQuiverEdge {
    DerivedObject from;
    DerivedObject to;
};

struct ArQuiver {
    std::string diagram;
    std::vector<Arrow> orientation;
    Int width = 0;
    Int period = 0;  // 2(h - 1) columns, one turn of nu o [1]
    std::string marked_name;
    std::vector<int> row_order;  // vertex drawn on row 0, 1, ...
    std::vector<ArQuiverNode> nodes;
    std::vector<ArQuiverEdge> arrows;  // mesh arrows, left to right
    std::vector<ArQuiverEdge> tau;     // X -> tau X, pointing left
};

/// Column offsets off_i, normalized so the smallest is 0.
inline std::vector<Int> column_offsets(const QuiverOrientation& q) {
    std::vector<Int> off(static_cast<std::size_t>(q.rank() + 1), 0);
    std::vector<bool> done(off.size(), false);
    done[1] = true;
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& a : q.arrows()) {
            auto s = static_cast<std::size_t>(a.source), t = static_cast<std::size_t>(a.target);
            if (done[s] && !done[t]) {
                off[t] = off[s] - 1;
                done[t] = changed = true;
            } else if (done[t] && !done[s]) {
                off[s] = off[t] + 1;
                done[s] = changed = true;
            }
        }
    }
    Int lo = *std::min_element(off.begin() + 1, off.end());
    for (std::size_t i = 1; i < off.size(); ++i) off[i] -= lo;
    return off;
}

/// Rows as in the usual pictures: type D with the branch vertices on top and
/// vertex 1 at the bottom, otherwise vertex 1 on top.
inline std::vector<int> default_row_order(const DynkinDiagram& g) {
    std::vector<int> rows;
    for (int v = 1; v <= g.rank(); ++v) rows.push_back(v);
    if (g.family() == Family::D) std::reverse(rows.begin(), rows.end());
    return rows;
}

inline ArQuiver build_ar_quiver(const QuiverOrientation& q, Int width, const std::vector<OrbitObject>& marked,
                                const std::string& marked_name = "none") {
    OrbitCategory cat(q);
    if (width < 1 || width > cat.derived().window())
        throw ValidationError("window must be in [1, " + std::to_string(cat.derived().window()) + "]");
    ArQuiver out;
    out.diagram = q.diagram().name();
    out.orientation = q.arrows();
    out.width = width;
    out.period = 2 * (cat.coxeter() - 1);
    out.marked_name = marked_name;
    out.row_order = default_row_order(q.diagram());
    std::vector<int> row_of(static_cast<std::size_t>(q.rank() + 1));
    for (std::size_t r = 0; r < out.row_order.size(); ++r) row_of[static_cast<std::size_t>(out.row_order[r])] = static_cast<int>(r);

    std::vector<OrbitObject> mk = marked;
    std::sort(mk.begin(), mk.end());
    const auto off = column_offsets(q);
    for (int v = 1; v <= q.rank(); ++v)
        for (Int l = 0; l < width; ++l) {
            DerivedObject x{v, l};
            out.nodes.push_back({x, off[static_cast<std::size_t>(v)] - 2 * l, row_of[static_cast<std::size_t>(v)],
                                 std::binary_search(mk.begin(), mk.end(), cat.reduce(x))});
        }
    std::sort(out.nodes.begin(), out.nodes.end(), [](const ArQuiverNode& a, const ArQuiverNode& b) {
        return std::pair(a.row, a.column) < std::pair(b.row, b.column);
    });
    auto inside = [&](const DerivedObject& x) { return x.twist >= 0 && x.twist < width; };
    for (const auto& a : q.arrows())
        for (Int l = 0; l < width; ++l) {
            ArQuiverEdge e1{{a.target, l}, {a.source, l}};
            ArQuiverEdge e2{{a.source, l}, {a.target, l - 1}};
            if (inside(e1.from) && inside(e1.to)) out.arrows.push_back(e1);
            if (inside(e2.from) && inside(e2.to)) out.arrows.push_back(e2);
        }
    std::sort(out.arrows.begin(), out.arrows.end(), [](const ArQuiverEdge& a, const ArQuiverEdge& b) {
        return std::pair(a.from, a.to) < std::pair(b.from, b.to);
    });
    for (int v = 1; v <= q.rank(); ++v)
        for (Int l = 0; l + 1 < width; ++l) out.tau.push_back({{v, l}, {v, l + 1}});
    return out;
}

inline std::string node_id(const DerivedObject& x) {
    return "v" + std::to_string(x.vertex) + "_" + (x.twist < 0 ? "m" + std::to_string(-x.twist) : std::to_string(x.twist));
}

inline std::string emit_dot(const ArQuiver& g) {
    std::ostringstream s;
    s << "digraph \"ZQ " << g.diagram << "\" {\n";
    s << "  graph [layout=neato, splines=false, label=\"" << g.diagram << ", marked: " << g.marked_name << "\"];\n";
    s << "  node [shape=circle, width=0.3, fixedsize=true, fontsize=8];\n";
    for (const auto& n : g.nodes) {
        s << "  " << node_id(n.object) << " [label=\"" << n.object.vertex << "," << n.object.twist << "\", pos=\""
          << n.column << "," << -n.row << "!\"";
        if (n.marked) s << ", style=filled, fillcolor=black, fontcolor=white";
        s << "];\n";
    }
    for (const auto& e : g.arrows) s << "  " << node_id(e.from) << " -> " << node_id(e.to) << ";\n";
    for (const auto& e : g.tau)
        s << "  " << node_id(e.from) << " -> " << node_id(e.to) << " [style=dotted, label=\"tau\", fontsize=6];\n";
    s << "}\n";
    return s.str();
}

inline nlohmann::ordered_json to_json(const ArQuiver& g) {
    nlohmann::ordered_json j;
    j["schema"] = kArQuiverSchema;
    j["diagram"] = g.diagram;
    auto arrows = nlohmann::ordered_json::array();
    for (const auto& a : g.orientation) arrows.push_back({a.source, a.target});
    j["orientation"] = arrows;
    j["window"] = g.width;
    j["period"] = g.period;
    j["marked"] = g.marked_name;
    j["row_order"] = g.row_order;
    auto nodes = nlohmann::ordered_json::array();
    for (const auto& n : g.nodes)
        nodes.push_back({{"vertex", n.object.vertex},
                         {"twist", n.object.twist},
                         {"column", n.column},
                         {"row", n.row},
                         {"marked", n.marked}});
    j["nodes"] = nodes;
    auto edges = [](const std::vector<ArQuiverEdge>& es) {
        auto a = nlohmann::ordered_json::array();
        for (const auto& e : es)
            a.push_back({{"from", {e.from.vertex, e.from.twist}}, {"to", {e.to.vertex, e.to.twist}}});
        return a;
    };
    j["arrows"] = edges(g.arrows);
    j["tau"] = edges(g.tau);
    return j;
}

/// One text row per vertex orbit, '*' marked, 'o' unmarked, tau to the left.
inline std::string emit_ascii(const ArQuiver& g) {
    Int lo = 0, hi = 0;
    bool first = true;
    for (const auto& n : g.nodes) {
        lo = first ? n.column : std::min(lo, n.column);
        hi = first ? n.column : std::max(hi, n.column);
        first = false;
    }
    std::map<std::pair<int, Int>, bool> cell;
    for (const auto& n : g.nodes) cell[{n.row, n.column}] = n.marked;
    std::ostringstream s;
    s << g.diagram << "  window " << g.width << "  marked " << g.marked_name << "  (tau <-)\n";
    for (std::size_t r = 0; r < g.row_order.size(); ++r) {
        std::string line = std::to_string(g.row_order[r]);
        line.resize(4, ' ');
        line += "|";
        for (Int c = lo; c <= hi; ++c) {
            auto it = cell.find({static_cast<int>(r), c});
            line += ' ';
            line += it == cell.end() ? ' ' : (it->second ? '*' : 'o');
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        s << line << "\n";
    }
    return s.str();
}

} // namespace ctforge
