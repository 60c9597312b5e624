#include "bipaths/dot.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <vector>

namespace bipaths {

namespace {

constexpr std::array<const char*, 8> kPalette = {"#1b9e77", "#d95f02", "#7570b3", "#e7298a",
                                                 "#66a61e", "#e6ab02", "#a6761d", "#666666"};

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

void write_dot(std::ostream& out, const Instance& inst, const DotOverlay& overlay) {
    const auto& g = inst.graph;
    const std::size_t n = g.num_vertices();

    std::vector<std::size_t> vertex_path(n, kNone), edge_path(g.num_edges(), kNone);
    if (overlay.packing) {
        for (std::size_t i = 0; i < overlay.packing->paths.size(); ++i) {
            const SignedPath& p = overlay.packing->paths[i];
            for (VertexId v : p.vertices) vertex_path[v] = i;
            for (EdgeId e : p.edges) edge_path[e] = i;
        }
    }
    std::vector<std::uint8_t> kept(g.num_edges(), 1);
    Indicator in_s, in_t;
    if (overlay.certificate) {
        in_s = Indicator(n, overlay.certificate->s);
        in_t = Indicator(n, overlay.certificate->t);
        std::fill(kept.begin(), kept.end(), 0);
        for (EdgeId e : restrict(g, overlay.certificate->s, overlay.certificate->t).source_edge)
            kept[e] = 1;
    }
    const Indicator in_y(n, overlay.hitting_set.value_or(VertexSet{}));
    const Indicator in_x(n, inst.x);

    out << "graph bidirected {\n";
    out << "  node [shape=circle];\n";
    for (VertexId v = 0; v < n; ++v) {
        std::vector<std::string> attrs;
        if (in_x[v]) attrs.push_back("shape=box");
        if (vertex_path[v] != kNone) {
            attrs.push_back(std::string("color=") + quoted(kPalette[vertex_path[v] % kPalette.size()]));
            attrs.push_back("class=" + quoted("path" + std::to_string(vertex_path[v])));
        }
        if (overlay.certificate && (in_s[v] || in_t[v])) {
            const char* role = in_s[v] && in_t[v] ? "ST" : (in_s[v] ? "S" : "T");
            attrs.push_back(std::string("role=") + quoted(role));
            attrs.push_back(std::string("xlabel=") + quoted(role));
        }
        if (in_y[v]) {
            attrs.push_back("hitting=\"true\"");
            attrs.push_back("style=filled");
            attrs.push_back("fillcolor=\"#fb8072\"");
        }
        out << "  " << inst.name(v);
        if (!attrs.empty()) {
            out << " [";
            for (std::size_t i = 0; i < attrs.size(); ++i) out << (i ? ", " : "") << attrs[i];
            out << ']';
        }
        out << ";\n";
    }
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const auto& ed = g.edge(e);
        out << "  " << inst.name(ed.u) << " -- " << inst.name(ed.v) << " [label=\"" << to_char(ed.sign_u)
            << to_char(ed.sign_v) << "\", id=\"e" << e << '"';
        if (edge_path[e] != kNone) {
            out << ", color=" << quoted(kPalette[edge_path[e] % kPalette.size()])
                << ", class=" << quoted("path" + std::to_string(edge_path[e])) << ", penwidth=2";
        }
        if (!kept[e]) out << ", style=dashed";
        out << "];\n";
    }
    out << "}\n";
}

std::string to_dot(const Instance& inst, const DotOverlay& overlay) {
    std::ostringstream os;
    write_dot(os, inst, overlay);
    return os.str();
}

}  // namespace bipaths
