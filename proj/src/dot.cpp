#include <algorithm>
#include <sstream>

#include "revarc/digraph.hpp"
#include "revarc/tight_sets.hpp"

namespace revarc {

namespace {

struct Highlight {
    VertexSet side;   // the side that gets drawn
    bool in_tight;    // red when true, green when false
};

// Each certificate set is drawn on its smaller side; complementing flips the
// tightness color (the complement of an in-tight set is out-tight). Strictly
// larger halves only, so the drawn family stays laminar.
std::vector<Highlight> display_sets(const Certificate& cert, int n) {
    std::vector<Highlight> out;
    for (const VertexSet& x : cert.f_in) {
        if (x.size() * 2 > n)
            out.push_back({x.complement(), false});
        else
            out.push_back({x, true});
    }
    for (const VertexSet& y : cert.f_out) {
        if (y.size() * 2 > n)
            out.push_back({y.complement(), true});
        else
            out.push_back({y, false});
    }
    // nest outermost first so cluster blocks can be emitted by containment
    std::sort(out.begin(), out.end(), [](const Highlight& a, const Highlight& b) {
        if (a.side.size() != b.side.size()) return a.side.size() > b.side.size();
        return a.side < b.side;
    });
    return out;
}

void emit_cluster(std::ostringstream& os, const std::vector<Highlight>& sets, std::vector<bool>& used,
                  std::size_t i, const VertexSet& scope, std::vector<bool>& vertex_done, int indent) {
    std::string pad(indent * 2, ' ');
    os << pad << "subgraph cluster_" << i << " {\n";
    os << pad << "  color=" << (sets[i].in_tight ? "red" : "green") << ";\n";
    used[i] = true;
    for (std::size_t j = i + 1; j < sets.size(); ++j)
        if (!used[j] && sets[j].side.subset_of(sets[i].side))
            emit_cluster(os, sets, used, j, sets[i].side, vertex_done, indent + 1);
    for (int v : sets[i].side.to_vector())
        if (!vertex_done[v]) {
            os << pad << "  v" << v << ";\n";
            vertex_done[v] = true;
        }
    os << pad << "}\n";
    (void)scope;
}

}  // namespace

std::string to_dot(const Digraph& d, const ArcSet& f, const Certificate* highlight) {
    f.validate_against(d);
    std::ostringstream os;
    os << "digraph D {\n";

    std::vector<bool> vertex_done(d.vertex_count(), false);
    if (highlight) {
        auto sets = display_sets(*highlight, d.vertex_count());
        std::vector<bool> used(sets.size(), false);
        for (std::size_t i = 0; i < sets.size(); ++i)
            if (!used[i]) emit_cluster(os, sets, used, i, VertexSet::full(d.vertex_count()), vertex_done, 1);
    }
    for (int v = 0; v < d.vertex_count(); ++v)
        if (!vertex_done[v]) os << "  v" << v << ";\n";

    for (const Arc& a : d.arcs()) {
        os << "  v" << a.tail << " -> v" << a.head;
        if (f.contains(a.id)) os << " [color=blue]";
        os << "; // arc " << a.id << "\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace revarc
