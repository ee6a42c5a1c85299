#ifndef REVARC_DIGRAPH_HPP
#define REVARC_DIGRAPH_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "revarc/vertex_set.hpp"

namespace revarc {

// One arc of a directed multigraph. Parallel arcs are distinct records;
// the id survives reversal, so a reversal always targets one specific arc.
struct Arc {
    int id;
    int tail;
    int head;
};

class ArcSet;

// Directed multigraph with stable arc identities. Self-loops are rejected
// at construction (they cross no cut). Treat values as immutable: mutating
// operations return a new digraph.
class Digraph {
public:
    Digraph(int n, std::vector<Arc> arcs);

    int vertex_count() const { return n_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    const Arc& arc(int id) const;
    const std::vector<Arc>& arcs() const { return arcs_; }

    Digraph with_arc_reversed(int id) const;
    Digraph with_set_reversed(const ArcSet& f) const;
    // All arcs flipped (the reverse digraph).
    Digraph reversed() const;
    // Subgraph keeping only the given arcs; ids are preserved as-is.
    Digraph restricted_to(const ArcSet& keep) const;

    bool operator==(const Digraph& o) const;

private:
    int n_;
    std::vector<Arc> arcs_;
};

// Subset of arc ids of a host digraph, kept sorted and unique.
class ArcSet {
public:
    ArcSet() = default;
    explicit ArcSet(std::vector<int> ids);

    static ArcSet all(const Digraph& d);

    bool contains(int id) const;
    void insert(int id);
    void erase(int id);
    int size() const { return static_cast<int>(ids_.size()); }
    bool empty() const { return ids_.empty(); }
    const std::vector<int>& ids() const { return ids_; }

    void validate_against(const Digraph& d) const;

    bool operator==(const ArcSet& o) const { return ids_ == o.ids_; }

private:
    std::vector<int> ids_;
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct Instance {
    Digraph digraph;
    ArcSet f;
};

// Instance format: first line "n m" (m = arc lines), then m lines
// "tail head mult inF"; '#' starts a comment. A multiplicity of m expands
// to m arcs with consecutive ids that share the line's F flag.
Instance parse_digraph(const std::string& text);
std::string serialize_instance(const Digraph& d, const ArcSet& f);

Digraph reverse_arc(const Digraph& d, int arc_id);
Digraph reverse_set(const Digraph& d, const ArcSet& f);

struct Certificate;

// Graphviz export. F arcs come out blue; with a certificate, tight sets are
// drawn on their small side as red (in-tight) / green (out-tight) clusters,
// matching the color convention of the library's documentation.
std::string to_dot(const Digraph& d, const ArcSet& f, const Certificate* highlight = nullptr);

}  // namespace revarc

#endif
