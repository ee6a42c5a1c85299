#ifndef REVARC_CONNECTIVITY_HPP
#define REVARC_CONNECTIVITY_HPP

#include <optional>

#include "revarc/digraph.hpp"
#include "revarc/vertex_set.hpp"

namespace revarc {

// A vertex subset together with its recounted degrees.
struct Cut {
    VertexSet side;
    int in_degree;
    int out_degree;
};

Cut make_cut(const Digraph& d, VertexSet side);

// Global arc-connectivity with a witness cut attaining it.
struct Lambda {
    int value;
    Cut witness;
};

struct MaxFlowResult {
    int value;
    // Vertices that still reach t in the residual graph: the unique
    // inclusion-minimal sink side among minimum s-t cuts.
    VertexSet sink_side;
};

// Max number of arc-disjoint s->t paths (every arc has unit capacity).
MaxFlowResult max_flow(const Digraph& d, int s, int t);

// Augments until the flow reaches cap or no path is left; early exit makes
// repeated k-connectivity probes cheap. The returned value is min(maxflow, cap).
int max_flow_capped(const Digraph& d, int s, int t, int cap);

// lambda(D) = min in-degree over nonempty proper vertex subsets, computed
// as 2(n-1) max-flows against root 0. Ties resolve to the smallest probe
// vertex, direction root->v before v->root.
Lambda arc_connectivity(const Digraph& d);

bool is_k_arc_connected(const Digraph& d, int k);

// The inclusion-minimal in-tight set entered by arc a, or nullopt when
// max_flow(tail, head) exceeds lambda (then no in-tight set is entered by a
// and reversing a cannot decrease lambda). Requires lambda == lambda(D).
std::optional<VertexSet> min_in_tight_set_entered_by(const Digraph& d, const Arc& a, int lambda);

int in_degree(const Digraph& d, const VertexSet& side);
int out_degree(const Digraph& d, const VertexSet& side);

}  // namespace revarc

#endif
