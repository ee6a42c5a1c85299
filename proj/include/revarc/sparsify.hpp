#ifndef REVARC_SPARSIFY_HPP
#define REVARC_SPARSIFY_HPP

#include "revarc/digraph.hpp"

namespace revarc {

struct SparsifyResult {
    ArcSet kept;  // ids in the input digraph
    int arc_count;
    int k;
};

// Greedy deletion (descending arc id) down to a minimally k-arc-connected
// spanning subgraph. Such a subgraph has at most 2k(n-1) arcs.
SparsifyResult dalmazzo_sparsify(const Digraph& d, int k);

}  // namespace revarc

#endif
