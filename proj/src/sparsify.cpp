#include "revarc/sparsify.hpp"

#include <stdexcept>

#include "revarc/connectivity.hpp"

namespace revarc {

SparsifyResult dalmazzo_sparsify(const Digraph& d, int k) {
    if (k < 1) throw std::invalid_argument("sparsify requires k >= 1");
    if (!is_k_arc_connected(d, k)) throw std::invalid_argument("not k-arc-connected");

    std::vector<bool> kept(d.arc_count(), true);
    auto current = [&]() {
        std::vector<int> ids;
        for (int id = 0; id < d.arc_count(); ++id)
            if (kept[id]) ids.push_back(id);
        return ArcSet(std::move(ids));
    };

    // An arc whose deletion breaks k-connectivity stays critical as more arcs
    // go away, so one descending pass reaches a minimal subgraph.
    for (int id = d.arc_count() - 1; id >= 0; --id) {
        kept[id] = false;
        if (!is_k_arc_connected(d.restricted_to(current()), k)) kept[id] = true;
    }

    ArcSet result = current();
    int count = result.size();
    return SparsifyResult{std::move(result), count, k};
}

}  // namespace revarc
