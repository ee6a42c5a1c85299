#ifndef REVARC_ORACLE_HPP
#define REVARC_ORACLE_HPP

#include <optional>
#include <string>
#include <vector>

#include "revarc/digraph.hpp"

namespace revarc {
namespace oracle {

// Exhaustive ground truth. Everything here evaluates definitions literally
// over all subsets; it deliberately shares no machinery with the flow-based
// implementations it cross-checks.

// lambda(D) by enumerating all 2^n - 2 cuts. Requires 2 <= n <= 20.
int lambda_bruteforce(const Digraph& d);

// Minimum number of undirected edges crossing any cut, directions ignored.
int underlying_edge_connectivity_bruteforce(const Digraph& d);

// Shortest order reversing all of F with lambda never decreasing along the
// way, found by BFS over subsets of F; nullopt when no such order exists.
// Requires |F| <= 20, n <= 12 and lambda(D with F reversed) >= k.
std::optional<std::vector<int>> exhaustive_sequence_exists(const Digraph& d, const ArcSet& f, int k);

struct Fixture {
    std::string name;
    Digraph digraph;
    ArcSet f;
    int k;
    int expected_lambda;
    int expected_lambda_reversed;
};

// Named instances: fig1, fig2, triangle_example, cycle(n), bidirected_clique(n).
Fixture fixture(const std::string& name);

// A k-arc-connected orientation of the underlying graph of `underlying`
// (input directions are ignored), or nullopt when the search is exhausted.
// Even-degree graphs get an Eulerian orientation, which halves every cut;
// otherwise random then exhaustive search, for small graphs only.
std::optional<Digraph> find_seed_orientation(const Digraph& underlying, int k);

}  // namespace oracle
}  // namespace revarc

#endif
