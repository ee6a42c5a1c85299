#ifndef REVARC_TIGHT_SETS_HPP
#define REVARC_TIGHT_SETS_HPP

#include <string>
#include <vector>

#include "revarc/connectivity.hpp"
#include "revarc/digraph.hpp"

namespace revarc {

// Family of in-tight sets (each member has in-degree exactly lambda).
struct TightFamily {
    std::vector<VertexSet> members;
    int lambda;
};

// Laminar blocking certificate split around a root vertex: f_in members are
// in-tight sets avoiding the root, f_out members are out-tight sets avoiding
// the root (complements of in-tight sets that contained it). Together they
// witness that no F-arc can be reversed without dropping lambda.
struct Certificate {
    int root;
    std::vector<VertexSet> f_in;
    std::vector<VertexSet> f_out;
    int lambda;
    int k;
};

struct PropertyCheck {
    std::string name;
    bool passed;
    std::string detail;  // violating set/arc on failure, empty otherwise
};

struct VerifyReport {
    std::vector<PropertyCheck> checks;
    int lambda_observed;

    bool valid() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

// Sum of |Z| * |V - Z| over the family; each uncrossing replacement strictly
// decreases it, which is what bounds the uncross loop.
long long family_potential(const TightFamily& fam, int n);

// One minimal in-tight set per F-arc (deduplicated). Errors if some F-arc
// enters no in-tight set, i.e. the instance is not actually blocked.
TightFamily build_blocking_family(const Digraph& d, const ArcSet& f);

// Resolves properly crossing pairs (all four of X&Y, X-Y, Y-X, V-(X|Y)
// nonempty) by the intersection/union replacement until none remain. The
// result is laminar after complementing members around any root vertex.
// Preserves, for every arc, whether the arc enters some member.
TightFamily uncross(TightFamily fam, const Digraph& d);

// Splits an uncrossed family at root s, pruning members no F-arc enters.
Certificate split_certificate(const TightFamily& fam, int s, const Digraph& d, const ArcSet& f, int k);

// Checks the six certificate properties: laminarity, F coverage, in/out
// tightness, and the in/out F-surplus bounds. Never throws; reports.
VerifyReport verify_certificate(const Digraph& d, const ArcSet& f, const Certificate& cert);

std::string serialize_certificate(const Certificate& cert);
Certificate parse_certificate(const std::string& text, int n);

std::string format_report(const VerifyReport& report);

}  // namespace revarc

#endif
