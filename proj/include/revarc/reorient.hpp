#ifndef REVARC_REORIENT_HPP
#define REVARC_REORIENT_HPP

#include <cstdint>
#include <optional>

#include "revarc/digraph.hpp"
#include "revarc/tight_sets.hpp"

namespace revarc {

enum class SearchMode { First, Best, Random };

// Guarantee floor and sequence target for a given k. Whenever lambda(D) is
// at most the floor, a safe single reversal exists; a monotone sequence can
// always reach the target.
struct Threshold {
    int k;
    int guarantee_floor;  // floor((k+1)/2)
    int target;           // floor((k+3)/2)
};

Threshold thresholds(int k);

// Result of one search step: either an arc whose reversal keeps lambda from
// decreasing, or a blocking certificate when no F-arc qualifies.
struct StepOutcome {
    std::optional<int> chosen;
    int lambda_before;
    std::optional<int> lambda_after;
    std::optional<Certificate> certificate;
};

enum class SequenceStatus { ReachedK, ReachedGuarantee, Blocked };

const char* to_string(SequenceStatus s);

struct SequenceStep {
    int arc_id;
    int lambda_after;
};

struct SequenceReport {
    int k;
    int lambda_initial;
    std::vector<SequenceStep> steps;
    SequenceStatus status;
    // present whenever the search was exhausted below k; Blocked implies it
    std::optional<Certificate> certificate;

    int lambda_final() const { return steps.empty() ? lambda_initial : steps.back().lambda_after; }
};

// Searches F for an arc whose reversal does not decrease lambda(D).
// Requires k >= 2, F nonempty, and D with F reversed k-arc-connected. When
// lambda(D) <= floor((k+1)/2) an arc is guaranteed to exist; its absence is
// reported as a logic error. Above the floor, absence yields a certificate.
// Modes: First = smallest qualifying id, Best = maximal resulting lambda
// (ties to smallest id), Random = uniform over qualifying arcs under seed.
StepOutcome find_reversible_arc(const Digraph& d, const ArcSet& f, int k, SearchMode mode,
                                std::uint64_t seed = 0, int root = 0);

// Repeats the single step, dropping each reversed arc from the working set,
// until lambda reaches k, F runs dry, or no arc qualifies. Lambda never
// decreases along the way.
SequenceReport monotone_sequence(const Digraph& d, const ArcSet& f, int k, SearchMode mode,
                                 std::uint64_t seed = 0, int root = 0);

// End-to-end augmentation for k in {2,3}: sparsifies the k-arc-connected
// seed orientation, derives F as the smaller agree/disagree half of the
// sparse arc set matched onto d0, and runs the monotone sequence, which is
// guaranteed to reach k within k(n-1) steps.
SequenceReport corollary_pipeline(const Digraph& d0, int k, const Digraph& seed_orientation,
                                  SearchMode mode = SearchMode::First, std::uint64_t seed = 0,
                                  int root = 0);

}  // namespace revarc

#endif
