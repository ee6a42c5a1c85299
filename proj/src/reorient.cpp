#include "revarc/reorient.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include "revarc/connectivity.hpp"
#include "revarc/sparsify.hpp"

namespace revarc {

Threshold thresholds(int k) {
    if (k < 2) throw std::invalid_argument("thresholds require k >= 2");
    return Threshold{k, (k + 1) / 2, (k + 3) / 2};
}

const char* to_string(SequenceStatus s) {
    switch (s) {
        case SequenceStatus::ReachedK: return "ReachedK";
        case SequenceStatus::ReachedGuarantee: return "ReachedGuarantee";
        case SequenceStatus::Blocked: return "Blocked";
    }
    return "?";
}

namespace {

void validate_step_preconditions(const Digraph& d, const ArcSet& f, int k) {
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    f.validate_against(d);
    if (f.empty()) throw std::invalid_argument("F must be nonempty");
    if (!is_k_arc_connected(reverse_set(d, f), k))
        throw std::invalid_argument("reversing F does not give a k-arc-connected digraph");
}

StepOutcome find_step(const Digraph& d, const ArcSet& f, int k, SearchMode mode,
                      std::mt19937_64& rng, int root) {
    validate_step_preconditions(d, f, k);
    const int lambda = arc_connectivity(d).value;

    std::optional<int> chosen;
    std::optional<int> lambda_after;
    if (mode == SearchMode::Best) {
        for (int id : f.ids()) {
            int after = arc_connectivity(reverse_arc(d, id)).value;
            if (after >= lambda && (!lambda_after || after > *lambda_after)) {
                chosen = id;
                lambda_after = after;
            }
        }
    } else {
        std::vector<int> qualifying;
        for (int id : f.ids()) {
            if (is_k_arc_connected(reverse_arc(d, id), lambda)) {
                qualifying.push_back(id);
                if (mode == SearchMode::First) break;
            }
        }
        if (!qualifying.empty()) {
            if (mode == SearchMode::Random) {
                std::uniform_int_distribution<std::size_t> pick(0, qualifying.size() - 1);
                chosen = qualifying[pick(rng)];
            } else {
                chosen = qualifying.front();
            }
            lambda_after = arc_connectivity(reverse_arc(d, *chosen)).value;
        }
    }

    if (chosen) return StepOutcome{chosen, lambda, lambda_after, std::nullopt};

    if (lambda <= thresholds(k).guarantee_floor)
        throw std::logic_error("no reversible arc found although lambda(D) <= floor((k+1)/2); this contradicts "
                               "the existence guarantee and means a bug in the search");

    TightFamily fam = uncross(build_blocking_family(d, f), d);
    Certificate cert = split_certificate(fam, root, d, f, k);
    return StepOutcome{std::nullopt, lambda, std::nullopt, std::move(cert)};
}

SequenceReport run_sequence(const Digraph& d0, const ArcSet& f0, int k, SearchMode mode,
                            std::mt19937_64& rng, int root) {
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    f0.validate_against(d0);
    if (!is_k_arc_connected(reverse_set(d0, f0), k))
        throw std::invalid_argument("reversing F does not give a k-arc-connected digraph");

    SequenceReport report{k, arc_connectivity(d0).value, {}, SequenceStatus::ReachedK, std::nullopt};
    Digraph current = d0;
    ArcSet working = f0;
    int lambda = report.lambda_initial;

    while (lambda < k) {
        if (working.empty())
            // reversing all of F yields a k-arc-connected digraph, so an empty
            // working set cannot coexist with lambda < k
            throw std::logic_error("working F exhausted below k");
        StepOutcome out = find_step(current, working, k, mode, rng, root);
        if (!out.chosen) {
            report.certificate = std::move(out.certificate);
            report.status = lambda >= thresholds(k).target ? SequenceStatus::ReachedGuarantee
                                                           : SequenceStatus::Blocked;
            return report;
        }
        current = reverse_arc(current, *out.chosen);
        working.erase(*out.chosen);
        lambda = *out.lambda_after;
        report.steps.push_back(SequenceStep{*out.chosen, lambda});
    }
    report.status = SequenceStatus::ReachedK;
    return report;
}

// Matches each arc of `seed` to an arc of `d0` with the same endpoints
// (unordered); both digraphs must orient the same underlying multigraph.
// Returns, per seed arc id, the matched d0 arc id.
std::vector<int> match_arcs(const Digraph& d0, const Digraph& seed) {
    if (d0.vertex_count() != seed.vertex_count() || d0.arc_count() != seed.arc_count())
        throw std::invalid_argument("seed orientation does not match the instance's underlying graph");
    std::map<std::pair<int, int>, std::vector<int>> pool;
    for (const Arc& a : d0.arcs())
        pool[{std::min(a.tail, a.head), std::max(a.tail, a.head)}].push_back(a.id);
    std::vector<int> matched(seed.arc_count(), -1);
    for (const Arc& a : seed.arcs()) {
        auto it = pool.find({std::min(a.tail, a.head), std::max(a.tail, a.head)});
        if (it == pool.end() || it->second.empty())
            throw std::invalid_argument("seed orientation does not match the instance's underlying graph");
        matched[a.id] = it->second.back();
        it->second.pop_back();
    }
    return matched;
}

}  // namespace

StepOutcome find_reversible_arc(const Digraph& d, const ArcSet& f, int k, SearchMode mode,
                                std::uint64_t seed, int root) {
    std::mt19937_64 rng(seed);
    return find_step(d, f, k, mode, rng, root);
}

SequenceReport monotone_sequence(const Digraph& d, const ArcSet& f, int k, SearchMode mode,
                                 std::uint64_t seed, int root) {
    std::mt19937_64 rng(seed);
    return run_sequence(d, f, k, mode, rng, root);
}

SequenceReport corollary_pipeline(const Digraph& d0, int k, const Digraph& seed_orientation,
                                  SearchMode mode, std::uint64_t seed, int root) {
    if (k != 2 && k != 3) throw std::invalid_argument("the k(n-1) pipeline guarantee covers only k in {2,3}");
    if (!is_k_arc_connected(seed_orientation, k))
        throw std::invalid_argument("seed orientation is not k-arc-connected");

    std::vector<int> matched = match_arcs(d0, seed_orientation);
    SparsifyResult sparse = dalmazzo_sparsify(seed_orientation, k);

    std::vector<int> agree, disagree;
    for (int seed_id : sparse.kept.ids()) {
        const Arc& sa = seed_orientation.arc(seed_id);
        const Arc& da = d0.arc(matched[seed_id]);
        (sa.tail == da.tail ? agree : disagree).push_back(da.id);
    }
    // reversing either half makes d0 contain the sparse seed or its reverse
    // as a spanning subgraph; take the smaller one
    ArcSet f(disagree.size() <= agree.size() ? std::move(disagree) : std::move(agree));

    const long long bound = static_cast<long long>(k) * (d0.vertex_count() - 1);
    if (f.size() > bound)
        throw std::logic_error("derived F exceeds the k(n-1) bound; sparsification is broken");

    std::mt19937_64 rng(seed);
    SequenceReport report = run_sequence(d0, f, k, mode, rng, root);
    if (report.status != SequenceStatus::ReachedK)
        throw std::logic_error("pipeline did not reach k although k in {2,3} guarantees it");
    if (static_cast<long long>(report.steps.size()) > bound)
        throw std::logic_error("pipeline exceeded the k(n-1) step bound");
    return report;
}

}  // namespace revarc
