#include "revarc/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include "revarc/connectivity.hpp"

namespace revarc {
namespace oracle {

namespace {

int cut_in_degree(const Digraph& d, std::uint32_t mask) {
    int c = 0;
    for (const Arc& a : d.arcs())
        if (((mask >> a.head) & 1u) && !((mask >> a.tail) & 1u)) ++c;
    return c;
}

void check_bruteforce_range(const Digraph& d) {
    if (d.vertex_count() < 2 || d.vertex_count() > 20)
        throw std::invalid_argument("brute force handles 2 <= n <= 20 only");
}

}  // namespace

int lambda_bruteforce(const Digraph& d) {
    check_bruteforce_range(d);
    const std::uint32_t top = (1u << d.vertex_count()) - 1;
    int best = d.arc_count();
    for (std::uint32_t mask = 1; mask < top; ++mask) best = std::min(best, cut_in_degree(d, mask));
    return best;
}

int underlying_edge_connectivity_bruteforce(const Digraph& d) {
    check_bruteforce_range(d);
    const std::uint32_t top = (1u << d.vertex_count()) - 1;
    int best = d.arc_count();
    for (std::uint32_t mask = 1; mask < top; ++mask) {
        int c = 0;
        for (const Arc& a : d.arcs())
            if (((mask >> a.head) & 1u) != ((mask >> a.tail) & 1u)) ++c;
        best = std::min(best, c);
    }
    return best;
}

std::optional<std::vector<int>> exhaustive_sequence_exists(const Digraph& d, const ArcSet& f, int k) {
    f.validate_against(d);
    if (f.size() > 20) throw std::invalid_argument("exhaustive search handles |F| <= 20 only");
    if (d.vertex_count() > 12) throw std::invalid_argument("exhaustive search handles n <= 12 only");
    if (lambda_bruteforce(reverse_set(d, f)) < k)
        throw std::invalid_argument("reversing F does not give a k-arc-connected digraph");

    const std::vector<int>& ids = f.ids();
    const int nf = f.size();
    const std::uint32_t goal = (1u << nf) - 1;

    auto realize = [&](std::uint32_t state) {
        Digraph g = d;
        for (int i = 0; i < nf; ++i)
            if ((state >> i) & 1u) g = reverse_arc(g, ids[i]);
        return g;
    };

    std::unordered_map<std::uint32_t, int> lambda_of;
    auto lam = [&](std::uint32_t state) {
        auto it = lambda_of.find(state);
        if (it != lambda_of.end()) return it->second;
        int v = lambda_bruteforce(realize(state));
        lambda_of.emplace(state, v);
        return v;
    };

    if (goal == 0) return std::vector<int>{};

    std::unordered_map<std::uint32_t, std::pair<std::uint32_t, int>> parent;  // state -> (prev, arc idx)
    std::queue<std::uint32_t> q;
    q.push(0);
    parent.emplace(0u, std::make_pair(0u, -1));
    while (!q.empty()) {
        std::uint32_t cur = q.front();
        q.pop();
        int cur_lam = lam(cur);
        for (int i = 0; i < nf; ++i) {
            if ((cur >> i) & 1u) continue;
            std::uint32_t next = cur | (1u << i);
            if (parent.count(next)) continue;
            if (lam(next) < cur_lam) continue;
            parent.emplace(next, std::make_pair(cur, i));
            if (next == goal) {
                std::vector<int> order;
                for (std::uint32_t s = goal; s != 0;) {
                    auto [prev, idx] = parent.at(s);
                    order.push_back(ids[idx]);
                    s = prev;
                }
                std::reverse(order.begin(), order.end());
                return order;
            }
            q.push(next);
        }
    }
    return std::nullopt;
}

namespace {

struct Row {
    int tail, head, mult;
    bool in_f;
};

Fixture make(const std::string& name, int n, const std::vector<Row>& rows, int k, int lam, int lam_rev) {
    std::vector<Arc> arcs;
    std::vector<int> f_ids;
    for (const Row& r : rows)
        for (int i = 0; i < r.mult; ++i) {
            int id = static_cast<int>(arcs.size());
            arcs.push_back(Arc{id, r.tail, r.head});
            if (r.in_f) f_ids.push_back(id);
        }
    return Fixture{name, Digraph(n, std::move(arcs)), ArcSet(std::move(f_ids)), k, lam, lam_rev};
}

// Figure 1 of the library docs: vertices A,B,C,D,F,G as 0..5.
Fixture fig1() {
    enum { A, B, C, D, F, G };
    std::vector<Row> rows = {
        {A, C, 2, false}, {C, A, 3, false}, {B, D, 3, false}, {D, B, 2, false},
        {C, D, 1, false}, {D, C, 1, false},
        {C, B, 1, true},  {A, D, 1, true},  {F, A, 2, true},  {B, G, 2, true},
        {C, G, 1, false}, {F, D, 1, false}, {C, F, 1, true},  {G, D, 1, true},
        {G, F, 2, false}, {F, G, 2, false},
    };
    return make("fig1", 6, rows, 4, 3, 4);
}

// Figure 2: eight vertex pairs, letters A..H; pair i occupies 2i (u) and
// 2i+1 (c), A..D on top, E..H below.
Fixture fig2() {
    auto u = [](int i) { return 2 * i; };
    auto c = [](int i) { return 2 * i + 1; };
    std::vector<Row> rows;
    for (int i = 0; i < 4; ++i) {
        int p = i + 4;
        rows.push_back({u(i), c(p), 1, true});
        rows.push_back({u(i), u(p), 5, false});
        rows.push_back({u(p), u(i), 1, false});
        rows.push_back({c(i), u(p), 1, true});
    }
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j) rows.push_back({u(i), c(j), 1, true});
    for (int i = 4; i < 8; ++i)
        for (int j = 4; j < 8; ++j)
            if (i != j) rows.push_back({c(i), u(j), 1, true});
    for (int i = 0; i < 4; ++i) {
        rows.push_back({c(i), u(i), 3, false});
        rows.push_back({u(i), c(i), 5, false});
    }
    for (int i = 4; i < 8; ++i) {
        rows.push_back({u(i), c(i), 3, false});
        rows.push_back({c(i), u(i), 5, false});
    }
    return make("fig2", 16, rows, 6, 4, 6);
}

// Doubled arc u->v in an otherwise bidirected triangle; reversing one copy
// lifts lambda from 1 to 2.
Fixture triangle_example() {
    std::vector<Row> rows = {
        {0, 1, 1, true}, {0, 1, 1, false}, {1, 2, 1, false},
        {2, 1, 1, false}, {2, 0, 1, false}, {0, 2, 1, false},
    };
    return make("triangle_example", 3, rows, 2, 1, 2);
}

std::optional<int> parse_parameter(const std::string& name, const std::string& prefix) {
    if (name.size() <= prefix.size() + 2 || name.compare(0, prefix.size(), prefix) != 0) return std::nullopt;
    if (name[prefix.size()] != '(' || name.back() != ')') return std::nullopt;
    try {
        return std::stoi(name.substr(prefix.size() + 1, name.size() - prefix.size() - 2));
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

}  // namespace

Fixture fixture(const std::string& name) {
    if (name == "fig1") return fig1();
    if (name == "fig2") return fig2();
    if (name == "triangle_example") return triangle_example();
    if (auto n = parse_parameter(name, "cycle")) {
        if (*n < 2) throw std::invalid_argument("cycle(n) needs n >= 2");
        std::vector<Row> rows;
        for (int i = 0; i < *n; ++i) rows.push_back({i, (i + 1) % *n, 1, false});
        return make(name, *n, rows, 1, 1, 1);
    }
    if (auto n = parse_parameter(name, "bidirected_clique")) {
        if (*n < 2) throw std::invalid_argument("bidirected_clique(n) needs n >= 2");
        std::vector<Row> rows;
        for (int i = 0; i < *n; ++i)
            for (int j = 0; j < *n; ++j)
                if (i != j) rows.push_back({i, j, 1, false});
        return make(name, *n, rows, *n - 1, *n - 1, *n - 1);
    }
    throw std::invalid_argument("unknown fixture '" + name + "'");
}

namespace {

// Orients every edge along Eulerian circuits; with all degrees even this
// balances in- and out-degree at each vertex, so every cut is halved.
Digraph eulerian_orientation(const Digraph& underlying) {
    const int n = underlying.vertex_count();
    const int m = underlying.arc_count();
    std::vector<std::vector<std::pair<int, int>>> adj(n);  // (other endpoint, edge id)
    for (const Arc& a : underlying.arcs()) {
        adj[a.tail].push_back({a.head, a.id});
        adj[a.head].push_back({a.tail, a.id});
    }
    std::vector<Arc> oriented(m, Arc{0, 0, 0});
    std::vector<bool> used(m, false);
    std::vector<std::size_t> next(n, 0);
    for (int start = 0; start < n; ++start) {
        for (;;) {
            // walk a closed trail from `start` until edges around it run out
            int v = start;
            bool moved = false;
            while (true) {
                while (next[v] < adj[v].size() && used[adj[v][next[v]].second]) ++next[v];
                if (next[v] == adj[v].size()) break;
                auto [w, id] = adj[v][next[v]];
                used[id] = true;
                oriented[id] = Arc{id, v, w};
                v = w;
                moved = true;
            }
            if (!moved) break;
        }
    }
    return Digraph(n, std::move(oriented));
}

Digraph orient_by_mask(const Digraph& underlying, std::uint64_t mask) {
    std::vector<Arc> arcs;
    arcs.reserve(underlying.arc_count());
    for (const Arc& a : underlying.arcs()) {
        bool flip = (mask >> a.id) & 1u;
        arcs.push_back(Arc{a.id, flip ? a.head : a.tail, flip ? a.tail : a.head});
    }
    return Digraph(underlying.vertex_count(), std::move(arcs));
}

}  // namespace

std::optional<Digraph> find_seed_orientation(const Digraph& underlying, int k) {
    if (k < 1) throw std::invalid_argument("seed search requires k >= 1");
    const int n = underlying.vertex_count();
    const int m = underlying.arc_count();
    if (n < 2) return std::nullopt;

    // necessary by orientation theory: the underlying graph must be
    // 2k-edge-connected
    if (n <= 20 && underlying_edge_connectivity_bruteforce(underlying) < 2 * k) return std::nullopt;

    std::vector<int> degree(n, 0);
    for (const Arc& a : underlying.arcs()) {
        ++degree[a.tail];
        ++degree[a.head];
    }
    if (std::all_of(degree.begin(), degree.end(), [](int d) { return d % 2 == 0; })) {
        Digraph oriented = eulerian_orientation(underlying);
        if (is_k_arc_connected(oriented, k)) return oriented;
    }

    if (n > 8) return std::nullopt;

    std::mt19937_64 rng(0x5eed);
    for (int attempt = 0; attempt < 2000; ++attempt) {
        std::vector<Arc> arcs;
        arcs.reserve(m);
        for (const Arc& a : underlying.arcs()) {
            bool flip = rng() & 1u;
            arcs.push_back(Arc{a.id, flip ? a.head : a.tail, flip ? a.tail : a.head});
        }
        Digraph oriented(n, std::move(arcs));
        if (is_k_arc_connected(oriented, k)) return oriented;
    }
    if (m <= 20) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
            Digraph oriented = orient_by_mask(underlying, mask);
            if (is_k_arc_connected(oriented, k)) return oriented;
        }
    }
    return std::nullopt;
}

}  // namespace oracle
}  // namespace revarc
