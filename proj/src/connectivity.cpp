#include "revarc/connectivity.hpp"

#include <limits>
#include <queue>
#include <stdexcept>

namespace revarc {

int in_degree(const Digraph& d, const VertexSet& side) {
    int c = 0;
    for (const Arc& a : d.arcs())
        if (side.contains(a.head) && !side.contains(a.tail)) ++c;
    return c;
}

int out_degree(const Digraph& d, const VertexSet& side) {
    int c = 0;
    for (const Arc& a : d.arcs())
        if (side.contains(a.tail) && !side.contains(a.head)) ++c;
    return c;
}

Cut make_cut(const Digraph& d, VertexSet side) {
    Cut c{std::move(side), 0, 0};
    c.in_degree = in_degree(d, c.side);
    c.out_degree = out_degree(d, c.side);
    return c;
}

namespace {

// Dinic on unit-capacity arcs. Each arc of the multigraph becomes its own
// forward edge plus a zero-capacity companion.
class FlowNetwork {
public:
    explicit FlowNetwork(const Digraph& d) : n_(d.vertex_count()), adj_(n_), level_(n_), iter_(n_) {
        edges_.reserve(2 * d.arc_count());
        for (const Arc& a : d.arcs()) {
            adj_[a.tail].push_back(static_cast<int>(edges_.size()));
            edges_.push_back(Edge{a.head, 1});
            adj_[a.head].push_back(static_cast<int>(edges_.size()));
            edges_.push_back(Edge{a.tail, 0});
        }
    }

    // Runs until no augmenting path remains or the flow reaches cap.
    int run(int s, int t, int cap) {
        int flow = 0;
        while (flow < cap && bfs(s, t)) {
            std::fill(iter_.begin(), iter_.end(), 0);
            while (flow < cap && dfs(s, t)) ++flow;
        }
        return flow;
    }

    // Vertices that reach t through residual arcs. Only meaningful after an
    // uncapped (fully augmented) run.
    VertexSet residual_reach_to(int t) const {
        VertexSet seen(n_);
        seen.insert(t);
        std::queue<int> q;
        q.push(t);
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int ei : adj_[x]) {
                // companion of (x -> y) is the edge (y -> x); its capacity is
                // the residual of that direction
                int y = edges_[ei].to;
                if (!seen.contains(y) && edges_[ei ^ 1].cap > 0) {
                    seen.insert(y);
                    q.push(y);
                }
            }
        }
        return seen;
    }

private:
    struct Edge {
        int to;
        int cap;
    };

    bool bfs(int s, int t) {
        std::fill(level_.begin(), level_.end(), -1);
        level_[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int ei : adj_[x]) {
                const Edge& e = edges_[ei];
                if (e.cap > 0 && level_[e.to] < 0) {
                    level_[e.to] = level_[x] + 1;
                    q.push(e.to);
                }
            }
        }
        return level_[t] >= 0;
    }

    // One unit along a level-respecting path.
    bool dfs(int x, int t) {
        if (x == t) return true;
        for (int& i = iter_[x]; i < static_cast<int>(adj_[x].size()); ++i) {
            int ei = adj_[x][i];
            Edge& e = edges_[ei];
            if (e.cap > 0 && level_[e.to] == level_[x] + 1 && dfs(e.to, t)) {
                e.cap -= 1;
                edges_[ei ^ 1].cap += 1;
                return true;
            }
        }
        return false;
    }

    int n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> level_;
    std::vector<int> iter_;
};

void check_flow_endpoints(const Digraph& d, int s, int t) {
    if (s == t) throw std::invalid_argument("max_flow requires s != t");
    if (s < 0 || s >= d.vertex_count() || t < 0 || t >= d.vertex_count())
        throw std::out_of_range("flow endpoint out of range");
}

}  // namespace

MaxFlowResult max_flow(const Digraph& d, int s, int t) {
    check_flow_endpoints(d, s, t);
    FlowNetwork net(d);
    int value = net.run(s, t, std::numeric_limits<int>::max());
    return MaxFlowResult{value, net.residual_reach_to(t)};
}

int max_flow_capped(const Digraph& d, int s, int t, int cap) {
    check_flow_endpoints(d, s, t);
    if (cap <= 0) return 0;
    FlowNetwork net(d);
    return net.run(s, t, cap);
}

Lambda arc_connectivity(const Digraph& d) {
    const int n = d.vertex_count();
    if (n < 2) throw std::invalid_argument("arc-connectivity is undefined for a single vertex");

    const int s = 0;
    int best = std::numeric_limits<int>::max();
    VertexSet best_side;
    for (int v = 1; v < n; ++v) {
        for (int dir = 0; dir < 2; ++dir) {
            int from = dir == 0 ? s : v;
            int to = dir == 0 ? v : s;
            FlowNetwork net(d);
            // capping at the incumbent keeps ties with the earliest witness
            int flow = net.run(from, to, best);
            if (flow < best) {
                best = flow;
                best_side = net.residual_reach_to(to);
            }
            if (best == 0) return Lambda{0, make_cut(d, best_side)};
        }
    }
    return Lambda{best, make_cut(d, best_side)};
}

bool is_k_arc_connected(const Digraph& d, int k) {
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    if (k == 0) return true;
    const int n = d.vertex_count();
    if (n < 2) throw std::invalid_argument("arc-connectivity is undefined for a single vertex");
    for (int v = 1; v < n; ++v) {
        if (max_flow_capped(d, 0, v, k) < k) return false;
        if (max_flow_capped(d, v, 0, k) < k) return false;
    }
    return true;
}

std::optional<VertexSet> min_in_tight_set_entered_by(const Digraph& d, const Arc& a, int lambda) {
    check_flow_endpoints(d, a.tail, a.head);
    FlowNetwork net(d);
    int flow = net.run(a.tail, a.head, lambda + 1);
    if (flow > lambda) return std::nullopt;
    if (flow < lambda)
        throw std::invalid_argument("max_flow(tail, head) below the stated lambda; lambda != lambda(D)?");
    return net.residual_reach_to(a.head);
}

}  // namespace revarc
