#include "ergolab/network_simplex.hpp"
#include "ergolab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>

namespace ergolab {

namespace {

// Spanning-tree basis over nodes 0..m-1 (sources) and m..m+n-1 (sinks).
// Each non-root node stores the basic arc to its parent; arcs are always
// directed source -> sink, so the arc between v and parent(v) is
// (v, parent) when v is a source and (parent, v) when v is a sink.
struct Basis {
    int m = 0, n = 0;
    std::vector<int> parent, depth;
    std::vector<double> flow; // on the arc to parent
    std::vector<double> pi;   // node potentials, rc = c - pi[src] + pi[snk]
    std::vector<std::vector<int>> kids;

    int src_of(int v, int p) const { return v < m ? v : p; }
    int snk_of(int v, int p) const { return v < m ? p : v; }
};

} // namespace

TransportSolution solve_transport(const std::vector<double>& cost,
                                  const std::vector<double>& supply,
                                  const std::vector<double>& demand) {
    const int m = static_cast<int>(supply.size());
    const int n = static_cast<int>(demand.size());
    if (m == 0 || n == 0) throw input_error("transport needs nonempty marginals");
    if (cost.size() != static_cast<std::size_t>(m) * n)
        throw input_error("cost matrix dimensions do not match marginals");
    for (double s : supply)
        if (!(s > 0.0)) throw input_error("supplies must be positive");
    for (double d : demand)
        if (!(d > 0.0)) throw input_error("demands must be positive");

    // Rebalance the rounding residual into the largest demand.
    std::vector<double> dem = demand;
    double total_s = 0.0, total_d = 0.0;
    for (double s : supply) total_s += s;
    for (double d : dem) total_d += d;
    if (std::fabs(total_s - total_d) > 1e-9)
        throw input_error("marginals must have equal total mass");
    dem[std::max_element(dem.begin(), dem.end()) - dem.begin()] += total_s - total_d;

    const int V = m + n;
    Basis T;
    T.m = m;
    T.n = n;
    T.parent.assign(V, -1);
    T.depth.assign(V, 0);
    T.flow.assign(V, 0.0);
    T.pi.assign(V, 0.0);
    T.kids.assign(V, {});

    // Northwest-corner initial basis: m+n-1 cells forming a staircase tree.
    {
        std::vector<std::tuple<int, int, double>> cells;
        cells.reserve(V - 1);
        double ra = supply[0], rb = dem[0];
        int i = 0, j = 0;
        while (true) {
            double x = std::min(ra, rb);
            cells.emplace_back(i, j, x);
            if (i == m - 1 && j == n - 1) break;
            bool advance_i = (ra <= rb && i < m - 1) || j == n - 1;
            if (advance_i) {
                rb -= x;
                ++i;
                ra = supply[i];
            } else {
                ra -= x;
                ++j;
                rb = dem[j];
            }
        }
        // Hang the staircase as a tree rooted at node 0 by scanning cells in
        // order; each cell introduces exactly one new node.
        std::vector<bool> seen(V, false);
        seen[0] = true;
        for (auto& [ci, cj, cx] : cells) {
            int s = ci, t = m + cj;
            int child = !seen[s] ? s : t; // each cell introduces one new node
            int par = child == s ? t : s;
            seen[child] = true;
            T.parent[child] = par;
            T.flow[child] = cx;
            T.kids[par].push_back(child);
        }
    }

    // Depths and potentials by BFS from the root.
    {
        std::vector<int> stack{0};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int c : T.kids[v]) {
                T.depth[c] = T.depth[v] + 1;
                int s = T.src_of(c, v), k = T.snk_of(c, v);
                double cc = cost[static_cast<std::size_t>(s) * n + (k - m)];
                // rc = 0 on basic arcs
                T.pi[c] = (c < m) ? cc + T.pi[v] : T.pi[v] - cc;
                stack.push_back(c);
            }
        }
    }

    double cost_scale = 1.0;
    for (double c : cost) cost_scale = std::max(cost_scale, std::fabs(c));
    const double opt_eps = 1e-12 * cost_scale;

    const std::int64_t num_arcs = static_cast<std::int64_t>(m) * n;
    const std::int64_t block =
        std::max<std::int64_t>(64, static_cast<std::int64_t>(std::sqrt(static_cast<double>(num_arcs))));
    std::int64_t next_arc = 0;

    const std::int64_t max_pivots = 2000 + 64LL * (m + n) + 4LL * num_arcs;
    std::int64_t pivots = 0;

    while (true) {
        // Entering arc: most negative reduced cost within a scanning block.
        int best_i = -1, best_j = -1;
        double best_rc = -opt_eps;
        std::int64_t scanned = 0;
        while (scanned < num_arcs) {
            std::int64_t stop = std::min(scanned + block, num_arcs);
            for (; scanned < stop; ++scanned) {
                std::int64_t a = next_arc + scanned;
                if (a >= num_arcs) a -= num_arcs;
                int i = static_cast<int>(a / n), j = static_cast<int>(a % n);
                double rc = cost[a] - T.pi[i] + T.pi[m + j];
                if (rc < best_rc) {
                    best_rc = rc;
                    best_i = i;
                    best_j = j;
                }
            }
            if (best_i >= 0) break;
        }
        if (best_i < 0) break; // optimal
        next_arc = (static_cast<std::int64_t>(best_i) * n + best_j + 1) % num_arcs;

        if (++pivots > max_pivots)
            throw internal_error("network simplex exceeded pivot cap");

        const int u = best_i, w = m + best_j;

        // Cycle = entering arc + tree path between u and w. Collect the two
        // legs up to the lowest common ancestor.
        int x = u, y = w;
        std::vector<int> leg_u, leg_w; // child nodes of traversed tree arcs
        while (x != y) {
            if (T.depth[x] >= T.depth[y]) {
                leg_u.push_back(x);
                x = T.parent[x];
            } else {
                leg_w.push_back(y);
                y = T.parent[y];
            }
        }

        // Flow change direction per arc. Traversing child->parent on the w-leg
        // or parent->child on the u-leg alternates with/against arcs; a tree
        // arc is stored at its child node, and its direction is known from
        // whether the child is a source or a sink.
        auto against_on_w_leg = [&](int child) { return child >= m; };
        auto against_on_u_leg = [&](int child) { return child < m; };

        double delta = std::numeric_limits<double>::infinity();
        int leave = -1; // child node identifying the leaving arc
        // Cycle order: entering, then w-leg upward, then u-leg downward.
        for (int c : leg_w)
            if (against_on_w_leg(c) && T.flow[c] <= delta) {
                delta = T.flow[c];
                leave = c;
            }
        for (auto it = leg_u.rbegin(); it != leg_u.rend(); ++it)
            if (against_on_u_leg(*it) && T.flow[*it] <= delta) {
                delta = T.flow[*it];
                leave = *it;
            }
        if (leave < 0) throw internal_error("transport cycle without a blocking arc");

        for (int c : leg_w) T.flow[c] += against_on_w_leg(c) ? -delta : delta;
        for (int c : leg_u) T.flow[c] += against_on_u_leg(c) ? -delta : delta;

        // Re-hang the subtree cut off by the leaving arc: reverse the parent
        // chain from the entering endpoint inside it, then attach via the
        // entering arc.
        int sub_end = -1; // endpoint of entering arc inside the cut subtree
        {
            // The cut subtree is the one below `leave`. Walk from u and w
            // upward: whichever passes through `leave` before the root is
            // inside it.
            auto in_subtree = [&](int v) {
                for (int t = v; t != -1; t = T.parent[t])
                    if (t == leave) return true;
                return false;
            };
            sub_end = in_subtree(u) ? u : w;
        }

        // Detach leaving arc.
        auto& pk = T.kids[T.parent[leave]];
        pk.erase(std::find(pk.begin(), pk.end(), leave));
        T.parent[leave] = -1;

        // Reverse chain sub_end -> ... -> leave.
        {
            std::vector<int> chain;
            for (int t = sub_end; t != -1; t = T.parent[t]) chain.push_back(t);
            for (std::size_t k = chain.size(); k-- > 1;) {
                int par = chain[k], child = chain[k - 1];
                // arc between child and par currently stored at child
                auto& ck = T.kids[par];
                // reparent: par becomes child of child
                T.parent[par] = child;
                T.flow[par] = T.flow[child];
                T.kids[child].push_back(par);
                ck.erase(std::find(ck.begin(), ck.end(), child));
            }
            int other = (sub_end == u) ? w : u;
            T.parent[sub_end] = other;
            T.flow[sub_end] = delta;
            T.kids[other].push_back(sub_end);
        }

        // Potentials and depths in the re-hung subtree shift by a constant.
        double shift = (sub_end == w) ? -best_rc : best_rc;
        {
            std::vector<int> stack{sub_end};
            T.depth[sub_end] = T.depth[T.parent[sub_end]] + 1;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                T.pi[v] += shift;
                for (int c : T.kids[v]) {
                    T.depth[c] = T.depth[v] + 1;
                    stack.push_back(c);
                }
            }
        }
    }

    TransportSolution sol;
    for (int v = 0; v < V; ++v) {
        if (T.parent[v] < 0) continue;
        int s = T.src_of(v, T.parent[v]), k = T.snk_of(v, T.parent[v]);
        if (T.flow[v] > 0.0) {
            sol.entries.emplace_back(s, k - m, T.flow[v]);
            sol.value += T.flow[v] * cost[static_cast<std::size_t>(s) * n + (k - m)];
        }
    }
    return sol;
}

} // namespace ergolab
