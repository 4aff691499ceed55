#include "polycut/cuts.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>
#include <string>

namespace polycut {

namespace {

void require_connected(const Graph& g, const char* who)
{
    if (!is_connected(g)) {
        throw std::invalid_argument(std::string(who) + ": graph is disconnected");
    }
}

std::vector<std::uint32_t> adjacency_masks(const Graph& g)
{
    std::vector<std::uint32_t> masks(g.num_vertices(), 0);
    for (VertexId u = 0; u < g.num_vertices(); ++u) {
        for (VertexId v : g.neighbors(u)) {
            masks[u] |= 1u << v;
        }
    }
    return masks;
}

void require_brute_force_size(const Graph& g)
{
    if (g.num_vertices() > kBruteForceMaxVertices) {
        throw std::invalid_argument("brute force cuts: n = " + std::to_string(g.num_vertices()) +
                                    " exceeds " + std::to_string(kBruteForceMaxVertices));
    }
}

/**
 * Unit-capacity flow on an undirected graph. Edge i is the arc pair
 * (2i: u->v, 2i+1: v->u) with antisymmetric flow in {-1, 0, 1}, so each
 * direction has residual capacity 1 - flow.
 */
class UnitFlow
{
public:
    explicit UnitFlow(const Graph& g) : n_(g.num_vertices()), out_(g.num_vertices())
    {
        for (const Edge& e : g.edges()) {
            const int arc = static_cast<int>(head_.size());
            head_.push_back(e.v);
            head_.push_back(e.u);
            out_[e.u].push_back(arc);
            out_[e.v].push_back(arc + 1);
        }
        flow_.assign(head_.size(), 0);
        parent_arc_.assign(n_, -1);
        seen_.assign(n_, 0);
        queue_.reserve(n_);
        is_source_.assign(n_, 0);
        is_sink_.assign(n_, 0);
    }

    void reset() { std::fill(flow_.begin(), flow_.end(), 0); }

    void set_source(VertexId v, bool on) { is_source_[v] = on; }
    void set_sink(VertexId v, bool on) { is_sink_[v] = on; }

    std::vector<signed char> snapshot() const { return flow_; }
    void restore(const std::vector<signed char>& saved) { flow_ = saved; }

    /// Pushes augmenting paths until none remains or `limit` more units were sent.
    /// Returns the number of units pushed. After a call that returns < limit, seen() marks
    /// the residual-reachable set of the sources.
    int augment(int limit)
    {
        int pushed = 0;
        while (pushed < limit) {
            const VertexId sink = search();
            if (sink < 0) {
                break;
            }
            for (VertexId v = sink; !is_source_[v];) {
                const int arc = parent_arc_[v];
                ++flow_[arc];
                --flow_[arc ^ 1];
                v = head_[arc ^ 1];
            }
            ++pushed;
        }
        return pushed;
    }

    std::vector<VertexId> reachable() const
    {
        std::vector<VertexId> out;
        for (VertexId v = 0; v < n_; ++v) {
            if (seen_[v]) {
                out.push_back(v);
            }
        }
        return out;
    }

private:
    // BFS over residual arcs from all sources; returns the sink reached, or -1.
    VertexId search()
    {
        std::fill(seen_.begin(), seen_.end(), 0);
        queue_.clear();
        for (VertexId v = 0; v < n_; ++v) {
            if (is_source_[v]) {
                seen_[v] = 1;
                queue_.push_back(v);
            }
        }
        for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
            const VertexId u = queue_[qi];
            for (int arc : out_[u]) {
                const VertexId w = head_[arc];
                if (seen_[w] || flow_[arc] >= 1) {
                    continue;
                }
                seen_[w] = 1;
                parent_arc_[w] = arc;
                if (is_sink_[w]) {
                    return w;
                }
                queue_.push_back(w);
            }
        }
        return -1;
    }

    int n_;
    std::vector<std::vector<int>> out_;
    std::vector<VertexId> head_;
    std::vector<signed char> flow_;
    std::vector<int> parent_arc_;
    std::vector<char> seen_;
    std::vector<VertexId> queue_;
    std::vector<char> is_source_;
    std::vector<char> is_sink_;
};

} // namespace

int min_degree(const Graph& g)
{
    if (g.num_vertices() < 1) {
        throw std::invalid_argument("min_degree: empty graph");
    }
    int best = std::numeric_limits<int>::max();
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        best = std::min(best, g.degree(v));
    }
    return best;
}

std::vector<VertexId> mask_to_vertices(std::uint32_t mask, int n)
{
    std::vector<VertexId> out;
    for (VertexId v = 0; v < n; ++v) {
        if (mask >> v & 1u) {
            out.push_back(v);
        }
    }
    return out;
}

Cut crossing_edges(const Graph& g, std::span<const VertexId> side)
{
    const int n = g.num_vertices();
    std::vector<char> in(n, 0);
    int count = 0;
    for (VertexId v : side) {
        if (v < 0 || v >= n) {
            throw std::invalid_argument("crossing_edges: vertex " + std::to_string(v) +
                                        " out of range");
        }
        if (!in[v]) {
            in[v] = 1;
            ++count;
        }
    }
    if (count == 0 || count == n) {
        throw std::invalid_argument("crossing_edges: side must be nonempty and proper");
    }
    // Canonical side: the smaller part, ties go to the part holding vertex 0.
    const bool flip = count * 2 > n || (count * 2 == n && !in[0]);
    Cut cut;
    for (VertexId v = 0; v < n; ++v) {
        if (static_cast<bool>(in[v]) != flip) {
            cut.side.push_back(v);
        }
    }
    for (const Edge& e : g.edges()) {
        if (in[e.u] != in[e.v]) {
            cut.crossing.push_back(e);
        }
    }
    cut.trivial = std::min(count, n - count) == 1;
    return cut;
}

Cut global_min_cut(const Graph& g)
{
    const int n = g.num_vertices();
    if (n < 2) {
        throw std::invalid_argument("global_min_cut: need at least 2 vertices");
    }
    require_connected(g, "global_min_cut");

    std::vector<std::vector<int>> w(n, std::vector<int>(n, 0));
    for (const Edge& e : g.edges()) {
        w[e.u][e.v] = w[e.v][e.u] = 1;
    }
    std::vector<std::vector<VertexId>> members(n);
    for (VertexId v = 0; v < n; ++v) {
        members[v] = {v};
    }
    std::vector<VertexId> active(n);
    for (VertexId v = 0; v < n; ++v) {
        active[v] = v;
    }

    int best = std::numeric_limits<int>::max();
    std::vector<VertexId> best_side;
    std::vector<int> key(n);
    std::vector<char> added(n);
    while (active.size() > 1) {
        // Maximum adjacency ordering from the smallest active vertex; ties pick the smaller index.
        for (VertexId v : active) {
            key[v] = 0;
            added[v] = 0;
        }
        VertexId prev = -1, last = active.front();
        for (std::size_t step = 0; step < active.size(); ++step) {
            VertexId pick = -1;
            for (VertexId v : active) {
                if (!added[v] && (pick < 0 || key[v] > key[pick])) {
                    pick = v;
                }
            }
            if (pick < 0) {
                break;
            }
            added[pick] = 1;
            prev = last;
            last = pick;
            for (VertexId v : active) {
                if (!added[v]) {
                    key[v] += w[pick][v];
                }
            }
        }
        if (key[last] < best) {
            best = key[last];
            best_side = members[last];
        }
        // Merge `last` into `prev`.
        for (VertexId v : active) {
            w[prev][v] += w[last][v];
            w[v][prev] = w[prev][v];
        }
        w[prev][prev] = 0;
        members[prev].insert(members[prev].end(), members[last].begin(), members[last].end());
        active.erase(std::find(active.begin(), active.end(), last));
    }
    return crossing_edges(g, best_side);
}

std::optional<Cut> min_nontrivial_cut(const Graph& g)
{
    const int n = g.num_vertices();
    require_connected(g, "min_nontrivial_cut");
    if (n < 4) {
        return std::nullopt;
    }
    const int floor = static_cast<int>(global_min_cut(g).size());

    // Seed with the cheapest {0, neighbor} cut; it is nontrivial because n >= 4.
    const VertexId root = 0;
    VertexId partner = g.neighbors(root).front();
    for (VertexId v : g.neighbors(root)) {
        if (g.degree(v) < g.degree(partner)) {
            partner = v;
        }
    }
    std::vector<VertexId> best_side{root, partner};
    int best = g.degree(root) + g.degree(partner) - 2;

    UnitFlow net(g);
    net.set_source(root, true);
    for (VertexId v = 1; v < n && best > floor; ++v) {
        net.set_source(v, true);
        for (VertexId x = 1; x < n && best > floor; ++x) {
            if (x == v) {
                continue;
            }
            net.reset();
            net.set_sink(x, true);
            const int base = net.augment(best);
            if (base < best) {
                const auto saved = net.snapshot();
                for (VertexId y = x + 1; y < n && best > floor; ++y) {
                    if (y == v) {
                        continue;
                    }
                    net.restore(saved);
                    net.set_sink(y, true);
                    const int value = base + net.augment(best - base);
                    if (value < best) {
                        best = value;
                        best_side = net.reachable();
                    }
                    net.set_sink(y, false);
                }
            }
            net.set_sink(x, false);
        }
        net.set_source(v, false);
    }
    return crossing_edges(g, best_side);
}

void for_each_bipartition(const Graph& g, const std::function<void(std::uint32_t, int)>& visit)
{
    require_brute_force_size(g);
    const int n = g.num_vertices();
    if (n < 2) {
        return;
    }
    const auto adj = adjacency_masks(g);
    const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    const std::uint32_t rest = 1u << (n - 1);
    for (std::uint32_t m = 0; m < rest; ++m) {
        const std::uint32_t side = 1u | (m << 1);
        if (side == full) {
            continue;
        }
        int crossing = 0;
        for (std::uint32_t bits = side; bits; bits &= bits - 1) {
            const int u = std::countr_zero(bits);
            crossing += std::popcount(adj[u] & ~side & full);
        }
        visit(side, crossing);
    }
}

BruteForceCuts brute_force_cuts(const Graph& g)
{
    const int n = g.num_vertices();
    if (n < 2) {
        throw std::invalid_argument("brute_force_cuts: need at least 2 vertices");
    }
    require_brute_force_size(g);
    int best = std::numeric_limits<int>::max();
    int best_nontrivial = std::numeric_limits<int>::max();
    std::uint32_t best_mask = 0, best_nontrivial_mask = 0;
    for_each_bipartition(g, [&](std::uint32_t side, int crossing) {
        if (crossing < best) {
            best = crossing;
            best_mask = side;
        }
        const int k = std::popcount(side);
        if (k >= 2 && n - k >= 2 && crossing < best_nontrivial) {
            best_nontrivial = crossing;
            best_nontrivial_mask = side;
        }
    });
    BruteForceCuts out{crossing_edges(g, mask_to_vertices(best_mask, n)), std::nullopt};
    if (best_nontrivial_mask != 0) {
        out.min_nontrivial = crossing_edges(g, mask_to_vertices(best_nontrivial_mask, n));
    }
    return out;
}

std::optional<Cut> brute_force_min_cut_with_sides(const Graph& g, int k)
{
    const int n = g.num_vertices();
    int best = std::numeric_limits<int>::max();
    std::uint32_t best_mask = 0;
    for_each_bipartition(g, [&](std::uint32_t side, int crossing) {
        const int s = std::popcount(side);
        if (s >= k && n - s >= k && crossing < best) {
            best = crossing;
            best_mask = side;
        }
    });
    if (best_mask == 0) {
        return std::nullopt;
    }
    return crossing_edges(g, mask_to_vertices(best_mask, n));
}

} // namespace polycut
