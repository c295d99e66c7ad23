#pragma once
// Repairable secret sharing on graphs: certified exhaustive bounds
// (independent / induced-acyclic sets), maximum matching, directed cycle
// packing (integral and exact-rational fractional), and the two scheme
// constructions that store Vandermonde-precoded symbols on vertices.

#include <unordered_map>

#include "lrss/secret.hpp"
#include "lrss/subsets.hpp"

namespace lrss::graphs {

namespace detail {

inline void check_size(const Graph& g, int limit) {
    if (g.n > limit) throw std::length_error("graph too large for exhaustive search");
}

inline bool induced_acyclic(const Graph& g, std::uint32_t mask) {
    // Kahn peeling on the induced subgraph
    std::vector<int> outdeg(g.n, 0);
    for (auto [u, v] : g.edges)
        if ((mask >> u & 1) && (mask >> v & 1)) ++outdeg[u];
    std::uint32_t alive = mask;
    bool progress = true;
    while (alive && progress) {
        progress = false;
        for (int i = 0; i < g.n; ++i)
            if ((alive >> i & 1) && outdeg[i] == 0) {
                alive &= ~(std::uint32_t(1) << i);
                for (auto [u, v] : g.edges)
                    if (v == i && (alive >> u & 1)) --outdeg[u];
                progress = true;
            }
    }
    return alive == 0;
}

inline bool independent(const Graph& g, std::uint32_t mask) {
    for (auto [u, v] : g.edges)
        if ((mask >> u & 1) && (mask >> v & 1)) return false;
    return true;
}

inline bool nonrevealing(const Graph& g, std::uint32_t mask) {
    return g.directed ? induced_acyclic(g, mask) : independent(g, mask);
}

// lexicographically smallest among maximum-size qualifying sets, optionally
// with a cap on the boundary size
template <typename Pred>
inline std::vector<int> best_set(const Graph& g, Pred&& pred) {
    std::vector<int> best;
    bool have = false;
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << g.n); ++mask) {
        if (!pred(mask)) continue;
        std::vector<int> s = mask_to_set(mask, g.n);
        if (!have || s.size() > best.size() || (s.size() == best.size() && s < best)) {
            best = std::move(s);
            have = true;
        }
    }
    return best;
}

}  // namespace detail

inline std::vector<int> max_independent_set(const Graph& g) {
    if (g.directed) throw std::invalid_argument("independent sets are an undirected notion here");
    detail::check_size(g, 20);
    return detail::best_set(g, [&](std::uint32_t m) { return detail::independent(g, m); });
}

inline std::vector<int> max_induced_acyclic(const Graph& g) {
    if (!g.directed) throw std::invalid_argument("induced acyclic sets are a directed notion here");
    detail::check_size(g, 20);
    return detail::best_set(g, [&](std::uint32_t m) { return detail::induced_acyclic(g, m); });
}

/// m >= k + l + max{|U| : U non-revealing, |N(U)| <= l + k - 1}
inline long long graph_lower_bound_m(const Graph& g, int k, int ell) {
    detail::check_size(g, 20);
    long long best = 0;
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << g.n); ++mask) {
        if (!detail::nonrevealing(g, mask)) continue;
        if (int(g.boundary(mask_to_set(mask, g.n)).size()) > ell + k - 1) continue;
        best = std::max(best, (long long)__builtin_popcount(mask));
    }
    return k + ell + best;
}

/// k <= n - |U| - l with U the largest non-revealing set
inline long long graph_secrecy_bound(const Graph& g, int ell) {
    detail::check_size(g, 20);
    std::vector<int> u = detail::best_set(g, [&](std::uint32_t m) { return detail::nonrevealing(g, m); });
    return g.n - long long(u.size()) - ell;
}

/// Maximum matching by subset DP, reconstructed so the edge list is
/// lexicographically smallest among maximum matchings.
inline std::vector<std::pair<int, int>> max_matching(const Graph& g) {
    if (g.directed) throw std::invalid_argument("matchings are an undirected notion here");
    detail::check_size(g, 20);
    std::vector<std::uint32_t> adj(g.n, 0);
    for (auto [u, v] : g.edges) {
        adj[u] |= std::uint32_t(1) << v;
        adj[v] |= std::uint32_t(1) << u;
    }
    std::vector<int> memo(std::size_t(1) << g.n, -1);
    std::function<int(std::uint32_t)> best = [&](std::uint32_t mask) -> int {
        if (!mask) return 0;
        int& m = memo[mask];
        if (m >= 0) return m;
        int v = std::countr_zero(mask);
        std::uint32_t rest = mask & ~(std::uint32_t(1) << v);
        m = best(rest);  // leave v unmatched
        std::uint32_t nbrs = adj[v] & rest;
        while (nbrs) {
            int u = std::countr_zero(nbrs);
            nbrs &= nbrs - 1;
            m = std::max(m, 1 + best(rest & ~(std::uint32_t(1) << u)));
        }
        return m;
    };
    std::vector<std::pair<int, int>> out;
    std::uint32_t mask = (std::uint32_t(1) << g.n) - 1;
    while (mask) {
        int v = std::countr_zero(mask);
        std::uint32_t rest = mask & ~(std::uint32_t(1) << v);
        int target = best(mask);
        // matching v with its smallest workable partner keeps the list smallest
        bool matched = false;
        std::uint32_t nbrs = adj[v] & rest;
        while (nbrs) {
            int u = std::countr_zero(nbrs);
            nbrs &= nbrs - 1;
            if (1 + best(rest & ~(std::uint32_t(1) << u)) == target) {
                out.emplace_back(v, u);
                mask = rest & ~(std::uint32_t(1) << u);
                matched = true;
                break;
            }
        }
        if (!matched) mask = rest;
    }
    return out;
}

/// All simple directed cycles, each reported once, rooted at its smallest
/// vertex; ordered by root then depth-first discovery over sorted neighbors.
inline std::vector<std::vector<int>> enumerate_cycles(const Graph& g) {
    if (!g.directed) throw std::invalid_argument("cycle packing is a directed notion here");
    detail::check_size(g, 14);
    std::vector<std::vector<int>> cycles;
    std::vector<int> path;
    std::vector<char> on_path(g.n, 0);
    std::function<void(int, int)> dfs = [&](int root, int v) {
        for (int w : g.neighbors(v)) {
            if (w == root && path.size() >= 2) cycles.push_back(path);
            if (w <= root || on_path[w]) continue;
            path.push_back(w);
            on_path[w] = 1;
            dfs(root, w);
            on_path[w] = 0;
            path.pop_back();
        }
    };
    for (int root = 0; root < g.n; ++root) {
        path = {root};
        on_path.assign(g.n, 0);
        on_path[root] = 1;
        dfs(root, root);
    }
    return cycles;
}

/// Largest vertex-disjoint cycle family (exhaustive with memoization).
inline std::vector<std::vector<int>> max_disjoint_cycles(const Graph& g) {
    auto cycles = enumerate_cycles(g);
    std::vector<std::uint32_t> masks;
    for (const auto& c : cycles) masks.push_back(set_to_mask(c));
    std::unordered_map<std::uint32_t, int> memo;
    std::function<int(std::uint32_t)> best = [&](std::uint32_t avail) -> int {
        auto it = memo.find(avail);
        if (it != memo.end()) return it->second;
        int b = 0;
        for (auto m : masks)
            if ((m & avail) == m) b = std::max(b, 1 + best(avail & ~m));
        memo[avail] = b;
        return b;
    };
    std::uint32_t avail = (std::uint32_t(1) << g.n) - 1;
    std::vector<std::vector<int>> out;
    int target = best(avail);
    for (std::size_t c = 0; c < cycles.size() && int(out.size()) < target; ++c)
        if ((masks[c] & avail) == masks[c] && 1 + best(avail & ~masks[c]) == best(avail)) {
            out.push_back(cycles[c]);
            avail &= ~masks[c];
        }
    return out;
}

namespace detail {

// max sum(x) subject to per-vertex loads <= 1, x >= 0; exact simplex with
// Bland's rule, returning the optimal x
inline std::vector<Rat> pack_lp(const Graph& g, const std::vector<std::vector<int>>& cycles) {
    const int nvar = int(cycles.size());
    const int ncon = g.n;
    // tableau rows: constraints then objective; columns: vars, slacks, rhs
    std::vector<std::vector<Rat>> t(ncon + 1, std::vector<Rat>(nvar + ncon + 1, 0));
    for (int c = 0; c < nvar; ++c)
        for (int v : cycles[c]) t[v][c] += 1;
    for (int i = 0; i < ncon; ++i) {
        t[i][nvar + i] = 1;
        t[i][nvar + ncon] = 1;
    }
    for (int c = 0; c < nvar; ++c) t[ncon][c] = -1;  // maximize sum
    std::vector<int> basis(ncon);
    for (int i = 0; i < ncon; ++i) basis[i] = nvar + i;

    for (;;) {
        int enter = -1;
        for (int j = 0; j < nvar + ncon; ++j)
            if (t[ncon][j] < 0) {
                enter = j;
                break;
            }
        if (enter < 0) break;
        int leave = -1;
        Rat best_ratio = 0;
        for (int i = 0; i < ncon; ++i) {
            if (t[i][enter] <= 0) continue;
            Rat ratio = t[i][nvar + ncon] / t[i][enter];
            if (leave < 0 || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave < 0) throw std::logic_error("unbounded packing program");
        Rat piv = t[leave][enter];
        for (auto& x : t[leave]) x /= piv;
        for (int i = 0; i <= ncon; ++i) {
            if (i == leave) continue;
            Rat f = t[i][enter];
            if (f == 0) continue;
            for (int j = 0; j <= nvar + ncon; ++j) t[i][j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }
    std::vector<Rat> x(nvar, 0);
    for (int i = 0; i < ncon; ++i)
        if (basis[i] < nvar) x[basis[i]] = t[i][nvar + ncon];
    return x;
}

}  // namespace detail

/// Exact-rational optimum of the fractional cycle-packing program.
inline CyclePacking fractional_cycle_packing(const Graph& g) {
    auto cycles = enumerate_cycles(g);
    CyclePacking pk;
    pk.cycles = cycles;
    pk.weights.assign(cycles.size(), 0);
    if (!cycles.empty()) pk.weights = detail::pack_lp(g, cycles);
    Int lcm = 1;
    for (const auto& w : pk.weights) lcm = boost::multiprecision::lcm(lcm, denominator(w));
    pk.p = lcm;
    pk.total = 0;
    for (const auto& w : pk.weights) {
        pk.numerators.push_back(numerator(w) * (lcm / denominator(w)));
        pk.total += w;
    }
    pk.validate(g);
    return pk;
}

/// Integral packing wrapped in the same structure (p = 1, unit weights).
inline CyclePacking integral_cycle_packing(const Graph& g) {
    auto family = max_disjoint_cycles(g);
    CyclePacking pk;
    pk.cycles = family;
    pk.weights.assign(family.size(), 1);
    pk.numerators.assign(family.size(), 1);
    pk.p = 1;
    pk.total = int(family.size());
    pk.validate(g);
    return pk;
}

/// Matching scheme: x = V (randomness || secret) with one coordinate stored on
/// both ends of every matching edge; unmatched vertices hold a public zero.
inline Scheme build_matching_scheme(const Graph& g, int ell, const Field& f) {
    if (g.directed) throw std::invalid_argument("matching scheme needs an undirected graph");
    g.validate();
    auto matching = max_matching(g);
    const int cap = int(matching.size());
    if (cap == 0) throw std::invalid_argument("graph has no matching capacity");
    if (ell >= cap) throw std::invalid_argument("eavesdropper strength exhausts the matching capacity");
    if (std::uint64_t(cap) > f.order()) throw std::invalid_argument("field too small for distinct points");
    std::vector<Fe> alphas(cap);
    for (int i = 0; i < cap; ++i) alphas[i] = Fe(i);
    Scheme s;
    s.tag = SchemeTag::graph_matching;
    s.share_field = f;
    s.params = SchemeParams{g.n, cap - ell, ell, g.n, 1};
    s.params.validate();
    s.payload = MatchingPayload{g, std::move(matching), vandermonde(f, alphas, cap)};
    return s;
}

/// Cycle scheme on a packing: pK coordinates of x spread along cycles, p slots
/// per vertex, repair by copying from successors along each incident cycle.
inline Scheme build_cycle_scheme(const Graph& g, const CyclePacking& pk, int ell, const Field& f) {
    if (!g.directed) throw std::invalid_argument("cycle scheme needs a directed graph");
    g.validate();
    pk.validate(g);
    const long long p = pk.p.convert_to<long long>();
    long long pk_total = 0;
    for (const auto& nc : pk.numerators) pk_total += nc.convert_to<long long>();
    const long long pl = p * ell;
    if (pk_total <= pl) throw std::invalid_argument("packing capacity does not exceed the eavesdropper budget");
    if (std::uint64_t(pk_total) > f.order()) throw std::invalid_argument("field too small for distinct points");
    // slot fit: each vertex's owned coordinates must fit its p slots
    for (int v = 0; v < g.n; ++v) {
        long long used = 0;
        for (std::size_t c = 0; c < pk.cycles.size(); ++c)
            if (std::find(pk.cycles[c].begin(), pk.cycles[c].end(), v) != pk.cycles[c].end())
                used += pk.numerators[c].convert_to<long long>();
        if (used > p) throw std::invalid_argument("slot overflow: packing violates per-vertex load");
    }
    std::vector<Fe> alphas(pk_total);
    for (long long i = 0; i < pk_total; ++i) alphas[i] = Fe(i);
    Scheme s;
    s.tag = SchemeTag::graph_cycle;
    s.share_field = f;
    int r = 1;
    for (int v = 0; v < g.n; ++v) {
        int succ = 0;
        std::vector<int> seen;
        for (std::size_t c = 0; c < pk.cycles.size(); ++c) {
            if (pk.numerators[c] == 0) continue;
            const auto& cyc = pk.cycles[c];
            for (std::size_t t = 0; t < cyc.size(); ++t)
                if (cyc[t] == v) seen.push_back(cyc[(t + 1) % cyc.size()]);
        }
        std::sort(seen.begin(), seen.end());
        seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
        succ = int(seen.size());
        r = std::max(r, succ);
    }
    s.params = SchemeParams{g.n, int(pk_total - pl), ell, g.n, r};
    s.params.validate();
    s.payload = CyclePayload{g, pk, vandermonde(f, alphas, int(pk_total))};
    return s;
}

}  // namespace lrss::graphs
