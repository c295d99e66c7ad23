#pragma once
// Storage-graph domain types: a node can be repaired only from its
// (out-)neighbors.  Algorithms live in graphscheme.hpp; these types are also
// embedded in scheme payloads.

#include <utility>
#include <vector>

#include "lrss/rat.hpp"

namespace lrss {

struct Graph {
    int n = 0;
    bool directed = false;
    std::vector<std::pair<int, int>> edges;

    void validate() const {
        for (auto [u, v] : edges) {
            if (u < 0 || u >= n || v < 0 || v >= n) throw std::invalid_argument("edge endpoint out of range");
            if (u == v) throw std::invalid_argument("self-loops not allowed");
        }
    }

    bool has_edge(int u, int v) const {
        for (auto [a, b] : edges) {
            if (a == u && b == v) return true;
            if (!directed && a == v && b == u) return true;
        }
        return false;
    }

    /// out-neighbors for directed graphs, adjacency otherwise
    std::vector<int> neighbors(int i) const {
        std::vector<int> r;
        for (auto [a, b] : edges) {
            if (a == i) r.push_back(b);
            if (!directed && b == i) r.push_back(a);
        }
        std::sort(r.begin(), r.end());
        r.erase(std::unique(r.begin(), r.end()), r.end());
        return r;
    }

    /// N(U) = union of neighbors of U, minus U itself
    std::vector<int> boundary(const std::vector<int>& u) const {
        std::vector<char> in(n, 0), out(n, 0);
        for (int i : u) in[i] = 1;
        for (int i : u)
            for (int j : neighbors(i))
                if (!in[j]) out[j] = 1;
        std::vector<int> r;
        for (int i = 0; i < n; ++i)
            if (out[i]) r.push_back(i);
        return r;
    }
};

/// Weighted family of directed cycles with sum of weights K; every weight is
/// numerators[c] / p and the per-vertex load never exceeds 1.
struct CyclePacking {
    std::vector<std::vector<int>> cycles;  // vertex sequences, consecutive = edge
    std::vector<Rat> weights;
    Int p = 1;                   // common denominator
    std::vector<Int> numerators; // n(C) = weights[c] * p
    Rat total = 0;               // K

    void validate(const Graph& g) const {
        if (cycles.size() != weights.size() || cycles.size() != numerators.size())
            throw std::invalid_argument("packing arrays disagree");
        std::vector<Rat> load(g.n, 0);
        Rat sum = 0;
        for (std::size_t c = 0; c < cycles.size(); ++c) {
            const auto& cyc = cycles[c];
            if (cyc.size() < 2) throw std::invalid_argument("cycle too short");
            for (std::size_t i = 0; i < cyc.size(); ++i) {
                int u = cyc[i], v = cyc[(i + 1) % cyc.size()];
                if (!g.has_edge(u, v)) throw std::invalid_argument("cycle edge missing from graph");
                load[u] += weights[c];
            }
            if (weights[c] * Rat(p) != Rat(numerators[c])) throw std::invalid_argument("numerator mismatch");
            sum += weights[c];
        }
        for (int i = 0; i < g.n; ++i)
            if (load[i] > 1) throw std::invalid_argument("per-vertex packing load exceeds 1");
        if (sum != total) throw std::invalid_argument("total weight mismatch");
    }
};

}  // namespace lrss
