#pragma once
// Linear locally repairable codes: the partitioned constructor, exact
// distance/locality/maximal-recoverability audits, randomized MR search,
// erasure decoding and local repair relations.
//
// Convention: the generator is stored as an n x dim matrix whose row i is the
// encoding vector of coordinate i, so a codeword is G * message.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>

#include "lrss/matrix.hpp"
#include "lrss/rng.hpp"

namespace lrss {

/// Partition {Q_j} of [0,n) into n/(r+1) groups of size r+1; the recovery set
/// of coordinate i is its group minus i.
struct LocalityStructure {
    int n = 0;
    int r = 0;
    std::vector<std::vector<int>> groups;

    static LocalityStructure partition(int n, int r) {
        if (r < 1 || r > n - 1) throw std::invalid_argument("locality out of range");
        if (n % (r + 1) != 0) throw std::invalid_argument("group size r+1 must divide n");
        LocalityStructure s;
        s.n = n;
        s.r = r;
        for (int g = 0; g < n / (r + 1); ++g) {
            std::vector<int> q(r + 1);
            for (int j = 0; j <= r; ++j) q[j] = g * (r + 1) + j;
            s.groups.push_back(q);
        }
        return s;
    }

    void validate() const {
        std::vector<int> seen(n, 0);
        for (const auto& q : groups) {
            if (int(q.size()) != r + 1) throw std::invalid_argument("group size != r+1");
            for (int i : q) {
                if (i < 0 || i >= n || seen[i]++) throw std::invalid_argument("groups must partition [n]");
            }
        }
        for (int i = 0; i < n; ++i)
            if (!seen[i]) throw std::invalid_argument("groups must partition [n]");
    }

    int group_of(int i) const {
        for (std::size_t g = 0; g < groups.size(); ++g)
            for (int j : groups[g])
                if (j == i) return int(g);
        throw std::invalid_argument("coordinate not in any group");
    }

    std::vector<int> recovery_set(int i) const {
        std::vector<int> r_i;
        for (int j : groups[group_of(i)])
            if (j != i) r_i.push_back(j);
        return r_i;
    }
};

struct LinearCode {
    Field field;
    int n = 0;
    int dim = 0;
    Matrix g;
    std::optional<LocalityStructure> locality;

    LinearCode(Field f, int n_, int dim_, Matrix g_, std::optional<LocalityStructure> loc = std::nullopt)
        : field(std::move(f)), n(n_), dim(dim_), g(std::move(g_)), locality(std::move(loc)) {
        if (g.rows() != n || g.cols() != dim) throw std::invalid_argument("generator shape mismatch");
        if (dim < 1) throw std::invalid_argument("code dimension must be positive");
        if (g.rank() != dim) throw std::invalid_argument("generator must have full column rank");
        if (locality) {
            if (locality->n != n) throw std::invalid_argument("locality length mismatch");
            locality->validate();
        }
    }
};

inline std::vector<Fe> encode(const LinearCode& c, const std::vector<Fe>& message) {
    return c.g.mul_vec(message);
}

/// Systematic construction: within each group of r+1 coordinates the first r
/// carry Reed-Solomon data symbols (systematic, so the first dim data
/// coordinates carry the message verbatim) and the last is the sum of its
/// group's data coordinates.
inline LinearCode build_partitioned_lrc(const Field& f, int n, int dim, int r) {
    if (dim < 1) throw std::invalid_argument("code dimension must be positive");
    if (r < 1 || r > n - 1) throw std::invalid_argument("locality out of range");
    if (n % (r + 1) != 0) throw std::invalid_argument("group size r+1 must divide n");
    const int data_count = n / (r + 1) * r;
    if (dim > data_count) throw std::invalid_argument("dimension exceeds data coordinates");
    if (std::uint64_t(data_count) > f.order())
        throw std::invalid_argument("field too small for distinct evaluation points");

    std::vector<Fe> alphas(data_count);
    for (int i = 0; i < data_count; ++i) alphas[i] = Fe(i);
    Matrix v = vandermonde(f, alphas, dim);
    std::vector<int> head(dim);
    for (int i = 0; i < dim; ++i) head[i] = i;
    Matrix top = v.select_rows(head);
    auto top_inv = top.inverse();
    if (!top_inv) throw std::logic_error("Vandermonde head not invertible");
    Matrix sys = v.mul(*top_inv);  // data_count x dim, systematic in the first dim rows

    LocalityStructure loc = LocalityStructure::partition(n, r);
    Matrix g(f, n, dim);
    int next_data = 0;
    for (const auto& q : loc.groups) {
        std::vector<int> data(q.begin(), q.end() - 1);
        int parity = q.back();
        for (int i : data) {
            for (int j = 0; j < dim; ++j) g.at(i, j) = sys.at(next_data, j);
            ++next_data;
        }
        for (int i : data)
            for (int j = 0; j < dim; ++j) g.at(parity, j) = f.add(g.at(parity, j), g.at(i, j));
    }
    return LinearCode(f, n, dim, std::move(g), loc);
}

/// Exact minimum Hamming weight by full codeword enumeration.
inline int min_distance(const LinearCode& c, std::uint64_t limit = 4000000) {
    long double count = 1;
    for (int i = 0; i < c.dim; ++i) count *= (long double)c.field.order();
    if (count > (long double)limit) throw std::length_error("too large for exact distance");

    const Field& f = c.field;
    std::vector<Fe> msg(c.dim, 0);
    int best = c.n + 1;
    std::uint64_t total = 1;
    for (int i = 0; i < c.dim; ++i) total *= f.order();
    for (std::uint64_t idx = 1; idx < total; ++idx) {
        std::uint64_t t = idx;
        for (int i = 0; i < c.dim; ++i) {
            msg[i] = t % f.order();
            t /= f.order();
        }
        int w = 0;
        for (int i = 0; i < c.n && w < best; ++i) {
            Fe acc = 0;
            for (int j = 0; j < c.dim; ++j) acc = f.add(acc, f.mul(c.g.at(i, j), msg[j]));
            if (acc) ++w;
        }
        if (w < best) best = w;
        if (best == 1) break;
    }
    return best;
}

/// true iff every coordinate's row lies in the span of its recovery set's rows
inline bool verify_locality(const LinearCode& c) {
    if (!c.locality) throw std::invalid_argument("code has no declared locality structure");
    for (int i = 0; i < c.n; ++i) {
        std::vector<int> r_i = c.locality->recovery_set(i);
        Matrix sub = c.g.select_rows(r_i);
        int base = sub.rank();
        std::vector<int> with = r_i;
        with.push_back(i);
        if (c.g.select_rows(with).rank() != base) return false;
    }
    return true;
}

struct MrWitness {
    std::vector<int> punctured;  // one coordinate per group
    std::vector<int> subset;     // rank-deficient dim-subset of the survivors
};

/// Probe the puncture-one-per-group MDS property; returns the first failure in
/// lexicographic order (by group then coordinate, then subset), or nothing.
inline std::optional<MrWitness> mr_failure(const LinearCode& c) {
    if (!c.locality) throw std::invalid_argument("code has no declared locality structure");
    const auto& groups = c.locality->groups;
    const int punct_len = c.n - int(groups.size());
    if (c.dim > punct_len) throw std::invalid_argument("dimension exceeds punctured length");

    std::vector<int> choice(groups.size(), 0);
    for (;;) {
        std::vector<int> punctured, survivors;
        for (std::size_t g = 0; g < groups.size(); ++g) punctured.push_back(groups[g][choice[g]]);
        for (int i = 0; i < c.n; ++i)
            if (std::find(punctured.begin(), punctured.end(), i) == punctured.end()) survivors.push_back(i);

        // every dim-subset of survivors must index linearly independent rows
        std::vector<int> pick(c.dim);
        std::function<std::optional<std::vector<int>>(int, int)> scan = [&](int pos, int start)
            -> std::optional<std::vector<int>> {
            if (pos == c.dim) {
                std::vector<int> rows(c.dim);
                for (int t = 0; t < c.dim; ++t) rows[t] = survivors[pick[t]];
                if (c.g.select_rows(rows).rank() != c.dim) return rows;
                return std::nullopt;
            }
            for (int s = start; s <= int(survivors.size()) - (c.dim - pos); ++s) {
                pick[pos] = s;
                if (auto w = scan(pos + 1, s + 1)) return w;
            }
            return std::nullopt;
        };
        if (auto bad = scan(0, 0)) return MrWitness{punctured, *bad};

        int g = int(groups.size()) - 1;
        while (g >= 0 && ++choice[g] > int(groups[g].size()) - 1) choice[g--] = 0;
        if (g < 0) break;
    }
    return std::nullopt;
}

inline bool is_maximally_recoverable(const LinearCode& c) { return !mr_failure(c).has_value(); }

/// Randomized search: r uniform rows plus a group parity per group, retried
/// until the result is full rank and passes the MR audit.
inline std::optional<LinearCode> search_mr_code(const Field& f, int n, int dim, int r,
                                                std::uint64_t seed, int max_tries) {
    LocalityStructure loc = LocalityStructure::partition(n, r);
    if (dim > n / (r + 1) * r) throw std::invalid_argument("dimension exceeds data coordinates");
    SplitMix64 rng(seed);
    for (int attempt = 0; attempt < max_tries; ++attempt) {
        Matrix g(f, n, dim);
        for (const auto& q : loc.groups) {
            int parity = q.back();
            for (std::size_t t = 0; t + 1 < q.size(); ++t) {
                for (int j = 0; j < dim; ++j) {
                    Fe v = rng.uniform(f);
                    g.at(q[t], j) = v;
                    g.at(parity, j) = f.add(g.at(parity, j), v);
                }
            }
        }
        if (g.rank() != dim) continue;
        LinearCode code(f, n, dim, std::move(g), loc);
        if (is_maximally_recoverable(code)) return code;
    }
    return std::nullopt;
}

struct DecodeOutcome {
    enum class Status { ok, undecodable, inconsistent };
    Status status = Status::undecodable;
    std::vector<Fe> message;

    bool ok() const { return status == Status::ok; }
};

/// Solve for the message from shares observed on an index set.
inline DecodeOutcome erasure_decode(const LinearCode& c, const std::map<int, Fe>& observed) {
    if (observed.empty()) throw std::invalid_argument("no observations");
    std::vector<int> rows;
    std::vector<Fe> b;
    for (const auto& [i, v] : observed) {
        if (i < 0 || i >= c.n) throw std::invalid_argument("observation index out of range");
        rows.push_back(i);
        b.push_back(v);
    }
    LinearSolution s = solve(c.g.select_rows(rows), b);
    DecodeOutcome out;
    switch (s.status) {
        case LinearSolution::Status::unique:
            out.status = DecodeOutcome::Status::ok;
            out.message = std::move(s.x);
            break;
        case LinearSolution::Status::underdetermined:
            out.status = DecodeOutcome::Status::undecodable;
            break;
        case LinearSolution::Status::inconsistent:
            out.status = DecodeOutcome::Status::inconsistent;
            break;
    }
    return out;
}

/// Per-coordinate repair relations: coefficients lambda over the recovery set
/// with g_i = sum lambda_j g_j, hence c_i = sum lambda_j c_j on any codeword.
inline std::vector<std::vector<Fe>> repair_coefficients(const LinearCode& c) {
    if (!c.locality) throw std::invalid_argument("code has no declared locality structure");
    std::vector<std::vector<Fe>> out(c.n);
    for (int i = 0; i < c.n; ++i) {
        std::vector<int> r_i = c.locality->recovery_set(i);
        auto sol = solve_any(c.g.select_rows(r_i).transpose(), c.g.row(i));
        if (!sol) throw std::domain_error("no local relation");
        out[i] = *sol;
    }
    return out;
}

/// Smallest m such that every m-subset of coordinates determines the message
/// (equivalently n - d + 1); exhaustive over subsets, intended for small n.
inline int recovery_threshold(const LinearCode& c) {
    for (int m = c.dim; m <= c.n; ++m) {
        bool all_ok = true;
        std::vector<int> pick(m);
        std::function<bool(int, int)> scan = [&](int pos, int start) -> bool {
            if (pos == m) return c.g.select_rows(pick).rank() == c.dim;
            for (int s = start; s <= c.n - (m - pos); ++s) {
                pick[pos] = s;
                if (!scan(pos + 1, s + 1)) return false;
            }
            return true;
        };
        all_ok = scan(0, 0);
        if (all_ok) return m;
    }
    throw std::logic_error("full code cannot decode");  // unreachable for valid codes
}

}  // namespace lrss
