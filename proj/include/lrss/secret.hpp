#pragma once
// Secret-sharing schemes over finite fields.  Every scheme here is linear:
// shares are a fixed matrix applied to (randomness || secret), with the
// randomness occupying the leading coordinates.  Tag-specific structure
// (locality, evaluation points, bundles, graph layout) drives construction,
// decoding and repair.

#include <map>
#include <variant>

#include "lrss/access.hpp"
#include "lrss/graph.hpp"
#include "lrss/lrc.hpp"

namespace lrss {

struct SchemeParams {
    int n = 0;    // shares
    int k = 0;    // secret symbols
    int ell = 0;  // tolerated eavesdropper strength
    int m = 0;    // recovery threshold
    int r = 0;    // locality

    void validate() const {
        if (!(0 <= ell && ell < m && m <= n)) throw std::invalid_argument("need 0 <= l < m <= n");
        if (k < 1) throw std::invalid_argument("need k >= 1");
        if (r < 1 || r > n - 1) throw std::invalid_argument("need 1 <= r <= n-1");
    }
};

enum class SchemeTag { split, gabidulin, shamir, isn, graph_matching, graph_cycle, coop, lnc };

inline const char* tag_name(SchemeTag t) {
    switch (t) {
        case SchemeTag::split: return "split";
        case SchemeTag::gabidulin: return "gabidulin";
        case SchemeTag::shamir: return "shamir";
        case SchemeTag::isn: return "isn";
        case SchemeTag::graph_matching: return "graph-matching";
        case SchemeTag::graph_cycle: return "graph-cycle";
        case SchemeTag::coop: return "coop";
        case SchemeTag::lnc: return "lnc";
    }
    return "?";
}

/// shares = G * (randomness || secret) over the share field
struct SplitPayload {
    Matrix g;
    std::optional<LocalityStructure> locality;
};

/// linearized-polynomial precoding of (randomness || secret) over GF(q^N),
/// evaluated at independent points, then columnwise base-code encoding
struct GabidulinPayload {
    LinearCode base;          // over GF(q)
    std::vector<Fe> alphas;   // k + l evaluation points in GF(q^N)
    int delta = 0;            // > 0 for cooperative-repair wraps
};

/// polynomial shares s + sum r_j x^j at distinct nonzero points
struct ShamirPayload {
    std::vector<Fe> xs;
};

/// one underlying polynomial share per maximal blocked set; participant p
/// holds the shares of every blocked set it does not belong to
struct IsnPayload {
    std::vector<std::vector<int>> bdagger;  // maximal blocked sets
    std::vector<Fe> xs;                     // evaluation point per blocked set
    std::vector<std::vector<int>> bundles;  // per participant: indices into bdagger
};

/// matched vertices duplicate one coordinate of x = V * (randomness || secret);
/// unmatched vertices store the public constant zero
struct MatchingPayload {
    Graph graph;
    std::vector<std::pair<int, int>> matching;
    Matrix vdm;
};

/// cycle c owns numerators[c] coordinates of x = V * (randomness || secret),
/// replicated on every vertex of the cycle; each vertex has p slots
struct CyclePayload {
    Graph graph;
    CyclePacking packing;
    Matrix vdm;
};

struct Scheme {
    SchemeTag tag = SchemeTag::split;
    SchemeParams params;
    Field share_field;
    std::variant<SplitPayload, GabidulinPayload, ShamirPayload, IsnPayload, MatchingPayload, CyclePayload>
        payload;
};

using Shares = std::vector<std::vector<Fe>>;  // per coordinate, one or more slots

// ---------------------------------------------------------------------------
// uniform linear view: rows of a matrix over the share field, grouped into
// per-coordinate slots, applied to a = (randomness || secret)

struct LinearView {
    Matrix m;                // (sum of slots) x (rand_len + secret_len)
    std::vector<int> slots;  // per coordinate
};

inline int secret_len(const Scheme& s) {
    switch (s.tag) {
        case SchemeTag::shamir:
        case SchemeTag::isn:
            return 1;
        case SchemeTag::graph_cycle:
            return s.params.k;  // already in base-field symbols
        default:
            return s.params.k;
    }
}

inline int rand_len(const Scheme& s) {
    switch (s.tag) {
        case SchemeTag::shamir:
            return s.params.m - 1;
        case SchemeTag::isn:
            return int(std::get<IsnPayload>(s.payload).bdagger.size()) - 1;
        case SchemeTag::graph_cycle: {
            const auto& p = std::get<CyclePayload>(s.payload);
            return int(Int(p.packing.p * s.params.ell).convert_to<long long>());
        }
        default:
            return s.params.ell;
    }
}

namespace detail_scheme {

// evaluation points of the shares after precoding: alpha~_i = sum_j g_ij alpha_j
inline std::vector<Fe> folded_points(const GabidulinPayload& p, const Field& ext) {
    std::vector<Fe> pts(p.base.n, 0);
    for (int i = 0; i < p.base.n; ++i) {
        Fe acc = 0;
        for (int j = 0; j < p.base.dim; ++j)
            acc = ext.add(acc, ext.mul(ext.embed(p.base.g.at(i, j)), p.alphas[j]));
        pts[i] = acc;
    }
    return pts;
}

// x-coordinate blocks owned by each cycle (cycles in stored order)
inline std::vector<std::pair<int, int>> cycle_blocks(const CyclePacking& pk) {
    std::vector<std::pair<int, int>> blocks;
    int off = 0;
    for (std::size_t c = 0; c < pk.cycles.size(); ++c) {
        int len = int(pk.numerators[c].convert_to<long long>());
        blocks.emplace_back(off, len);
        off += len;
    }
    return blocks;
}

}  // namespace detail_scheme

inline LinearView linear_view(const Scheme& s) {
    const Field& f = s.share_field;
    const int width = rand_len(s) + secret_len(s);
    switch (s.tag) {
        case SchemeTag::split:
        case SchemeTag::lnc: {
            const auto& p = std::get<SplitPayload>(s.payload);
            return {p.g, std::vector<int>(s.params.n, 1)};
        }
        case SchemeTag::gabidulin:
        case SchemeTag::coop: {
            const auto& p = std::get<GabidulinPayload>(s.payload);
            return {moore(f, detail_scheme::folded_points(p, f), width), std::vector<int>(s.params.n, 1)};
        }
        case SchemeTag::shamir: {
            const auto& p = std::get<ShamirPayload>(s.payload);
            Matrix m(f, s.params.n, width);
            for (int i = 0; i < s.params.n; ++i) {
                Fe pw = p.xs[i];
                for (int j = 0; j < width - 1; ++j) {
                    m.at(i, j) = pw;
                    pw = f.mul(pw, p.xs[i]);
                }
                m.at(i, width - 1) = 1;  // the secret is the constant term
            }
            return {m, std::vector<int>(s.params.n, 1)};
        }
        case SchemeTag::isn: {
            const auto& p = std::get<IsnPayload>(s.payload);
            std::vector<int> slots(s.params.n);
            int rows = 0;
            for (int i = 0; i < s.params.n; ++i) {
                slots[i] = int(p.bundles[i].size());
                rows += slots[i];
            }
            Matrix m(f, rows, width);
            int row = 0;
            for (int i = 0; i < s.params.n; ++i)
                for (int b : p.bundles[i]) {
                    Fe pw = p.xs[b];
                    for (int j = 0; j < width - 1; ++j) {
                        m.at(row, j) = pw;
                        pw = f.mul(pw, p.xs[b]);
                    }
                    m.at(row, width - 1) = 1;
                    ++row;
                }
            return {m, slots};
        }
        case SchemeTag::graph_matching: {
            const auto& p = std::get<MatchingPayload>(s.payload);
            Matrix m(f, s.params.n, width);
            for (std::size_t e = 0; e < p.matching.size(); ++e)
                for (int v : {p.matching[e].first, p.matching[e].second})
                    for (int j = 0; j < width; ++j) m.at(v, j) = p.vdm.at(int(e), j);
            return {m, std::vector<int>(s.params.n, 1)};
        }
        case SchemeTag::graph_cycle: {
            const auto& p = std::get<CyclePayload>(s.payload);
            const int slots_per_vertex = int(p.packing.p.convert_to<long long>());
            auto blocks = detail_scheme::cycle_blocks(p.packing);
            Matrix m(f, s.params.n * slots_per_vertex, width);
            for (int v = 0; v < s.params.n; ++v) {
                int slot = 0;
                for (std::size_t c = 0; c < p.packing.cycles.size(); ++c) {
                    const auto& cyc = p.packing.cycles[c];
                    if (std::find(cyc.begin(), cyc.end(), v) == cyc.end()) continue;
                    for (int t = 0; t < blocks[c].second; ++t) {
                        int x_coord = blocks[c].first + t;
                        for (int j = 0; j < width; ++j)
                            m.at(v * slots_per_vertex + slot, j) = p.vdm.at(x_coord, j);
                        ++slot;
                    }
                }
                // remaining slots stay zero
            }
            return {m, std::vector<int>(s.params.n, slots_per_vertex)};
        }
    }
    throw std::logic_error("unhandled scheme tag");
}

inline Shares encode(const Scheme& s, const std::vector<Fe>& secret, const std::vector<Fe>& randomness) {
    if (int(secret.size()) != secret_len(s)) throw std::invalid_argument("secret length mismatch");
    if (int(randomness.size()) != rand_len(s)) throw std::invalid_argument("randomness length mismatch");
    std::vector<Fe> a;
    a.reserve(secret.size() + randomness.size());
    a.insert(a.end(), randomness.begin(), randomness.end());
    a.insert(a.end(), secret.begin(), secret.end());
    LinearView view = linear_view(s);
    std::vector<Fe> flat = view.m.mul_vec(a);
    Shares out(s.params.n);
    int row = 0;
    for (int i = 0; i < s.params.n; ++i)
        for (int t = 0; t < view.slots[i]; ++t) out[i].push_back(flat[row++]);
    return out;
}

struct SecretDecode {
    enum class Status { ok, undecodable, inconsistent };
    Status status = Status::undecodable;
    std::vector<Fe> secret;

    bool ok() const { return status == Status::ok; }
};

/// Solve for (randomness || secret) from the observed coordinates' rows of the
/// linear view and keep the secret part.  Works for any observation whose rows
/// reach full rank, which covers every m-subset and every qualified set.
inline SecretDecode decode(const Scheme& s, const std::map<int, std::vector<Fe>>& partial) {
    LinearView view = linear_view(s);
    std::vector<int> row_of_coord(s.params.n + 1, 0);
    for (int i = 0; i < s.params.n; ++i) row_of_coord[i + 1] = row_of_coord[i] + view.slots[i];

    std::vector<int> rows;
    std::vector<Fe> b;
    for (const auto& [i, vals] : partial) {
        if (i < 0 || i >= s.params.n) throw std::invalid_argument("share index out of range");
        if (int(vals.size()) != view.slots[i]) throw std::invalid_argument("share slot count mismatch");
        for (int t = 0; t < view.slots[i]; ++t) {
            rows.push_back(row_of_coord[i] + t);
            b.push_back(vals[t]);
        }
    }
    if (rows.empty()) throw std::invalid_argument("no observations");

    LinearSolution sol = solve(view.m.select_rows(rows), b);
    SecretDecode out;
    if (sol.status == LinearSolution::Status::inconsistent) {
        out.status = SecretDecode::Status::inconsistent;
        return out;
    }
    if (sol.status == LinearSolution::Status::underdetermined) {
        out.status = SecretDecode::Status::undecodable;
        return out;
    }
    out.status = SecretDecode::Status::ok;
    out.secret.assign(sol.x.begin() + rand_len(s), sol.x.end());
    return out;
}

/// Declared recovery set of a coordinate (sorted).
inline std::vector<int> recovery_set(const Scheme& s, int i) {
    if (i < 0 || i >= s.params.n) throw std::invalid_argument("share index out of range");
    switch (s.tag) {
        case SchemeTag::split:
        case SchemeTag::lnc: {
            const auto& p = std::get<SplitPayload>(s.payload);
            if (!p.locality) throw std::domain_error("scheme has no locality structure");
            return p.locality->recovery_set(i);
        }
        case SchemeTag::gabidulin:
        case SchemeTag::coop: {
            const auto& p = std::get<GabidulinPayload>(s.payload);
            if (!p.base.locality) throw std::domain_error("scheme has no locality structure");
            return p.base.locality->recovery_set(i);
        }
        case SchemeTag::shamir: {
            std::vector<int> r;
            for (int j = 0; j < s.params.n && int(r.size()) < s.params.m; ++j)
                if (j != i) r.push_back(j);
            return r;
        }
        case SchemeTag::isn: {
            const auto& p = std::get<IsnPayload>(s.payload);
            // smallest set whose bundles jointly cover i's bundle
            std::vector<int> candidates;
            for (int j = 0; j < s.params.n; ++j)
                if (j != i) candidates.push_back(j);
            for (int size = 0; size <= int(candidates.size()); ++size) {
                std::vector<int> pick(size);
                std::function<std::optional<std::vector<int>>(int, int)> scan =
                    [&](int pos, int start) -> std::optional<std::vector<int>> {
                    if (pos == size) {
                        std::vector<char> have(p.bdagger.size(), 0);
                        for (int t = 0; t < size; ++t)
                            for (int b : p.bundles[candidates[pick[t]]]) have[b] = 1;
                        for (int b : p.bundles[i])
                            if (!have[b]) return std::nullopt;
                        std::vector<int> r(size);
                        for (int t = 0; t < size; ++t) r[t] = candidates[pick[t]];
                        return r;
                    }
                    for (int c = start; c <= int(candidates.size()) - (size - pos); ++c) {
                        pick[pos] = c;
                        if (auto r = scan(pos + 1, c + 1)) return r;
                    }
                    return std::nullopt;
                };
                if (auto r = scan(0, 0)) return *r;
            }
            throw std::domain_error("share cannot be recovered from the other participants");
        }
        case SchemeTag::graph_matching: {
            const auto& p = std::get<MatchingPayload>(s.payload);
            for (auto [u, v] : p.matching) {
                if (u == i) return {v};
                if (v == i) return {u};
            }
            return {};  // unmatched vertices hold the public constant
        }
        case SchemeTag::graph_cycle: {
            const auto& p = std::get<CyclePayload>(s.payload);
            std::vector<int> r;
            for (std::size_t c = 0; c < p.packing.cycles.size(); ++c) {
                if (p.packing.numerators[c] == 0) continue;
                const auto& cyc = p.packing.cycles[c];
                for (std::size_t t = 0; t < cyc.size(); ++t)
                    if (cyc[t] == i) r.push_back(cyc[(t + 1) % cyc.size()]);
            }
            std::sort(r.begin(), r.end());
            r.erase(std::unique(r.begin(), r.end()), r.end());
            return r;
        }
    }
    throw std::logic_error("unhandled scheme tag");
}

/// Rebuild share i from exactly its recovery set.
inline std::vector<Fe> repair(const Scheme& s, int i, const std::map<int, std::vector<Fe>>& neighbors) {
    std::vector<int> need = recovery_set(s, i);
    for (int j : need)
        if (!neighbors.count(j)) throw std::invalid_argument("incomplete recovery set");
    const Field& f = s.share_field;

    switch (s.tag) {
        case SchemeTag::split:
        case SchemeTag::lnc:
        case SchemeTag::gabidulin:
        case SchemeTag::coop: {
            // linear relation within the locality group of the underlying code
            const Matrix* base_g = nullptr;
            const LocalityStructure* loc = nullptr;
            if (s.tag == SchemeTag::split || s.tag == SchemeTag::lnc) {
                const auto& p = std::get<SplitPayload>(s.payload);
                base_g = &p.g;
                loc = &*p.locality;
            } else {
                const auto& p = std::get<GabidulinPayload>(s.payload);
                base_g = &p.base.g;
                loc = &*p.base.locality;
            }
            std::vector<int> r_i = loc->recovery_set(i);
            auto lam = solve_any(base_g->select_rows(r_i).transpose(), base_g->row(i));
            if (!lam) throw std::domain_error("no local relation");
            // split coefficients live in the share field itself; precoded ones
            // live in the prime subfield, whose indices embed verbatim
            Fe acc = 0;
            bool prime_coeffs = s.tag == SchemeTag::gabidulin || s.tag == SchemeTag::coop;
            for (std::size_t j = 0; j < r_i.size(); ++j) {
                Fe c = prime_coeffs ? f.embed((*lam)[j]) : (*lam)[j];
                acc = f.add(acc, f.mul(c, neighbors.at(r_i[j])[0]));
            }
            return {acc};
        }
        case SchemeTag::shamir: {
            // m other evaluations pin the polynomial; evaluate it at x_i
            LinearView view = linear_view(s);
            std::vector<int> rows;
            std::vector<Fe> b;
            for (int j : need) {
                rows.push_back(j);
                b.push_back(neighbors.at(j)[0]);
            }
            auto sol = solve(view.m.select_rows(rows), b);
            if (!sol.unique()) throw std::domain_error("recovery set does not determine the share");
            return {view.m.select_rows({i}).mul_vec(sol.x)[0]};
        }
        case SchemeTag::isn: {
            const auto& p = std::get<IsnPayload>(s.payload);
            std::vector<Fe> out;
            for (int b : p.bundles[i]) {
                bool found = false;
                for (int j : need) {
                    const auto& bj = p.bundles[j];
                    auto it = std::find(bj.begin(), bj.end(), b);
                    if (it != bj.end()) {
                        out.push_back(neighbors.at(j)[it - bj.begin()]);
                        found = true;
                        break;
                    }
                }
                if (!found) throw std::domain_error("recovery set misses an underlying share");
            }
            return out;
        }
        case SchemeTag::graph_matching: {
            if (need.empty()) return {0};  // public constant
            return {neighbors.at(need[0])[0]};
        }
        case SchemeTag::graph_cycle: {
            const auto& p = std::get<CyclePayload>(s.payload);
            const int slots_per_vertex = int(p.packing.p.convert_to<long long>());
            auto blocks = detail_scheme::cycle_blocks(p.packing);
            // rebuild i's slot list in stored order, pulling each cycle block
            // from the successor on that cycle
            std::vector<Fe> out;
            for (std::size_t c = 0; c < p.packing.cycles.size(); ++c) {
                const auto& cyc = p.packing.cycles[c];
                auto it = std::find(cyc.begin(), cyc.end(), i);
                if (it == cyc.end()) continue;
                int succ = cyc[(it - cyc.begin() + 1) % cyc.size()];
                // locate the block inside succ's slots
                int succ_slot = 0;
                for (std::size_t c2 = 0; c2 < c; ++c2) {
                    const auto& cyc2 = p.packing.cycles[c2];
                    if (std::find(cyc2.begin(), cyc2.end(), succ) != cyc2.end())
                        succ_slot += blocks[c2].second;
                }
                for (int t = 0; t < blocks[c].second; ++t)
                    out.push_back(neighbors.at(succ)[succ_slot + t]);
            }
            out.resize(slots_per_vertex, 0);
            return out;
        }
    }
    throw std::logic_error("unhandled scheme tag");
}

// ---------------------------------------------------------------------------
// constructors

/// Wrap a generator matrix over the share field as a split scheme.  The
/// recovery threshold is derived by exhaustive rank scan unless supplied.
inline Scheme split_scheme(const Field& f, Matrix g, std::optional<LocalityStructure> locality, int k, int ell,
                           std::optional<int> m_override = std::nullopt, SchemeTag tag = SchemeTag::split) {
    const int n = g.rows();
    if (g.cols() != k + ell) throw std::invalid_argument("generator width must be k + l");
    if (g.rank() != k + ell) throw std::invalid_argument("generator must have full column rank");
    Scheme s;
    s.tag = tag;
    s.share_field = f;
    int m;
    if (m_override) {
        m = *m_override;
    } else {
        LinearCode code(f, n, k + ell, g, locality);
        m = recovery_threshold(code);
    }
    int r = locality ? locality->r : n - 1;
    s.params = SchemeParams{n, k, ell, m, r};
    s.params.validate();
    s.payload = SplitPayload{std::move(g), std::move(locality)};
    return s;
}

/// Gabidulin-precoded scheme from a base code with locality over a prime
/// field: inputs live in GF(q^N), evaluation points are the first k+l power
/// basis elements.
inline Scheme build_gabidulin_scheme(const LinearCode& base, int k, int ell, int big_n,
                                     SchemeTag tag = SchemeTag::gabidulin, int delta = 0) {
    if (base.dim != k + ell) throw std::invalid_argument("base dimension must be k + l");
    if (base.field.degree() != 1) throw std::invalid_argument("base code must live over a prime field");
    if (big_n < base.n) throw std::invalid_argument("extension degree must be at least the code length");
    Field ext = Field::extension(base.field.characteristic(), big_n);
    std::vector<Fe> alphas(k + ell);
    for (int i = 0; i < k + ell; ++i) alphas[i] = ext.basis(i);

    Scheme s;
    s.tag = tag;
    s.share_field = ext;
    s.params = SchemeParams{base.n, k, ell, recovery_threshold(base), base.locality ? base.locality->r : base.n - 1};
    s.params.validate();
    s.payload = GabidulinPayload{base, std::move(alphas), delta};
    return s;
}

inline Scheme shamir_scheme(int n, int t, const Field& f) {
    if (t < 2 || t > n) throw std::invalid_argument("threshold out of range");
    if (f.order() <= std::uint64_t(n)) throw std::invalid_argument("field too small for distinct share points");
    std::vector<Fe> xs(n);
    for (int i = 0; i < n; ++i) xs[i] = Fe(i + 1);  // zero is reserved for the secret
    Scheme s;
    s.tag = SchemeTag::shamir;
    s.share_field = f;
    s.params = SchemeParams{n, 1, t - 1, t, std::min(t, n - 1)};
    s.params.validate();
    s.payload = ShamirPayload{std::move(xs)};
    return s;
}

/// General-access-structure scheme from the maximal blocked sets.
inline Scheme isn_scheme(int n, const std::vector<std::vector<int>>& bdagger, const Field& f) {
    if (bdagger.empty()) throw std::invalid_argument("empty block-list: the secret would be public");
    for (const auto& b : bdagger)
        for (int i : b)
            if (i < 0 || i >= n) throw std::invalid_argument("blocked-set member out of range");
    for (std::size_t a = 0; a < bdagger.size(); ++a)
        for (std::size_t b = 0; b < bdagger.size(); ++b) {
            if (a == b) continue;
            if (std::includes(bdagger[b].begin(), bdagger[b].end(), bdagger[a].begin(), bdagger[a].end()))
                throw std::invalid_argument("block-list must be an antichain of maximal sets");
        }
    if (f.order() <= bdagger.size()) throw std::invalid_argument("field too small for distinct share points");

    std::vector<std::vector<int>> bundles(n);
    for (int p = 0; p < n; ++p)
        for (std::size_t b = 0; b < bdagger.size(); ++b)
            if (std::find(bdagger[b].begin(), bdagger[b].end(), p) == bdagger[b].end())
                bundles[p].push_back(int(b));

    std::vector<Fe> xs(bdagger.size());
    for (std::size_t b = 0; b < bdagger.size(); ++b) xs[b] = Fe(b + 1);

    // l = (min qualified size) - 1, m = (max blocked size) + 1, where a set is
    // qualified exactly when it is contained in no maximal blocked set
    int max_blocked = 0;
    for (const auto& b : bdagger) max_blocked = std::max(max_blocked, int(b.size()));
    int min_qual = n;
    for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << n); ++mask) {
        bool qual = true;
        for (const auto& b : bdagger)
            if ((mask & ~set_to_mask(b)) == 0) {
                qual = false;
                break;
            }
        if (qual) min_qual = std::min(min_qual, __builtin_popcount(mask));
    }

    Scheme s;
    s.tag = SchemeTag::isn;
    s.share_field = f;
    s.params = SchemeParams{n, 1, min_qual - 1, max_blocked + 1, n - 1};
    s.params.validate();
    s.payload = IsnPayload{bdagger, std::move(xs), std::move(bundles)};
    return s;
}

/// Smallest recovery set for a participant's bundle: any R not contained in a
/// maximal blocked set avoiding p holds every share p holds.
inline std::optional<std::vector<int>> isn_locality(int p, int n, const std::vector<std::vector<int>>& bdagger) {
    std::vector<std::uint32_t> relevant;  // blocked sets not containing p
    for (const auto& b : bdagger)
        if (std::find(b.begin(), b.end(), p) == b.end()) relevant.push_back(set_to_mask(b));
    const std::uint32_t all = ((std::uint32_t(1) << n) - 1) & ~(std::uint32_t(1) << p);
    // scan subsets by increasing size, lexicographic within a size
    for (int size = 0; size <= n - 1; ++size) {
        std::vector<int> candidates;
        for (int i = 0; i < n; ++i)
            if (i != p) candidates.push_back(i);
        std::vector<int> pick(size);
        std::function<std::optional<std::vector<int>>(int, int)> scan =
            [&](int pos, int start) -> std::optional<std::vector<int>> {
            if (pos == size) {
                std::uint32_t mask = 0;
                for (int t = 0; t < size; ++t) mask |= std::uint32_t(1) << candidates[pick[t]];
                for (auto bm : relevant)
                    if ((mask & ~bm) == 0) return std::nullopt;  // R sits inside a blocked set
                return mask_to_set(mask, n);
            }
            for (int c = start; c <= int(candidates.size()) - (size - pos); ++c) {
                pick[pos] = c;
                if (auto r = scan(pos + 1, c + 1)) return r;
            }
            return std::nullopt;
        };
        if (auto r = scan(0, 0)) return r;
    }
    (void)all;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// security audits

struct SplitSecurityAudit {
    bool secure = false;
    std::optional<std::vector<int>> witness;  // an independent row set whose leading columns collapse
};

/// A split scheme leaks nothing to any l observed shares iff every l-subset of
/// rows that is linearly independent in G stays independent when restricted to
/// the leading l (randomness) columns.
inline SplitSecurityAudit audit_split_security(const Matrix& g, int ell) {
    const int n = g.rows();
    if (ell < 0 || ell > g.cols()) throw std::invalid_argument("l out of range");
    if (n > 24 || ell > 8) throw std::length_error("too large for exhaustive subset audit");
    SplitSecurityAudit out;
    out.secure = true;
    if (ell == 0) return out;

    std::vector<int> lead(ell);
    for (int j = 0; j < ell; ++j) lead[j] = j;
    std::vector<int> pick(ell);
    std::function<bool(int, int)> scan = [&](int pos, int start) -> bool {
        if (pos == ell) {
            Matrix rows = g.select_rows(pick);
            if (rows.rank() != ell) return true;  // dependent rows observe fewer than l shares
            if (rows.select_cols(lead).rank() != ell) {
                out.secure = false;
                out.witness = pick;
                return false;
            }
            return true;
        }
        for (int i = start; i <= n - (ell - pos); ++i) {
            pick[pos] = i;
            if (!scan(pos + 1, i + 1)) return false;
        }
        return true;
    };
    scan(0, 0);
    return out;
}

/// Constructive check of the secrecy-lemma hypotheses for a precoded scheme:
/// the observed rows reduce to at most l independent ones, and the folded
/// evaluation points' Moore block over the randomness columns keeps full rank
/// (so the randomness is a function of secret + observations).
inline bool audit_gabidulin_security(const Scheme& s, const std::vector<int>& eavesdropped) {
    if (s.tag != SchemeTag::gabidulin && s.tag != SchemeTag::coop)
        throw std::invalid_argument("not a precoded scheme");
    const auto& p = std::get<GabidulinPayload>(s.payload);
    const int ell = s.params.ell;
    if (int(eavesdropped.size()) > ell) return false;
    if (eavesdropped.empty()) return true;

    // maximal independent subset of the observed base rows, in given order
    std::vector<int> indep;
    for (int i : eavesdropped) {
        std::vector<int> trial = indep;
        trial.push_back(i);
        if (p.base.g.select_rows(trial).rank() == int(trial.size())) indep = trial;
    }
    if (int(indep.size()) > ell) return false;

    const Field& ext = s.share_field;
    std::vector<Fe> folded = detail_scheme::folded_points(p, ext);
    std::vector<Fe> pts;
    for (int i : indep) pts.push_back(folded[i]);
    Matrix b = moore(ext, pts, ell);
    return b.rank() == int(indep.size());
}

/// Largest l for which every such row subset of an optimal LRC is guaranteed
/// independent: r - 1 + (r*floor(k/(r-1)) - k).
inline long long optimal_lrc_independence_range(long long k, long long r) {
    if (r < 2) throw std::domain_error("inapplicable for r = 1");
    if (k < 1) throw std::invalid_argument("k must be positive");
    return r - 1 + (r * (k / (r - 1)) - k);
}

struct MrEquivalenceReport {
    bool secure = false;
    std::optional<std::vector<int>> security_witness;
    bool mr_subcode = false;
    bool in_range = false;   // l within the guaranteed-independence range
    bool optimal = false;    // distance meets the locality bound with equality
    bool violation = false;  // equivalence failed where it must hold
};

namespace detail_scheme {

inline bool matrix_mr(const Matrix& g, const LocalityStructure& loc, int dim) {
    // every dim-subset with at most r coordinates per group must be independent
    const int n = g.rows();
    std::vector<int> pick(dim);
    std::function<bool(int, int)> scan = [&](int pos, int start) -> bool {
        if (pos == dim) {
            std::vector<int> per_group(loc.groups.size(), 0);
            for (int i : pick)
                if (++per_group[loc.group_of(i)] > loc.r) return true;  // not a puncture survivor
            return g.select_rows(pick).rank() == dim;
        }
        for (int i = start; i <= n - (dim - pos); ++i) {
            pick[pos] = i;
            if (!scan(pos + 1, i + 1)) return false;
        }
        return true;
    };
    return scan(0, 0);
}

}  // namespace detail_scheme

/// Split-construction security vs. maximal recoverability of the subcode
/// generated by the randomness columns.  The two agree for optimal codes with
/// l in the guaranteed range; the report flags any violation there.
inline MrEquivalenceReport audit_mr_security_equivalence(const LinearCode& code, int ell,
                                                         std::uint64_t distance_limit = 4000000) {
    if (!code.locality) throw std::invalid_argument("code needs a locality structure");
    MrEquivalenceReport rep;
    auto audit = audit_split_security(code.g, ell);
    rep.secure = audit.secure;
    rep.security_witness = audit.witness;

    std::vector<int> lead(ell);
    for (int j = 0; j < ell; ++j) lead[j] = j;
    rep.mr_subcode = detail_scheme::matrix_mr(code.g.select_cols(lead), *code.locality, ell);

    const int k = code.dim - ell;
    rep.in_range = code.locality->r >= 2 && k >= 1 &&
                   ell <= optimal_lrc_independence_range(k, code.locality->r);
    int d = min_distance(code, distance_limit);
    const int r = code.locality->r;
    rep.optimal = d == code.n - code.dim - (code.dim + r - 1) / r + 2;
    rep.violation = rep.in_range && rep.optimal && (rep.secure != rep.mr_subcode);
    return rep;
}

struct PerfectLocalScheme {
    Scheme scheme;
    AccessStructure access;
};

/// Perfect scheme with nontrivial locality: precode a single secret symbol
/// with kappa-1 random ones through a maximally recoverable base, and declare
/// qualified exactly the sets whose effective per-group counts reach kappa.
inline PerfectLocalScheme perfect_local_scheme(int n, int r, int kappa, const Field& base_field, int big_n,
                                               std::uint64_t seed = 1, int max_tries = 500) {
    if (kappa < 2 || kappa % r != 0) throw std::invalid_argument("r must divide kappa");
    if (n % (r + 1) != 0) throw std::invalid_argument("group size r+1 must divide n");
    auto base = search_mr_code(base_field, n, kappa, r, seed, max_tries);
    if (!base) throw std::domain_error("no maximally recoverable base found; raise field size or tries");
    Scheme s = build_gabidulin_scheme(*base, 1, kappa - 1, big_n);
    s.params.m = kappa + kappa / r;
    s.params.validate();
    AccessStructure acc = AccessStructure::effective_threshold(*base->locality, kappa);
    return {std::move(s), std::move(acc)};
}

}  // namespace lrss
