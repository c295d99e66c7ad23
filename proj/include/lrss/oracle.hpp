#pragma once
// Ground-truth verifier: enumerate the full joint distribution of
// (secret, randomness) -> shares for a scheme and decide every recovery,
// security, locality, perfectness and polymatroid question by exact counting
// over that support.  Every (secret, randomness) pair is equally likely, so
// exact rational probabilities are integer counts over a common total; the
// determinism/independence verdicts never touch floating point.
//
// Each support point is packed into one 64-bit word: the secret index in the
// low bits, each coordinate's share (slot by slot) above it.  Subset questions
// gather the relevant fields, radix-sort, and scan runs.

#include <bit>
#include <cmath>
#include <cstring>

#include "lrss/secret.hpp"
#include "lrss/subsets.hpp"

namespace lrss {

struct JointDistribution {
    Field share_field;
    int n = 0;
    std::vector<int> slots;         // per coordinate
    std::vector<int> coord_bits;    // per coordinate
    std::vector<int> coord_offset;  // bit offset of each coordinate's field
    int bits_per_element = 0;
    int secret_bits = 0;
    std::uint64_t secret_count = 0;
    std::uint64_t rand_count = 0;
    std::uint64_t total = 0;
    std::vector<std::uint64_t> points;

    std::uint64_t secret_of(std::uint64_t point) const { return point & ((std::uint64_t(1) << secret_bits) - 1); }

    std::uint64_t coord_field(std::uint64_t point, int i) const {
        return (point >> coord_offset[i]) & ((std::uint64_t(1) << coord_bits[i]) - 1);
    }

    /// H(S) in q-ary units (q = share-field order)
    double secret_entropy() const { return std::log(double(secret_count)) / std::log(double(share_field.order())); }
};

inline JointDistribution enumerate_joint(const Scheme& s, std::uint64_t limit = std::uint64_t(1) << 20) {
    JointDistribution d;
    d.share_field = s.share_field;
    d.n = s.params.n;
    const Field& f = s.share_field;
    const std::uint64_t order = f.order();
    d.bits_per_element = std::bit_width(order - 1);

    LinearView view = linear_view(s);
    d.slots = view.slots;
    const int width = view.m.cols();
    const int rand_syms = rand_len(s);
    const int secret_syms = secret_len(s);

    auto checked_pow = [&](int e) {
        std::uint64_t v = 1;
        for (int i = 0; i < e; ++i) {
            if (v > (std::uint64_t(1) << 62) / order) throw std::length_error("too large for oracle");
            v *= order;
        }
        return v;
    };
    d.secret_count = checked_pow(secret_syms);
    d.rand_count = checked_pow(rand_syms);
    if (d.rand_count > limit / d.secret_count) throw std::length_error("too large for oracle");
    d.total = d.secret_count * d.rand_count;
    d.secret_bits = std::bit_width(d.secret_count - 1);
    if (d.secret_count == 1) d.secret_bits = 1;

    int off = d.secret_bits;
    for (int i = 0; i < d.n; ++i) {
        d.coord_bits.push_back(d.slots[i] * d.bits_per_element);
        d.coord_offset.push_back(off);
        off += d.coord_bits[i];
        if (off > 64) throw std::length_error("share space too wide for the packed oracle");
    }

    const int rows = view.m.rows();
    std::vector<int> row_offset(rows);  // packed bit position of every slot row
    {
        int rowi = 0;
        for (int i = 0; i < d.n; ++i)
            for (int t = 0; t < d.slots[i]; ++t) row_offset[rowi++] = d.coord_offset[i] + t * d.bits_per_element;
    }

    d.points.resize(d.total);
    std::vector<std::uint64_t> digits(width, 0);

    if (f.characteristic() == 2) {
        // addition is xor on packed indices: precompute each input symbol's
        // packed contribution and fold
        std::vector<std::vector<std::uint64_t>> contrib(width, std::vector<std::uint64_t>(order, 0));
        for (int j = 0; j < width; ++j)
            for (std::uint64_t v = 0; v < order; ++v) {
                std::uint64_t packed = 0;
                for (int row = 0; row < rows; ++row) packed |= f.mul(view.m.at(row, j), v) << row_offset[row];
                contrib[j][v] = packed;
            }
        std::uint64_t acc = 0;  // running xor of contributions at digit values
        for (std::uint64_t idx = 0; idx < d.total; ++idx) {
            std::uint64_t secret_idx = idx / d.rand_count;
            d.points[idx] = acc | secret_idx;
            // odometer step
            for (int j = 0; j < width; ++j) {
                acc ^= contrib[j][digits[j]];
                if (++digits[j] < order) {
                    acc ^= contrib[j][digits[j]];
                    break;
                }
                digits[j] = 0;
                acc ^= contrib[j][0];
            }
        }
    } else {
        std::vector<Fe> a(width, 0);
        for (std::uint64_t idx = 0; idx < d.total; ++idx) {
            std::uint64_t t = idx;
            for (int j = 0; j < width; ++j) {
                a[j] = t % order;
                t /= order;
            }
            std::vector<Fe> flat = view.m.mul_vec(a);
            std::uint64_t packed = idx / d.rand_count;
            for (int row = 0; row < rows; ++row) packed |= flat[row] << row_offset[row];
            d.points[idx] = packed;
        }
    }
    return d;
}

namespace detail_oracle {

inline void radix_sort(std::vector<std::uint64_t>& v, int significant_bits) {
    static thread_local std::vector<std::uint64_t> scratch;
    scratch.resize(v.size());
    const int passes = (significant_bits + 7) / 8;
    for (int pass = 0; pass < passes; ++pass) {
        std::size_t count[257] = {0};
        const int shift = pass * 8;
        for (auto x : v) ++count[((x >> shift) & 0xff) + 1];
        for (int i = 0; i < 256; ++i) count[i + 1] += count[i];
        for (auto x : v) scratch[count[(x >> shift) & 0xff]++] = x;
        v.swap(scratch);
    }
}

// keys = [gathered coordinate fields | low extra bits], sorted
inline std::vector<std::uint64_t> gather_sorted(const JointDistribution& d, const std::vector<int>& subset,
                                                int extra_bits, bool extra_is_secret, int extra_coord) {
    int bits = extra_bits;
    for (int i : subset) bits += d.coord_bits[i];
    if (bits > 64) throw std::length_error("subset too wide for packed analysis");
    std::vector<std::uint64_t> keys(d.points.size());
    for (std::size_t t = 0; t < d.points.size(); ++t) {
        std::uint64_t p = d.points[t];
        std::uint64_t key = 0;
        for (int i : subset) key = (key << d.coord_bits[i]) | d.coord_field(p, i);
        if (extra_bits) {
            std::uint64_t extra = extra_is_secret ? d.secret_of(p) : d.coord_field(p, extra_coord);
            key = (key << extra_bits) | extra;
        }
        keys[t] = key;
    }
    radix_sort(keys, bits);
    return keys;
}

}  // namespace detail_oracle

enum class Verdict { determined, independent, partial };

/// Exact classification of what the shares on a subset reveal about the
/// secret: fully determined, exactly independent, or something in between.
inline Verdict verdict(const JointDistribution& d, const std::vector<int>& subset) {
    auto keys = detail_oracle::gather_sorted(d, subset, d.secret_bits, true, -1);
    const std::uint64_t smask = (std::uint64_t(1) << d.secret_bits) - 1;
    bool can_determine = true, can_independent = true;
    std::size_t i = 0;
    const std::size_t n = keys.size();
    while (i < n && (can_determine || can_independent)) {
        std::size_t j = i;
        const std::uint64_t proj = keys[i] >> d.secret_bits;
        std::uint64_t distinct = 0;
        std::size_t sub_start = i;
        std::uint64_t first_sub_len = 0;
        bool equal_subs = true;
        while (j < n && (keys[j] >> d.secret_bits) == proj) {
            if (keys[j] != keys[sub_start]) {
                std::uint64_t len = j - sub_start;
                if (distinct == 0) first_sub_len = len;
                else if (len != first_sub_len) equal_subs = false;
                ++distinct;
                sub_start = j;
            }
            ++j;
        }
        {
            std::uint64_t len = j - sub_start;
            if (distinct == 0) first_sub_len = len;
            else if (len != first_sub_len) equal_subs = false;
            ++distinct;
        }
        if (distinct != 1) can_determine = false;
        if (!(distinct == d.secret_count && equal_subs)) can_independent = false;
        i = j;
    }
    // full secret domain appearing once each is both determined and uniform
    // only in the degenerate single-secret case, which params forbid
    if (can_determine) return Verdict::determined;
    if (can_independent) return Verdict::independent;
    return Verdict::partial;
}

/// Is share coordinate `coord` a fixed function of the shares on `given`?
inline bool coordinate_determined(const JointDistribution& d, int coord, const std::vector<int>& given) {
    auto keys = detail_oracle::gather_sorted(d, given, d.coord_bits[coord], false, coord);
    const int low = d.coord_bits[coord];
    std::size_t i = 0;
    while (i < keys.size()) {
        std::size_t j = i;
        const std::uint64_t proj = keys[i] >> low;
        while (j < keys.size() && (keys[j] >> low) == proj) {
            if (keys[j] != keys[i]) return false;
            ++j;
        }
        i = j;
    }
    return true;
}

struct SubsetEntropies {
    double h_shares = 0;         // H(C_A)
    double h_shares_secret = 0;  // H(C_A, S)
};

/// Both subset entropies from one sorted pass, q-ary units, Kahan-summed.
inline SubsetEntropies subset_entropies(const JointDistribution& d, const std::vector<int>& subset) {
    auto keys = detail_oracle::gather_sorted(d, subset, d.secret_bits, true, -1);
    const double logb = std::log(double(d.share_field.order()));
    const double total = double(d.total);
    double h1 = 0, c1 = 0, h2 = 0, c2 = 0;
    auto add = [](double& sum, double& comp, double term) {
        double y = term - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    };
    std::size_t i = 0;
    while (i < keys.size()) {
        std::size_t j = i;
        const std::uint64_t proj = keys[i] >> d.secret_bits;
        std::size_t sub_start = i;
        while (j < keys.size() && (keys[j] >> d.secret_bits) == proj) {
            if (keys[j] != keys[sub_start]) {
                double c = double(j - sub_start);
                add(h2, c2, c / total * std::log(total / c));
                sub_start = j;
            }
            ++j;
        }
        double c = double(j - sub_start);
        add(h2, c2, c / total * std::log(total / c));
        double run = double(j - i);
        add(h1, c1, run / total * std::log(total / run));
        i = j;
    }
    return {h1 / logb, h2 / logb};
}

/// H(S | C_A) = H(C_A, S) - H(C_A), q-ary units
inline double conditional_secret_entropy(const JointDistribution& d, const std::vector<int>& subset) {
    auto e = subset_entropies(d, subset);
    return e.h_shares_secret - e.h_shares;
}

// ---------------------------------------------------------------------------
// audits

struct ConditionReport {
    bool pass = true;
    std::optional<std::vector<int>> witness;  // lexicographically smallest failure
};

struct SchemeAudit {
    ConditionReport recovery;
    ConditionReport security;
    ConditionReport locality;
    std::vector<std::vector<int>> recovery_sets;  // chosen per coordinate when locality passes

    bool pass() const { return recovery.pass && security.pass && locality.pass; }
};

/// Check the three defining conditions of an (n,k,l,m,r) scheme exactly:
/// every m-subset determines the secret, every l-subset is independent of it,
/// and every share is a function of at most r others (declared recovery sets
/// first, then exhaustive search in lexicographic order).
inline SchemeAudit audit_scheme(const Scheme& s, const JointDistribution& d) {
    SchemeAudit a;
    const auto& pr = s.params;

    for_each_subset(pr.n, pr.m, [&](const std::vector<int>& sub) {
        if (verdict(d, sub) != Verdict::determined) {
            a.recovery.pass = false;
            a.recovery.witness = sub;
            return false;
        }
        return true;
    });

    if (pr.ell > 0)
        for_each_subset(pr.n, pr.ell, [&](const std::vector<int>& sub) {
            if (verdict(d, sub) != Verdict::independent) {
                a.security.pass = false;
                a.security.witness = sub;
                return false;
            }
            return true;
        });

    a.recovery_sets.assign(pr.n, {});
    for (int i = 0; i < pr.n; ++i) {
        bool found = false;
        std::vector<int> declared;
        try {
            declared = recovery_set(s, i);
        } catch (const std::domain_error&) {
            declared.clear();
        }
        if (int(declared.size()) <= pr.r && coordinate_determined(d, i, declared)) {
            a.recovery_sets[i] = declared;
            found = true;
        }
        for (int size = 0; size <= pr.r && !found; ++size) {
            std::vector<int> others;
            for (int j = 0; j < pr.n; ++j)
                if (j != i) others.push_back(j);
            for_each_subset(int(others.size()), size, [&](const std::vector<int>& pick) {
                std::vector<int> cand(pick.size());
                for (std::size_t t = 0; t < pick.size(); ++t) cand[t] = others[pick[t]];
                if (coordinate_determined(d, i, cand)) {
                    a.recovery_sets[i] = cand;
                    found = true;
                    return false;
                }
                return true;
            });
        }
        if (!found) {
            a.locality.pass = false;
            if (!a.locality.witness) a.locality.witness = std::vector<int>{i};
        }
    }
    return a;
}

struct PerfectAudit {
    bool pass = true;
    std::optional<std::vector<int>> bad_qualified;  // qualified but not determined
    std::optional<std::vector<int>> bad_blocked;    // blocked but not independent
};

/// Sweep all 2^n subsets against a declared access structure.
inline PerfectAudit audit_perfect(const JointDistribution& d, const AccessStructure& acc) {
    if (d.n > 20) throw std::length_error("too many shares for the exhaustive perfectness sweep");
    PerfectAudit out;
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << d.n); ++mask) {
        std::vector<int> sub = mask_to_set(mask, d.n);
        if (acc.qualified(mask)) {
            if (verdict(d, sub) != Verdict::determined && !out.bad_qualified) {
                out.pass = false;
                out.bad_qualified = sub;
            }
        } else if (acc.blocked(mask)) {
            if (verdict(d, sub) != Verdict::independent && !out.bad_blocked) {
                out.pass = false;
                out.bad_blocked = sub;
            }
        }
    }
    return out;
}

struct DegradationEntry {
    std::vector<int> subset;
    double h_cond;    // H(S | C_J)
    double budget;    // m - floor(m/(r+1)) - |J|
};

struct DegradationReport {
    std::vector<DegradationEntry> table;
    std::vector<int> best;  // subset minimizing H(S|C_J) - budget
    double best_slack = 0;
    bool satisfied = false;  // some J has H(S|C_J) <= budget
};

/// Ambiguity decay beyond the security radius: tabulate H(S|C_J) for all J
/// with l <= |J| <= m - floor(m/(r+1)) and confirm that some J already meets
/// the budget m - floor(m/(r+1)) - |J|.
inline DegradationReport gradual_degradation(const JointDistribution& d, const SchemeParams& p,
                                             double tol = 1e-9) {
    DegradationReport rep;
    const int hi = p.m - p.m / (p.r + 1);
    bool have_best = false;
    for (int size = p.ell; size <= hi; ++size) {
        for_each_subset(p.n, size, [&](const std::vector<int>& sub) {
            DegradationEntry e;
            e.subset = sub;
            e.h_cond = conditional_secret_entropy(d, sub);
            e.budget = double(hi - size);
            double slack = e.h_cond - e.budget;
            if (!have_best || slack < rep.best_slack - tol) {
                have_best = true;
                rep.best = sub;
                rep.best_slack = slack;
            }
            if (slack <= tol) rep.satisfied = true;
            rep.table.push_back(std::move(e));
            return true;
        });
    }
    return rep;
}

struct PolymatroidReport {
    bool ok = true;
    double worst = 0;  // most negative margin seen across all checked inequalities
    std::string detail;
};

/// The normalized entropy function phi(A) = H(C_A)/H(S) must be zero at the
/// empty set, monotone and submodular; with a declared access structure it
/// gains exactly one unit when S joins a non-qualified set and nothing when S
/// joins a qualified one.
inline PolymatroidReport polymatroid_check(const JointDistribution& d, const AccessStructure* acc,
                                           double tol = 1e-9) {
    if (d.n > 16) throw std::length_error("too many shares for the polymatroid sweep");
    PolymatroidReport rep;
    const double hs = d.secret_entropy();
    const std::uint32_t count = std::uint32_t(1) << d.n;
    std::vector<double> phi(count), phi_s(count);
    for (std::uint32_t mask = 0; mask < count; ++mask) {
        auto e = subset_entropies(d, mask_to_set(mask, d.n));
        phi[mask] = e.h_shares / hs;
        phi_s[mask] = e.h_shares_secret / hs;
    }
    auto note = [&](double margin, const std::string& what) {
        if (margin < rep.worst) rep.worst = margin;
        if (margin < -tol && rep.ok) {
            rep.ok = false;
            rep.detail = what;
        }
    };
    note(phi[0] == 0 ? 0 : -std::abs(phi[0]), "phi(empty) != 0");
    for (std::uint32_t mask = 0; mask < count; ++mask) {
        note(phi[mask], "phi < 0");
        for (int i = 0; i < d.n; ++i)
            if (mask >> i & 1) note(phi[mask] - phi[mask & ~(std::uint32_t(1) << i)], "monotonicity");
    }
    for (std::uint32_t a = 0; a < count; ++a)
        for (std::uint32_t b = 0; b < count; ++b)
            note(phi[a] + phi[b] - phi[a | b] - phi[a & b], "submodularity");
    if (acc) {
        for (std::uint32_t mask = 0; mask < count; ++mask) {
            if (acc->qualified(mask))
                note(tol - std::abs(phi_s[mask] - phi[mask]), "qualified set must absorb S");
            else if (acc->blocked(mask))
                note(tol - std::abs(phi_s[mask] - phi[mask] - 1), "blocked set must add one unit");
        }
    }
    return rep;
}

}  // namespace lrss
