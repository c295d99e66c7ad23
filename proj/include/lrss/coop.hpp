#pragma once
// Cooperative repair: up to delta simultaneous failures must be recoverable
// from one set of at most r surviving shares.  Brute-force verifier with a
// rank memo, a repetition baseline, and the precoding wrap that adds
// eavesdropper security on top of any verified base code.

#include <unordered_map>

#include "lrss/secret.hpp"
#include "lrss/subsets.hpp"

namespace lrss::coop {

struct RepairabilityReport {
    bool ok = true;
    std::optional<std::vector<int>> witness;                 // first failure set with no helper set
    std::map<std::vector<int>, std::vector<int>> helpers;    // failure set -> chosen R
};

/// Exhaustive check of (r,delta)-repairability: for every failure set of size
/// up to delta, search helper sets in increasing size then lexicographic
/// order for one whose rows span the failed rows.
inline RepairabilityReport is_r_delta_repairable(const LinearCode& code, int r, int delta) {
    if (code.n > 16 || delta > 3) throw std::length_error("too large for the cooperative verifier");
    if (r < 1 || delta < 1) throw std::invalid_argument("need r, delta >= 1");
    RepairabilityReport rep;

    std::unordered_map<std::uint32_t, int> rank_memo;
    auto rank_of = [&](std::uint32_t mask) {
        auto it = rank_memo.find(mask);
        if (it != rank_memo.end()) return it->second;
        std::vector<int> rows = mask_to_set(mask, code.n);
        int rk = rows.empty() ? 0 : code.g.select_rows(rows).rank();
        rank_memo.emplace(mask, rk);
        return rk;
    };

    for (int fsize = 1; fsize <= delta && rep.ok; ++fsize) {
        for_each_subset(code.n, fsize, [&](const std::vector<int>& delta_set) {
            const std::uint32_t dmask = set_to_mask(delta_set);
            std::vector<int> survivors;
            for (int i = 0; i < code.n; ++i)
                if (!(dmask >> i & 1)) survivors.push_back(i);
            for (int hsize = 0; hsize <= r; ++hsize) {
                std::optional<std::vector<int>> found;
                for_each_subset(int(survivors.size()), hsize, [&](const std::vector<int>& pick) {
                    std::uint32_t hmask = 0;
                    for (int t : pick) hmask |= std::uint32_t(1) << survivors[t];
                    if (rank_of(hmask) == rank_of(hmask | dmask)) {
                        found = mask_to_set(hmask, code.n);
                        return false;
                    }
                    return true;
                });
                if (found) {
                    rep.helpers[delta_set] = *found;
                    return true;
                }
            }
            rep.ok = false;
            rep.witness = delta_set;
            return false;
        });
    }
    return rep;
}

/// n/(delta+1) message symbols, each stored on delta+1 coordinates; the
/// groups double as the locality structure with r = delta.
inline LinearCode build_repetition_coop(const Field& f, int n, int delta) {
    if (delta < 1 || n % (delta + 1) != 0) throw std::invalid_argument("group size delta+1 must divide n");
    const int dim = n / (delta + 1);
    Matrix g(f, n, dim);
    for (int i = 0; i < n; ++i) g.at(i, i / (delta + 1)) = 1;
    return LinearCode(f, n, dim, std::move(g), LocalityStructure::partition(n, delta));
}

/// Precoding wrap: any verified (r,delta)-repairable linear code of dimension
/// k + l becomes an l-secure scheme over the degree-N extension; repair works
/// columnwise exactly as in the base code.
inline Scheme wrap_secure_coop(const LinearCode& code, int delta, int k, int ell, int big_n) {
    if (!code.locality) throw std::invalid_argument("base code needs a locality structure");
    auto rep = is_r_delta_repairable(code, code.locality->r, delta);
    if (!rep.ok) throw std::invalid_argument("base code fails the (r,delta) verifier");
    return build_gabidulin_scheme(code, k, ell, big_n, SchemeTag::coop, delta);
}

/// Rebuild the shares of a failure set from a helper set whose base rows span
/// it (valid for wrapped schemes because every column is a base codeword).
inline std::map<int, std::vector<Fe>> coop_repair(const Scheme& s, const std::vector<int>& failed,
                                                  const std::vector<int>& helpers,
                                                  const std::map<int, std::vector<Fe>>& observed) {
    if (s.tag != SchemeTag::coop && s.tag != SchemeTag::gabidulin)
        throw std::invalid_argument("cooperative repair needs a precoded scheme");
    const auto& p = std::get<GabidulinPayload>(s.payload);
    const Field& f = s.share_field;
    for (int j : helpers)
        if (!observed.count(j)) throw std::invalid_argument("incomplete helper set");
    std::map<int, std::vector<Fe>> out;
    Matrix helper_rows_t = p.base.g.select_rows(helpers).transpose();
    for (int i : failed) {
        auto lam = solve_any(helper_rows_t, p.base.g.row(i));
        if (!lam) throw std::domain_error("helper set does not span the failed share");
        Fe acc = 0;
        for (std::size_t j = 0; j < helpers.size(); ++j)
            acc = f.add(acc, f.mul(f.embed((*lam)[j]), observed.at(helpers[j])[0]));
        out[i] = {acc};
    }
    return out;
}

}  // namespace lrss::coop
