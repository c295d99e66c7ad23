#pragma once
// Access structures: which share subsets determine the secret (qualified) and
// which must learn nothing (blocked).  Perfect structures have blocked equal
// to the complement of qualified; the recovery/security pair of an
// (n,k,l,m,r) scheme is the non-perfect threshold special case.

#include <cstdint>
#include <vector>

#include "lrss/lrc.hpp"

namespace lrss {

inline std::vector<int> mask_to_set(std::uint32_t mask, int n) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
        if (mask >> i & 1) s.push_back(i);
    return s;
}

inline std::uint32_t set_to_mask(const std::vector<int>& s) {
    std::uint32_t m = 0;
    for (int i : s) m |= std::uint32_t(1) << i;
    return m;
}

class AccessStructure {
  public:
    /// qualified iff |A| >= m, blocked iff |A| <= ell; perfect only when ell = m-1
    static AccessStructure threshold(int n, int m, int ell) {
        AccessStructure a;
        a.n_ = n;
        a.kind_ = Kind::threshold;
        a.m_ = m;
        a.ell_ = ell;
        return a;
    }

    static AccessStructure perfect_threshold(int n, int m) { return threshold(n, m, m - 1); }

    /// monotone closure of an antichain of minimal qualified sets; perfect
    static AccessStructure from_minimal(int n, std::vector<std::vector<int>> minimal) {
        AccessStructure a;
        a.n_ = n;
        a.kind_ = Kind::minimal;
        a.minimal_.reserve(minimal.size());
        for (auto& s : minimal) a.minimal_.push_back(set_to_mask(s));
        return a;
    }

    /// qualified iff sum_j min(|A ∩ Q_j|, r) >= kappa; perfect
    static AccessStructure effective_threshold(const LocalityStructure& loc, int kappa) {
        AccessStructure a;
        a.n_ = loc.n;
        a.kind_ = Kind::effective;
        a.r_ = loc.r;
        a.kappa_ = kappa;
        for (const auto& q : loc.groups) a.group_masks_.push_back(set_to_mask(q));
        return a;
    }

    int n() const { return n_; }

    bool qualified(std::uint32_t mask) const {
        switch (kind_) {
            case Kind::threshold:
                return popcount(mask) >= m_;
            case Kind::minimal:
                for (auto s : minimal_)
                    if ((mask & s) == s) return true;
                return false;
            case Kind::effective: {
                int eff = 0;
                for (auto g : group_masks_) eff += std::min(popcount(mask & g), r_);
                return eff >= kappa_;
            }
        }
        return false;
    }

    bool blocked(std::uint32_t mask) const {
        if (kind_ == Kind::threshold) return popcount(mask) <= ell_;
        return !qualified(mask);  // perfect kinds
    }

    bool is_perfect() const { return kind_ != Kind::threshold || ell_ == m_ - 1; }

    /// maximal blocked sets, by exhaustive scan (n <= 20)
    std::vector<std::vector<int>> maximal_blocked() const {
        if (n_ > 20) throw std::length_error("too many participants for exhaustive block-list");
        std::vector<std::vector<int>> out;
        const std::uint32_t all = (n_ == 32) ? ~0u : ((std::uint32_t(1) << n_) - 1);
        for (std::uint32_t mask = 0; mask <= all; ++mask) {
            if (!blocked(mask)) continue;
            bool maximal = true;
            for (int i = 0; i < n_ && maximal; ++i)
                if (!(mask >> i & 1) && blocked(mask | (std::uint32_t(1) << i))) maximal = false;
            if (maximal) out.push_back(mask_to_set(mask, n_));
        }
        return out;
    }

    /// size of the smallest qualified set (n <= 20)
    int min_qualified_size() const {
        if (n_ > 20) throw std::length_error("too many participants for exhaustive scan");
        int best = n_ + 1;
        const std::uint32_t all = (std::uint32_t(1) << n_) - 1;
        for (std::uint32_t mask = 0; mask <= all; ++mask)
            if (qualified(mask)) best = std::min(best, popcount(mask));
        return best;
    }

  private:
    enum class Kind { threshold, minimal, effective };

    static int popcount(std::uint32_t v) { return __builtin_popcount(v); }

    int n_ = 0;
    Kind kind_ = Kind::threshold;
    int m_ = 0, ell_ = 0;
    std::vector<std::uint32_t> minimal_;
    std::vector<std::uint32_t> group_masks_;
    int r_ = 0, kappa_ = 0;
};

}  // namespace lrss
