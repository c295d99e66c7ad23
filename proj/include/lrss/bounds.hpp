#pragma once
// Closed-form capacity and distance bounds for locally repairable secret
// sharing, the greedy recovery-set cover behind the main converse, and the
// share-size lower bound for perfect schemes with locality.

#include <cstdint>
#include <map>
#include <string>

#include "lrss/lrc.hpp"
#include "lrss/rat.hpp"

namespace lrss::bounds {

inline long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

/// d <= n - k - ceil(k/r) + 2
inline long long locality_distance_bound(long long n, long long k, long long r) {
    if (k < 1 || k > n || r < 1) throw std::invalid_argument("bad bound parameters");
    return n - k - ceil_div(k, r) + 2;
}

/// k <= m - ell - floor((m - ell) / (r+1))
inline long long naive_secrecy_bound(long long m, long long ell, long long r) {
    if (m <= ell || ell < 0 || r < 1) throw std::invalid_argument("bad bound parameters");
    return m - ell - (m - ell) / (r + 1);
}

/// k <= m - floor(m/(r+1)) - ell
inline long long secrecy_bound(long long m, long long ell, long long r) {
    if (m <= ell || ell < 0 || r < 1) throw std::invalid_argument("bad bound parameters");
    return m - m / (r + 1) - ell;
}

/// m >= k + ell + ceil((k+ell)/r) - 1
inline long long min_recovery_size(long long k, long long ell, long long r) {
    if (k < 1 || ell < 0 || r < 1) throw std::invalid_argument("bad bound parameters");
    return k + ell + ceil_div(k + ell, r) - 1;
}

struct Roundtrip {
    long long y;
    long long x_back;
};

/// y = x + ceil(x/r) - 1 and its inverse x = y - floor(y/(r+1)); the two
/// forms of the secrecy bound are equivalent exactly because x_back == x.
inline Roundtrip bound_form_roundtrip(long long x, long long r) {
    if (x < 1 || r < 1) throw std::invalid_argument("bad bound parameters");
    long long y = x + ceil_div(x, r) - 1;
    return {y, y - y / (r + 1)};
}

struct RecoveryCover {
    std::vector<int> selected;        // the m-subset M, sorted
    std::vector<int> covered_groups;  // groups whose whole recovery span landed in M
    std::vector<int> reduced;         // M minus one coordinate per covered group
};

/// Greedy accumulation of whole recovery groups into an m-subset (smallest
/// uncovered coordinate first), then the functional reduction that drops one
/// recoverable coordinate per fully covered group.  The reduction always
/// leaves at most m - floor(m/(r+1)) coordinates that still determine all of
/// the selected set.
inline RecoveryCover greedy_recovery_cover(const LocalityStructure& loc, int m) {
    if (m < 1 || m > loc.n) throw std::invalid_argument("m out of range");
    std::vector<char> in(loc.n, 0);
    int size = 0;
    while (true) {
        int t = -1;
        for (int i = 0; i < loc.n; ++i)
            if (!in[i]) {
                t = i;
                break;
            }
        if (t < 0) break;
        const auto& lambda = loc.groups[loc.group_of(t)];
        int grow = 0;
        for (int i : lambda) grow += !in[i];
        if (size + grow < m) {
            for (int i : lambda) in[i] = 1;
            size += grow;
            continue;
        }
        if (size + grow == m) {
            for (int i : lambda) in[i] = 1;
            size += grow;
        } else {
            for (int i = 0; i < loc.n && size < m; ++i)
                if (!in[i]) {
                    in[i] = 1;
                    ++size;
                }
        }
        break;
    }

    RecoveryCover out;
    for (int i = 0; i < loc.n; ++i)
        if (in[i]) out.selected.push_back(i);
    std::vector<char> drop(loc.n, 0);
    for (std::size_t g = 0; g < loc.groups.size(); ++g) {
        bool whole = true;
        for (int i : loc.groups[g]) whole = whole && in[i];
        if (whole) {
            out.covered_groups.push_back(int(g));
            drop[loc.groups[g].front()] = 1;  // one recoverable coordinate per group
        }
    }
    for (int i : out.selected)
        if (!drop[i]) out.reduced.push_back(i);
    return out;
}

/// k/n <= r/(r+delta) - ell/n, exact
inline Rat coop_rate_bound(long long n, long long r, long long delta, long long ell) {
    if (n < 1 || r < 1 || delta < 1 || ell < 0) throw std::invalid_argument("bad bound parameters");
    return Rat(Int(r), Int(r + delta)) - Rat(Int(ell), Int(n));
}

/// k + ell <= m - floor(m/(r+delta))*delta - h,  h = (m mod (r+delta) - r)^+
inline long long coop_general_bound(long long m, long long r, long long delta) {
    if (m < 1 || r < 1 || delta < 1) throw std::invalid_argument("bad bound parameters");
    long long h = m % (r + delta) - r;
    if (h < 0) h = 0;
    return m - (m / (r + delta)) * delta - h;
}

struct ShareSizeBound {
    long long eta;
    Rat coefficient;  // average share entropy >= coefficient * H(S)
};

/// Largest eta (a multiple of r+1) with
///   eta - floor(eta/(r+1)) + 2^eta - (r+2)^(eta/(r+1)) + 1 <= n*r/(r+1),
/// and the resulting coefficient (r+1)(2^eta - (r+2)^(eta/(r+1))) / (eta*r).
inline ShareSizeBound share_size_bound(long long n, long long r) {
    if (r < 1 || n < 1 || n % (r + 1) != 0) throw std::invalid_argument("bad bound parameters");
    const Int budget = Int(n) * r / (r + 1);
    long long best = 0;
    for (long long eta = r + 1;; eta += r + 1) {
        if (eta > 62) break;  // 2^eta alone dwarfs any desk-scale n long before this
        Int lhs = Int(eta) - Int(eta / (r + 1)) + (Int(1) << unsigned(eta)) -
                  boost::multiprecision::pow(Int(r + 2), unsigned(eta / (r + 1))) + 1;
        if (lhs <= budget) best = eta;
    }
    if (best == 0) throw std::domain_error("n too small for bound");
    Int top = (Int(1) << unsigned(best)) - boost::multiprecision::pow(Int(r + 2), unsigned(best / (r + 1)));
    return {best, Rat(Int(r + 1) * top, Int(best) * r)};
}

}  // namespace lrss::bounds
