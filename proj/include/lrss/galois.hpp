#pragma once
// Exact arithmetic in GF(p) and GF(p^N).
//
// An element of GF(p^N) is a polynomial of degree < N over GF(p); we encode it
// by its canonical index  sum_j c_j * p^j  (little-endian coefficient order),
// so Fe doubles as an enumeration index in [0, order).  All arithmetic is
// exact; fields with order <= 2^16 get discrete-log tables, larger ones run on
// digit vectors.

#include <algorithm>
#include <array>
#include <cstdint>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace lrss {

using Fe = std::uint64_t;

namespace detail {

constexpr int kMaxDegree = 32;  // order capped at 2^32

inline bool is_prime(std::uint64_t v) {
    if (v < 2) return false;
    for (std::uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

// dense little-endian polynomials over GF(p), used only for modulus search
using Poly = std::vector<std::uint32_t>;

inline void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            acc[i + j] = (acc[i + j] + std::uint64_t(a[i]) * b[j]) % p;
    // reduce by monic f
    const std::size_t deg_f = f.size() - 1;
    for (std::size_t i = acc.size(); i-- > deg_f;) {
        std::uint64_t c = acc[i];
        if (c == 0) continue;
        acc[i] = 0;
        for (std::size_t j = 0; j < deg_f; ++j)
            acc[i - deg_f + j] = (acc[i - deg_f + j] + c * (p - f[j])) % p;
    }
    Poly r(acc.begin(), acc.begin() + std::min(acc.size(), deg_f));
    poly_trim(r);
    return r;
}

inline Poly poly_xpowmod(std::uint64_t e_base, int e_exp, const Poly& f, std::uint64_t p) {
    // computes x^(e_base^e_exp) mod f by repeated base-power maps
    Poly x = {0, 1};
    if (f.size() <= 2) x = poly_mulmod({1}, x, f, p);  // degree-1 modulus
    Poly r = x;
    for (int it = 0; it < e_exp; ++it) {
        // r <- r^(e_base) mod f, square-and-multiply
        Poly acc = {1};
        Poly base = r;
        std::uint64_t e = e_base;
        while (e) {
            if (e & 1) acc = poly_mulmod(acc, base, f, p);
            base = poly_mulmod(base, base, f, p);
            e >>= 1;
        }
        r = acc;
    }
    return r;
}

inline Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        // a mod b
        while (a.size() >= b.size() && !a.empty()) {
            std::uint64_t lead_inv = 1;
            {  // inverse of b's leading coefficient mod p
                std::uint64_t base = b.back() % p, e = p - 2, r = 1;
                while (e) {
                    if (e & 1) r = r * base % p;
                    base = base * base % p;
                    e >>= 1;
                }
                lead_inv = r;
            }
            std::uint64_t c = std::uint64_t(a.back()) * lead_inv % p;
            std::size_t shift = a.size() - b.size();
            for (std::size_t j = 0; j < b.size(); ++j)
                a[shift + j] = std::uint32_t((a[shift + j] + c * (p - b[j])) % p);
            poly_trim(a);
        }
        std::swap(a, b);
    }
    return a;
}

inline bool poly_irreducible(const Poly& f, std::uint64_t p) {
    const int n = int(f.size()) - 1;
    if (n < 1) return false;
    if (n == 1) return true;
    // x^(p^n) == x mod f
    Poly xp = poly_xpowmod(p, n, f, p);
    Poly x = {0, 1};
    if (xp != x) return false;
    // gcd(x^(p^(n/t)) - x, f) == 1 for every prime t | n
    int m = n;
    for (int t = 2; t <= m; ++t) {
        if (m % t) continue;
        while (m % t == 0) m /= t;
        Poly g = poly_xpowmod(p, n / t, f, p);
        // g - x
        if (g.size() < 2) g.resize(2, 0);
        g[1] = std::uint32_t((g[1] + p - 1) % p);
        poly_trim(g);
        Poly d = poly_gcd(g, f, p);
        if (d.size() != 1) return false;
    }
    return true;
}

}  // namespace detail

/// Description of GF(p^N): characteristic, extension degree, and the monic
/// irreducible modulus (little-endian coefficients, length N+1, top = 1).
struct FieldSpec {
    std::uint64_t p = 2;
    int n = 1;
    std::vector<std::uint32_t> modulus;
};

/// Deterministic modulus: scan x^N + c in increasing index order (c read as a
/// base-p counter over the low N coefficients) and take the first irreducible
/// polynomial, so equal (p, N) always yield the same field.
inline FieldSpec find_field_spec(std::uint64_t p, int n) {
    if (!detail::is_prime(p)) throw std::invalid_argument("field characteristic is not prime");
    if (n < 1 || n > detail::kMaxDegree) throw std::invalid_argument("extension degree out of range");
    long double ord = 1;
    for (int i = 0; i < n; ++i) ord *= (long double)p;
    if (ord > 4294967296.0L) throw std::invalid_argument("field order exceeds 2^32");
    FieldSpec s;
    s.p = p;
    s.n = n;
    if (n == 1) {
        s.modulus = {0, 1};
        return s;
    }
    std::uint64_t limit = 1;
    for (int i = 0; i < n; ++i) limit *= p;
    for (std::uint64_t v = 0; v < limit; ++v) {
        detail::Poly f(n + 1, 0);
        std::uint64_t t = v;
        for (int j = 0; j < n; ++j) {
            f[j] = std::uint32_t(t % p);
            t /= p;
        }
        f[n] = 1;
        if (detail::poly_irreducible(f, p)) {
            s.modulus = f;
            return s;
        }
    }
    throw std::logic_error("no irreducible modulus found");  // unreachable
}

/// Handle to an immutable finite field; cheap to copy, operations are pure.
class Field {
  public:
    Field() : Field(FieldSpec{2, 1, {0, 1}}) {}

    explicit Field(FieldSpec spec) : impl_(std::make_shared<Impl>(std::move(spec))) {}

    static Field prime(std::uint64_t p) { return Field(find_field_spec(p, 1)); }
    static Field extension(std::uint64_t p, int n) { return Field(find_field_spec(p, n)); }

    const FieldSpec& spec() const { return impl_->spec; }
    std::uint64_t characteristic() const { return impl_->p; }
    int degree() const { return impl_->n; }
    std::uint64_t order() const { return impl_->order; }
    bool same_as(const Field& o) const {
        return impl_ == o.impl_ || (impl_->p == o.impl_->p && impl_->spec.modulus == o.impl_->spec.modulus);
    }

    Fe zero() const { return 0; }
    Fe one() const { return 1; }

    Fe add(Fe a, Fe b) const {
        check(a), check(b);
        if (impl_->p == 2) return a ^ b;
        if (impl_->n == 1) return (a + b) % impl_->p;
        Digits da, db;
        unpack(a, da);
        unpack(b, db);
        for (int i = 0; i < impl_->n; ++i) da[i] = (da[i] + db[i]) % impl_->p;
        return pack(da);
    }

    Fe neg(Fe a) const {
        check(a);
        if (impl_->p == 2) return a;
        if (impl_->n == 1) return a ? impl_->p - a : 0;
        Digits da;
        unpack(a, da);
        for (int i = 0; i < impl_->n; ++i) da[i] = da[i] ? impl_->p - da[i] : 0;
        return pack(da);
    }

    Fe sub(Fe a, Fe b) const { return add(a, neg(b)); }

    Fe mul(Fe a, Fe b) const {
        check(a), check(b);
        if (a == 0 || b == 0) return 0;
        if (impl_->tables) {
            std::uint64_t s = std::uint64_t(impl_->logt[a]) + impl_->logt[b];
            return impl_->expt[s];
        }
        if (impl_->n == 1) return a * b % impl_->p;
        return mul_digits(a, b);
    }

    Fe inv(Fe a) const {
        check(a);
        if (a == 0) throw std::domain_error("zero inverse");
        if (impl_->tables) return impl_->expt[impl_->order - 1 - impl_->logt[a]];
        return pow(a, impl_->order - 2);
    }

    Fe pow(Fe a, std::uint64_t e) const {
        check(a);
        if (a == 0) return e == 0 ? 1 : 0;
        if (impl_->tables) {
            std::uint64_t ord = impl_->order - 1;
            return impl_->expt[impl_->logt[a] * (e % ord) % ord];
        }
        Fe r = 1, base = a;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    /// x -> x^(q^i) with q = characteristic; GF(q)-linear and additive.
    Fe frobenius(Fe a, int i) const {
        check(a);
        if (i < 0) throw std::invalid_argument("negative frobenius index");
        int k = i % impl_->n;
        std::uint64_t e = 1;
        for (int j = 0; j < k; ++j) e *= impl_->p;
        return pow(a, e);
    }

    std::vector<std::uint32_t> coeffs(Fe a) const {
        check(a);
        std::vector<std::uint32_t> c(impl_->n);
        for (int i = 0; i < impl_->n; ++i) {
            c[i] = std::uint32_t(a % impl_->p);
            a /= impl_->p;
        }
        return c;
    }

    Fe from_coeffs(const std::vector<std::uint32_t>& c) const {
        if (int(c.size()) != impl_->n) throw std::invalid_argument("coefficient count != extension degree");
        Fe a = 0;
        for (int i = impl_->n; i-- > 0;) {
            if (c[i] >= impl_->p) throw std::invalid_argument("coefficient out of range");
            a = a * impl_->p + c[i];
        }
        return a;
    }

    /// residue of the prime subfield as a constant of this field
    Fe embed(std::uint64_t residue) const { return residue % impl_->p; }

    /// the i-th power-basis element x^i (basis of GF(q^N) over GF(q))
    Fe basis(int i) const {
        if (i < 0 || i >= impl_->n) throw std::invalid_argument("basis index out of range");
        Fe a = 1;
        for (int j = 0; j < i; ++j) a *= impl_->p;
        return a;
    }

  private:
    using Digits = std::array<std::uint64_t, 2 * detail::kMaxDegree>;

    struct Impl {
        FieldSpec spec;
        std::uint64_t p;
        int n;
        std::uint64_t order;
        std::vector<std::array<std::uint64_t, detail::kMaxDegree>> red;  // x^(n+i) mod modulus
        bool tables = false;
        std::vector<Fe> expt;       // g^0 .. g^(2(order-1)-1), doubled to skip a mod
        std::vector<std::uint32_t> logt;

        explicit Impl(FieldSpec s) : spec(std::move(s)) {
            p = spec.p;
            n = spec.n;
            if (!detail::is_prime(p)) throw std::invalid_argument("field characteristic is not prime");
            if (n < 1 || n > detail::kMaxDegree) throw std::invalid_argument("extension degree out of range");
            if (int(spec.modulus.size()) != n + 1 || spec.modulus.back() != 1)
                throw std::invalid_argument("modulus must be monic of degree N");
            for (auto c : spec.modulus)
                if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
            if (n > 1 && !detail::poly_irreducible(detail::Poly(spec.modulus), p))
                throw std::invalid_argument("modulus not irreducible");
            long double ord = 1;
            for (int i = 0; i < n; ++i) {
                ord *= (long double)p;
                if (ord > 4294967296.0L) throw std::invalid_argument("field order exceeds 2^32");
            }
            order = 1;
            for (int i = 0; i < n; ++i) order *= p;
            // reduction rows for digit-mode multiplication
            red.resize(std::max(0, n - 1));
            std::vector<std::uint64_t> cur(2 * n, 0);  // x^n reduced
            for (int j = 0; j < n; ++j) cur[j] = (p - spec.modulus[j]) % p;
            for (int i = 0; i < n - 1; ++i) {
                for (int j = 0; j < n; ++j) red[i][j] = cur[j];
                // multiply by x and re-reduce the single overflow term
                std::vector<std::uint64_t> nxt(2 * n, 0);
                for (int j = 0; j < n; ++j) nxt[j + 1] = cur[j];
                std::uint64_t c = nxt[n];
                nxt[n] = 0;
                if (c)
                    for (int j = 0; j < n; ++j) nxt[j] = (nxt[j] + c * ((p - spec.modulus[j]) % p)) % p;
                cur = nxt;
            }
            if (order <= 65536) build_tables();
        }

        void build_tables() {
            // factor order-1, then find a generator
            std::uint64_t m = order - 1;
            std::vector<std::uint64_t> primes;
            for (std::uint64_t d = 2; d * d <= m; ++d)
                if (m % d == 0) {
                    primes.push_back(d);
                    while (m % d == 0) m /= d;
                }
            if (m > 1) primes.push_back(m);
            auto pow_nt = [&](Fe a, std::uint64_t e) {
                Fe r = 1, b = a;
                while (e) {
                    if (e & 1) r = mul_raw(r, b);
                    b = mul_raw(b, b);
                    e >>= 1;
                }
                return r;
            };
            Fe g = 0;
            for (Fe cand = 1; cand < order; ++cand) {
                bool ok = true;
                for (auto q : primes)
                    if (pow_nt(cand, (order - 1) / q) == 1) {
                        ok = false;
                        break;
                    }
                if (ok) {
                    g = cand;
                    break;
                }
            }
            expt.resize(2 * (order - 1));
            logt.assign(order, 0);
            Fe cur = 1;
            for (std::uint64_t i = 0; i < order - 1; ++i) {
                expt[i] = cur;
                logt[cur] = std::uint32_t(i);
                cur = mul_raw(cur, g);
            }
            for (std::uint64_t i = 0; i < order - 1; ++i) expt[order - 1 + i] = expt[i];
            tables = true;
        }

        Fe mul_raw(Fe a, Fe b) const {
            if (a == 0 || b == 0) return 0;
            if (n == 1) return a * b % p;
            std::array<std::uint64_t, detail::kMaxDegree> da{}, db{};
            {
                Fe t = a;
                for (int i = 0; i < n; ++i) {
                    da[i] = t % p;
                    t /= p;
                }
                t = b;
                for (int i = 0; i < n; ++i) {
                    db[i] = t % p;
                    t /= p;
                }
            }
            std::array<std::uint64_t, 2 * detail::kMaxDegree> acc{};
            for (int i = 0; i < n; ++i) {
                if (!da[i]) continue;
                for (int j = 0; j < n; ++j) acc[i + j] += da[i] * db[j];
            }
            for (int i = 0; i < 2 * n - 1; ++i) acc[i] %= p;
            for (int i = 2 * n - 2; i >= n; --i) {
                std::uint64_t c = acc[i];
                if (!c) continue;
                acc[i] = 0;
                const auto& row = red[i - n];
                for (int j = 0; j < n; ++j) acc[j] = (acc[j] + c * row[j]) % p;
            }
            Fe r = 0;
            for (int i = n; i-- > 0;) r = r * p + acc[i];
            return r;
        }
    };

    void check(Fe a) const {
        if (a >= impl_->order) throw std::invalid_argument("element index out of field range");
    }

    void unpack(Fe a, Digits& d) const {
        for (int i = 0; i < impl_->n; ++i) {
            d[i] = a % impl_->p;
            a /= impl_->p;
        }
    }

    Fe pack(const Digits& d) const {
        Fe a = 0;
        for (int i = impl_->n; i-- > 0;) a = a * impl_->p + d[i];
        return a;
    }

    Fe mul_digits(Fe a, Fe b) const { return impl_->mul_raw(a, b); }

    std::shared_ptr<const Impl> impl_;
};

/// q-linearized polynomial: coeffs[i] multiplies y^(q^i).
struct LinearizedPoly {
    std::vector<Fe> coeffs;
};

inline Fe linearized_eval(const Field& f, const LinearizedPoly& poly, Fe y) {
    if (poly.coeffs.empty()) throw std::invalid_argument("linearized polynomial needs a coefficient");
    Fe acc = 0;
    Fe yq = y;  // y^(q^i)
    for (std::size_t i = 0; i < poly.coeffs.size(); ++i) {
        acc = f.add(acc, f.mul(poly.coeffs[i], yq));
        yq = f.frobenius(yq, 1);
    }
    return acc;
}

}  // namespace lrss
