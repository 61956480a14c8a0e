#pragma once

/// Exact element arithmetic in the presented group
///   G = <a, b | a^m = 1, b^n = a^s, a^b = a^t>
/// using the normal form b^i a^j with 0 <= i < n, 0 <= j < m.

#include <string>
#include <vector>

#include "metacyclic/arith.hpp"
#include "metacyclic/units.hpp"

namespace metacyclic {

/// Presentation parameters (m, n, s, t). Valid when gcd(t,m) = 1,
/// t^n = 1 mod m and s(t-1) = 0 mod m; s | m is deliberately NOT
/// required. t is stored reduced mod m (t = 0 only for m = 1) and s is
/// stored in [1, m].
struct MetacyclicParams {
    u64 m = 1, n = 1, s = 1, t = 0;

    friend bool operator==(const MetacyclicParams&, const MetacyclicParams&) = default;
    friend bool operator<(const MetacyclicParams& a, const MetacyclicParams& b) {
        if (a.m != b.m) return a.m < b.m;
        if (a.n != b.n) return a.n < b.n;
        if (a.s != b.s) return a.s < b.s;
        return a.t < b.t;
    }
};

/// Reduce (m,n,s,t) to stored form and check the two consistency
/// congruences. Throws std::invalid_argument naming the violated one.
inline MetacyclicParams make_params(u64 m, u64 n, u64 s, u64 t) {
    if (m == 0 || n == 0 || s == 0)
        throw std::invalid_argument("params: m, n, s must be positive");
    MetacyclicParams p;
    p.m = m;
    p.n = n;
    p.s = (s - 1) % m + 1;  // representative of s mod m in [1, m]
    p.t = t % m;
    if (m > 1 && gcd_u64(p.t, m) != 1)
        throw std::invalid_argument("params: gcd(t, m) != 1");
    if (powmod(p.t, n, m) != 1 % m)
        throw std::invalid_argument("params: t^n != 1 mod m");
    if (m > 1 && mulmod(p.s, (p.t + m - 1) % m, m) != 0)
        throw std::invalid_argument("params: s(t-1) != 0 mod m");
    return p;
}

inline bool params_valid(u64 m, u64 n, u64 s, u64 t) {
    if (m == 0 || n == 0 || s == 0) return false;
    t %= m;
    if (m > 1 && gcd_u64(t, m) != 1) return false;
    if (powmod(t, n, m) != 1 % m) return false;
    if (m > 1 && mulmod(s % m == 0 ? 0 : s % m, (t + m - 1) % m, m) != 0) return false;
    return true;
}

/// Group element in normal form b^i a^j.
struct Elem {
    u64 i = 0, j = 0;
    friend bool operator==(const Elem&, const Elem&) = default;
    friend bool operator<(const Elem& x, const Elem& y) {
        return x.i != y.i ? x.i < y.i : x.j < y.j;
    }
};

/// Concrete model of G_{m,n,s,t}. Immutable once built; every operation
/// is a pure function of the context and its element arguments.
class Group {
  public:
    explicit Group(MetacyclicParams params) : p_(params) {
        order_ = checked_mul(p_.m, p_.n);
        tpow_.resize(p_.n);
        u64 x = 1 % p_.m;
        for (u64 i = 0; i < p_.n; ++i) {
            tpow_[i] = x;
            x = mulmod(x, p_.t % p_.m, p_.m);
        }
        for (auto& [q, e] : factorize(order_).factorization) order_primes_.push_back(q);
    }

    const MetacyclicParams& params() const { return p_; }
    u64 size() const { return order_; }
    Elem identity() const { return {0, 0}; }
    Elem gen_a() const { return {0, 1 % p_.m}; }
    Elem gen_b() const { return {1 % p_.n, p_.n == 1 ? p_.s % p_.m : 0}; }

    /// (b^i1 a^j1)(b^i2 a^j2) = b^rho a^{j1 t^{i2} + j2 + s q},
    /// where i1 + i2 = q n + rho.
    Elem mul(Elem g1, Elem g2) const {
        u64 i = g1.i + g2.i;
        u64 q = i / p_.n;
        u64 j = (mulmod(g1.j, tpow_[g2.i], p_.m) + g2.j + mulmod(q, p_.s % p_.m, p_.m)) % p_.m;
        return {i % p_.n, j};
    }

    Elem inverse(Elem g) const {
        if (g.i == 0) return {0, (p_.m - g.j) % p_.m};
        // (b^i a^j)^{-1} = b^{n-i} a^{-s - j t^{n-i}} since b^{n-i} b^i = b^n = a^s.
        u64 i2 = p_.n - g.i;
        u64 j2 = (2 * p_.m - p_.s % p_.m - mulmod(g.j, tpow_[i2], p_.m)) % p_.m;
        return {i2, j2};
    }

    Elem power(Elem g, i64 e) const {
        if (e < 0) return power(inverse(g), -e);
        Elem acc = identity();
        Elem base = g;
        u64 k = static_cast<u64>(e);
        while (k > 0) {
            if (k & 1) acc = mul(acc, base);
            base = mul(base, base);
            k >>= 1;
        }
        return acc;
    }

    /// Least d >= 1 with g^d = 1, found by stripping primes from |G|.
    u64 order(Elem g) const {
        u64 d = order_;
        for (u64 q : order_primes_)
            while (d % q == 0 && power(g, static_cast<i64>(d / q)) == identity()) d /= q;
        return d;
    }

    Elem conjugate(Elem g, Elem h) const { return mul(mul(inverse(h), g), h); }

    /// g^k with k = 1 mod |g|_pi and k = 0 mod |g|_{pi'}.
    Elem pi_part(Elem g, const std::set<u64>& pi) const {
        u64 d = order(g);
        u64 dpi = part(d, pi);
        u64 dco = d / dpi;
        if (dpi == 1) return identity();
        if (dco == 1) return g;
        auto sol = crt({{1, dpi}, {0, dco}});
        return power(g, static_cast<i64>(sol->residue));
    }

    Elem p_part(Elem g, u64 p) const { return pi_part(g, {p}); }

    Elem p_complement(Elem g, u64 p) const {
        std::set<u64> pi = prime_set(order(g));
        pi.erase(p);
        return pi_part(g, pi);
    }

    /// Least k >= 0 with base^k = target, or nullopt if target is not in
    /// <base>. Bounded enumeration; exact at desk scale.
    std::optional<u64> dlog(Elem base, Elem target) const {
        Elem x = identity();
        u64 d = order(base);
        for (u64 k = 0; k < d; ++k) {
            if (x == target) return k;
            x = mul(x, base);
        }
        return std::nullopt;
    }

    std::vector<Elem> cyclic_elements(Elem g) const {
        std::vector<Elem> out;
        Elem x = identity();
        do {
            out.push_back(x);
            x = mul(x, g);
        } while (!(x == identity()));
        return out;
    }

    /// |<g, h>| by breadth-first closure under right multiplication.
    u64 closure_size(Elem g, Elem h, u64 cap = 4096) const {
        if (order_ > cap)
            throw std::length_error("closure_size: group order exceeds cap");
        std::vector<char> seen(order_, 0);
        std::vector<Elem> stack{identity()};
        seen[encode(identity())] = 1;
        u64 count = 0;
        while (!stack.empty()) {
            Elem x = stack.back();
            stack.pop_back();
            ++count;
            for (Elem y : {mul(x, g), mul(x, h)}) {
                u64 id = encode(y);
                if (!seen[id]) {
                    seen[id] = 1;
                    stack.push_back(y);
                }
            }
        }
        return count;
    }

    std::vector<Elem> all_elements() const {
        std::vector<Elem> out;
        out.reserve(order_);
        for (u64 i = 0; i < p_.n; ++i)
            for (u64 j = 0; j < p_.m; ++j) out.push_back({i, j});
        return out;
    }

    u64 encode(Elem g) const { return g.i * p_.m + g.j; }
    Elem decode(u64 id) const { return {id / p_.m, id % p_.m}; }

  private:
    MetacyclicParams p_;
    u64 order_;
    std::vector<u64> tpow_;  // t^i mod m for 0 <= i < n
    std::vector<u64> order_primes_;
};

/// The data Algorithm-style factorization extraction reads off a pair of
/// generators: m = |<a'>|, n = [G:<a'>], s = [G:<b'>], t with
/// (a')^{b'} = (a')^t and y with (b')^n = (a')^y.
struct FactorizationData {
    u64 m, n, s, t, y;
};

/// Verifies that <a'> is normal and <a'><b'> = G, then extracts the
/// presentation data. Throws std::domain_error naming the violated check.
inline FactorizationData factorization_data(const Group& G, Elem a, Elem b) {
    std::vector<Elem> A = G.cyclic_elements(a);
    std::set<Elem> Aset(A.begin(), A.end());
    if (!Aset.count(G.conjugate(a, b)) || !Aset.count(G.conjugate(a, G.inverse(b))))
        throw std::domain_error("factorization_data: <a'> not normal under b'");
    u64 mA = static_cast<u64>(A.size());
    u64 ordB = G.order(b);
    // |<a'><b'>| = |A||B| / |A ∩ B|
    u64 inter = 0;
    Elem x = G.identity();
    do {
        if (Aset.count(x)) ++inter;
        x = G.mul(x, b);
    } while (!(x == G.identity()));
    if (mA / inter * ordB != G.size())
        throw std::domain_error("factorization_data: <a'><b'> != G");
    u64 nA = G.size() / mA;
    u64 sB = G.size() / ordB;
    auto t = G.dlog(a, G.conjugate(a, b));
    auto y = G.dlog(a, G.power(b, static_cast<i64>(nA)));
    if (!t || !y) throw std::domain_error("factorization_data: dlog failed");
    return {mA, nA, sB, *t, *y};
}

}  // namespace metacyclic
