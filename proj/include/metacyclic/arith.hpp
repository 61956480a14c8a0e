#pragma once

/// Exact elementary number theory on machine-width naturals: valuations,
/// p-parts, geometric sums, multiplicative orders, CRT with non-coprime
/// moduli, and linear congruences. Intermediate products go through
/// 128-bit arithmetic; anything that would wrap a 64-bit natural throws.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace metacyclic {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using i64 = std::int64_t;
using i128 = __int128;

inline u64 checked_mul(u64 a, u64 b) {
    u128 p = static_cast<u128>(a) * b;
    if (p > ~static_cast<u64>(0))
        throw std::overflow_error("checked_mul: 64-bit overflow");
    return static_cast<u64>(p);
}

inline u64 checked_add(u64 a, u64 b) {
    u64 r = a + b;
    if (r < a) throw std::overflow_error("checked_add: 64-bit overflow");
    return r;
}

inline u64 mulmod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

/// a^e mod m by square-and-multiply. m = 1 yields 0.
inline u64 powmod(u64 a, u64 e, u64 m) {
    if (m == 0) throw std::invalid_argument("powmod: modulus 0");
    u64 r = 1 % m;
    a %= m;
    while (e > 0) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

inline u64 gcd_u64(u64 a, u64 b) {
    while (b != 0) {
        u64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline u64 lcm_u64(u64 a, u64 b) {
    if (a == 0 || b == 0) return 0;
    return checked_mul(a / gcd_u64(a, b), b);
}

/// g = gcd(a,b) together with x,y such that a*x + b*y = g.
inline i64 egcd(i64 a, i64 b, i64& x, i64& y) {
    if (b == 0) {
        x = 1;
        y = 0;
        return a;
    }
    i64 x1, y1;
    i64 g = egcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

/// p-adic valuation v_p(k). Rejects k = 0.
inline u64 vp(u64 p, u64 k) {
    if (k == 0) throw std::invalid_argument("vp: valuation of 0 undefined");
    u64 e = 0;
    while (k % p == 0) {
        k /= p;
        ++e;
    }
    return e;
}

/// p^{v_p(k)}, the maximal power of p dividing k.
inline u64 p_part_of(u64 p, u64 k) {
    if (k == 0) throw std::invalid_argument("p_part_of: k = 0");
    u64 q = 1;
    while (k % p == 0) {
        k /= p;
        q *= p;
    }
    return q;
}

/// Natural number together with its prime factorization.
struct PrimePowerSplit {
    u64 value = 1;
    std::map<u64, unsigned> factorization;  // prime -> exponent
};

/// Factorization by trial division; fine for desk-scale orders.
inline PrimePowerSplit factorize(u64 k) {
    if (k == 0) throw std::invalid_argument("factorize: k = 0");
    PrimePowerSplit out;
    out.value = k;
    for (u64 p = 2; p * p <= k; p += (p == 2 ? 1 : 2)) {
        while (k % p == 0) {
            ++out.factorization[p];
            k /= p;
        }
    }
    if (k > 1) ++out.factorization[k];
    return out;
}

/// pi(k): the set of primes dividing k; pi(1) is empty.
inline std::set<u64> prime_set(u64 k) {
    std::set<u64> out;
    for (auto& [p, e] : factorize(k).factorization) out.insert(p);
    return out;
}

/// k_pi = prod_{p in pi} p^{v_p(k)}; the empty set gives 1.
inline u64 part(u64 k, const std::set<u64>& pi) {
    if (k == 0) throw std::invalid_argument("part: k = 0");
    u64 out = 1;
    for (u64 p : pi) out = checked_mul(out, p_part_of(p, k));
    return out;
}

/// k_{pi'} = k / k_pi.
inline u64 part_coprime(u64 k, const std::set<u64>& pi) { return k / part(k, pi); }

/// Geometric sum S(a,k) = 1 + a + ... + a^{k-1} mod `modulus`, by the
/// halving recursion S(a,2k) = S(a,k)(1 + a^k); division by a-1 is not
/// generally valid mod a composite, so the closed form is avoided.
inline u64 ese(u64 a, u64 k, u64 modulus) {
    if (modulus == 0) throw std::invalid_argument("ese: modulus 0");
    a %= modulus;
    u64 sum = 0;      // S(a, done) mod modulus
    u64 apow = 1 % modulus;  // a^done mod modulus
    // Build k from its most significant bit downward.
    if (k == 0) return 0;
    int hi = 63;
    while (!((k >> hi) & 1)) --hi;
    for (int b = hi; b >= 0; --b) {
        // double: S(2d) = S(d)*(1+a^d), a^{2d} = (a^d)^2
        sum = mulmod(sum, (1 + apow) % modulus, modulus);
        apow = mulmod(apow, apow, modulus);
        if ((k >> b) & 1) {
            // increment: S(d+1) = a*S(d) + 1
            sum = (mulmod(sum, a, modulus) + 1) % modulus;
            apow = mulmod(apow, a, modulus);
        }
    }
    return sum;
}

/// Carmichael's lambda(m): the exponent of U_m.
inline u64 carmichael_lambda(u64 m) {
    u64 out = 1;
    for (auto& [p, e] : factorize(m).factorization) {
        u64 pe = 1;
        for (unsigned i = 0; i < e; ++i) pe *= p;
        u64 l;
        if (p == 2)
            l = (e <= 2) ? (pe / 2) : (pe / 4);
        else
            l = pe / p * (p - 1);
        out = lcm_u64(out, l);
    }
    return out;
}

/// Multiplicative order of t mod m. Requires gcd(t,m) = 1.
inline u64 mult_order(u64 t, u64 m) {
    if (m == 0) throw std::invalid_argument("mult_order: modulus 0");
    if (m == 1) return 1;
    t %= m;
    if (gcd_u64(t, m) != 1)
        throw std::invalid_argument("mult_order: gcd(t, m) != 1");
    u64 d = carmichael_lambda(m);
    for (auto& [q, e] : factorize(d).factorization) {
        (void)e;
        while (d % q == 0 && powmod(t, d / q, m) == 1) d /= q;
    }
    return d;
}

/// One congruence x = residue (mod modulus).
struct Congruence {
    u64 residue;
    u64 modulus;
};

/// Solve a simultaneous system with not-necessarily-coprime moduli.
/// Returns (x, L) with L = lcm of the moduli, or nullopt if the system
/// is incompatible.
inline std::optional<Congruence> crt(const std::vector<Congruence>& congruences) {
    if (congruences.empty()) throw std::invalid_argument("crt: empty system");
    u64 x = congruences[0].residue % congruences[0].modulus;
    u64 L = congruences[0].modulus;
    for (std::size_t k = 1; k < congruences.size(); ++k) {
        u64 a2 = congruences[k].residue % congruences[k].modulus;
        u64 n2 = congruences[k].modulus;
        u64 g = gcd_u64(L, n2);
        if ((a2 % g) != (x % g)) return std::nullopt;
        u64 L2 = lcm_u64(L, n2);
        // x + L*k = a2 (mod n2)  =>  k = (a2 - x)/g * inv(L/g) (mod n2/g)
        u64 n2g = n2 / g;
        i64 inv_x, inv_y;
        egcd(static_cast<i64>((L / g) % n2g), static_cast<i64>(n2g), inv_x, inv_y);
        i128 diff = (static_cast<i128>(a2) - static_cast<i128>(x)) / g;
        i128 kk = diff % static_cast<i64>(n2g) * inv_x % static_cast<i64>(n2g);
        if (kk < 0) kk += n2g;
        x = static_cast<u64>((static_cast<u128>(x) + static_cast<u128>(L) * static_cast<u64>(kk)) % L2);
        L = L2;
    }
    return Congruence{x, L};
}

/// Least nonnegative x with a*x = b (mod m). Throws if gcd(a,m) does not
/// divide b: that signals a violated algorithm precondition upstream.
inline u64 solve_linear(u64 a, u64 b, u64 m) {
    if (m == 0) throw std::invalid_argument("solve_linear: modulus 0");
    a %= m;
    b %= m;
    if (m == 1) return 0;
    u64 g = gcd_u64(a, m);
    if (g == 0) g = m;  // a = 0
    if (b % g != 0)
        throw std::domain_error("solve_linear: gcd(a,m) does not divide b");
    u64 m2 = m / g;
    if (m2 == 1) return 0;
    i64 ix, iy;
    egcd(static_cast<i64>((a / g) % m2), static_cast<i64>(m2), ix, iy);
    i128 x = static_cast<i128>(ix) % static_cast<i64>(m2) * static_cast<i64>((b / g) % m2) % static_cast<i64>(m2);
    if (x < 0) x += m2;
    return static_cast<u64>(x);
}

}  // namespace metacyclic
