#pragma once

/// Isomorphism invariants of finite metacyclic groups: the coarse
/// invariant (m, n, s, m', Delta), the standardized parameter tuple
/// (m, n, s, t_G) that classifies up to isomorphism, realizability of
/// prescribed invariants, construction of a group realizing them, and
/// recognition of nilpotent parameter tuples.

#include <algorithm>
#include <vector>

#include "metacyclic/minimize.hpp"

namespace metacyclic {

/// The invariant quintuple (m_G, n_G, s_G, m'_G, Delta_G).
struct MCInv {
    u64 m = 1, n = 1, s = 1;
    u64 m_prime = 1;
    UnitSubgroup delta;

    bool operator==(const MCInv& other) const {
        return m == other.m && n == other.n && s == other.s &&
               m_prime == other.m_prime &&
               delta.modulus == other.delta.modulus &&
               delta.elements == other.delta.elements;
    }
};

/// The standardized parameter tuple: G is isomorphic to G_{m,n,s,t}
/// and two groups are isomorphic iff their tuples coincide.
struct MetacyclicId {
    u64 m = 1, n = 1, s = 1, t = 0;

    bool operator==(const MetacyclicId& other) const {
        return m == other.m && n == other.n && s == other.s && t == other.t;
    }
    bool operator<(const MetacyclicId& other) const {
        if (m != other.m) return m < other.m;
        if (n != other.n) return n < other.n;
        if (s != other.s) return s < other.s;
        return t < other.t;
    }
};

inline MCInv mcinv(const MetacyclicParams& params) {
    MinimalFactorization f = minimize(params);
    UnitSubgroup T = cyclic_subgroup(f.m, f.m == 1 ? 0 : f.t);
    u64 mp = m_prime(T, f.n, f.s);
    return MCInv{f.m, f.n, f.s, mp, residue_map(T, mp)};
}

/// Standardized conjugation exponent: the least t with t = epsilon^{p-1}
/// + r_p mod m_p for all p in pi(r) and Res_{m'}(<t>_m) = Delta.
inline MetacyclicId metacyclic_id(const MetacyclicParams& params) {
    MinimalFactorization f = minimize(params);
    if (f.m == 1) return MetacyclicId{1, f.n, 1, 0};
    UnitSubgroup T = cyclic_subgroup(f.m, f.t);
    u64 mp = m_prime(T, f.n, f.s);
    UnitSubgroup delta = residue_map(T, mp);

    u64 start = 0, stride = 1;
    std::set<u64> pr = prime_set(f.inv.r);
    if (!pr.empty()) {
        std::vector<Congruence> cs;
        for (u64 p : pr) {
            u64 m_p = p_part_of(p, f.m);
            u64 eps = epsilon_pow(f.inv.epsilon, p) == 1 ? 1 : m_p - 1;
            cs.push_back({(eps + p_part_of(p, f.inv.r)) % m_p, m_p});
        }
        auto merged = crt(cs);
        if (!merged) detail::bug("metacyclic_id: inconsistent congruences");
        start = merged->residue;
        stride = merged->modulus;
    }
    for (u64 t = start; t <= f.m; t += stride) {
        if (gcd_u64(t, mp) != 1) continue;
        UnitSubgroup cand = cyclic_subgroup(mp, t % mp);
        if (cand.elements != delta.elements) continue;
        return MetacyclicId{f.m, f.n, f.s, t};
    }
    detail::bug("metacyclic_id: no standardized exponent below m");
}

inline bool are_isomorphic(const MetacyclicParams& g, const MetacyclicParams& h) {
    if (checked_mul(g.m, g.n) != checked_mul(h.m, h.n)) return false;
    return metacyclic_id(g) == metacyclic_id(h);
}

/// Whether (m, n, s, Delta) occurs as the invariant of some metacyclic
/// group. Delta must be a cyclic subgroup of U_{m'} for the m' computed
/// from its own invariant triple; realizability additionally pins m'.
inline bool is_realizable(u64 m, u64 n, u64 s, const UnitSubgroup& delta) {
    if (m == 0 || n == 0 || s == 0 || s > m || m % s != 0) return false;
    u64 mp = delta.modulus;
    if (m % mp != 0) return false;
    TInvariants inv = inv_triple(delta);
    u64 r = inv.r, o = inv.o;

    // |Delta| divides n and Delta <= U_{m'}^{n, s m'/m}.
    if (checked_mul(s, mp) % m != 0) return false;
    u64 sp_scaled = s * mp / m;
    if (n % static_cast<u64>(delta.elements.size()) != 0) return false;
    if (!in_Umns(delta.canonical_generator, mp, n, sp_scaled)) return false;

    // (a) outside pi(r): m_nu = s_nu = m'_nu.
    std::set<u64> pir = prime_set(r);
    u64 m_nu = part_coprime(m, pir);
    if (part_coprime(s, pir) != m_nu) return false;
    if (part_coprime(mp, pir) != m_nu) return false;

    // (b) within pi(r): m' has the prescribed local sizes.
    if (mp != m_prime_from(m, n, s, r, inv.epsilon, o)) return false;

    // (c) the prime 2 when epsilon = -1.
    if (inv.epsilon == -1) {
        u64 m2 = p_part_of(2, m), n2 = p_part_of(2, n);
        u64 s2 = p_part_of(2, s), r2 = p_part_of(2, r);
        if (n % 2 != 0 || m % 4 != 0) return false;
        if (m2 / r2 > n2) return false;
        if (m2 > checked_mul(2, s2)) return false;
        if (s2 == checked_mul(n2, r2)) return false;
        if (n2 >= 4 && m2 >= 8 && p_part_of(2, o) < n2 && r2 > s2) return false;
    }

    // (d) the primes p in pi(r) with epsilon^{p-1} = 1.
    for (u64 p : pir) {
        if (epsilon_pow(inv.epsilon, p) != 1) continue;
        u64 m_p = p_part_of(p, m), n_p = p_part_of(p, n);
        u64 s_p = p_part_of(p, s), r_p = p_part_of(p, r);
        if (m_p / r_p > s_p || s_p > n_p) return false;
        if (r_p > s_p && n_p >= checked_mul(s_p, p_part_of(p, o))) return false;
    }
    return true;
}

/// Produce parameters (m, n, s, t) whose group has the prescribed
/// invariant. Throws std::domain_error if it is not realizable.
inline MetacyclicParams construct(u64 m, u64 n, u64 s, const UnitSubgroup& delta) {
    if (!is_realizable(m, n, s, delta))
        throw std::domain_error("construct: invariant is not realizable");
    if (m == 1) return make_params(1, n, 1, 0);
    u64 mp = delta.modulus;
    TInvariants inv = inv_triple(delta);
    std::set<u64> pir = prime_set(inv.r);

    // A generator of Delta congruent to epsilon^{p-1} + r_p at each
    // local component of m' inside pi(r).
    u64 tp = 0;
    bool found = false;
    for (u64 g : generators_of(delta)) {
        bool ok = true;
        for (u64 p : pir) {
            u64 mp_p = p_part_of(p, mp);
            u64 eps = epsilon_pow(inv.epsilon, p) == 1 ? 1 : mp_p - 1;
            if (g % mp_p != (eps + p_part_of(p, inv.r)) % mp_p) { ok = false; break; }
        }
        if (ok) { tp = g; found = true; break; }
    }
    if (!found) detail::bug("construct: no suitable generator of Delta");

    std::vector<Congruence> cs{{tp % mp, mp}};
    for (u64 p : pir) {
        u64 m_p = p_part_of(p, m);
        u64 eps = epsilon_pow(inv.epsilon, p) == 1 ? 1 : m_p - 1;
        cs.push_back({(eps + p_part_of(p, inv.r)) % m_p, m_p});
    }
    auto merged = crt(cs);
    if (!merged || merged->modulus != m) detail::bug("construct: lift modulus != m");
    u64 t = merged->residue % m;

    MetacyclicParams out = make_params(m, n, s, t);
    UnitSubgroup T = cyclic_subgroup(m, t);
    TInvariants check = inv_triple(T);
    if (!(check.r == inv.r && check.epsilon == inv.epsilon && check.o == inv.o))
        detail::bug("construct: invariant triple mismatch");
    if (residue_map(T, mp).elements != delta.elements)
        detail::bug("construct: residue image differs from Delta");
    if (!in_Umns(t, m, n, s)) detail::bug("construct: t outside U_m^{n,s}");
    return out;
}

inline bool is_nilpotent(const MetacyclicParams& params) {
    return minimize(params).inv.o == 1;
}

/// Whether a standardized tuple (m, n, s, t) belongs to a nilpotent
/// group, decided directly from the arithmetic of the tuple.
inline bool nilpotent_id(const MetacyclicId& id) {
    u64 m = id.m, n = id.n, s = id.s, t = id.t;
    if (s == 0 || s > m || m % s != 0 || t >= std::max<u64>(m, 1)) return false;
    if (m == 1) return true;
    if (t == 1 && s == m && m <= n) return true;
    if (gcd_u64(t, m) != 1) return false;

    std::set<u64> pm = prime_set(m);
    u64 m2 = p_part_of(2, m);

    // Every prime of m divides t - 1, with epsilon = +1 throughout.
    {
        bool ok = n % s == 0;
        for (u64 p : pm)
            if ((t - 1) % p != 0) { ok = false; break; }
        if (ok && m % 4 == 0 && t % 4 != 1) ok = false;
        if (ok) {
            for (u64 p : pm) {
                u64 m_p = p_part_of(p, m);
                u64 r_p = gcd_u64(m_p, (t - 1) % m_p);
                u64 s_p = p_part_of(p, s);
                if (s_p % r_p != 0 || s_p % (m_p / r_p) != 0) { ok = false; break; }
            }
            if (ok) return true;
        }
    }

    // The epsilon = -1 shape at the prime 2.
    if (m % 4 == 0 && (t + 1) % 4 == 0) {
        u64 r2 = gcd_u64(m2, (t + 1) % m2);
        if (r2 < 4) return false;
        u64 n2 = p_part_of(2, n), s2 = p_part_of(2, s);
        if (std::max<u64>(2, m2 / r2) > n2) return false;
        if (m2 > 2 * s2) return false;
        if (s2 == checked_mul(n2, r2)) return false;
        if (n % 4 == 0 && m % 8 == 0 && r2 > s2) return false;
        for (u64 p : pm) {
            if (p == 2) continue;
            if ((t - 1) % p != 0) return false;
            u64 m_p = p_part_of(p, m);
            u64 r_p = gcd_u64(m_p, t - 1);
            u64 s_p = p_part_of(p, s), n_p = p_part_of(p, n);
            if (s_p % r_p != 0 || s_p % (m_p / r_p) != 0) return false;
            if (n_p % s_p != 0) return false;
        }
        return true;
    }
    return false;
}

}  // namespace metacyclic
