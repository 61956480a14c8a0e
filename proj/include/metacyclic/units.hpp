#pragma once

/// Cyclic subgroups of the unit group U_m, the residue maps between
/// moduli, the invariant triple (r, epsilon, o) of such a subgroup, and
/// the derived modulus [T,n,s].

#include <algorithm>
#include <set>
#include <vector>

#include "metacyclic/arith.hpp"

namespace metacyclic {

/// A cyclic subgroup of U_m, stored as its full sorted element set.
/// The canonical generator is the least residue generating the subgroup,
/// so equality of subgroups is plain equality of element vectors.
/// Modulus 1 is the trivial group, represented by the single residue 0.
struct UnitSubgroup {
    u64 modulus = 1;
    std::vector<u64> elements{0};
    u64 canonical_generator = 0;

    u64 order() const { return static_cast<u64>(elements.size()); }
    bool is_trivial() const {
        return modulus == 1 || (elements.size() == 1 && elements[0] == 1);
    }
    friend bool operator==(const UnitSubgroup& a, const UnitSubgroup& b) {
        return a.modulus == b.modulus && a.elements == b.elements;
    }
};

/// The triple inv{T} = (r, epsilon, o).
struct TInvariants {
    u64 r = 1;
    int epsilon = 1;
    u64 o = 1;

    friend bool operator==(const TInvariants&, const TInvariants&) = default;
};

/// epsilon^{p-1}: epsilon at p = 2, else +1.
inline int epsilon_pow(int epsilon, u64 p) { return p == 2 ? epsilon : 1; }

/// <t>_m, the cyclic subgroup of U_m generated by t. Requires gcd(t,m)=1.
inline UnitSubgroup cyclic_subgroup(u64 m, u64 t) {
    if (m == 0) throw std::invalid_argument("cyclic_subgroup: modulus 0");
    UnitSubgroup out;
    out.modulus = m;
    if (m == 1) return out;
    t %= m;
    if (gcd_u64(t, m) != 1)
        throw std::invalid_argument("cyclic_subgroup: gcd(t, m) != 1");
    std::vector<u64> elems;
    u64 x = 1;
    do {
        elems.push_back(x);
        x = mulmod(x, t, m);
    } while (x != 1);
    std::sort(elems.begin(), elems.end());
    out.elements = elems;
    // Least residue that generates the whole subgroup.
    u64 n = static_cast<u64>(elems.size());
    for (u64 g : elems) {
        if (mult_order(g, m) == n) {
            out.canonical_generator = g;
            break;
        }
    }
    return out;
}

/// Res_q(T): the image of T under U_m -> U_q. Requires q | T.modulus.
inline UnitSubgroup residue_map(const UnitSubgroup& T, u64 q) {
    if (q == 0 || T.modulus % q != 0)
        throw std::invalid_argument("residue_map: q does not divide modulus");
    if (q == 1) return UnitSubgroup{};
    if (T.modulus == 1) return cyclic_subgroup(q, 1);
    return cyclic_subgroup(q, T.canonical_generator % q);
}

/// inv{T} = (r, epsilon, o) via the closed forms: r_{2'} = gcd(m_{2'}, t-1),
/// r_2 = max(gcd(m_2, t-1), gcd(m_2, t+1)), epsilon = -1 iff Res_{r_2}(T)
/// is nontrivial, and o the nu'-part of o_{m_nu}(t) with nu = pi(m)\pi(r).
inline TInvariants inv_triple(const UnitSubgroup& T) {
    TInvariants out;
    u64 m = T.modulus;
    if (m == 1) return out;
    u64 t = T.canonical_generator;
    u64 m2 = p_part_of(2, m);
    u64 m2c = m / m2;
    u64 r_odd = m2c == 1 ? 1 : gcd_u64(m2c, (t - 1) % m2c);
    u64 r2 = 1;
    if (m2 > 1) r2 = std::max(gcd_u64(m2, (t - 1) % m2), gcd_u64(m2, (t + 1) % m2));
    out.r = checked_mul(r_odd, r2);
    out.epsilon = (r2 > 1 && (t % r2) != 1) ? -1 : 1;
    std::set<u64> nu = prime_set(m);
    for (u64 p : prime_set(out.r)) nu.erase(p);
    u64 m_nu = part(m, nu);
    u64 ord = mult_order(t % m_nu, m_nu);
    out.o = part_coprime(ord, nu);
    return out;
}

/// Exponent of p in [T,n,s] for p in pi(r), following the derived-modulus
/// formula; all quantities are p-parts handled as valuations.
inline u64 m_prime_exponent(u64 p, int epsilon, u64 vm, u64 vr, u64 vs, u64 vn, u64 vo) {
    if (epsilon_pow(epsilon, p) == 1) {
        i64 a = static_cast<i64>(vr);
        i64 b = static_cast<i64>(vs);
        i64 c = static_cast<i64>(vr + vs + vo) - static_cast<i64>(vn);
        u64 mx = static_cast<u64>(std::max({a, b, c}));
        return std::min({vm, vo + vr, mx});
    }
    // epsilon = -1, p = 2.
    if (vo <= 1 || vm <= vr + 1) return vr;
    bool middle = (vo >= 2 && vo < vn) && (vr + 2 <= vm);
    if (middle && vs <= vn + vr && !(vs == vm && vm < vn + vr)) middle = false;
    return middle ? vm - 1 : vm;
}

/// [T,n,s] computed from (m, r, epsilon, o) directly.
inline u64 m_prime_from(u64 m, u64 n, u64 s, u64 r, int epsilon, u64 o) {
    std::set<u64> pr = prime_set(r);
    std::set<u64> nu = prime_set(m);
    for (u64 p : pr) nu.erase(p);
    u64 out = part(m, nu);
    for (u64 p : pr) {
        u64 e = m_prime_exponent(p, epsilon, vp(p, m), vp(p, r), vp(p, s), vp(p, n), vp(p, o));
        u64 pe = 1;
        for (u64 i = 0; i < e; ++i) pe = checked_mul(pe, p);
        out = checked_mul(out, pe);
    }
    return out;
}

/// The derived modulus m' = [T,n,s].
inline u64 m_prime(const UnitSubgroup& T, u64 n, u64 s) {
    TInvariants inv = inv_triple(T);
    return m_prime_from(T.modulus, n, s, inv.r, inv.epsilon, inv.o);
}

/// Membership in U_m^{n,s}: gcd(t,m) = 1, t^n = 1 and s(t-1) = 0 mod m.
inline bool in_Umns(u64 t, u64 m, u64 n, u64 s) {
    if (m == 0) throw std::invalid_argument("in_Umns: modulus 0");
    if (m == 1) return true;
    t %= m;
    if (gcd_u64(t, m) != 1) return false;
    if (powmod(t, n, m) != 1) return false;
    return mulmod(s % m, (t + m - 1) % m, m) == 0;
}

/// Every cyclic subgroup of U_m exactly once, deduplicated by element set.
inline std::vector<UnitSubgroup> list_cyclic_subgroups(u64 m) {
    if (m == 0) throw std::invalid_argument("list_cyclic_subgroups: modulus 0");
    std::vector<UnitSubgroup> out;
    if (m == 1) {
        out.push_back(UnitSubgroup{});
        return out;
    }
    std::set<std::vector<u64>> seen;
    for (u64 t = 1; t < m; ++t) {
        if (gcd_u64(t, m) != 1) continue;
        UnitSubgroup T = cyclic_subgroup(m, t);
        if (seen.insert(T.elements).second) out.push_back(T);
    }
    return out;
}

/// All residues g in T with <g> = T.
inline std::vector<u64> generators_of(const UnitSubgroup& T) {
    if (T.modulus == 1) return {1};
    std::vector<u64> out;
    u64 n = T.order();
    for (u64 g : T.elements)
        if (mult_order(g, T.modulus) == n) out.push_back(g);
    return out;
}

/// Hall p-part of T as a subgroup (generated by gen^{|T|_{p'}}).
inline UnitSubgroup subgroup_p_part(const UnitSubgroup& T, u64 p) {
    if (T.modulus == 1) return T;
    u64 cofactor = T.order() / p_part_of(p, T.order());
    return cyclic_subgroup(T.modulus, powmod(T.canonical_generator, cofactor, T.modulus));
}

}  // namespace metacyclic
