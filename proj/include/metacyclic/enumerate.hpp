#pragma once

/// Enumeration of metacyclic groups of a given order: the feasible
/// (m, n, s, r, o, epsilon) tuples and, from them, one standardized
/// parameter tuple per isomorphism class.

#include <algorithm>
#include <map>
#include <vector>

#include "metacyclic/invariants.hpp"

namespace metacyclic {

/// A tuple of numeric invariants that can occur for a group of order mn.
struct RealizableTuple {
    u64 m = 1, n = 1, s = 1, r = 1, o = 1;
    int epsilon = 1;
};

namespace detail {

inline std::vector<u64> divisors(u64 k) {
    std::vector<u64> ds;
    for (u64 d = 1; d * d <= k; ++d) {
        if (k % d != 0) continue;
        ds.push_back(d);
        if (d != k / d) ds.push_back(k / d);
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

}  // namespace detail

/// All (m, n, s, r, o, epsilon) with mn = order that pass the numeric
/// feasibility conditions. Each realizable invariant of a group of the
/// given order has its numbers listed here; some listed tuples may admit
/// several or zero subgroups Delta.
inline std::vector<RealizableTuple> parameter_tuples(u64 order) {
    if (order == 0) throw std::invalid_argument("parameter_tuples: order must be positive");
    std::vector<RealizableTuple> out;
    for (u64 m : detail::divisors(order)) {
        u64 n = order / m;
        std::vector<u64> div_m = detail::divisors(m);
        for (u64 s : div_m) {
            for (u64 r : div_m) {
                std::set<u64> pir = prime_set(r);
                // nu = pi(m) \ pi(r); the complementary prime block of n.
                u64 m_nu = part_coprime(m, pir);
                std::set<u64> nu = prime_set(m_nu);
                u64 n_pi = part_coprime(n, nu);
                // (A) local size constraints away from and inside pi(r).
                if (part_coprime(s, pir) != m_nu) continue;
                if (m % 4 == 0 && r % 4 != 0) continue;
                bool okA = true;
                for (u64 p : pir) {
                    u64 m_p = p_part_of(p, m);
                    if (m_p > checked_mul(p_part_of(p, r), p_part_of(p, n))) { okA = false; break; }
                    if (m_p > checked_mul(p_part_of(p, r), p_part_of(p, s))) { okA = false; break; }
                }
                if (!okA) continue;
                for (u64 o : detail::divisors(n_pi)) {
                    for (int epsilon : {1, -1}) {
                        if (epsilon == -1 && (m % 4 != 0 || n % 2 != 0)) continue;

                        // (B) primes of r with epsilon^{p-1} = 1.
                        bool ok = true;
                        for (u64 p : pir) {
                            if (epsilon_pow(epsilon, p) != 1) continue;
                            u64 s_p = p_part_of(p, s);
                            if (n % s_p != 0) { ok = false; break; }
                            u64 spop = checked_mul(s_p, p_part_of(p, o));
                            if (s % p_part_of(p, r) != 0 && n % spop == 0) { ok = false; break; }
                        }
                        if (!ok) continue;

                        // (C) the prime 2 when epsilon = -1.
                        if (epsilon == -1) {
                            u64 m2 = p_part_of(2, m), n2 = p_part_of(2, n);
                            u64 s2 = p_part_of(2, s), r2 = p_part_of(2, r);
                            if (m2 > checked_mul(2, s2)) continue;
                            if (s2 == checked_mul(n2, r2)) continue;
                            if (n2 >= 4 && m2 >= 8 && p_part_of(2, o) < n2 && s % r2 != 0)
                                continue;
                        }

                        // (D) o is locally a unit order mod the nu primes,
                        // and nu primes coprime to o are reached through n.
                        for (u64 p : prime_set(o)) {
                            u64 o_p = p_part_of(p, o);
                            bool reach = false;
                            for (u64 q : nu)
                                if ((q - 1) % o_p == 0) { reach = true; break; }
                            if (!reach) { ok = false; break; }
                        }
                        if (!ok) continue;
                        for (u64 q : nu) {
                            if (gcd_u64(o, q - 1) != 1) continue;
                            bool covered = false;
                            for (u64 p : nu)
                                if (n % p == 0 && (q - 1) % p == 0) { covered = true; break; }
                            if (!covered) { ok = false; break; }
                        }
                        if (!ok) continue;

                        out.push_back(RealizableTuple{m, n, s, r, o, epsilon});
                    }
                }
            }
        }
    }
    return out;
}

/// One standardized parameter tuple per isomorphism class of metacyclic
/// groups of the given order, sorted lexicographically. Throws
/// std::length_error when the order exceeds the cap.
inline std::vector<MetacyclicId> metacyclic_groups_by_order(u64 order, u64 cap = 100000) {
    if (order > cap) throw std::length_error("metacyclic_groups_by_order: order exceeds cap");
    std::vector<MetacyclicId> ids;
    std::map<u64, std::vector<UnitSubgroup>> subgroup_cache;
    for (const RealizableTuple& tup : parameter_tuples(order)) {
        u64 mp = m_prime_from(tup.m, tup.n, tup.s, tup.r, tup.epsilon, tup.o);
        if (checked_mul(tup.s, mp) % tup.m != 0) continue;
        u64 s_scaled = tup.s * mp / tup.m;
        auto it = subgroup_cache.find(mp);
        if (it == subgroup_cache.end())
            it = subgroup_cache.emplace(mp, list_cyclic_subgroups(mp)).first;
        for (const UnitSubgroup& delta : it->second) {
            if (!in_Umns(delta.canonical_generator, mp, tup.n, s_scaled)) continue;
            TInvariants inv = inv_triple(delta);
            if (inv.r != tup.r || inv.epsilon != tup.epsilon || inv.o != tup.o) continue;
            if (!is_realizable(tup.m, tup.n, tup.s, delta)) continue;
            MetacyclicParams params = construct(tup.m, tup.n, tup.s, delta);
            ids.push_back(metacyclic_id(params));
        }
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

}  // namespace metacyclic
