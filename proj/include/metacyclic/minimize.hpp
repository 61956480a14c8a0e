#pragma once

/// Transformation of an arbitrary metacyclic factorization into a minimal
/// one, plus the canonicity predicate that characterizes minimality.
///
/// After every generator mutation the tracked state (m, n, s, t, y) is
/// recomputed from the element engine and checked against the predicted
/// incremental update; a mismatch indicates an implementation bug and
/// aborts with a diagnostic.

#include <algorithm>
#include <string>
#include <vector>

#include "metacyclic/engine.hpp"
#include "metacyclic/units.hpp"

namespace metacyclic {

/// (n,s)-canonicity of a cyclic T <= U_m^{n,s}:
///  (Can-) if epsilon = -1 then s_2 != r_2 n_2, and when m_2 >= 8,
///         n_2 >= 4, o_2 < n_2 additionally r_2 <= s_2;
///  (Can+) for p in pi(r) with epsilon^{p-1} = 1: s_p | n, and
///         r_p | s or s_p o_p does not divide n.
inline bool is_canonical(u64 m, u64 n, u64 s, const UnitSubgroup& T) {
    if (T.modulus != m)
        throw std::invalid_argument("is_canonical: T not a subgroup of U_m");
    if (m % s != 0) throw std::invalid_argument("is_canonical: s does not divide m");
    if (!in_Umns(T.canonical_generator, m, n, s))
        throw std::invalid_argument("is_canonical: T not contained in U_m^{n,s}");
    TInvariants inv = inv_triple(T);
    if (inv.epsilon == -1) {
        u64 r2 = p_part_of(2, inv.r);
        u64 s2 = p_part_of(2, s);
        u64 n2 = p_part_of(2, n);
        if (s2 == checked_mul(r2, n2)) return false;
        if (p_part_of(2, m) >= 8 && n2 >= 4 && p_part_of(2, inv.o) < n2 && r2 > s2)
            return false;
    }
    for (u64 p : prime_set(inv.r)) {
        if (epsilon_pow(inv.epsilon, p) != 1) continue;
        u64 sp = p_part_of(p, s);
        if (n % sp != 0) return false;
        u64 rp = p_part_of(p, inv.r);
        u64 spop = checked_mul(sp, p_part_of(p, inv.o));
        if (s % rp != 0 && n % spop == 0) return false;
    }
    return true;
}

/// Result of the minimization: generators of a minimal factorization of
/// the input group together with the state tracked along the run.
struct MinimalFactorization {
    Group group;          // the ambient group G_{input}
    Elem a, b;            // G = <a><b> minimal
    u64 m, n, s;          // |<a>|, [G:<a>], [G:<b>]
    u64 t, y;             // a^b = a^t, b^n = a^y
    TInvariants inv;      // inv of <t>_m
};

namespace detail {

struct MinState {
    Elem a, b;
    u64 m, n, s, t, y;
    TInvariants inv;
};

inline void refresh(const Group& G, MinState& st) {
    FactorizationData fd = factorization_data(G, st.a, st.b);
    st.m = fd.m;
    st.n = fd.n;
    st.s = fd.s;
    st.t = fd.t;
    st.y = fd.y;
    st.inv = inv_triple(cyclic_subgroup(st.m, st.m == 1 ? 0 : st.t));
}

[[noreturn]] inline void bug(const std::string& what) {
    throw std::logic_error("minimize: internal state mismatch: " + what);
}

}  // namespace detail

/// Algorithm: turn the defining factorization of G_{params} into a
/// minimal one. The returned T = <t>_m is (n,s)-canonical and (m, n, s)
/// are the group's invariants m_G, n_G, s_G. The prime processing order
/// does not affect the outcome; descending_primes exists so tests can
/// check that.
inline MinimalFactorization minimize(const MetacyclicParams& params,
                                     bool descending_primes = false) {
    Group G(params);
    detail::MinState st;
    st.a = G.gen_a();
    st.b = G.gen_b();
    detail::refresh(G, st);

    std::set<u64> pr = prime_set(st.inv.r);
    std::vector<u64> prime_order(pr.begin(), pr.end());
    if (descending_primes) std::reverse(prime_order.begin(), prime_order.end());

    // The per-prime shrink loop over pi(r) with epsilon^{p-1} = 1.
    for (u64 p : prime_order) {
        if (epsilon_pow(st.inv.epsilon, p) != 1) continue;

        // 4(a): if s_p does not divide n, replace b by b a_p.
        u64 sp = p_part_of(p, st.s);
        if (st.n % sp != 0) {
            u64 predicted_s = st.s / sp * p_part_of(p, st.n);
            u64 m0 = st.m, n0 = st.n, t0 = st.t;
            st.b = G.mul(st.b, G.p_part(st.a, p));
            detail::refresh(G, st);
            if (st.m != m0 || st.n != n0 || st.t != t0) detail::bug("4(a) kernel changed");
            if (st.s != predicted_s) detail::bug("4(a) s != s_{p'} n_p");
        }

        // 4(b): if r_p does not divide s and s_p o_p | n, shrink the kernel.
        sp = p_part_of(p, st.s);
        u64 rp = p_part_of(p, st.inv.r);
        u64 op = p_part_of(p, st.inv.o);
        u64 mp = p_part_of(p, st.m);
        if (st.s % rp != 0 && st.n % checked_mul(sp, op) == 0) {
            Elem a_p = G.p_part(st.a, p);
            Elem a_pc = G.p_complement(st.a, p);
            Elem b_p = G.p_part(st.b, p);
            auto tp = G.dlog(a_p, G.conjugate(a_p, b_p));
            if (!tp) detail::bug("4(b) conjugate of a_p not in <a_p>");
            u64 R = powmod(*tp, st.n / sp, mp);
            u64 rhs = ((st.inv.r % mp) + mp - (st.y % mp)) % mp;
            u64 x = solve_linear(ese(R, sp, mp), rhs, mp);

            u64 predicted_m = st.m / rp * sp;
            u64 predicted_n = st.n / sp * rp;
            u64 m2_old = p_part_of(2, st.m);
            u64 r2_old = p_part_of(2, st.inv.r);
            bool to_minus = (st.m % 8 == 0) && sp == 2 && r2_old * 2 == m2_old;
            u64 predicted_r = to_minus ? 4 * (st.inv.r / r2_old)
                                       : st.inv.r / rp * sp;
            u64 s0 = st.s;

            st.a = G.mul(G.mul(G.power(b_p, static_cast<i64>(st.n / sp)), a_pc),
                         G.power(a_p, static_cast<i64>(x)));
            detail::refresh(G, st);
            if (st.m != predicted_m) detail::bug("4(b) m != s_p m / r_p");
            if (st.n != predicted_n) detail::bug("4(b) n != n r_p / s_p");
            if (st.s != s0) detail::bug("4(b) s changed");
            if (st.inv.r != predicted_r) detail::bug("4(b) r prediction");
            if (p == 2 && st.inv.epsilon != (to_minus ? -1 : 1))
                detail::bug("4(b) epsilon prediction");
        }
    }

    // Step 5: the kernel swap at the prime 2.
    if (st.inv.epsilon == -1 && st.n % 4 == 0 && st.m % 8 == 0 &&
        p_part_of(2, st.inv.o) < p_part_of(2, st.n) &&
        st.s % p_part_of(2, st.inv.r) != 0) {
        u64 m_odd = st.m / p_part_of(2, st.m);
        u64 s_odd = st.s / p_part_of(2, st.s);
        u64 e = checked_mul(m_odd, st.n) / (2 * s_odd);
        u64 predicted_r = checked_mul(st.inv.r / p_part_of(2, st.inv.r), p_part_of(2, st.s));
        u64 m0 = st.m, n0 = st.n, s0 = st.s;
        st.a = G.mul(G.power(st.b, static_cast<i64>(e)), st.a);
        detail::refresh(G, st);
        if (st.m != m0 || st.n != n0 || st.s != s0) detail::bug("step 5 indices changed");
        if (st.inv.r != predicted_r) detail::bug("step 5 r != r_{2'} s_2");
    }

    // Step 6: if s_2 = r_2 n_2, replace b by b a_2.
    if (st.inv.epsilon == -1 &&
        p_part_of(2, st.s) == checked_mul(p_part_of(2, st.inv.r), p_part_of(2, st.n))) {
        u64 m0 = st.m, n0 = st.n, t0 = st.t, s0 = st.s;
        st.b = G.mul(st.b, G.p_part(st.a, 2));
        detail::refresh(G, st);
        if (st.m != m0 || st.n != n0 || st.t != t0) detail::bug("step 6 kernel changed");
        if (st.s != s0 / 2) detail::bug("step 6 s != s/2");
    }

    if (!is_canonical(st.m, st.n, st.s, cyclic_subgroup(st.m, st.m == 1 ? 0 : st.t)))
        detail::bug("output not (n,s)-canonical");

    return MinimalFactorization{std::move(G), st.a, st.b,
                                st.m, st.n, st.s, st.t, st.y, st.inv};
}

}  // namespace metacyclic
