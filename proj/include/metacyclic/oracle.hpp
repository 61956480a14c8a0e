#pragma once

/// Brute-force isomorphism oracle, independent of the invariant
/// machinery. Isomorphism is decided by searching for a generating pair
/// witnessing the presentation of the first group inside the second.

#include <algorithm>
#include <vector>

#include "metacyclic/engine.hpp"

namespace metacyclic {

struct OracleConfig {
    u64 max_order = 256;
    u64 closure_cap = 4096;
};

/// Decide whether the groups presented by g and h are isomorphic, by
/// exhaustive search for elements (c, d) of the second group satisfying
/// the defining relations of the first and generating everything.
/// When restrict_candidates is false the |c| = m filter is skipped and c
/// ranges over all solutions of c^m = 1; both searches find the same
/// witnesses because any relation-satisfying generating pair forces
/// |c| = m.
inline bool brute_isomorphic(const MetacyclicParams& g, const MetacyclicParams& h,
                             const OracleConfig& cfg = {},
                             bool restrict_candidates = true) {
    u64 order = checked_mul(g.m, g.n);
    if (order != checked_mul(h.m, h.n)) return false;
    if (order > cfg.max_order)
        throw std::length_error("brute_isomorphic: order exceeds max_order");

    Group G(g), H(h);
    std::vector<Elem> elems = H.all_elements();

    // Order-multiset pruning: isomorphic groups share the multiset of
    // element orders.
    {
        std::vector<u64> og, oh;
        og.reserve(order);
        oh.reserve(order);
        for (const Elem& e : G.all_elements()) og.push_back(G.order(e));
        for (const Elem& e : elems) oh.push_back(H.order(e));
        std::sort(og.begin(), og.end());
        std::sort(oh.begin(), oh.end());
        if (og != oh) return false;
    }

    std::vector<Elem> d_pow_n;
    d_pow_n.reserve(elems.size());
    for (const Elem& e : elems) d_pow_n.push_back(H.power(e, static_cast<i64>(g.n)));

    for (const Elem& c : elems) {
        u64 oc = H.order(c);
        if (restrict_candidates ? oc != g.m : g.m % oc != 0) continue;
        Elem c_s = H.power(c, static_cast<i64>(g.s));
        Elem c_t = H.power(c, static_cast<i64>(g.t));
        for (std::size_t i = 0; i < elems.size(); ++i) {
            const Elem& d = elems[i];
            if (!(d_pow_n[i] == c_s)) continue;
            if (!(H.conjugate(c, d) == c_t)) continue;
            if (H.closure_size(c, d, cfg.closure_cap) == order) return true;
        }
    }
    return false;
}

/// All valid presentation parameters (m, n, s, t) of a given order.
inline std::vector<MetacyclicParams> all_parameter_tuples(u64 order,
                                                          const OracleConfig& cfg = {}) {
    if (order > cfg.max_order)
        throw std::length_error("all_parameter_tuples: order exceeds max_order");
    std::vector<MetacyclicParams> out;
    for (u64 m = 1; m <= order; ++m) {
        if (order % m != 0) continue;
        u64 n = order / m;
        for (u64 s = 1; s <= m; ++s)
            for (u64 t = 0; t < std::max<u64>(m, 1); ++t)
                if (params_valid(m, n, s, t)) out.push_back(make_params(m, n, s, t));
    }
    return out;
}

/// Partition of all parameter tuples of a given order into isomorphism
/// classes, using only the brute-force oracle.
inline std::vector<std::vector<MetacyclicParams>> brute_classes(u64 order,
                                                                const OracleConfig& cfg = {}) {
    std::vector<std::vector<MetacyclicParams>> classes;
    for (const MetacyclicParams& p : all_parameter_tuples(order, cfg)) {
        bool placed = false;
        for (auto& cls : classes) {
            if (brute_isomorphic(p, cls.front(), cfg)) {
                cls.push_back(p);
                placed = true;
                break;
            }
        }
        if (!placed) classes.push_back({p});
    }
    return classes;
}

}  // namespace metacyclic
