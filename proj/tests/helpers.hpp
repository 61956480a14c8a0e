#pragma once

// Shared utilities for the test suites: deterministic random sampling of
// valid presentation parameters, fixture file parsing, and the exhaustive
// kernel-scan oracle used to cross-check minimization.

#include <array>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "metacyclic/metacyclic.hpp"

namespace testutil {

using metacyclic::u64;

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(0x5eed5eed5eed5eedULL);
    return gen;
}

inline u64 pick(u64 lo, u64 hi) {
    return std::uniform_int_distribution<u64>(lo, hi)(rng());
}

/// A uniformly-ish random valid (m, n, s, t) with m*n <= max_order.
inline metacyclic::MetacyclicParams random_params(u64 max_order) {
    while (true) {
        u64 m = pick(1, max_order);
        u64 n = pick(1, max_order / m);
        std::vector<u64> ts;
        for (u64 t = m == 1 ? 0 : 1; t < std::max<u64>(m, 1); ++t)
            if ((m == 1 || metacyclic::gcd_u64(t, m) == 1) &&
                metacyclic::powmod(t, n, m) == 1 % m)
                ts.push_back(t);
        if (ts.empty()) continue;
        u64 t = ts[pick(0, ts.size() - 1)];
        std::vector<u64> ss;
        for (u64 s = 1; s <= m; ++s)
            if (m == 1 || metacyclic::mulmod(s % m, (t + m - 1) % m, m) == 0) ss.push_back(s);
        if (ss.empty()) continue;
        return metacyclic::make_params(m, n, ss[pick(0, ss.size() - 1)], t);
    }
}

/// Fixture files: one tuple of four space-separated naturals per line,
/// '#' starts a comment.
inline std::vector<std::array<u64, 4>> load_fixture(const std::string& name) {
    std::ifstream in(std::string(FIXTURE_DIR) + "/" + name);
    if (!in) throw std::runtime_error("missing fixture " + name);
    std::vector<std::array<u64, 4>> out;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::array<u64, 4> row{};
        if (ls >> row[0] >> row[1] >> row[2] >> row[3]) out.push_back(row);
    }
    return out;
}

/// Exhaustive search for the least order of a cyclic normal subgroup A
/// of G with G/A cyclic. Independent of the minimization code: only the
/// element engine is used.
inline u64 kernel_min_order(const metacyclic::Group& G) {
    using metacyclic::Elem;
    u64 N = G.size();
    // Distinct cyclic subgroups, as sorted encoded element sets.
    std::set<std::vector<u64>> subgroups;
    for (u64 id = 0; id < N; ++id) {
        std::vector<u64> enc;
        for (Elem x : G.cyclic_elements(G.decode(id))) enc.push_back(G.encode(x));
        std::sort(enc.begin(), enc.end());
        subgroups.insert(enc);
    }
    std::vector<std::vector<u64>> by_size(subgroups.begin(), subgroups.end());
    std::sort(by_size.begin(), by_size.end(),
              [](const auto& a, const auto& b) { return a.size() < b.size(); });

    for (const auto& enc : by_size) {
        std::vector<char> in_A(N, 0);
        for (u64 id : enc) in_A[id] = 1;
        // Normality: closed under conjugation by both defining generators.
        bool normal = true;
        for (u64 id : enc) {
            Elem x = G.decode(id);
            if (!in_A[G.encode(G.conjugate(x, G.gen_a()))] ||
                !in_A[G.encode(G.conjugate(x, G.gen_b()))]) {
                normal = false;
                break;
            }
        }
        if (!normal) continue;
        u64 q = N / static_cast<u64>(enc.size());
        // Label cosets; the label of xA is the least encoded member.
        std::vector<u64> label(N, N);
        std::vector<Elem> reps;
        for (u64 id = 0; id < N; ++id) {
            if (label[id] != N) continue;
            Elem x = G.decode(id);
            u64 lab = static_cast<u64>(reps.size());
            for (u64 a : enc) label[G.encode(G.mul(x, G.decode(a)))] = lab;
            reps.push_back(x);
        }
        // Quotient is cyclic iff some coset has order q in G/A.
        bool cyclic = false;
        for (const Elem& h : reps) {
            u64 k = 1;
            Elem x = h;
            while (label[G.encode(x)] != label[G.encode(G.identity())]) {
                x = G.mul(x, h);
                ++k;
            }
            if (k == q) {
                cyclic = true;
                break;
            }
        }
        if (cyclic) return static_cast<u64>(enc.size());
    }
    throw std::logic_error("kernel_min_order: no metacyclic factorization found");
}

}  // namespace testutil
