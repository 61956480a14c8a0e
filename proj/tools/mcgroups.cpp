// Command line front end for the metacyclic group toolkit.
//
// Subcommands: invariants, mcinv, iso, enumerate, construct, nilpotent,
// oracle-check. Plain output is whitespace separated naturals, one
// record per line; --json switches to one JSON object per line.
//
// Exit codes: 0 success (and "true" verdicts), 1 false verdict of iso,
// 2 usage or validation error, 3 computation cap exceeded.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "metacyclic/metacyclic.hpp"

namespace {

using metacyclic::u64;
using nlohmann::json;

json id_json(const metacyclic::MetacyclicId& id) {
    return json{{"m", id.m}, {"n", id.n}, {"s", id.s}, {"t", id.t}};
}

void print_id(const metacyclic::MetacyclicId& id, bool as_json) {
    if (as_json)
        std::cout << id_json(id).dump() << "\n";
    else
        std::cout << id.m << " " << id.n << " " << id.s << " " << id.t << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"Isomorphism invariants of finite metacyclic groups"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON instead of plain naturals");

    std::vector<u64> v_inv, v_mcinv, v_iso, v_con, v_nil;
    u64 order = 0;
    u64 max_order_enum = 100000;
    u64 max_order_oracle = 256;

    auto* c_inv = app.add_subcommand("invariants", "standardized invariant tuple of G_{m,n,s,t}");
    c_inv->add_option("params", v_inv, "m n s t")->expected(4)->required();

    auto* c_mcinv = app.add_subcommand("mcinv", "invariant 5-tuple (m, n, s, m', generator of Delta)");
    c_mcinv->add_option("params", v_mcinv, "m n s t")->expected(4)->required();

    auto* c_iso = app.add_subcommand("iso", "decide isomorphism of two presented groups");
    c_iso->add_option("params", v_iso, "m1 n1 s1 t1 m2 n2 s2 t2")->expected(8)->required();

    auto* c_enum = app.add_subcommand("enumerate", "one tuple per isomorphism class of order N");
    c_enum->add_option("order", order, "the group order N")->required();
    c_enum->add_option("--max-order", max_order_enum, "enumeration cap");

    auto* c_con = app.add_subcommand("construct", "group with prescribed invariant (m, n, s, m', tDelta)");
    c_con->add_option("params", v_con, "m n s m' tDelta")->expected(5)->required();

    auto* c_nil = app.add_subcommand("nilpotent", "decide nilpotency of G_{m,n,s,t}");
    c_nil->add_option("params", v_nil, "m n s t")->expected(4)->required();

    auto* c_ora = app.add_subcommand("oracle-check", "compare invariant and brute-force partitions");
    c_ora->add_option("order", order, "the group order N")->required();
    c_ora->add_option("--max-order", max_order_oracle, "oracle order cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (c_inv->parsed()) {
        auto id = metacyclic::metacyclic_id(
            metacyclic::make_params(v_inv[0], v_inv[1], v_inv[2], v_inv[3]));
        print_id(id, as_json);
        return 0;
    }
    if (c_mcinv->parsed()) {
        auto inv = metacyclic::mcinv(
            metacyclic::make_params(v_mcinv[0], v_mcinv[1], v_mcinv[2], v_mcinv[3]));
        if (as_json)
            std::cout << json{{"m", inv.m},
                              {"n", inv.n},
                              {"s", inv.s},
                              {"m_prime", inv.m_prime},
                              {"t_delta", inv.delta.canonical_generator}}
                             .dump()
                      << "\n";
        else
            std::cout << inv.m << " " << inv.n << " " << inv.s << " " << inv.m_prime
                      << " " << inv.delta.canonical_generator << "\n";
        return 0;
    }
    if (c_iso->parsed()) {
        bool iso = metacyclic::are_isomorphic(
            metacyclic::make_params(v_iso[0], v_iso[1], v_iso[2], v_iso[3]),
            metacyclic::make_params(v_iso[4], v_iso[5], v_iso[6], v_iso[7]));
        if (as_json)
            std::cout << json{{"isomorphic", iso}}.dump() << "\n";
        else
            std::cout << (iso ? "true" : "false") << "\n";
        return iso ? 0 : 1;
    }
    if (c_enum->parsed()) {
        for (const auto& id : metacyclic::metacyclic_groups_by_order(order, max_order_enum))
            print_id(id, as_json);
        return 0;
    }
    if (c_con->parsed()) {
        auto delta = metacyclic::cyclic_subgroup(v_con[3], v_con[4]);
        auto p = metacyclic::construct(v_con[0], v_con[1], v_con[2], delta);
        if (as_json)
            std::cout << json{{"m", p.m}, {"n", p.n}, {"s", p.s}, {"t", p.t}}.dump() << "\n";
        else
            std::cout << p.m << " " << p.n << " " << p.s << " " << p.t << "\n";
        return 0;
    }
    if (c_nil->parsed()) {
        bool nil = metacyclic::is_nilpotent(
            metacyclic::make_params(v_nil[0], v_nil[1], v_nil[2], v_nil[3]));
        if (as_json)
            std::cout << json{{"nilpotent", nil}}.dump() << "\n";
        else
            std::cout << (nil ? "true" : "false") << "\n";
        return 0;
    }
    if (c_ora->parsed()) {
        metacyclic::OracleConfig cfg;
        cfg.max_order = max_order_oracle;
        auto classes = metacyclic::brute_classes(order, cfg);
        std::map<metacyclic::MetacyclicId, std::vector<metacyclic::MetacyclicParams>> by_id;
        for (const auto& p : metacyclic::all_parameter_tuples(order, cfg))
            by_id[metacyclic::metacyclic_id(p)].push_back(p);
        std::set<std::set<metacyclic::MetacyclicParams>> part_a, part_b;
        for (const auto& cls : classes) part_a.insert({cls.begin(), cls.end()});
        for (const auto& [id, cls] : by_id) part_b.insert({cls.begin(), cls.end()});
        bool agree = part_a == part_b;
        std::cout << "oracle classes: " << classes.size()
                  << ", invariant classes: " << by_id.size() << "\n"
                  << (agree ? "AGREE" : "DISAGREE") << "\n";
        return agree ? 0 : 1;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
