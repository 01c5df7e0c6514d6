#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "hg/catalog.hpp"
#include "hg/errors.hpp"
#include "hg/group.hpp"

using namespace hg;

namespace {

// Reference computations done the slow, obvious way. The FiniteGroup versions
// must agree with these on every group we throw at them.
std::vector<int> brute_centralizer(const FiniteGroup& g, const Permutation& x) {
    std::vector<int> out;
    for (int i = 0; i < g.order(); ++i)
        if (compose(g.element(i), x) == compose(x, g.element(i))) out.push_back(i);
    return out;
}

std::vector<int> brute_center(const FiniteGroup& g) {
    std::vector<int> out;
    for (int i = 0; i < g.order(); ++i) {
        bool central = true;
        for (int j = 0; central && j < g.order(); ++j)
            central = g.mult(i, j) == g.mult(j, i);
        if (central) out.push_back(i);
    }
    return out;
}

std::set<int> brute_derived(const FiniteGroup& g) {
    std::vector<Permutation> comms;
    for (int i = 0; i < g.order(); ++i)
        for (int j = 0; j < g.order(); ++j) {
            int k = g.mult(g.mult(i, j), g.mult(g.inv(i), g.inv(j)));
            comms.push_back(g.element(k));
        }
    auto closed = generate_closure(comms);
    std::set<int> out;
    for (const auto& p : closed) out.insert(g.index_of(p));
    return out;
}

}  // namespace

TEST_CASE("from_generators and index arithmetic") {
    auto d4 = dihedral_group(4);
    REQUIRE(d4.order() == 8);
    CHECK(d4.identity_index() == 0);
    CHECK(d4.element(0).is_identity());
    for (int i = 0; i < d4.order(); ++i) {
        CHECK(d4.mult(i, d4.inv(i)) == 0);
        CHECK(d4.mult(0, i) == i);
        for (int j = 0; j < d4.order(); ++j)
            CHECK(d4.element(d4.mult(i, j)) == compose(d4.element(i), d4.element(j)));
    }
}

TEST_CASE("from_elements verifies closure") {
    PermSet open(3, {Permutation(3), parse_cycles("(1 2 3)", 3)});
    CHECK_THROWS_AS(FiniteGroup::from_elements(open), std::invalid_argument);
    auto c3 = FiniteGroup::from_elements(generate_closure({parse_cycles("(1 2 3)", 3)}));
    CHECK(c3.order() == 3);
}

TEST_CASE("element orders in S4") {
    auto s4 = symmetric_group(4);
    std::map<std::int64_t, int> hist;
    for (int i = 0; i < s4.order(); ++i) ++hist[s4.element_order(i)];
    CHECK(hist == std::map<std::int64_t, int>{{1, 1}, {2, 9}, {3, 8}, {4, 6}});
}

TEST_CASE("centralizer matches brute force") {
    auto s4 = symmetric_group(4);
    for (const auto& text : {"(1 2)(3 4)", "(1 2 3)", "(1 2 3 4)", "()"}) {
        auto x = parse_cycles(text, 4);
        auto cz = s4.centralizer(x);
        auto ref = brute_centralizer(s4, x);
        REQUIRE(cz.order() == static_cast<int>(ref.size()));
        for (int i : ref) CHECK(cz.contains(s4.element(i)));
    }
    CHECK(s4.centralizer(parse_cycles("(1 2)(3 4)", 4)).order() == 8);
    CHECK(s4.centralizer(parse_cycles("(1 2 3 4)", 4)).order() == 4);
}

TEST_CASE("center and derived subgroup match brute force") {
    auto groups = {symmetric_group(4), quaternion_group(), dihedral_group(4),
                   cyclic_group(6), alternating_group(4)};
    for (const auto& g : groups) {
        auto zc = brute_center(g);
        CHECK(g.center_indices() == zc);
        auto dc = brute_derived(g);
        std::vector<int> dref(dc.begin(), dc.end());
        CHECK(g.derived_indices() == dref);
    }
    CHECK(quaternion_group().center().order() == 2);
    CHECK(dihedral_group(4).center().order() == 2);
    // Derived series landmark: [S4, S4] = A4.
    auto d = symmetric_group(4).derived_subgroup();
    CHECK(d.order() == 12);
    CHECK(isomorphism_test(d, alternating_group(4)).has_value());
}

TEST_CASE("conjugacy classes of S4") {
    auto s4 = symmetric_group(4);
    CHECK(s4.conjugacy_class_sizes_sorted() ==
          std::vector<std::int64_t>{1, 3, 6, 6, 8});
    const auto& ids = s4.conjugacy_class_ids();
    // Same cycle type iff conjugate.
    auto a = s4.index_of(parse_cycles("(1 2)", 4));
    auto b = s4.index_of(parse_cycles("(3 4)", 4));
    auto c = s4.index_of(parse_cycles("(1 2)(3 4)", 4));
    CHECK(ids[a] == ids[b]);
    CHECK(ids[a] != ids[c]);
}

TEST_CASE("fingerprints separate same-order groups") {
    CHECK(cyclic_group(4).fingerprint() != group_by_name("C2xC2").fingerprint());
    CHECK(quaternion_group().fingerprint() != dihedral_group(4).fingerprint());
    CHECK(symmetric_group(4).fingerprint() != group_by_name("D12").fingerprint());
    // Fingerprint is representation independent.
    auto s3_nat = symmetric_group(3);
    auto s3_gens = FiniteGroup::from_generators(
        {parse_cycles("(1 2)(4 5)", 6), parse_cycles("(1 2 3)(4 5 6)", 6)});
    CHECK(s3_nat.fingerprint() == s3_gens.fingerprint());
    CHECK(s3_nat.fingerprint().canonical_string() ==
          s3_gens.fingerprint().canonical_string());
}

TEST_CASE("abelian and perfect flags") {
    CHECK(cyclic_group(12).is_abelian());
    CHECK(!symmetric_group(3).is_abelian());
    CHECK(!symmetric_group(4).is_perfect());
    CHECK(alternating_group(5).is_perfect());
}

TEST_CASE("greedy generators regenerate the group") {
    for (const auto& g : {symmetric_group(4), cyclic_group(8), quaternion_group()}) {
        auto gens = g.greedy_generators();
        CHECK(!gens.empty());
        CHECK(generate_closure(gens) == g.carrier());
        CHECK(gens.size() <= 3);
    }
    CHECK(cyclic_group(8).greedy_generators().size() == 1);
}

TEST_CASE("generated_subgroup_indices") {
    auto s4 = symmetric_group(4);
    auto sub = s4.generated_subgroup_indices(
        {s4.index_of(parse_cycles("(1 2 3)", 4)),
         s4.index_of(parse_cycles("(1 2)(3 4)", 4))});
    CHECK(sub.size() == 12);  // generates A4
    CHECK(std::is_sorted(sub.begin(), sub.end()));
    auto a4 = s4.subgroup_from_indices(sub, "A4");
    CHECK(isomorphism_test(a4, alternating_group(4)).has_value());
    CHECK(s4.generated_subgroup_indices({}) == std::vector<int>{0});
}

TEST_CASE("structure_invariants bundle") {
    auto s = structure_invariants(symmetric_group(3));
    CHECK(s.fingerprint.order == 6);
    CHECK(s.center.order() == 1);
    CHECK(s.derived.order() == 3);
    CHECK(!s.is_perfect);
}

TEST_CASE("GroupHom verifies its table") {
    auto c4 = cyclic_group(4);
    auto c2 = cyclic_group(2);
    // Reduction mod 2: g^k -> k mod 2 for a fixed order-4 generator g.
    int g = -1;
    for (int i = 0; i < 4; ++i)
        if (c4.element_order(i) == 4) { g = i; break; }
    int acc = 0;
    std::vector<int> good(4);
    for (int k = 0; k < 4; ++k) {
        good[acc] = k % 2;
        acc = c4.mult(acc, g);
    }
    GroupHom h(c4, c2, good);
    CHECK(!h.is_injective());
    CHECK(h.map_index(0) == 0);

    std::vector<int> bad(4, 1);  // does not send identity to identity
    CHECK_THROWS_AS(GroupHom(c4, c2, bad), std::invalid_argument);
    CHECK(GroupHom::identity(c4).is_bijective());
}

TEST_CASE("hom enumeration counts") {
    RunConfig cfg;
    auto c2 = cyclic_group(2);
    auto s3 = symmetric_group(3);
    // C2 -> S3: identity or one of the three transpositions.
    CHECK(enumerate_hom_tables(c2, s3, cfg).size() == 4);
    // S3 -> C2: trivial and sign.
    CHECK(enumerate_hom_tables(s3, c2, cfg).size() == 2);
    // C6 -> C6: one per image of the generator that divides compatibly.
    CHECK(enumerate_hom_tables(cyclic_group(6), cyclic_group(6), cfg).size() == 6);
    // S3 -> S3: 6 inner + 4 collapsing through the sign map.
    CHECK(enumerate_hom_tables(s3, s3, cfg).size() == 10);
    // Every emitted table really is a hom (ctor re-verifies).
    for (auto& t : enumerate_hom_tables(s3, s3, cfg))
        CHECK_NOTHROW(GroupHom(s3, s3, t));
}

TEST_CASE("isomorphism_test finds maps and refuses impostors") {
    auto s3_reg = FiniteGroup::from_generators(
        {parse_cycles("(1 2)(4 5)", 6), parse_cycles("(1 2 3)(4 5 6)", 6)});
    auto w = isomorphism_test(symmetric_group(3), s3_reg);
    REQUIRE(w.has_value());
    CHECK(w->is_bijective());
    CHECK(!isomorphism_test(cyclic_group(4), group_by_name("C2xC2")).has_value());
    CHECK(!isomorphism_test(quaternion_group(), dihedral_group(4)).has_value());
    CHECK(!isomorphism_test(symmetric_group(3), cyclic_group(6)).has_value());
}

TEST_CASE("automorphism group orders") {
    RunConfig cfg;
    CHECK(automorphism_group(cyclic_group(4), cfg).group.order() == 2);
    CHECK(automorphism_group(cyclic_group(6), cfg).group.order() == 2);
    CHECK(automorphism_group(group_by_name("C2xC2"), cfg).group.order() == 6);
    CHECK(automorphism_group(symmetric_group(3), cfg).group.order() == 6);
    CHECK(automorphism_group(quaternion_group(), cfg).group.order() == 24);
    CHECK(automorphism_group(symmetric_group(4), cfg).group.order() == 24);
    CHECK(automorphism_group(alternating_group(4), cfg).group.order() == 24);
    RunConfig tight;
    tight.aut_order_bound = 5;
    CHECK_THROWS_AS(automorphism_group(symmetric_group(3), tight), CapExceeded);
}

TEST_CASE("automorphisms act on the carrier correctly") {
    auto g = symmetric_group(3);
    auto aut = automorphism_group(g);
    for (int a = 0; a < aut.group.order(); ++a) {
        const auto& phi = aut.group.element(a);
        for (int i = 0; i < g.order(); ++i)
            for (int j = 0; j < g.order(); ++j)
                CHECK(phi(g.mult(i, j)) == g.mult(phi(i), phi(j)));
    }
}

TEST_CASE("direct products") {
    auto v = direct_product(cyclic_group(2), cyclic_group(2), "C2xC2");
    CHECK(v.order() == 4);
    CHECK(v.is_abelian());
    CHECK(isomorphism_test(v, group_by_name("C2xC2")).has_value());
    auto g = direct_product(symmetric_group(3), cyclic_group(2));
    CHECK(g.order() == 12);
    CHECK(!g.is_abelian());
    CHECK(g.label() == "S3xC2");
}

TEST_CASE("semidirect products") {
    RunConfig cfg;
    auto c4 = cyclic_group(4);
    auto c2 = cyclic_group(2);
    // C2 on C4 by inversion gives D4.
    auto aut = automorphism_group(c4, cfg);
    int invol = -1;
    for (int i = 0; i < aut.group.order(); ++i)
        if (!aut.group.element(i).is_identity()) invol = i;
    GroupHom h(c2, aut.group, {0, invol});
    GroupAction act{c2, c4, aut, h};
    auto d4 = semidirect_product(c4, c2, act);
    CHECK(d4.order() == 8);
    CHECK(isomorphism_test(d4, dihedral_group(4)).has_value());
    // Trivial action recovers the direct product.
    auto triv = semidirect_product(c4, c2, GroupAction::trivial(c2, c4, cfg));
    CHECK(triv.is_abelian());
    CHECK(isomorphism_test(triv, cyclic_group(8)) == std::nullopt);
    CHECK(isomorphism_test(triv, direct_product(c4, c2)).has_value());
}

TEST_CASE("conjugation actions") {
    RunConfig cfg;
    cfg.aut_order_bound = 60;
    auto a4 = alternating_group(4);
    auto c2 = cyclic_group(2);
    // (1 2) normalizes A4 inside S4; the twisted product is S4.
    auto act = GroupAction::by_conjugation(
        c2, a4, {Permutation(4), parse_cycles("(1 2)", 4)}, cfg);
    auto e = semidirect_product(a4, c2, act);
    CHECK(e.order() == 24);
    CHECK(isomorphism_test(e, symmetric_group(4)).has_value());
    // A representative that does not normalize the target is refused.
    CHECK_THROWS_AS(GroupAction::by_conjugation(
                        c2, cyclic_group(4),
                        {Permutation(4), parse_cycles("(1 2)", 4)}, cfg),
                    std::invalid_argument);
}
