#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "hg/byott.hpp"
#include "hg/catalog.hpp"
#include "hg/enumerate.hpp"
#include "hg/errors.hpp"
#include "hg/holomorph.hpp"
#include "hg/report.hpp"

using namespace hg;

TEST_CASE("left and right translations are regular and commute") {
    for (const char* name : {"C4", "C6", "S3", "Q8", "S4"}) {
        auto g = group_by_name(name);
        auto rr = regular_reps(g);
        CHECK(regularity_check(rr.lambda_image.carrier()) == RegularityClass::Regular);
        CHECK(regularity_check(rr.rho_image.carrier()) == RegularityClass::Regular);
        for (int i = 0; i < g.order(); ++i)
            for (int j = 0; j < g.order(); ++j)
                CHECK(compose(rr.lambda_of[i], rr.rho_of[j]) ==
                      compose(rr.rho_of[j], rr.lambda_of[i]));
    }
}

TEST_CASE("translation images coincide exactly for abelian groups") {
    auto ab = regular_reps(cyclic_group(6));
    CHECK(ab.lambda_image.carrier() == ab.rho_image.carrier());
    auto rr = regular_reps(symmetric_group(3));
    CHECK(rr.lambda_image.carrier() != rr.rho_image.carrier());
    // For S4 the two images intersect only in the identity.
    auto s4 = regular_reps(symmetric_group(4));
    int common = 0;
    for (const auto& p : s4.lambda_image.carrier())
        if (s4.rho_image.contains(p)) ++common;
    CHECK(common == 1);
}

TEST_CASE("lambda is a homomorphism, rho an antihomomorphism fix-up") {
    auto g = symmetric_group(3);
    auto rr = regular_reps(g);
    for (int i = 0; i < g.order(); ++i)
        for (int j = 0; j < g.order(); ++j) {
            int k = g.mult(i, j);
            CHECK(rr.lambda_of[k] == compose(rr.lambda_of[i], rr.lambda_of[j]));
            // rho(s): x -> x s^-1, so rho(st) = rho(s) rho(t) as well.
            CHECK(rr.rho_of[k] == compose(rr.rho_of[i], rr.rho_of[j]));
        }
}

TEST_CASE("holomorph orders") {
    CHECK(holomorph(cyclic_group(5)).group().order() == 20);
    CHECK(holomorph(group_by_name("C2xC2")).group().order() == 24);
    CHECK(holomorph(cyclic_group(6)).group().order() == 12);
    CHECK(holomorph(symmetric_group(3)).group().order() == 36);
    RunConfig cfg;
    CHECK(holomorph(symmetric_group(4), cfg).group().order() == 576);
}

TEST_CASE("tag algebra mirrors permutation composition") {
    auto hol = holomorph(symmetric_group(3));
    const auto& hg_ = hol.group();
    for (int i = 0; i < hg_.order(); ++i) {
        auto ti = hol.tag_of(i);
        CHECK(hol.carrier_index_of(ti) == i);
        CHECK(hol.tag_id(hol.tag_from_id(hol.tag_id(ti))) == hol.tag_id(ti));
        // Tag inverse matches group inverse.
        CHECK(hol.carrier_index_of(hol.inv(ti)) == hg_.inv(i));
        // xi is the image of the base point.
        CHECK(hg_.element(i)(0) == hol.xi_point(ti));
        CHECK(hol.m_covering(hol.xi_point(ti)) == ti.m);
        for (int j = 0; j < hg_.order(); ++j)
            CHECK(hol.carrier_index_of(hol.mul(ti, hol.tag_of(j))) == hg_.mult(i, j));
    }
}

TEST_CASE("holomorph is the normalizer of the left translations") {
    // Brute force over all of Perm(N) for |N| <= 6.
    for (const char* name : {"C4", "C2xC2", "C5", "C6", "S3"}) {
        auto g = group_by_name(name);
        auto rr = regular_reps(g);
        auto hol = holomorph(g);
        const int n = g.order();
        std::vector<int> img(n);
        for (int i = 0; i < n; ++i) img[i] = i;
        std::vector<Permutation> normalizer;
        do {
            auto p = Permutation::from_images(img);
            bool norm = true;
            for (int i = 0; norm && i < n; ++i)
                norm = rr.lambda_image.contains(
                    compose(compose(p, rr.lambda_of[i]), inverse(p)));
            if (norm) normalizer.push_back(p);
        } while (std::next_permutation(img.begin(), img.end()));
        CHECK(PermSet(n, normalizer) == hol.group().carrier());
    }
}

TEST_CASE("dfs enumeration on Hol(S3)") {
    auto s3 = symmetric_group(3);
    auto hol = holomorph(s3);
    EnumOptions all;
    auto recs = enumerate_regular_dfs(hol, all);
    // Hol(S3) = lambda(S3) x rho(S3): 2 copies of S3 plus 6 of C6 (an order-6
    // element is a (2,3) or (3,2) order pair; 12 such, phi(6) = 2 generators
    // per subgroup). The ambient brute force confirms e(C6, S3) = 2.
    CHECK(recs.size() == 8);
    // rho(N) itself is always among the regular subgroups.
    auto rr = regular_reps(s3);
    bool found_rho = false;
    for (const auto& r : recs) {
        CHECK(regularity_check(r.subgroup) == RegularityClass::Regular);
        CHECK(r.subgroup.size() == 6);
        CHECK(std::is_sorted(r.tag_key.begin(), r.tag_key.end()));
        if (r.subgroup == rr.rho_image.carrier()) found_rho = true;
    }
    CHECK(found_rho);

    EnumOptions fs3;
    fs3.iso_filter = &s3;
    auto only_s3 = enumerate_regular_dfs(hol, fs3);
    CHECK(only_s3.size() == 2);
    for (const auto& r : only_s3) {
        CHECK(r.iso_type == "S3");
        REQUIRE(r.witness.has_value());
        CHECK(r.witness->is_bijective());
    }

    auto c6 = cyclic_group(6);
    EnumOptions fc6;
    fc6.iso_filter = &c6;
    CHECK(enumerate_regular_dfs(hol, fc6).size() == 6);
}

TEST_CASE("dfs enumeration on Hol(C6)") {
    auto c6 = cyclic_group(6);
    auto hol = holomorph(c6);
    auto s3 = symmetric_group(3);
    EnumOptions f;
    f.iso_filter = &s3;
    CHECK(enumerate_regular_dfs(hol, f).size() == 1);
    EnumOptions fc;
    fc.iso_filter = &c6;
    CHECK(enumerate_regular_dfs(hol, fc).size() == 1);
}

TEST_CASE("dfs workers produce identical output") {
    auto q8 = quaternion_group();
    auto hol = holomorph(q8);
    EnumOptions one;
    one.workers = 1;
    EnumOptions four;
    four.workers = 4;
    auto a = enumerate_regular_dfs(hol, one);
    auto b = enumerate_regular_dfs(hol, four);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        CHECK(a[i].tag_key == b[i].tag_key);
}

TEST_CASE("cocycle strategy on small cases") {
    auto s3 = symmetric_group(3);
    auto c6 = cyclic_group(6);
    RunConfig cfg;

    // G = S3 over N = C6: one subgroup, |Aut(S3)| = 6 pair witnesses.
    auto hol_c6 = holomorph(c6, cfg);
    auto en = enumerate_regular_cocycle(s3, hol_c6, cfg);
    CHECK(en.records.size() == 1);
    CHECK(en.pair_count == 6);
    CHECK(en.records[0].origin == EnumOrigin::CocycleSearch);
    REQUIRE(en.records[0].witness.has_value());

    // G = N = C4: rho(N) appears, pair count is |Aut| per subgroup.
    auto c4 = cyclic_group(4);
    auto hol_c4 = holomorph(c4, cfg);
    auto en4 = enumerate_regular_cocycle(c4, hol_c4, cfg);
    auto rr = regular_reps(c4);
    bool found_rho = false;
    for (const auto& r : en4.records)
        if (r.subgroup == rr.rho_image.carrier()) found_rho = true;
    CHECK(found_rho);
    CHECK(en4.pair_count ==
          static_cast<std::int64_t>(en4.records.size()) * 2);  // |Aut(C4)| = 2

    // Trivial case.
    auto c1 = cyclic_group(1);
    auto en1 = enumerate_regular_cocycle(c1, holomorph(c1, cfg), cfg);
    CHECK(en1.records.size() == 1);
    CHECK(en1.pair_count == 1);
}

TEST_CASE("byott_count on the n = 3 extensions") {
    auto r1 = byott_count(symmetric_group(3), symmetric_group(3));
    CHECK(r1.e_count == 2);
    CHECK(r1.regular_in_hol == 2);
    CHECK(r1.aut_g == 6);
    CHECK(r1.aut_n == 6);
    CHECK(r1.strategies_agree);

    auto r2 = byott_count(symmetric_group(3), cyclic_group(6));
    CHECK(r2.e_count == 3);
    CHECK(r2.regular_in_hol == 1);
    CHECK(r2.aut_n == 2);

    // The formula's integrality invariant holds on every report.
    for (const auto& r : {r1, r2})
        CHECK(r.e_count * r.aut_n == r.aut_g * r.regular_in_hol);
}

TEST_CASE("byott_count edge cases") {
    auto c1 = cyclic_group(1);
    CHECK(byott_count(c1, c1).e_count == 1);
    CHECK(byott_count(cyclic_group(2), cyclic_group(2)).e_count == 1);
    // Mismatched orders are a caller error.
    CHECK_THROWS_AS(byott_count(cyclic_group(2), cyclic_group(3)),
                    std::invalid_argument);
    // A cyclic type admits no S4 structure.
    CHECK(byott_count(symmetric_group(4), group_by_name("C24")).e_count == 0);
}

TEST_CASE("membership floor") {
    // G always admits its own type; nonabelian G twice over.
    CHECK(byott_count(symmetric_group(3), symmetric_group(3)).e_count >= 2);
    CHECK(byott_count(quaternion_group(), quaternion_group()).e_count >= 2);
    CHECK(byott_count(cyclic_group(6), cyclic_group(6)).e_count >= 1);
}

TEST_CASE("direct enumeration oracle at small orders") {
    RunConfig cfg;
    auto s3 = symmetric_group(3);
    auto rep = direct_enumerate_E(s3, cfg);
    CHECK(rep.total == 5);
    std::map<std::string, std::int64_t> buckets;
    for (const auto& b : rep.buckets) buckets[b.label] = b.count;
    CHECK(buckets == std::map<std::string, std::int64_t>{{"C6", 3}, {"S3", 2}});

    auto c2 = direct_enumerate_E(cyclic_group(2), cfg);
    CHECK(c2.total == 1);
    auto c1 = direct_enumerate_E(cyclic_group(1), cfg);
    CHECK(c1.total == 1);

    // Caps: order 7 means 5040 > 720 ambient states.
    CHECK_THROWS_AS(direct_enumerate_E(cyclic_group(7), cfg), CapExceeded);
    RunConfig big = cfg;
    big.ambient_cap = 40320;
    CHECK(direct_enumerate_E(cyclic_group(7), big).total == 1);
    // Order 9 exceeds the hard degree limit regardless of the cap.
    big.ambient_cap = 1'000'000'000;
    CHECK_THROWS_AS(direct_enumerate_E(cyclic_group(9), big), CapExceeded);
}

TEST_CASE("full_report for S3 cross-checks the oracle") {
    auto rep = full_report(symmetric_group(3));
    CHECK(rep.total == 5);
    REQUIRE(rep.rows.size() == 2);
    CHECK(rep.direct_checked);
    std::map<std::string, std::int64_t> by_type;
    for (const auto& r : rep.rows) by_type[r.n_label] = r.e_count;
    CHECK(by_type == std::map<std::string, std::int64_t>{{"C6", 3}, {"S3", 2}});
}

TEST_CASE("full_report degenerate cases") {
    CHECK(full_report(cyclic_group(1)).total == 1);
    CHECK(full_report(cyclic_group(2)).total == 1);
    auto rep = full_report(cyclic_group(4));
    CHECK(rep.rows.size() == 2);
    CHECK(rep.direct_checked);
    std::int64_t sum = 0;
    for (const auto& r : rep.rows) sum += r.e_count;
    CHECK(sum == rep.total);
}

TEST_CASE("strategy equivalence across all order <= 6 pairs") {
    std::vector<int> orders = {1, 2, 3, 4, 6};
    for (int o : orders) {
        auto classes = groups_of_order(o);
        for (const auto& g : classes)
            for (const auto& n : classes) {
                auto r = byott_count(g, n);
                CHECK(r.strategies_agree);
            }
    }
}

TEST_CASE("count JSON is byte-exact and deterministic") {
    auto rep = byott_count(symmetric_group(3), cyclic_group(6));
    std::string expect =
        "{\n"
        "  \"G\": \"S3\",\n"
        "  \"N\": \"C6\",\n"
        "  \"regular_in_hol\": 1,\n"
        "  \"aut_G\": 6,\n"
        "  \"aut_N\": 2,\n"
        "  \"e_count\": 3,\n"
        "  \"strategies_agree\": true,\n"
        "  \"elapsed_ms\": 0.0\n"
        "}\n";
    CHECK(count_json(rep) == expect);
    CHECK(count_json(rep) == count_json(byott_count(symmetric_group(3), cyclic_group(6))));
    RenderOptions with;
    with.include_elapsed = true;
    CHECK(count_json(rep, with) != expect);  // real timings differ from 0.0

    auto text = count_text(rep);
    CHECK(text.find("structure count: 3") != std::string::npos);
    CHECK(text.find("strategies agree") != std::string::npos);
}

TEST_CASE("full JSON layout") {
    auto rep = full_report(symmetric_group(3));
    auto js = full_json(rep);
    CHECK(js.find("\"total\": 5") != std::string::npos);
    CHECK(js.front() == '[');
    CHECK(js.find("\"G\": \"S3\"") != std::string::npos);
    CHECK(js == full_json(full_report(symmetric_group(3))));
    auto text = full_text(rep);
    CHECK(text.find("verified against direct enumeration") != std::string::npos);
    CHECK(text.find("total") != std::string::npos);
}
