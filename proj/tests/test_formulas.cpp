#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "hg/formulas.hpp"
#include "hg/report.hpp"

using namespace hg;

namespace {

// Slow oracle: walk all of S_n and count the permutations whose cycle type is
// exactly k transpositions (everything else fixed).
long brute_transposition_products(int n, int k) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    long count = 0;
    do {
        int two = 0;
        bool ok = true;
        std::vector<char> seen(n, 0);
        for (int x = 0; x < n && ok; ++x) {
            if (seen[x]) continue;
            int y = img[x];
            if (y == x) continue;
            if (img[y] == x) {
                seen[y] = 1;
                ++two;
            } else {
                ok = false;  // a cycle longer than 2
            }
        }
        if (ok && two == k) ++count;
    } while (std::next_permutation(img.begin(), img.end()));
    return count;
}

}  // namespace

TEST_CASE("factorial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(1) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(20) == BigInt("2432902008176640000"));
    CHECK_THROWS_AS(factorial(-1), std::invalid_argument);
}

TEST_CASE("transposition products match brute force for n <= 8") {
    for (int n = 1; n <= 8; ++n)
        for (int k = 0; 2 * k <= n; ++k)
            CHECK(transposition_product_count(n, k) ==
                  brute_transposition_products(n, k));
    CHECK_THROWS_AS(transposition_product_count(5, 3), std::invalid_argument);
    CHECK_THROWS_AS(transposition_product_count(4, -1), std::invalid_argument);
}

TEST_CASE("closed-form type counts") {
    CHECK(count_sn_sn(5) == 32);
    CHECK(count_sn_anc2(5) == 20);
    CHECK(count_sn_sn(6) == 92);
    CHECK(count_sn_anc2(6) == 60);
    CHECK(count_sn_sn(7) == 212);
    CHECK(count_sn_anc2(7) == 252);
    CHECK(count_sn_sn(8) == 632);
    CHECK(count_sn_anc2(8) == 896);
    CHECK_THROWS_AS(count_sn_sn(4), std::invalid_argument);
    CHECK_THROWS_AS(count_sn_anc2(4), std::invalid_argument);
}

TEST_CASE("totals across all n") {
    CHECK(total_e_sn(1) == 1);
    CHECK(total_e_sn(2) == 1);
    CHECK(total_e_sn(3) == 5);
    CHECK(total_e_sn(4) == 116);
    CHECK(total_e_sn(5) == 52);
    CHECK(total_e_sn(6) == 224);  // 92 + 60 + 72 + 0
    CHECK(total_e_sn(7) == 464);
    CHECK(total_e_sn(8) == 1528);
    CHECK_THROWS_AS(total_e_sn(0), std::invalid_argument);
}

TEST_CASE("large n stays exact") {
    CHECK(count_sn_sn(50) == BigInt("27835603404244342656619181564567552"));
    CHECK(count_sn_anc2(50) == BigInt("27938387806440343021590050173952000"));
    CHECK(total_e_sn(50) == BigInt("55773991210684685678209231738519552"));
    // The two families always sum to the total once the sporadics are out.
    for (int n : {5, 7, 8, 9, 12, 30})
        CHECK(count_sn_sn(n) + count_sn_anc2(n) == total_e_sn(n));
    CHECK(count_sn_sn(6) + count_sn_anc2(6) + kM10Count + kPGL29Count ==
          total_e_sn(6));
}

TEST_CASE("formula_report shapes") {
    auto small = formula_report(3);
    REQUIRE(small.size() == 1);
    CHECK(small[0].kind == CountKind::Total);
    CHECK(small[0].value == 5);

    auto five = formula_report(5);
    REQUIRE(five.size() == 3);
    CHECK(to_string(five[0].kind) == "Sn_type");
    CHECK(to_string(five[1].kind) == "AnC2_type");
    CHECK(to_string(five[2].kind) == "total");
    CHECK(five[2].value == 52);

    auto six = formula_report(6);
    REQUIRE(six.size() == 5);
    CHECK(to_string(six[2].kind) == "M10_type");
    CHECK(six[2].value == 72);
    CHECK(to_string(six[3].kind) == "PGL29_type");
    CHECK(six[3].value == 0);
    CHECK(six[4].kind == CountKind::Total);

    auto seven = formula_report(7);
    CHECK(seven.size() == 3);
}

TEST_CASE("formula JSON is exact and deterministic") {
    auto rows = formula_report(5);
    std::string expect =
        "{\n"
        "  \"Sn_type\": 32,\n"
        "  \"AnC2_type\": 20,\n"
        "  \"total\": 52\n"
        "}\n";
    CHECK(formula_json(rows) == expect);
    CHECK(formula_json(rows) == formula_json(formula_report(5)));
    // Big values render as bare integer literals, not strings.
    auto big = formula_json(formula_report(50));
    CHECK(big.find("\"total\": 55773991210684685678209231738519552") !=
          std::string::npos);
    CHECK(formula_text(formula_report(6)).find("224") != std::string::npos);
}
