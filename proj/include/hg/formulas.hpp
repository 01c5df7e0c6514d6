#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hg {

using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(int n);

// Number of elements of S_n that are products of exactly k disjoint
// transpositions: n! / ((n - 2k)! * 2^k * k!).
BigInt transposition_product_count(int n, int k);

// Closed-form structure counts on an S_n extension, n >= 5 only (below that
// the engine tables take over): twice the sum of the summand above over even
// k for the symmetric type, over odd k for the alternating-times-C2 type.
BigInt count_sn_sn(int n);
BigInt count_sn_anc2(int n);

// Sporadic order-720 types appearing only at n = 6.
inline constexpr int kM10Count = 72;
inline constexpr int kPGL29Count = 0;

// Grand total over all types: small n from the known tables (1, 1, 5, 116),
// n >= 5 from the closed forms, with the sporadic pair added at n = 6.
BigInt total_e_sn(int n);

enum class CountKind { SnType, AnC2Type, M10Type, PGL29Type, Total };
std::string to_string(CountKind kind);

struct CountValue {
    CountKind kind = CountKind::Total;
    int n = 0;
    BigInt value;
};

// Rows for one n: the per-type splits where the closed forms apply (n >= 5,
// sporadics at 6), always ending with the total.
std::vector<CountValue> formula_report(int n);

}  // namespace hg
