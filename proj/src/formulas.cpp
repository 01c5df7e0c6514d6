#include "hg/formulas.hpp"

#include <stdexcept>

namespace hg {

BigInt factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

BigInt transposition_product_count(int n, int k) {
    if (n < 0 || k < 0 || 2 * k > n)
        throw std::invalid_argument("transposition_product_count: need 0 <= 2k <= n");
    BigInt v = factorial(n) / factorial(n - 2 * k);
    v /= BigInt(1) << k;
    v /= factorial(k);
    return v;
}

namespace {

BigInt parity_sum(int n, int parity) {
    BigInt total = 0;
    for (int k = parity; 2 * k <= n; k += 2) total += transposition_product_count(n, k);
    return 2 * total;
}

}  // namespace

BigInt count_sn_sn(int n) {
    if (n < 5) throw std::invalid_argument("count_sn_sn: closed form needs n >= 5");
    return parity_sum(n, 0);
}

BigInt count_sn_anc2(int n) {
    if (n < 5) throw std::invalid_argument("count_sn_anc2: closed form needs n >= 5");
    return parity_sum(n, 1);
}

BigInt total_e_sn(int n) {
    switch (n) {
        case 1:
        case 2:
            return 1;
        case 3:
            return 5;
        case 4:
            return 116;
        default:
            if (n < 1) throw std::invalid_argument("total_e_sn: need n >= 1");
            BigInt total = count_sn_sn(n) + count_sn_anc2(n);
            if (n == 6) total += kM10Count + kPGL29Count;
            return total;
    }
}

std::string to_string(CountKind kind) {
    switch (kind) {
        case CountKind::SnType: return "Sn_type";
        case CountKind::AnC2Type: return "AnC2_type";
        case CountKind::M10Type: return "M10_type";
        case CountKind::PGL29Type: return "PGL29_type";
        case CountKind::Total: return "total";
    }
    return "?";
}

std::vector<CountValue> formula_report(int n) {
    std::vector<CountValue> rows;
    if (n >= 5) {
        rows.push_back({CountKind::SnType, n, count_sn_sn(n)});
        rows.push_back({CountKind::AnC2Type, n, count_sn_anc2(n)});
        if (n == 6) {
            rows.push_back({CountKind::M10Type, n, kM10Count});
            rows.push_back({CountKind::PGL29Type, n, kPGL29Count});
        }
    }
    rows.push_back({CountKind::Total, n, total_e_sn(n)});
    return rows;
}

}  // namespace hg
