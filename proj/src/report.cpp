#include "hg/report.hpp"

#include <cmath>
#include <sstream>

#include "json.hpp"

namespace hg {

namespace {

using ordered_json = nlohmann::ordered_json;

double round_ms(double ms) { return std::round(ms * 1000.0) / 1000.0; }

ordered_json count_row(const HGCountReport& rep, const RenderOptions& opts) {
    ordered_json row;
    row["G"] = rep.g_label;
    row["N"] = rep.n_label;
    row["regular_in_hol"] = rep.regular_in_hol;
    row["aut_G"] = rep.aut_g;
    row["aut_N"] = rep.aut_n;
    row["e_count"] = rep.e_count;
    row["strategies_agree"] = rep.strategies_agree;
    row["elapsed_ms"] = opts.include_elapsed ? round_ms(rep.elapsed.total_ms()) : 0.0;
    return row;
}

}  // namespace

std::string count_json(const HGCountReport& rep, const RenderOptions& opts) {
    return count_row(rep, opts).dump(2) + "\n";
}

std::string full_json(const FullReport& rep, const RenderOptions& opts) {
    ordered_json arr = ordered_json::array();
    for (const auto& row : rep.rows) arr.push_back(count_row(row, opts));
    ordered_json tail;
    tail["total"] = rep.total;
    arr.push_back(tail);
    return arr.dump(2) + "\n";
}

std::string formula_json(const std::vector<CountValue>& rows) {
    // Rendered by hand: the values are arbitrary-precision integers and must
    // appear as exact JSON number literals.
    std::ostringstream out;
    out << "{\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out << "  \"" << to_string(rows[i].kind) << "\": " << rows[i].value;
        out << (i + 1 < rows.size() ? ",\n" : "\n");
    }
    out << "}\n";
    return out.str();
}

std::string count_text(const HGCountReport& rep) {
    std::ostringstream out;
    out << "G = " << rep.g_label << ", N = " << rep.n_label << "\n"
        << "  regular subgroups of Hol(N) isomorphic to G: " << rep.regular_in_hol << "\n"
        << "  |Aut(G)| = " << rep.aut_g << ", |Aut(N)| = " << rep.aut_n << "\n"
        << "  structure count: " << rep.e_count
        << (rep.strategies_agree ? "  (both strategies agree)" : "") << "\n"
        << "  elapsed: " << round_ms(rep.elapsed.total_ms()) << " ms\n";
    return out.str();
}

std::string full_text(const FullReport& rep) {
    std::ostringstream out;
    out << "structure counts for G = " << rep.g_label << " by type:\n";
    for (const auto& row : rep.rows)
        out << "  " << row.n_label << ": " << row.e_count << "\n";
    out << "total: " << rep.total;
    if (rep.direct_checked) out << "  (verified against direct enumeration)";
    out << "\n"
        << "elapsed: " << round_ms(rep.elapsed_ms) << " ms\n";
    return out.str();
}

std::string formula_text(const std::vector<CountValue>& rows) {
    std::ostringstream out;
    if (rows.empty()) return "";
    out << "n = " << rows.front().n << "\n";
    for (const auto& row : rows)
        out << "  " << to_string(row.kind) << ": " << row.value << "\n";
    return out.str();
}

}  // namespace hg
