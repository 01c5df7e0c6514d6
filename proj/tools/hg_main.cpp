#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hg/byott.hpp"
#include "hg/catalog.hpp"
#include "hg/errors.hpp"
#include "hg/formulas.hpp"
#include "hg/report.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitEngineCap = 3;

// Tracks per-check results for the verify suites and prints one
// expected-vs-computed line per check.
struct Checker {
    int failures = 0;

    template <typename T>
    void eq(const std::string& name, const T& got, const T& want) {
        if (got == want) {
            std::cout << "ok   " << name << ": " << got << " == " << want << "\n";
        } else {
            std::cout << "FAIL " << name << ": computed " << got << ", expected " << want
                      << "\n";
            ++failures;
        }
    }

    void eq_i(const std::string& name, std::int64_t got, std::int64_t want) {
        eq<std::int64_t>(name, got, want);
    }
};

hg::FiniteGroup resolve(const std::string& spec, const hg::RunConfig& cfg) {
    return hg::group_by_name(spec, cfg);
}

int suite_s3(Checker& ck, const hg::RunConfig& cfg) {
    auto s3 = hg::symmetric_group(3);
    auto r_same = hg::byott_count(s3, s3, cfg);
    auto r_cyc = hg::byott_count(s3, hg::cyclic_group(6), cfg);
    ck.eq_i("count for type S3", r_same.e_count, 2);
    ck.eq_i("count for type C6", r_cyc.e_count, 3);
    auto full = hg::full_report(s3, cfg);
    ck.eq_i("grand total", full.total, 5);
    std::cout << "summary: " << r_same.e_count << " + " << r_cyc.e_count << " = " << full.total
              << "\n";
    return ck.failures;
}

int suite_theorem_1_1(Checker& ck, const hg::RunConfig& cfg) {
    auto rep = hg::full_report(hg::symmetric_group(4), cfg);
    auto expected = [](const std::string& label) -> std::int64_t {
        if (label == "S4") return 8;
        if (label == "A4xC2") return 36;
        if (label == "S3xC2xC2") return 24;
        if (label == "C6xC2xC2") return 48;
        return 0;
    };
    ck.eq<std::size_t>("type count", rep.rows.size(), 15);
    for (const auto& row : rep.rows)
        ck.eq_i("N = " + row.n_label, row.e_count, expected(row.n_label));
    ck.eq_i("total", rep.total, 116);
    return ck.failures;
}

int suite_oracle_small(Checker& ck, const hg::RunConfig& cfg) {
    for (const auto& entry : hg::Catalog::instance().entries()) {
        if (entry.order > 6) continue;
        auto direct = hg::direct_enumerate_E(entry.group, cfg);
        auto rep = hg::full_report(entry.group, cfg);
        for (const auto& row : rep.rows) {
            std::int64_t direct_count = -1;
            for (const auto& b : direct.buckets)
                if (b.label == row.n_label) direct_count = b.count;
            ck.eq_i("G=" + entry.label + " type " + row.n_label, row.e_count, direct_count);
        }
        ck.eq_i("G=" + entry.label + " total", rep.total, direct.total);
    }
    return ck.failures;
}

int suite_lemma_2_7(Checker& ck, const hg::RunConfig& cfg) {
    for (int n : {4, 5}) {
        auto sn = hg::symmetric_group(n);
        auto an = hg::alternating_group(n);
        auto c2 = hg::cyclic_group(2);
        auto an_x_c2 = hg::direct_product(an, c2);
        for (int i = 0; i < sn.order(); ++i) {
            const auto& s0 = sn.element(i);
            if (!hg::compose(s0, s0).is_identity()) continue;
            auto act = hg::GroupAction::by_conjugation(c2, an, {hg::Permutation(n), s0}, cfg);
            auto prod = hg::semidirect_product(an, c2, act);
            bool in_an = an.contains(s0);
            bool is_sn = hg::isomorphism_test(prod, sn, cfg).has_value();
            bool is_anc2 = hg::isomorphism_test(prod, an_x_c2, cfg).has_value();
            std::string name = "n=" + std::to_string(n) + " sigma0=" +
                               (s0.is_identity() ? "()" : hg::to_cycles(s0));
            ck.eq<bool>(name + " gives the symmetric type", is_sn, !in_an);
            ck.eq<bool>(name + " gives the product type", is_anc2, in_an);
        }
    }
    return ck.failures;
}

int suite_lemma_2_5(Checker& ck, const hg::RunConfig& cfg) {
    (void)cfg;
    const std::int64_t expected_sn[] = {8, 16, 48};
    for (int n : {5, 6, 7}) {
        auto sn = hg::symmetric_group(n);
        auto an = hg::alternating_group(n);
        auto zeta = hg::parse_cycles("(1 2)(3 4)", n);
        std::int64_t cs = sn.centralizer(zeta).order();
        std::int64_t ca = an.centralizer(zeta).order();
        ck.eq_i("n=" + std::to_string(n) + " centralizer ratio", cs, 2 * ca);
        ck.eq_i("n=" + std::to_string(n) + " symmetric centralizer", cs, expected_sn[n - 5]);
    }
    return ck.failures;
}

int suite_formulas(Checker& ck) {
    using hg::BigInt;
    ck.eq<BigInt>("total n=1", hg::total_e_sn(1), BigInt(1));
    ck.eq<BigInt>("total n=2", hg::total_e_sn(2), BigInt(1));
    ck.eq<BigInt>("total n=3", hg::total_e_sn(3), BigInt(5));
    ck.eq<BigInt>("total n=4", hg::total_e_sn(4), BigInt(116));
    ck.eq<BigInt>("symmetric type n=5", hg::count_sn_sn(5), BigInt(32));
    ck.eq<BigInt>("alternating type n=5", hg::count_sn_anc2(5), BigInt(20));
    ck.eq<BigInt>("total n=5", hg::total_e_sn(5), BigInt(52));
    BigInt s6 = hg::count_sn_sn(6), a6 = hg::count_sn_anc2(6);
    ck.eq<BigInt>("symmetric type n=6", s6, BigInt(92));
    ck.eq<BigInt>("alternating type n=6", a6, BigInt(60));
    ck.eq<BigInt>("total n=6", hg::total_e_sn(6), BigInt(224));
    std::cout << "summary: " << s6 << " + " << a6 << " + " << hg::kM10Count << " + "
              << hg::kPGL29Count << " = " << hg::total_e_sn(6) << "\n";
    ck.eq<BigInt>("total n=50",
                  hg::total_e_sn(50),
                  BigInt("55773991210684685678209231738519552"));
    return ck.failures;
}

int cmd_verify(const std::string& suite, const hg::RunConfig& cfg) {
    Checker ck;
    int failures = 0;
    if (suite == "s3") {
        failures = suite_s3(ck, cfg);
    } else if (suite == "theorem-1-1") {
        failures = suite_theorem_1_1(ck, cfg);
    } else if (suite == "oracle-small") {
        failures = suite_oracle_small(ck, cfg);
    } else if (suite == "lemma-2-7") {
        hg::RunConfig wide = cfg;
        if (wide.aut_order_bound < 60) wide.aut_order_bound = 60;
        failures = suite_lemma_2_7(ck, wide);
    } else if (suite == "lemma-2-5") {
        failures = suite_lemma_2_5(ck, cfg);
    } else if (suite == "formulas") {
        failures = suite_formulas(ck);
    } else {
        throw std::invalid_argument(
            "unknown suite '" + suite +
            "' (choose from s3, theorem-1-1, oracle-small, lemma-2-7, lemma-2-5, formulas)");
    }
    std::cout << (failures ? "suite failed: " + std::to_string(failures) + " check(s)\n"
                           : "suite passed\n");
    return failures ? kExitMismatch : kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Counts of Hopf-Galois structure types via regular-subgroup enumeration"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "json";
    std::int64_t cap = 0;
    int workers = 0;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_option("--cap", cap, "effort cap: closure size, aut-search order, ambient size");
    app.add_option("--workers", workers, "worker threads (0 = hardware)");

    auto* count = app.add_subcommand("count", "count structures for a Galois group");
    std::string g_spec, n_spec;
    count->add_option("--G", g_spec, "Galois group spec")->required();
    count->add_option("--N", n_spec, "type spec; omit or order:<k> for the full sweep");

    auto* verify = app.add_subcommand("verify", "run a named check suite");
    std::string suite;
    verify->add_option("suite", suite, "suite name")->required();

    auto* formula = app.add_subcommand("formula", "closed-form counts for symmetric groups");
    int formula_n = 0;
    formula->add_option("--n", formula_n, "symmetric group index")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    hg::RunConfig cfg;
    if (cap > 0) {
        cfg.closure_cap = static_cast<std::size_t>(cap);
        cfg.ambient_cap = cap;
        cfg.aut_order_bound = static_cast<int>(std::min<std::int64_t>(cap, 1 << 20));
    }
    cfg.workers = workers;

    std::string stage = "parse";
    try {
        if (formula->parsed()) {
            stage = "formula";
            if (formula_n < 1) throw std::invalid_argument("--n must be at least 1");
            auto rows = hg::formula_report(formula_n);
            std::cout << (format == "json" ? hg::formula_json(rows) : hg::formula_text(rows));
            return kExitPass;
        }

        stage = "catalog";
        hg::Catalog::instance();  // load and validate up front

        if (verify->parsed()) {
            stage = "verify";
            return cmd_verify(suite, cfg);
        }

        stage = "parse";
        auto g = resolve(g_spec, cfg);
        bool sweep = n_spec.empty();
        if (!sweep && n_spec.starts_with("order:")) {
            int k = std::stoi(n_spec.substr(6));
            if (k != g.order())
                throw std::invalid_argument("order:" + std::to_string(k) +
                                            " does not match |G| = " +
                                            std::to_string(g.order()));
            sweep = true;
        }

        stage = "enumerate";
        if (sweep) {
            auto rep = hg::full_report(g, cfg);
            std::cout << (format == "json" ? hg::full_json(rep) : hg::full_text(rep));
        } else {
            auto n = resolve(n_spec, cfg);
            auto rep = hg::byott_count(g, n, cfg);
            std::cout << (format == "json" ? hg::count_json(rep) : hg::count_text(rep));
        }
        return kExitPass;
    } catch (const hg::CapExceeded& e) {
        std::cerr << "error [" << stage << "]: " << e.what() << "\n";
        return kExitEngineCap;
    } catch (const hg::ConsistencyError& e) {
        std::cerr << "error [" << stage << "]: " << e.what() << "\n";
        return kExitMismatch;
    } catch (const std::exception& e) {
        std::cerr << "error [" << stage << "]: " << e.what() << "\n";
        return kExitUsage;
    }
}
