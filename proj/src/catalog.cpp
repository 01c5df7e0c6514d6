#include "hg/catalog.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "hg/errors.hpp"

#ifndef HG_DEFAULT_CATALOG_PATH
#define HG_DEFAULT_CATALOG_PATH "data/small_groups.cat"
#endif

namespace hg {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

std::vector<Permutation> parse_gens(const std::string& text, int degree) {
    std::vector<Permutation> gens;
    for (const auto& piece : split(text, ';'))
        gens.push_back(parse_cycles(piece, degree));
    return gens;
}

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

std::int64_t factorial64(int n) {
    std::int64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

FiniteGroup build_known(const std::vector<Permutation>& gens, std::string label,
                        std::int64_t expected_order) {
    FiniteGroup g = FiniteGroup::from_generators(
        gens, std::move(label), static_cast<std::size_t>(expected_order));
    if (g.order() != expected_order) {
        std::ostringstream msg;
        msg << g.label() << ": generators close to order " << g.order() << ", expected "
            << expected_order;
        throw ConsistencyError(msg.str());
    }
    return g;
}

Permutation full_cycle(int n) {
    std::vector<int> imgs(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) imgs[static_cast<std::size_t>(i)] = (i + 1) % n;
    return Permutation::from_images(std::move(imgs));
}

bool int_suffix(const std::string& s, std::size_t from, int& out) {
    if (from >= s.size()) return false;
    int v = 0;
    for (std::size_t i = from; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') return false;
        if (v > 100000) return false;
        v = v * 10 + (s[i] - '0');
    }
    out = v;
    return true;
}

}  // namespace

Catalog Catalog::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open group catalog: " + path);

    Catalog cat;
    std::vector<std::string> problems;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        auto fields = split(line, '|');
        if (fields.size() != 5) {
            std::ostringstream msg;
            msg << path << ":" << lineno << ": expected 5 |-separated fields, got "
                << fields.size();
            throw std::runtime_error(msg.str());
        }
        CatalogEntry e;
        e.label = fields[0];
        e.degree = std::stoi(fields[1]);
        e.order = std::stoi(fields[2]);
        e.gens_text = fields[3];
        e.fp_hash = std::stoull(fields[4], nullptr, 16);
        e.group = build_known(parse_gens(e.gens_text, e.degree), e.label, e.order);
        std::uint64_t actual = e.group.fingerprint().hash();
        if (actual != e.fp_hash) {
            std::ostringstream msg;
            msg << e.label << ": fingerprint hash " << hex64(actual) << ", file says "
                << hex64(e.fp_hash) << "; canonical line: " << catalog_line(e);
            problems.push_back(msg.str());
        }
        cat.entries_.push_back(std::move(e));
    }
    if (!problems.empty()) {
        std::ostringstream msg;
        msg << "group catalog " << path << " failed verification:";
        for (const auto& p : problems) msg << "\n  " << p;
        throw ConsistencyError(msg.str());
    }
    return cat;
}

const Catalog& Catalog::instance() {
    static Catalog cat = load(default_catalog_path());
    return cat;
}

const CatalogEntry* Catalog::by_label(const std::string& label) const {
    for (const auto& e : entries_)
        if (e.label == label) return &e;
    return nullptr;
}

std::vector<const CatalogEntry*> Catalog::of_order(int order) const {
    std::vector<const CatalogEntry*> out;
    for (const auto& e : entries_)
        if (e.order == order) out.push_back(&e);
    return out;
}

void Catalog::verify_complete() const {
    static const std::map<int, int> expected = {{1, 1}, {2, 1},  {3, 1}, {4, 2},
                                                {6, 2}, {8, 5}, {24, 15}};
    std::map<int, int> counts;
    for (const auto& e : entries_) ++counts[e.order];
    if (counts != expected)
        throw ConsistencyError("group catalog census does not match the expected class counts");

    for (std::size_t i = 0; i < entries_.size(); ++i) {
        for (std::size_t j = i + 1; j < entries_.size(); ++j) {
            if (entries_[i].label == entries_[j].label)
                throw ConsistencyError("duplicate catalog label: " + entries_[i].label);
            if (entries_[i].order == entries_[j].order &&
                entries_[i].group.fingerprint().canonical_string() ==
                    entries_[j].group.fingerprint().canonical_string())
                throw ConsistencyError("catalog classes " + entries_[i].label + " and " +
                                       entries_[j].label + " have identical fingerprints");
        }
    }
}

std::string default_catalog_path() {
    if (const char* env = std::getenv("HG_CATALOG_PATH")) return env;
    return HG_DEFAULT_CATALOG_PATH;
}

std::string catalog_line(const CatalogEntry& e) {
    std::ostringstream out;
    out << e.label << '|' << e.degree << '|' << e.order << '|' << e.gens_text << '|'
        << hex64(e.group.fingerprint().hash());
    return out.str();
}

FiniteGroup symmetric_group(int n) {
    if (n < 1 || n > 12) throw std::invalid_argument("symmetric_group: need 1 <= n <= 12");
    std::string label = "S" + std::to_string(n);
    if (n == 1)
        return build_known({Permutation(1)}, std::move(label), 1);
    std::vector<Permutation> gens{parse_cycles("(1 2)", n)};
    if (n > 2) gens.push_back(full_cycle(n));
    return build_known(gens, std::move(label), factorial64(n));
}

FiniteGroup alternating_group(int n) {
    if (n < 3 || n > 12) throw std::invalid_argument("alternating_group: need 3 <= n <= 12");
    std::vector<Permutation> gens{parse_cycles("(1 2 3)", n)};
    if (n > 3) {
        // n-cycle when that is even, else the (n-1)-cycle fixing 1.
        std::vector<int> imgs(static_cast<std::size_t>(n));
        if (n % 2 == 1) {
            for (int i = 0; i < n; ++i) imgs[static_cast<std::size_t>(i)] = (i + 1) % n;
        } else {
            imgs[0] = 0;
            for (int i = 1; i < n; ++i) imgs[static_cast<std::size_t>(i)] = i % (n - 1) + 1;
        }
        gens.push_back(Permutation::from_images(imgs));
    }
    return build_known(gens, "A" + std::to_string(n), factorial64(n) / 2);
}

FiniteGroup cyclic_group(int n) {
    if (n < 1) throw std::invalid_argument("cyclic_group: need n >= 1");
    std::string label = "C" + std::to_string(n);
    if (n == 1) return build_known({Permutation(1)}, std::move(label), 1);
    return build_known({full_cycle(n)}, std::move(label), n);
}

FiniteGroup dihedral_group(int n) {
    if (n < 3) throw std::invalid_argument("dihedral_group: need n >= 3");
    std::vector<int> flip(static_cast<std::size_t>(n));
    flip[0] = 0;
    for (int i = 1; i < n; ++i) flip[static_cast<std::size_t>(i)] = n - i;
    return build_known({full_cycle(n), Permutation::from_images(flip)},
                       "D" + std::to_string(n), 2 * n);
}

FiniteGroup quaternion_group() {
    return build_known(parse_gens("(1 2 5 6)(3 4 7 8);(1 3 5 7)(2 8 6 4)", 8), "Q8", 8);
}

FiniteGroup group_by_name(const std::string& spec, const RunConfig& cfg) {
    if (spec.empty()) throw std::invalid_argument("empty group spec");

    if (spec.starts_with("gens:")) {
        std::size_t colon = spec.find(':', 5);
        if (colon == std::string::npos)
            throw std::invalid_argument("group spec '" + spec +
                                        "': expected gens:<degree>:<cycles;...>");
        int degree = std::stoi(spec.substr(5, colon - 5));
        if (degree < 1 || degree > 4096)
            throw std::invalid_argument("group spec '" + spec + "': bad degree");
        auto gens = parse_gens(spec.substr(colon + 1), degree);
        return FiniteGroup::from_generators(gens, spec, cfg.closure_cap);
    }

    int n = 0;
    if (spec == "Q8") return quaternion_group();
    if (spec[0] == 'S' && int_suffix(spec, 1, n) && n >= 1 && n <= 8)
        return symmetric_group(n);
    if (spec[0] == 'A' && int_suffix(spec, 1, n) && n >= 3 && n <= 8)
        return alternating_group(n);
    if (spec[0] == 'C' && int_suffix(spec, 1, n) && n >= 1 &&
        static_cast<std::size_t>(n) <= cfg.closure_cap)
        return cyclic_group(n);
    if (spec[0] == 'D' && int_suffix(spec, 1, n) && n >= 3 &&
        static_cast<std::size_t>(n) <= cfg.closure_cap / 2)
        return dihedral_group(n);

    if (const CatalogEntry* e = Catalog::instance().by_label(spec)) return e->group;

    if (spec.find('x') != std::string::npos) {
        auto parts = split(spec, 'x');
        FiniteGroup g = group_by_name(parts[0], cfg);
        for (std::size_t i = 1; i < parts.size(); ++i)
            g = direct_product(g, group_by_name(parts[i], cfg), "", cfg.closure_cap);
        return g.with_label(spec);
    }

    throw std::invalid_argument("unknown group spec: " + spec);
}

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

std::vector<FiniteGroup> groups_of_order(int order) {
    std::vector<FiniteGroup> out;
    for (const CatalogEntry* e : Catalog::instance().of_order(order)) out.push_back(e->group);
    if (out.empty()) {
        // Prime order forces the cyclic group; other uncovered orders are out
        // of the engine's range.
        if (!is_prime(order))
            throw std::invalid_argument("group catalog has no classes of order " +
                                        std::to_string(order));
        out.push_back(cyclic_group(order));
    }
    return out;
}

std::string classify_iso_type(const FiniteGroup& g, const RunConfig& cfg) {
    auto classes = groups_of_order(g.order());
    const std::string want = g.fingerprint().canonical_string();
    for (const auto& cls : classes) {
        if (cls.fingerprint().canonical_string() != want) continue;
        // The class lists are complete and fingerprint-distinct per order, so
        // this match is the answer; the explicit test keeps it honest.
        if (!isomorphism_test(cls, g, cfg))
            throw ConsistencyError("classify_iso_type: fingerprint matched " + cls.label() +
                                   " but no isomorphism found");
        return cls.label();
    }
    throw ConsistencyError("classify_iso_type: no class of order " +
                           std::to_string(g.order()) + " matches");
}

}  // namespace hg
