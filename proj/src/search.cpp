#include <algorithm>
#include <stdexcept>

#include "hg/errors.hpp"
#include "hg/group.hpp"

// Generator-image backtracking shared by automorphism_group, isomorphism_test
// and enumerate_hom_tables. A candidate image tuple is grown one generator at
// a time; after each choice the partial map is extended over the subgroup the
// chosen generators produce, which catches conflicts early.

namespace hg {

namespace {

// Extends identity->identity, gens[k]->imgs[k] over <gens[0..k]> by BFS along
// right multiplication. Checking every (element, generator) edge is enough:
// consistency on those edges propagates to all products by induction on word
// length. Returns false on conflict. map uses -1 for "not reached".
bool extend_map(const FiniteGroup& a, const FiniteGroup& b,
                const std::vector<int>& gens, const std::vector<int>& imgs,
                std::size_t depth, std::vector<int>& map,
                std::int64_t& nodes, std::int64_t budget) {
    std::fill(map.begin(), map.end(), -1);
    map[0] = 0;
    std::vector<int> queue{0};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int s = queue[qi];
        for (std::size_t k = 0; k < depth; ++k) {
            if (++nodes > budget)
                throw CapExceeded("group search: node budget exceeded");
            int s2 = a.mult(s, gens[k]);
            int t2 = b.mult(map[static_cast<std::size_t>(s)], imgs[k]);
            int& slot = map[static_cast<std::size_t>(s2)];
            if (slot < 0) {
                slot = t2;
                queue.push_back(s2);
            } else if (slot != t2) {
                return false;
            }
        }
    }
    return true;
}

struct ImageSearch {
    const FiniteGroup& a;
    const FiniteGroup& b;
    std::vector<int> gens{};
    std::vector<std::vector<int>> candidates{};
    std::int64_t budget = 0;
    std::int64_t nodes = 0;

    std::vector<int> imgs{};
    std::vector<int> map{};
    // on_complete sees the full table; returns true to stop the search.
    template <class F>
    bool run(F&& on_complete) {
        imgs.assign(gens.size(), -1);
        map.assign(static_cast<std::size_t>(a.order()), -1);
        return dfs(0, on_complete);
    }

    template <class F>
    bool dfs(std::size_t depth, F&& on_complete) {
        if (depth == gens.size()) {
            if (gens.empty()) {
                std::fill(map.begin(), map.end(), -1);
                map[0] = 0;  // trivial source group
            }
            return on_complete(map);
        }
        for (int cand : candidates[depth]) {
            imgs[static_cast<std::size_t>(depth)] = cand;
            if (!extend_map(a, b, gens, imgs, depth + 1, map, nodes, budget))
                continue;
            if (dfs(depth + 1, on_complete)) return true;
        }
        return false;
    }
};

std::vector<int> matching_candidates(const FiniteGroup& a, int gen,
                                     const FiniteGroup& b, bool order_divides) {
    std::vector<int> out;
    std::int64_t go = a.element_order(gen);
    std::int64_t gc = a.conjugacy_class_size(gen);
    for (int x = 0; x < b.order(); ++x) {
        std::int64_t xo = b.element_order(x);
        if (order_divides ? (go % xo == 0) : (xo == go && b.conjugacy_class_size(x) == gc))
            out.push_back(x);
    }
    return out;
}

}  // namespace

AutomorphismGroup automorphism_group(const FiniteGroup& g, const RunConfig& cfg) {
    if (g.order() > cfg.aut_order_bound)
        throw CapExceeded("automorphism_group: order " + std::to_string(g.order()) +
                          " exceeds bound " + std::to_string(cfg.aut_order_bound));
    const int n = g.order();

    ImageSearch search{g, g};
    search.gens = g.greedy_generator_indices();
    search.budget = cfg.search_node_cap;
    for (int gen : search.gens)
        search.candidates.push_back(matching_candidates(g, gen, g, false));

    std::vector<Permutation> found;
    search.run([&](const std::vector<int>& map) {
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        for (int v : map) {
            if (v < 0 || seen[static_cast<std::size_t>(v)]) return false;
            seen[static_cast<std::size_t>(v)] = 1;
        }
        found.push_back(Permutation::from_images(map));
        return false;  // keep enumerating
    });

    auto group = FiniteGroup::from_elements(PermSet(n, std::move(found)),
                                            "Aut(" + g.label() + ")");
    std::vector<Permutation> gens = group.greedy_generators();
    return AutomorphismGroup{std::move(group), std::move(gens)};
}

std::optional<GroupHom> isomorphism_test(const FiniteGroup& a, const FiniteGroup& b,
                                         const RunConfig& cfg) {
    if (a.order() != b.order()) return std::nullopt;
    if (!(a.fingerprint() == b.fingerprint())) return std::nullopt;

    ImageSearch search{a, b};
    search.gens = a.greedy_generator_indices();
    search.budget = cfg.search_node_cap;
    for (int gen : search.gens)
        search.candidates.push_back(matching_candidates(a, gen, b, false));

    std::optional<GroupHom> result;
    search.run([&](const std::vector<int>& map) {
        std::vector<char> seen(static_cast<std::size_t>(b.order()), 0);
        for (int v : map) {
            if (v < 0 || seen[static_cast<std::size_t>(v)]) return false;
            seen[static_cast<std::size_t>(v)] = 1;
        }
        result.emplace(a, b, map);
        return true;  // first witness wins
    });
    return result;
}

std::vector<std::vector<int>> enumerate_hom_tables(const FiniteGroup& a,
                                                   const FiniteGroup& b,
                                                   const RunConfig& cfg) {
    ImageSearch search{a, b};
    search.gens = a.greedy_generator_indices();
    search.budget = cfg.search_node_cap;
    for (int gen : search.gens)
        search.candidates.push_back(matching_candidates(a, gen, b, true));

    std::vector<std::vector<int>> tables;
    search.run([&](const std::vector<int>& map) {
        for (int v : map)
            if (v < 0) throw ConsistencyError("enumerate_hom_tables: incomplete map");
        tables.push_back(map);
        return false;
    });
    return tables;
}

}  // namespace hg
