#include "hg/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

#include "hg/errors.hpp"

namespace hg {

namespace {

// Core search state over holomorph tags. cover[x] holds 1 + position of the
// member whose xi-value is x, so the evaluation map stays injective by
// construction and a closed partial subgroup can never exceed n elements.
struct TagDfs {
    const Holomorph& hol;
    int n;
    std::vector<Holomorph::Tag> members;
    std::vector<int> cover;
    std::vector<std::vector<std::uint32_t>>* out;

    explicit TagDfs(const Holomorph& h, std::vector<std::vector<std::uint32_t>>* sink)
        : hol(h), n(h.n()), cover(static_cast<std::size_t>(h.n()), 0), out(sink) {
        push(Holomorph::Tag{0, 0});
    }

    bool push(Holomorph::Tag t) {
        int x = hol.xi_point(t);
        int& slot = cover[static_cast<std::size_t>(x)];
        if (slot) return members[static_cast<std::size_t>(slot - 1)] == t;
        members.push_back(t);
        slot = static_cast<int>(members.size());
        return true;
    }

    void rollback(std::size_t base) {
        while (members.size() > base) {
            cover[static_cast<std::size_t>(hol.xi_point(members.back()))] = 0;
            members.pop_back();
        }
    }

    // Adds t and saturates under products. Pair coverage: when the later of
    // two members is processed the earlier one is already present, so every
    // ordered pair gets multiplied. Returns false on an evaluation collision.
    bool close_with(Holomorph::Tag t) {
        std::size_t qi = members.size();
        if (!push(t)) return false;
        for (; qi < members.size(); ++qi) {
            Holomorph::Tag u = members[qi];
            for (std::size_t ti = 0; ti < members.size(); ++ti) {
                Holomorph::Tag v = members[ti];
                if (!push(hol.mul(u, v)) || !push(hol.mul(v, u))) return false;
            }
        }
        return true;
    }

    int first_uncovered() const {
        for (int x = 0; x < n; ++x)
            if (!cover[static_cast<std::size_t>(x)]) return x;
        return -1;
    }

    void emit() {
        std::vector<std::uint32_t> key;
        key.reserve(members.size());
        for (auto t : members) key.push_back(hol.tag_id(t));
        std::sort(key.begin(), key.end());
        out->push_back(std::move(key));
    }

    void dfs() {
        int x = first_uncovered();
        if (x < 0) {
            emit();
            return;
        }
        std::uint16_t m = hol.m_covering(x);
        std::size_t base = members.size();
        for (int phi = 0; phi < hol.aut_order(); ++phi) {
            if (close_with(Holomorph::Tag{m, static_cast<std::uint16_t>(phi)})) dfs();
            rollback(base);
        }
    }
};

// Runs the first branching level in parallel; the result order is fixed by
// branch index, so worker count never changes the output.
std::vector<std::vector<std::uint32_t>> all_regular_tag_keys(const Holomorph& hol,
                                                             int workers) {
    const int n = hol.n();
    if (n == 1) return {{hol.tag_id(Holomorph::Tag{0, 0})}};

    const int A = hol.aut_order();
    std::vector<std::vector<std::vector<std::uint32_t>>> per_branch(
        static_cast<std::size_t>(A));
    std::atomic<int> next{0};
    auto work = [&] {
        for (;;) {
            int phi = next.fetch_add(1);
            if (phi >= A) return;
            TagDfs dfs(hol, &per_branch[static_cast<std::size_t>(phi)]);
            int x = dfs.first_uncovered();
            std::uint16_t m = hol.m_covering(x);
            if (dfs.close_with(Holomorph::Tag{m, static_cast<std::uint16_t>(phi)}))
                dfs.dfs();
        }
    };
    int w = std::min(resolve_workers(workers), A);
    if (w <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(w));
        for (int i = 0; i < w; ++i) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    std::vector<std::vector<std::uint32_t>> keys;
    for (auto& branch : per_branch)
        for (auto& k : branch) keys.push_back(std::move(k));
    std::sort(keys.begin(), keys.end());
    for (std::size_t i = 1; i < keys.size(); ++i)
        if (keys[i] == keys[i - 1])
            throw ConsistencyError("enumerate_regular_dfs: duplicate subgroup emitted");
    return keys;
}

FiniteGroup subgroup_from_key(const Holomorph& hol, const std::vector<std::uint32_t>& key) {
    std::vector<Permutation> perms;
    perms.reserve(key.size());
    for (auto id : key)
        perms.push_back(hol.group().element(hol.carrier_index_of(hol.tag_from_id(id))));
    return FiniteGroup::from_elements(PermSet(hol.n(), std::move(perms)), "",
                                      /*verify_closure=*/false);
}

// Element-order histogram straight from tag arithmetic; cheap pre-filter
// before building a FiniteGroup at each leaf.
std::vector<int> key_order_histogram(const Holomorph& hol,
                                     const std::vector<std::uint32_t>& key) {
    std::vector<int> hist(static_cast<std::size_t>(hol.n()) + 1, 0);
    for (auto id : key) {
        Holomorph::Tag t = hol.tag_from_id(id);
        Holomorph::Tag p = t;
        int ord = 1;
        while (!(p == Holomorph::Tag{0, 0})) {
            p = hol.mul(p, t);
            ++ord;
        }
        ++hist[static_cast<std::size_t>(ord)];
    }
    return hist;
}

std::vector<int> group_order_histogram(const FiniteGroup& g) {
    std::vector<int> hist(static_cast<std::size_t>(g.order()) + 1, 0);
    for (int i = 0; i < g.order(); ++i)
        ++hist[static_cast<std::size_t>(g.element_order(i))];
    return hist;
}

}  // namespace

std::vector<RegularSubgroupRecord> enumerate_regular_dfs(const Holomorph& hol,
                                                         const EnumOptions& opts,
                                                         const RunConfig& cfg) {
    auto keys = all_regular_tag_keys(hol, opts.workers > 0 ? opts.workers : cfg.workers);

    std::vector<RegularSubgroupRecord> records;
    std::vector<int> filter_hist;
    if (opts.iso_filter) {
        if (opts.iso_filter->order() != hol.n())
            throw std::invalid_argument("enumerate_regular_dfs: filter order must match |N|");
        filter_hist = group_order_histogram(*opts.iso_filter);
    }
    for (auto& key : keys) {
        RegularSubgroupRecord rec;
        rec.origin = EnumOrigin::HolomorphDfs;
        if (opts.iso_filter) {
            if (key_order_histogram(hol, key) != filter_hist) continue;
            FiniteGroup sub = subgroup_from_key(hol, key);
            auto iso = isomorphism_test(*opts.iso_filter, sub, cfg);
            if (!iso) continue;
            rec.iso_type = opts.iso_filter->label();
            rec.witness = std::move(iso);
            rec.subgroup = sub.carrier();
        } else {
            rec.subgroup = subgroup_from_key(hol, key).carrier();
        }
        rec.tag_key = std::move(key);
        records.push_back(std::move(rec));
    }
    return records;
}

CocycleEnumeration enumerate_regular_cocycle(const FiniteGroup& g, const Holomorph& hol,
                                             const RunConfig& cfg) {
    const int n = hol.n();
    if (g.order() != n)
        throw std::invalid_argument("enumerate_regular_cocycle: |G| must equal |N|");

    CocycleEnumeration out;
    auto homs = enumerate_hom_tables(g, hol.aut_group(), cfg);
    out.hom_count = static_cast<std::int64_t>(homs.size());

    std::vector<int> gens = g.greedy_generator_indices();
    const std::size_t K = gens.size();

    std::set<std::vector<std::uint32_t>> seen;

    std::vector<int> gval(static_cast<std::size_t>(n));
    std::vector<int> queue;
    std::vector<int> vals(K);

    auto try_assignment = [&](const std::vector<int>& f) {
        // Propagate g over the Cayley graph from the identity; checking every
        // (element, generator) edge verifies the cocycle identity globally.
        std::fill(gval.begin(), gval.end(), -1);
        gval[0] = 0;
        queue.assign(1, 0);
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int s = queue[qi];
            for (std::size_t k = 0; k < K; ++k) {
                int s2 = g.mult(s, gens[k]);
                int v2 = hol.nmult(gval[static_cast<std::size_t>(s)],
                                   hol.act(f[static_cast<std::size_t>(s)],
                                           vals[k]));
                int& slot = gval[static_cast<std::size_t>(s2)];
                if (slot < 0) {
                    slot = v2;
                    queue.push_back(s2);
                } else if (slot != v2) {
                    return;
                }
            }
        }
        std::vector<char> hit(static_cast<std::size_t>(n), 0);
        for (int v : gval) {
            if (v < 0 || hit[static_cast<std::size_t>(v)]) return;
            hit[static_cast<std::size_t>(v)] = 1;
        }

        ++out.pair_count;
        std::vector<std::uint32_t> key;
        key.reserve(static_cast<std::size_t>(n));
        for (int s = 0; s < n; ++s)
            key.push_back(hol.tag_id(Holomorph::Tag{
                static_cast<std::uint16_t>(gval[static_cast<std::size_t>(s)]),
                static_cast<std::uint16_t>(f[static_cast<std::size_t>(s)])}));
        std::vector<std::uint32_t> sorted_key = key;
        std::sort(sorted_key.begin(), sorted_key.end());
        if (!seen.insert(sorted_key).second) return;

        RegularSubgroupRecord rec;
        rec.origin = EnumOrigin::CocycleSearch;
        rec.iso_type = g.label();
        FiniteGroup sub = subgroup_from_key(hol, sorted_key);
        // sigma -> rho(g(sigma)) f(sigma) is itself the isomorphism witness.
        std::vector<int> table(static_cast<std::size_t>(n));
        for (int s = 0; s < n; ++s) {
            int ci = hol.carrier_index_of(hol.tag_from_id(key[static_cast<std::size_t>(s)]));
            int k = sub.index_of(hol.group().element(ci));
            if (k < 0) throw ConsistencyError("cocycle: member missing from subgroup");
            table[static_cast<std::size_t>(s)] = k;
        }
        rec.witness.emplace(g, sub, std::move(table));
        rec.subgroup = sub.carrier();
        rec.tag_key = std::move(sorted_key);
        out.records.push_back(std::move(rec));
    };

    for (const auto& f : homs) {
        // Choose g on the generators; distinct nonidentity values only, since
        // g must be bijective with g(1) = 1.
        if (K == 0) {
            vals.clear();
            try_assignment(f);
            continue;
        }
        std::size_t depth = 0;
        std::vector<int> cur(K, 0);
        for (;;) {
            if (cur[depth] >= n) {
                if (depth == 0) break;
                cur[depth] = 0;
                --depth;
                ++cur[depth];
                continue;
            }
            int v = cur[depth];
            bool dup = v == 0;
            for (std::size_t k = 0; !dup && k < depth; ++k) dup = cur[k] == v;
            if (dup) {
                ++cur[depth];
                continue;
            }
            if (depth + 1 < K) {
                ++depth;
                cur[depth] = 0;
                continue;
            }
            for (std::size_t k = 0; k < K; ++k) vals[k] = cur[k];
            try_assignment(f);
            ++cur[depth];
        }
    }

    std::sort(out.records.begin(), out.records.end(),
              [](const RegularSubgroupRecord& a, const RegularSubgroupRecord& b) {
                  return a.tag_key < b.tag_key;
              });
    return out;
}

}  // namespace hg
