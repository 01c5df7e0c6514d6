#include "hg/byott.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "hg/catalog.hpp"
#include "hg/errors.hpp"
#include "hg/holomorph.hpp"

namespace hg {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void check_record(const RegularSubgroupRecord& rec, const char* where) {
    if (regularity_check(rec.subgroup) != RegularityClass::Regular)
        throw ConsistencyError(std::string(where) + ": emitted subgroup is not regular");
    if (rec.witness && !rec.witness->is_bijective())
        throw ConsistencyError(std::string(where) + ": witness is not an isomorphism");
}

// The full symmetric group on [0, n) with elements in lexicographic order of
// image arrays, so index 0 is the identity and the elements sending 0 to x
// form the contiguous block [x*(n-1)!, (x+1)*(n-1)!).
class AmbientSym {
public:
    explicit AmbientSym(int n) : n_(n) {
        fact_[0] = 1;
        for (int i = 1; i <= n; ++i)
            fact_[static_cast<std::size_t>(i)] = fact_[static_cast<std::size_t>(i - 1)] * i;
        size_ = fact_[static_cast<std::size_t>(n)];
        images_.reserve(static_cast<std::size_t>(size_ * n));
        std::vector<int> v(static_cast<std::size_t>(n));
        std::iota(v.begin(), v.end(), 0);
        do {
            images_.insert(images_.end(), v.begin(), v.end());
        } while (std::next_permutation(v.begin(), v.end()));

        inv_.resize(static_cast<std::size_t>(size_));
        std::vector<int> w(static_cast<std::size_t>(n));
        for (std::int64_t e = 0; e < size_; ++e) {
            const int* img = images(e);
            for (int x = 0; x < n; ++x) w[static_cast<std::size_t>(img[x])] = x;
            inv_[static_cast<std::size_t>(e)] = rank(w.data());
        }
        if (size_ <= 1024) {
            table_.resize(static_cast<std::size_t>(size_ * size_));
            for (std::int64_t a = 0; a < size_; ++a)
                for (std::int64_t b = 0; b < size_; ++b)
                    table_[static_cast<std::size_t>(a * size_ + b)] =
                        static_cast<std::uint16_t>(compose_rank(a, b));
        }
    }

    std::int64_t size() const { return size_; }
    std::int64_t block_size() const { return fact_[static_cast<std::size_t>(n_ - 1)]; }
    const int* images(std::int64_t e) const {
        return images_.data() + static_cast<std::size_t>(e * n_);
    }
    int first_image(std::int64_t e) const { return images(e)[0]; }

    std::int64_t mult(std::int64_t a, std::int64_t b) const {
        if (!table_.empty()) return table_[static_cast<std::size_t>(a * size_ + b)];
        return compose_rank(a, b);
    }
    std::int64_t inv(std::int64_t e) const { return inv_[static_cast<std::size_t>(e)]; }

    std::int64_t rank(const int* img) const {
        std::int64_t r = 0;
        for (int i = 0; i < n_; ++i) {
            int smaller = 0;
            for (int j = i + 1; j < n_; ++j)
                if (img[j] < img[i]) ++smaller;
            r += smaller * fact_[static_cast<std::size_t>(n_ - 1 - i)];
        }
        return r;
    }

    Permutation element(std::int64_t e) const {
        const int* img = images(e);
        return Permutation::from_images(std::vector<int>(img, img + n_));
    }

private:
    std::int64_t compose_rank(std::int64_t a, std::int64_t b) const {
        const int* ia = images(a);
        const int* ib = images(b);
        int buf[16];
        for (int x = 0; x < n_; ++x) buf[x] = ia[ib[x]];
        return rank(buf);
    }

    int n_;
    std::int64_t size_ = 0;
    std::int64_t fact_[13] = {};
    std::vector<int> images_;
    std::vector<std::int64_t> inv_;
    std::vector<std::uint16_t> table_;
};

// Forced-cover DFS over the ambient symmetric group, same shape as the
// holomorph search: cover points by the image of 0, saturate, prune on
// evaluation collisions.
struct AmbientDfs {
    const AmbientSym& sym;
    int n;
    std::vector<std::int64_t> members;
    std::vector<int> cover;
    std::vector<std::vector<std::int64_t>>& found;

    AmbientDfs(const AmbientSym& s, int degree, std::vector<std::vector<std::int64_t>>& out)
        : sym(s), n(degree), cover(static_cast<std::size_t>(degree), 0), found(out) {
        push(0);
    }

    bool push(std::int64_t e) {
        int x = sym.first_image(e);
        int& slot = cover[static_cast<std::size_t>(x)];
        if (slot) return members[static_cast<std::size_t>(slot - 1)] == e;
        members.push_back(e);
        slot = static_cast<int>(members.size());
        return true;
    }

    void rollback(std::size_t base) {
        while (members.size() > base) {
            cover[static_cast<std::size_t>(sym.first_image(members.back()))] = 0;
            members.pop_back();
        }
    }

    bool close_with(std::int64_t e) {
        std::size_t qi = members.size();
        if (!push(e)) return false;
        for (; qi < members.size(); ++qi) {
            std::int64_t u = members[qi];
            for (std::size_t ti = 0; ti < members.size(); ++ti) {
                std::int64_t v = members[ti];
                if (!push(sym.mult(u, v)) || !push(sym.mult(v, u))) return false;
            }
        }
        return true;
    }

    void dfs() {
        int x = -1;
        for (int i = 0; i < n; ++i)
            if (!cover[static_cast<std::size_t>(i)]) {
                x = i;
                break;
            }
        if (x < 0) {
            std::vector<std::int64_t> sub = members;
            std::sort(sub.begin(), sub.end());
            found.push_back(std::move(sub));
            return;
        }
        std::size_t base = members.size();
        std::int64_t lo = x * sym.block_size();
        std::int64_t hi = lo + sym.block_size();
        for (std::int64_t e = lo; e < hi; ++e) {
            if (close_with(e)) dfs();
            rollback(base);
        }
    }
};

}  // namespace

HGCountReport byott_count(const FiniteGroup& g, const FiniteGroup& n, const RunConfig& cfg) {
    if (g.order() != n.order())
        throw std::invalid_argument("byott_count: |G| = " + std::to_string(g.order()) +
                                    " but |N| = " + std::to_string(n.order()));
    HGCountReport rep;
    rep.g_label = g.label();
    rep.n_label = n.label();

    auto t0 = Clock::now();
    Holomorph hol = holomorph(n, cfg);
    rep.aut_n = hol.aut_order();
    rep.aut_g = automorphism_group(g, cfg).group.order();
    rep.elapsed.holomorph_ms = ms_since(t0);

    t0 = Clock::now();
    EnumOptions opts;
    opts.iso_filter = &g;
    opts.workers = cfg.workers;
    auto dfs_records = enumerate_regular_dfs(hol, opts, cfg);
    for (const auto& rec : dfs_records) check_record(rec, "enumerate_regular_dfs");
    rep.regular_in_hol = static_cast<std::int64_t>(dfs_records.size());
    rep.elapsed.dfs_ms = ms_since(t0);

    t0 = Clock::now();
    auto coc = enumerate_regular_cocycle(g, hol, cfg);
    for (const auto& rec : coc.records) check_record(rec, "enumerate_regular_cocycle");
    bool same = coc.records.size() == dfs_records.size();
    for (std::size_t i = 0; same && i < dfs_records.size(); ++i)
        same = coc.records[i].tag_key == dfs_records[i].tag_key;
    if (!same)
        throw ConsistencyError("enumeration strategies disagree for G=" + rep.g_label +
                               ", N=" + rep.n_label);
    if (coc.pair_count != rep.aut_g * rep.regular_in_hol)
        throw ConsistencyError("cocycle pair count " + std::to_string(coc.pair_count) +
                               " != |Aut(G)| * subgroup count for G=" + rep.g_label +
                               ", N=" + rep.n_label);
    rep.strategies_agree = true;
    rep.elapsed.cocycle_ms = ms_since(t0);

    std::int64_t num = rep.aut_g * rep.regular_in_hol;
    if (num % rep.aut_n != 0)
        throw ConsistencyError("translation formula is not integral for G=" + rep.g_label +
                               ", N=" + rep.n_label);
    rep.e_count = num / rep.aut_n;
    return rep;
}

DirectEnumReport direct_enumerate_E(const FiniteGroup& g, const RunConfig& cfg) {
    auto t0 = Clock::now();
    const int n = g.order();
    if (n > 8)
        throw CapExceeded("direct enumeration is limited to |G| <= 8; got " +
                          std::to_string(n));
    std::int64_t nfact = 1;
    for (int i = 2; i <= n; ++i) nfact *= i;
    if (nfact > cfg.ambient_cap)
        throw CapExceeded("direct enumeration over " + std::to_string(nfact) +
                          " ambient permutations exceeds the cap of " +
                          std::to_string(cfg.ambient_cap));

    DirectEnumReport rep;
    rep.g_label = g.label();

    AmbientSym sym(n);
    std::vector<std::vector<std::int64_t>> all_regular;
    if (n == 1) {
        all_regular.push_back({0});
    } else {
        AmbientDfs dfs(sym, n, all_regular);
        dfs.dfs();
    }

    // Keep the subgroups normalized by the left translations; checking the
    // generators suffices since the normalizer is itself a subgroup.
    RegularRep reps = regular_reps(g);
    std::vector<std::int64_t> lambda_gens;
    for (int gi : g.greedy_generator_indices())
        lambda_gens.push_back(sym.rank(reps.lambda_of[static_cast<std::size_t>(gi)]
                                           .images()
                                           .data()));

    auto classes = groups_of_order(n);
    rep.buckets.reserve(classes.size());
    for (const auto& cls : classes) rep.buckets.push_back({cls.label(), 0});

    std::vector<char> member(static_cast<std::size_t>(sym.size()));
    for (const auto& sub : all_regular) {
        std::fill(member.begin(), member.end(), 0);
        for (auto e : sub) member[static_cast<std::size_t>(e)] = 1;
        bool normalized = true;
        for (auto l : lambda_gens) {
            std::int64_t linv = sym.inv(l);
            for (auto e : sub)
                if (!member[static_cast<std::size_t>(sym.mult(sym.mult(l, e), linv))]) {
                    normalized = false;
                    break;
                }
            if (!normalized) break;
        }
        if (!normalized) continue;

        std::vector<Permutation> perms;
        perms.reserve(sub.size());
        for (auto e : sub) perms.push_back(sym.element(e));
        FiniteGroup sub_group =
            FiniteGroup::from_elements(PermSet(n, std::move(perms)), "", false);
        if (regularity_check(sub_group.carrier()) != RegularityClass::Regular)
            throw ConsistencyError("direct enumeration emitted a non-regular subgroup");
        std::string label = classify_iso_type(sub_group, cfg);
        bool hit = false;
        for (auto& b : rep.buckets)
            if (b.label == label) {
                ++b.count;
                hit = true;
                break;
            }
        if (!hit) throw ConsistencyError("direct enumeration: unknown type " + label);
        ++rep.total;
    }

    rep.elapsed_ms = ms_since(t0);
    return rep;
}

FullReport full_report(const FiniteGroup& g, const std::vector<FiniteGroup>& classes,
                       const RunConfig& cfg) {
    auto t0 = Clock::now();
    FullReport rep;
    rep.g_label = g.label();
    for (const auto& cls : classes) {
        rep.rows.push_back(byott_count(g, cls, cfg));
        rep.total += rep.rows.back().e_count;
    }

    bool ambient_feasible = g.order() <= 8;
    if (ambient_feasible) {
        std::int64_t nfact = 1;
        for (int i = 2; i <= g.order(); ++i) nfact *= i;
        ambient_feasible = nfact <= cfg.ambient_cap;
    }
    if (ambient_feasible) {
        DirectEnumReport direct = direct_enumerate_E(g, cfg);
        if (direct.total != rep.total)
            throw ConsistencyError("direct enumeration total " + std::to_string(direct.total) +
                                   " != translation-formula total " + std::to_string(rep.total) +
                                   " for G=" + rep.g_label);
        for (const auto& row : rep.rows) {
            const DirectBucket* bucket = nullptr;
            for (const auto& b : direct.buckets)
                if (b.label == row.n_label) {
                    bucket = &b;
                    break;
                }
            if (!bucket || bucket->count != row.e_count)
                throw ConsistencyError("direct enumeration disagrees on type " + row.n_label +
                                       " for G=" + rep.g_label);
        }
        rep.direct_checked = true;
    }

    rep.elapsed_ms = ms_since(t0);
    return rep;
}

FullReport full_report(const FiniteGroup& g, const RunConfig& cfg) {
    return full_report(g, groups_of_order(g.order()), cfg);
}

}  // namespace hg
