#include "hg/group.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "hg/errors.hpp"

namespace hg {

namespace {
// Below this order a full multiplication table is stored (n^2 uint16),
// which also proves closure as a side effect of construction.
constexpr int kMultTableMax = 1024;
}  // namespace

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string IsoFingerprint::canonical_string() const {
    std::ostringstream out;
    out << "o=" << order << ";h=";
    for (std::size_t i = 0; i < order_histogram.size(); ++i) {
        if (i) out << ',';
        out << order_histogram[i].first << ':' << order_histogram[i].second;
    }
    out << ";z=" << center_order << ";d=" << derived_order
        << ";ab=" << (abelian ? 1 : 0) << ";cc=";
    for (std::size_t i = 0; i < conj_class_sizes.size(); ++i) {
        if (i) out << ',';
        out << conj_class_sizes[i];
    }
    return out.str();
}

std::uint64_t IsoFingerprint::hash() const { return fnv1a64(canonical_string()); }

struct FiniteGroup::Data {
    PermSet carrier;
    std::vector<std::uint16_t> inv;
    std::vector<std::uint16_t> mult;  // n*n when n <= kMultTableMax, else empty
    std::vector<std::int64_t> elem_order;

    mutable std::mutex mu;
    mutable std::optional<IsoFingerprint> fp;
    mutable std::optional<std::vector<int>> center_idx;
    mutable std::optional<std::vector<int>> derived_idx;
    mutable std::optional<std::vector<int>> class_ids;
    mutable std::optional<std::vector<std::int64_t>> class_size;

    int n() const { return static_cast<int>(carrier.size()); }

    int lookup(const Permutation& p) const {
        auto idx = carrier.index_of(p);
        return idx ? *idx : -1;
    }

    int mul(int i, int j) const {
        if (!mult.empty())
            return mult[static_cast<std::size_t>(i) * static_cast<std::size_t>(n()) +
                        static_cast<std::size_t>(j)];
        int k = lookup(compose(carrier[static_cast<std::size_t>(i)],
                               carrier[static_cast<std::size_t>(j)]));
        if (k < 0) throw ConsistencyError("FiniteGroup: product escaped the carrier");
        return k;
    }
};

FiniteGroup FiniteGroup::from_generators(const std::vector<Permutation>& gens,
                                         std::string label, std::size_t cap) {
    // The BFS closure is closed by construction; skip the quadratic re-check.
    return from_elements(generate_closure(gens, cap), std::move(label),
                         /*verify_closure=*/false);
}

FiniteGroup FiniteGroup::from_elements(PermSet elems, std::string label,
                                       bool verify_closure) {
    if (elems.size() == 0)
        throw std::invalid_argument("FiniteGroup: empty carrier");
    if (!elems[0].is_identity())
        throw std::invalid_argument("FiniteGroup: carrier lacks the identity");

    auto d = std::make_shared<Data>();
    d->carrier = std::move(elems);
    const int n = d->n();

    d->inv.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        int k = d->lookup(inverse(d->carrier[static_cast<std::size_t>(i)]));
        if (k < 0)
            throw std::invalid_argument("FiniteGroup: carrier not closed under inverse");
        d->inv[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(k);
    }

    if (n <= kMultTableMax) {
        d->mult.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                int k = d->lookup(compose(d->carrier[static_cast<std::size_t>(i)],
                                          d->carrier[static_cast<std::size_t>(j)]));
                if (k < 0)
                    throw std::invalid_argument(
                        "FiniteGroup: carrier not closed under composition");
                d->mult[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                        static_cast<std::size_t>(j)] = static_cast<std::uint16_t>(k);
            }
    } else if (verify_closure) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (d->lookup(compose(d->carrier[static_cast<std::size_t>(i)],
                                      d->carrier[static_cast<std::size_t>(j)])) < 0)
                    throw std::invalid_argument(
                        "FiniteGroup: carrier not closed under composition");
    }

    d->elem_order.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        d->elem_order[static_cast<std::size_t>(i)] =
            perm_order(d->carrier[static_cast<std::size_t>(i)]);

    FiniteGroup g(std::move(d));
    g.label_ = std::move(label);
    return g;
}

int FiniteGroup::degree() const { return d_->carrier.degree(); }
int FiniteGroup::order() const { return d_->n(); }
const std::string& FiniteGroup::label() const { return label_; }

FiniteGroup FiniteGroup::with_label(std::string label) const {
    FiniteGroup g(d_);
    g.label_ = std::move(label);
    return g;
}

const PermSet& FiniteGroup::carrier() const { return d_->carrier; }

const Permutation& FiniteGroup::element(int i) const {
    return d_->carrier[static_cast<std::size_t>(i)];
}

int FiniteGroup::mult(int i, int j) const { return d_->mul(i, j); }
int FiniteGroup::inv(int i) const { return d_->inv[static_cast<std::size_t>(i)]; }

std::int64_t FiniteGroup::element_order(int i) const {
    return d_->elem_order[static_cast<std::size_t>(i)];
}

int FiniteGroup::index_of(const Permutation& p) const { return d_->lookup(p); }

namespace {

// Subgroup closure in index space: identity + generators, saturated under
// multiplication by generators on both sides.
std::vector<int> close_index_subgroup(const FiniteGroup& g, const std::vector<int>& gens) {
    std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
    std::vector<int> out;
    std::vector<int> todo;
    auto push = [&](int x) {
        if (!in[static_cast<std::size_t>(x)]) {
            in[static_cast<std::size_t>(x)] = 1;
            out.push_back(x);
            todo.push_back(x);
        }
    };
    push(0);
    for (int x : gens) push(x);
    while (!todo.empty()) {
        int cur = todo.back();
        todo.pop_back();
        for (int x : gens) {
            push(g.mult(cur, x));
            push(g.mult(x, cur));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

const IsoFingerprint& FiniteGroup::fingerprint() const {
    std::lock_guard<std::mutex> lock(d_->mu);
    if (d_->fp) return *d_->fp;

    const int n = order();
    IsoFingerprint fp;
    fp.order = n;

    std::vector<std::pair<std::int64_t, std::int64_t>> hist;
    for (int i = 0; i < n; ++i) {
        std::int64_t o = d_->elem_order[static_cast<std::size_t>(i)];
        auto it = std::find_if(hist.begin(), hist.end(),
                               [&](const auto& e) { return e.first == o; });
        if (it == hist.end())
            hist.emplace_back(o, 1);
        else
            ++it->second;
    }
    std::sort(hist.begin(), hist.end());
    fp.order_histogram = std::move(hist);

    if (!d_->center_idx) {
        std::vector<int> z;
        for (int i = 0; i < n; ++i) {
            bool central = true;
            for (int j = 0; j < n && central; ++j)
                central = d_->mul(i, j) == d_->mul(j, i);
            if (central) z.push_back(i);
        }
        d_->center_idx = std::move(z);
    }
    fp.center_order = static_cast<std::int64_t>(d_->center_idx->size());
    fp.abelian = fp.center_order == n;

    if (!d_->derived_idx) {
        FiniteGroup self(d_);
        std::vector<int> comms;
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                int c = d_->mul(d_->mul(d_->inv[static_cast<std::size_t>(i)],
                                        d_->inv[static_cast<std::size_t>(j)]),
                                d_->mul(i, j));
                if (!seen[static_cast<std::size_t>(c)]) {
                    seen[static_cast<std::size_t>(c)] = 1;
                    comms.push_back(c);
                }
            }
        d_->derived_idx = close_index_subgroup(self, comms);
    }
    fp.derived_order = static_cast<std::int64_t>(d_->derived_idx->size());

    if (!d_->class_ids) {
        std::vector<int> ids(static_cast<std::size_t>(n), -1);
        std::vector<std::int64_t> sizes(static_cast<std::size_t>(n), 0);
        int next_id = 0;
        for (int i = 0; i < n; ++i) {
            if (ids[static_cast<std::size_t>(i)] >= 0) continue;
            std::vector<int> members;
            for (int j = 0; j < n; ++j) {
                int c = d_->mul(d_->mul(j, i), d_->inv[static_cast<std::size_t>(j)]);
                if (ids[static_cast<std::size_t>(c)] < 0) {
                    ids[static_cast<std::size_t>(c)] = next_id;
                    members.push_back(c);
                }
            }
            for (int m : members) sizes[static_cast<std::size_t>(m)] =
                static_cast<std::int64_t>(members.size());
            ++next_id;
        }
        d_->class_ids = std::move(ids);
        d_->class_size = std::move(sizes);
    }
    std::vector<std::int64_t> cc;
    {
        std::vector<char> counted(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < n; ++i) {
            int id = (*d_->class_ids)[static_cast<std::size_t>(i)];
            if (!counted[static_cast<std::size_t>(id)]) {
                counted[static_cast<std::size_t>(id)] = 1;
                cc.push_back((*d_->class_size)[static_cast<std::size_t>(i)]);
            }
        }
        std::sort(cc.begin(), cc.end());
    }
    fp.conj_class_sizes = std::move(cc);

    d_->fp = std::move(fp);
    return *d_->fp;
}

bool FiniteGroup::is_abelian() const { return fingerprint().abelian; }
bool FiniteGroup::is_perfect() const { return fingerprint().derived_order == order(); }

const std::vector<int>& FiniteGroup::center_indices() const {
    fingerprint();
    return *d_->center_idx;
}

const std::vector<int>& FiniteGroup::derived_indices() const {
    fingerprint();
    return *d_->derived_idx;
}

FiniteGroup FiniteGroup::center() const {
    return subgroup_from_indices(center_indices(), "Z(" + label_ + ")");
}

FiniteGroup FiniteGroup::derived_subgroup() const {
    return subgroup_from_indices(derived_indices(), "[" + label_ + "," + label_ + "]");
}

const std::vector<int>& FiniteGroup::conjugacy_class_ids() const {
    fingerprint();
    return *d_->class_ids;
}

std::int64_t FiniteGroup::conjugacy_class_size(int i) const {
    fingerprint();
    return (*d_->class_size)[static_cast<std::size_t>(i)];
}

std::vector<std::int64_t> FiniteGroup::conjugacy_class_sizes_sorted() const {
    return fingerprint().conj_class_sizes;
}

FiniteGroup FiniteGroup::centralizer(const Permutation& x, std::string label) const {
    int xi = index_of(x);
    if (xi < 0)
        throw std::invalid_argument("centralizer: element is not in the group");
    std::vector<int> idx;
    for (int i = 0; i < order(); ++i)
        if (d_->mul(i, xi) == d_->mul(xi, i)) idx.push_back(i);
    if (label.empty()) label = "Cent(" + label_ + ")";
    return subgroup_from_indices(idx, std::move(label));
}

std::vector<int> FiniteGroup::generated_subgroup_indices(const std::vector<int>& gens) const {
    return close_index_subgroup(*this, gens);
}

FiniteGroup FiniteGroup::subgroup_from_indices(const std::vector<int>& idx,
                                               std::string label) const {
    std::vector<Permutation> elems;
    elems.reserve(idx.size());
    for (int i : idx) elems.push_back(element(i));
    // Verification is free below the mult-table limit; above it the callers
    // all pass sets that are closed by construction (centralizers, derived).
    return from_elements(PermSet(degree(), std::move(elems)), std::move(label),
                         /*verify_closure=*/false);
}

std::vector<int> FiniteGroup::greedy_generator_indices() const {
    const int n = order();
    std::vector<int> gens;
    std::vector<int> cur{0};
    while (static_cast<int>(cur.size()) < n) {
        std::vector<char> in(static_cast<std::size_t>(n), 0);
        for (int x : cur) in[static_cast<std::size_t>(x)] = 1;
        int best = -1;
        std::size_t best_size = cur.size();
        for (int x = 0; x < n; ++x) {
            if (in[static_cast<std::size_t>(x)]) continue;
            std::vector<int> trial = gens;
            trial.push_back(x);
            std::size_t sz = close_index_subgroup(*this, trial).size();
            if (sz > best_size) {
                best = x;
                best_size = sz;
            }
        }
        gens.push_back(best);
        cur = close_index_subgroup(*this, gens);
    }
    return gens;
}

std::vector<Permutation> FiniteGroup::greedy_generators() const {
    std::vector<Permutation> out;
    for (int i : greedy_generator_indices()) out.push_back(element(i));
    return out;
}

StructureSummary structure_invariants(const FiniteGroup& g) {
    return StructureSummary{g.fingerprint(), g.center(), g.derived_subgroup(),
                            g.is_perfect()};
}

GroupHom::GroupHom(FiniteGroup source, FiniteGroup target, std::vector<int> table)
    : source_(std::move(source)), target_(std::move(target)), table_(std::move(table)) {
    const int n = source_.order();
    if (static_cast<int>(table_.size()) != n)
        throw std::invalid_argument("GroupHom: table size mismatch");
    for (int v : table_)
        if (v < 0 || v >= target_.order())
            throw std::invalid_argument("GroupHom: table value out of range");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (table_[static_cast<std::size_t>(source_.mult(i, j))] !=
                target_.mult(table_[static_cast<std::size_t>(i)],
                             table_[static_cast<std::size_t>(j)]))
                throw std::invalid_argument("GroupHom: table is not a homomorphism");
}

const Permutation& GroupHom::image_of(int i) const {
    return target_.element(table_[static_cast<std::size_t>(i)]);
}

bool GroupHom::is_injective() const {
    std::vector<char> seen(static_cast<std::size_t>(target_.order()), 0);
    for (int v : table_) {
        if (seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = 1;
    }
    return true;
}

bool GroupHom::is_bijective() const {
    return source_.order() == target_.order() && is_injective();
}

GroupHom GroupHom::identity(const FiniteGroup& g) {
    std::vector<int> table(static_cast<std::size_t>(g.order()));
    for (std::size_t i = 0; i < table.size(); ++i) table[i] = static_cast<int>(i);
    return GroupHom(g, g, std::move(table));
}

GroupAction GroupAction::trivial(FiniteGroup actor, FiniteGroup target,
                                 const RunConfig& cfg) {
    auto aut = automorphism_group(target, cfg);
    std::vector<int> table(static_cast<std::size_t>(actor.order()), 0);
    GroupHom hom(actor, aut.group, std::move(table));
    return GroupAction{std::move(actor), std::move(target), std::move(aut), std::move(hom)};
}

GroupAction GroupAction::by_conjugation(FiniteGroup actor, FiniteGroup target,
                                        const std::vector<Permutation>& rep,
                                        const RunConfig& cfg) {
    if (static_cast<int>(rep.size()) != actor.order())
        throw std::invalid_argument("by_conjugation: need one representative per actor element");
    auto aut = automorphism_group(target, cfg);
    std::vector<int> table;
    table.reserve(rep.size());
    for (const auto& r : rep) {
        std::vector<int> images(static_cast<std::size_t>(target.order()));
        for (int x = 0; x < target.order(); ++x) {
            int y = target.index_of(conjugate(r, target.element(x)));
            if (y < 0)
                throw std::invalid_argument(
                    "by_conjugation: conjugation does not preserve the target group");
            images[static_cast<std::size_t>(x)] = y;
        }
        int k = aut.group.index_of(Permutation::from_images(std::move(images)));
        if (k < 0)
            throw ConsistencyError("by_conjugation: induced map missing from Aut");
        table.push_back(k);
    }
    GroupHom hom(actor, aut.group, std::move(table));
    return GroupAction{std::move(actor), std::move(target), std::move(aut), std::move(hom)};
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b,
                           std::string label, std::size_t cap) {
    std::size_t order = static_cast<std::size_t>(a.order()) * static_cast<std::size_t>(b.order());
    if (order > cap)
        throw CapExceeded("direct_product: order " + std::to_string(order) +
                          " exceeds cap " + std::to_string(cap));
    const int da = a.degree(), db = b.degree();
    std::vector<Permutation> elems;
    elems.reserve(order);
    for (int i = 0; i < a.order(); ++i)
        for (int j = 0; j < b.order(); ++j) {
            std::vector<int> images(static_cast<std::size_t>(da + db));
            for (int x = 0; x < da; ++x)
                images[static_cast<std::size_t>(x)] = a.element(i)(x);
            for (int x = 0; x < db; ++x)
                images[static_cast<std::size_t>(da + x)] = da + b.element(j)(x);
            elems.push_back(Permutation::from_images(std::move(images)));
        }
    if (label.empty()) label = a.label() + "x" + b.label();
    return FiniteGroup::from_elements(PermSet(da + db, std::move(elems)),
                                      std::move(label), /*verify_closure=*/false);
}

FiniteGroup semidirect_product(const FiniteGroup& a, const FiniteGroup& b,
                               const GroupAction& act, std::string label,
                               std::size_t cap) {
    if (act.target.carrier() != a.carrier() || act.actor.carrier() != b.carrier())
        throw std::invalid_argument("semidirect_product: action does not match factors");
    const int na = a.order(), nb = b.order();
    std::size_t order = static_cast<std::size_t>(na) * static_cast<std::size_t>(nb);
    if (order > cap)
        throw CapExceeded("semidirect_product: order " + std::to_string(order) +
                          " exceeds cap " + std::to_string(cap));

    // Pair algebra (x, y) with (x1,y1)(x2,y2) = (x1 * y1.x2, y1 y2), realized
    // by its left regular representation on pair indices.
    auto pair_index = [nb](int x, int y) { return x * nb + y; };
    auto mul_pair = [&](int p, int q) {
        int x1 = p / nb, y1 = p % nb, x2 = q / nb, y2 = q % nb;
        int tx2 = act.automorphism_of(y1)(x2);
        return pair_index(a.mult(x1, tx2), b.mult(y1, y2));
    };
    const int n = static_cast<int>(order);
    std::vector<Permutation> elems;
    elems.reserve(order);
    for (int p = 0; p < n; ++p) {
        std::vector<int> images(static_cast<std::size_t>(n));
        for (int q = 0; q < n; ++q)
            images[static_cast<std::size_t>(q)] = mul_pair(p, q);
        elems.push_back(Permutation::from_images(std::move(images)));
    }
    if (label.empty()) label = a.label() + ":" + b.label();
    return FiniteGroup::from_elements(PermSet(n, std::move(elems)), std::move(label),
                                      /*verify_closure=*/false);
}

}  // namespace hg
