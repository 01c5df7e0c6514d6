#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hg/config.hpp"
#include "hg/perm.hpp"

namespace hg {

// Isomorphism-invariant summary used to prune isomorphism searches and to
// validate catalog entries. Equal fingerprints do not prove isomorphism;
// unequal ones refute it.
struct IsoFingerprint {
    std::int64_t order = 0;
    // (element order, multiplicity), sorted by element order.
    std::vector<std::pair<std::int64_t, std::int64_t>> order_histogram;
    std::int64_t center_order = 0;
    std::int64_t derived_order = 0;
    bool abelian = false;
    std::vector<std::int64_t> conj_class_sizes;  // ascending

    friend bool operator==(const IsoFingerprint& a, const IsoFingerprint& b) = default;
    std::string canonical_string() const;
    std::uint64_t hash() const;  // FNV-1a over canonical_string
};

std::uint64_t fnv1a64(const std::string& s);

// A concrete finite permutation group: canonically sorted carrier, index
// arithmetic, lazily cached structure. Cheap to copy (shared immutable data).
class FiniteGroup {
public:
    FiniteGroup() = default;

    static FiniteGroup from_generators(const std::vector<Permutation>& gens,
                                       std::string label = "",
                                       std::size_t cap = kDefaultClosureCap);
    // verify_closure: run the full n^2 closure check. Callers constructing
    // sets that are closed by construction may skip it.
    static FiniteGroup from_elements(PermSet elems, std::string label = "",
                                     bool verify_closure = true);

    bool valid() const { return d_ != nullptr; }
    int degree() const;
    int order() const;
    const std::string& label() const;
    FiniteGroup with_label(std::string label) const;  // shares carrier data

    const PermSet& carrier() const;
    const Permutation& element(int i) const;
    int identity_index() const { return 0; }  // identity sorts first
    int mult(int i, int j) const;
    int inv(int i) const;
    std::int64_t element_order(int i) const;
    // -1 if p is not an element.
    int index_of(const Permutation& p) const;
    bool contains(const Permutation& p) const { return index_of(p) >= 0; }

    // Lazy, thread-safe structure queries.
    const IsoFingerprint& fingerprint() const;
    bool is_abelian() const;
    bool is_perfect() const;  // derived subgroup is everything
    const std::vector<int>& center_indices() const;
    const std::vector<int>& derived_indices() const;
    FiniteGroup center() const;
    FiniteGroup derived_subgroup() const;
    // Class id per element; ids are ordered by each class's least element.
    const std::vector<int>& conjugacy_class_ids() const;
    std::int64_t conjugacy_class_size(int i) const;
    std::vector<std::int64_t> conjugacy_class_sizes_sorted() const;

    FiniteGroup centralizer(const Permutation& x, std::string label = "") const;
    FiniteGroup subgroup_from_indices(const std::vector<int>& idx,
                                      std::string label = "") const;
    // Sorted element indices of the subgroup generated by the given indices.
    std::vector<int> generated_subgroup_indices(const std::vector<int>& gens) const;
    // Deterministic small generating set: repeatedly add the element whose
    // addition grows the generated subgroup the most (ties: smallest index).
    std::vector<int> greedy_generator_indices() const;
    std::vector<Permutation> greedy_generators() const;

private:
    struct Data;
    std::shared_ptr<Data> d_;
    std::string label_;
    explicit FiniteGroup(std::shared_ptr<Data> d) : d_(std::move(d)) {}
};

struct StructureSummary {
    IsoFingerprint fingerprint;
    FiniteGroup center;
    FiniteGroup derived;
    bool is_perfect = false;
};

StructureSummary structure_invariants(const FiniteGroup& g);

// A verified homomorphism between concrete groups, stored as an index table.
// Construction checks table[xy] = table[x]*table[y] on all pairs.
class GroupHom {
public:
    GroupHom(FiniteGroup source, FiniteGroup target, std::vector<int> table);

    const FiniteGroup& source() const { return source_; }
    const FiniteGroup& target() const { return target_; }
    int map_index(int i) const { return table_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& table() const { return table_; }
    const Permutation& image_of(int i) const;
    bool is_injective() const;
    bool is_bijective() const;

    static GroupHom identity(const FiniteGroup& g);

private:
    FiniteGroup source_, target_;
    std::vector<int> table_;
};

struct AutomorphismGroup {
    FiniteGroup group;  // permutations of the base group's carrier indices
    std::vector<Permutation> generators;
};

// Full automorphism group by generator-image backtracking.
// Refuses groups larger than cfg.aut_order_bound.
AutomorphismGroup automorphism_group(const FiniteGroup& g, const RunConfig& cfg = {});

// Finds one isomorphism if any; nullopt otherwise. Fingerprints prune first.
std::optional<GroupHom> isomorphism_test(const FiniteGroup& a, const FiniteGroup& b,
                                         const RunConfig& cfg = {});

// All homomorphisms a -> b (tables into b), enumerated by generator images.
std::vector<std::vector<int>> enumerate_hom_tables(const FiniteGroup& a,
                                                   const FiniteGroup& b,
                                                   const RunConfig& cfg = {});

// b acting on a by automorphisms: a verified hom from b into Aut(a).
struct GroupAction {
    FiniteGroup actor;   // b
    FiniteGroup target;  // a
    AutomorphismGroup aut_target;
    GroupHom hom;  // actor -> aut_target.group

    const Permutation& automorphism_of(int actor_idx) const {
        return aut_target.group.element(hom.map_index(actor_idx));
    }
    static GroupAction trivial(FiniteGroup actor, FiniteGroup target, const RunConfig& cfg = {});
    // actor element i acts as x -> rep(i) x rep(i)^-1, where rep lands in a
    // possibly larger ambient group containing target's carrier elements.
    static GroupAction by_conjugation(FiniteGroup actor, FiniteGroup target,
                                      const std::vector<Permutation>& rep,
                                      const RunConfig& cfg = {});
};

// Products realized as concrete permutation groups. Direct products act on
// the disjoint union of the factors' points; semidirect products are realized
// by the left regular representation of the pair algebra (x, y), so their
// degree is |a| * |b|.
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b,
                           std::string label = "", std::size_t cap = kDefaultClosureCap);
FiniteGroup semidirect_product(const FiniteGroup& a, const FiniteGroup& b,
                               const GroupAction& act, std::string label = "",
                               std::size_t cap = kDefaultClosureCap);

}  // namespace hg
