#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hg/config.hpp"
#include "hg/group.hpp"

namespace hg {

// One line of the small-groups data file:
//   label|degree|order|cycles;cycles;...|fingerprint-hash-hex
// The group is built from its generators at load time; the stored order and
// fingerprint hash guard the data against silent edits.
struct CatalogEntry {
    std::string label;
    int degree = 0;
    int order = 0;
    std::string gens_text;
    std::uint64_t fp_hash = 0;
    FiniteGroup group;
};

class Catalog {
public:
    static Catalog load(const std::string& path);
    static const Catalog& instance();  // loads default_catalog_path() once

    const std::vector<CatalogEntry>& entries() const { return entries_; }
    const CatalogEntry* by_label(const std::string& label) const;
    std::vector<const CatalogEntry*> of_order(int order) const;

    // Census check: one class each of orders 1, 2, 3; two of 4 and 6; five of
    // 8; fifteen of 24; fingerprints pairwise distinct within each order.
    void verify_complete() const;

private:
    std::vector<CatalogEntry> entries_;
};

// HG_CATALOG_PATH from the environment, else the compiled-in data file.
std::string default_catalog_path();

// Renders the canonical data line for an entry (hash included).
std::string catalog_line(const CatalogEntry& e);

// Named constructions independent of the catalog.
FiniteGroup symmetric_group(int n);
FiniteGroup alternating_group(int n);   // n >= 3
FiniteGroup cyclic_group(int n);
FiniteGroup dihedral_group(int n);      // order 2n
FiniteGroup quaternion_group();

// Resolves a group spec:
//   gens:<degree>:<cycles;...>   explicit generators
//   S<n>, A<n>, C<n>, D<n>, Q8   named families
//   <catalog label>              exact match
//   <part>x<part>x...            direct product of resolvable parts
FiniteGroup group_by_name(const std::string& spec, const RunConfig& cfg = {});

// Complete list of isomorphism classes of the given order: catalog entries,
// or the cyclic class for prime orders the catalog does not carry.
std::vector<FiniteGroup> groups_of_order(int order);

// Label of the unique class isomorphic to g, drawn from groups_of_order(|g|).
std::string classify_iso_type(const FiniteGroup& g, const RunConfig& cfg = {});

}  // namespace hg
