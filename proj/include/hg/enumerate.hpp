#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hg/config.hpp"
#include "hg/group.hpp"
#include "hg/holomorph.hpp"

namespace hg {

enum class EnumOrigin { HolomorphDfs, CocycleSearch };

// One regular subgroup of Hol(N), as a concrete permutation set on N's
// carrier. tag_key is the sorted list of (m, phi) tag ids and is the
// canonical identity used to compare subgroups across strategies.
struct RegularSubgroupRecord {
    PermSet subgroup;
    std::vector<std::uint32_t> tag_key;
    std::string iso_type;               // filter label when a filter was given
    std::optional<GroupHom> witness;    // filter group -> subgroup-as-group
    EnumOrigin origin = EnumOrigin::HolomorphDfs;
};

struct EnumOptions {
    // When set, keep only subgroups isomorphic to this group (witness filled).
    const FiniteGroup* iso_filter = nullptr;
    int workers = 1;
};

// Depth-first search over Hol(N): maintain a closed partial subgroup; at each
// step pick the smallest point not hit by the evaluation map and branch over
// the aut-components of the unique tag that can cover it. Each regular
// subgroup is reached along exactly one path (its elements' xi-values force
// every choice), so the output has no duplicates by construction.
std::vector<RegularSubgroupRecord> enumerate_regular_dfs(const Holomorph& hol,
                                                         const EnumOptions& opts,
                                                         const RunConfig& cfg = {});

struct CocycleEnumeration {
    std::vector<RegularSubgroupRecord> records;  // deduplicated subgroups
    std::int64_t pair_count = 0;  // raw (f, g) witnesses; |Aut(G)| per subgroup
    std::int64_t hom_count = 0;   // |Hom(G, Aut(N))|
};

// Second strategy: for every hom f: G -> Aut(N) and every bijective g: G -> N
// with g(1) = 1 and g(st) = g(s) * f(s)(g(t)), emit {rho(g(s)) f(s) : s in G}.
CocycleEnumeration enumerate_regular_cocycle(const FiniteGroup& g, const Holomorph& hol,
                                             const RunConfig& cfg = {});

}  // namespace hg
