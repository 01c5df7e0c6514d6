#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hg/config.hpp"
#include "hg/enumerate.hpp"
#include "hg/group.hpp"

namespace hg {

struct StageTimings {
    double holomorph_ms = 0;  // Aut(N) search plus holomorph assembly
    double dfs_ms = 0;
    double cocycle_ms = 0;
    double total_ms() const { return holomorph_ms + dfs_ms + cocycle_ms; }
};

// Count of structures with Galois group G and type N via the translation
// formula e(G, N) = |Aut(G)| / |Aut(N)| * #{regular subgroups of Hol(N)
// isomorphic to G}. Invariant: e_count * aut_n == aut_g * regular_in_hol.
struct HGCountReport {
    std::string g_label, n_label;
    std::int64_t regular_in_hol = 0;
    std::int64_t aut_g = 0, aut_n = 0;
    std::int64_t e_count = 0;
    bool strategies_agree = false;
    StageTimings elapsed;
};

// Runs both enumeration strategies over Hol(N), insists they return the same
// canonical subgroup set and that the cocycle pair count is |Aut(G)| times
// the subgroup count, then applies the translation formula. Disagreement or
// a non-integer quotient is an engine bug and throws ConsistencyError.
HGCountReport byott_count(const FiniteGroup& g, const FiniteGroup& n,
                          const RunConfig& cfg = {});

struct DirectBucket {
    std::string label;
    std::int64_t count = 0;
};

// Brute-force count of regular subgroups of Perm(G) normalized by the left
// translations, bucketed by isomorphism type. Independent of the holomorph
// machinery; the oracle the translation-formula path is checked against.
struct DirectEnumReport {
    std::string g_label;
    std::vector<DirectBucket> buckets;
    std::int64_t total = 0;
    double elapsed_ms = 0;
};

DirectEnumReport direct_enumerate_E(const FiniteGroup& g, const RunConfig& cfg = {});

struct FullReport {
    std::string g_label;
    std::vector<HGCountReport> rows;  // one per type, in catalog order
    std::int64_t total = 0;
    bool direct_checked = false;  // ambient brute force ran and agreed
    double elapsed_ms = 0;
};

// byott_count against every class in `classes` (all isomorphism types of
// order |G|). When |G|! fits the ambient cap the grand total and per-type
// counts are cross-checked against direct_enumerate_E.
FullReport full_report(const FiniteGroup& g, const std::vector<FiniteGroup>& classes,
                       const RunConfig& cfg = {});
FullReport full_report(const FiniteGroup& g, const RunConfig& cfg = {});  // catalog classes

}  // namespace hg
