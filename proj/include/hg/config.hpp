#pragma once

#include <cstddef>
#include <cstdint>

namespace hg {

// Knobs shared by the enumeration and search routines. Defaults are sized for
// groups up to order 24 and their holomorphs (largest needed: 24 * 336 = 8064).
struct RunConfig {
    // Max element count for generated closures (groups, holomorphs).
    std::size_t closure_cap = 20000;

    // Max |g| for automorphism_group. Order-24 work needs exactly 24; the
    // alternating-group suites raise this to 120.
    int aut_order_bound = 24;

    // Max ambient n! for the brute-force enumeration inside Perm(G).
    // 720 covers |G| <= 6; raise to 40320 for |G| <= 8.
    std::int64_t ambient_cap = 720;

    // Node budget for isomorphism / automorphism backtracking.
    std::int64_t search_node_cap = 50'000'000;

    // 0 = use hardware concurrency.
    int workers = 0;
};

int resolve_workers(int requested);

}  // namespace hg
