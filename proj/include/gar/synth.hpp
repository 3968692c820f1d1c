#ifndef GAR_SYNTH_HPP
#define GAR_SYNTH_HPP

#include <cstddef>
#include <cstdint>

#include "gar/core.hpp"
#include "gar/taxonomy.hpp"

namespace gar {

struct SynthParams {
    std::size_t transactions = 500;
    std::size_t leaf_items = 30;
    /// Internal levels above the leaves.
    std::size_t taxonomy_depth = 1;
    std::size_t branching = 3;
    std::uint64_t seed = 1;

    /// Throws InvalidArgument when any field is zero.
    void validate() const;
};

struct SynthData {
    TransactionDatabase db;
    /// One taxonomy per top-level root; leaves are exactly the item universe.
    TaxonomySet taxonomies;
};

/// Baskets with co-occurrence concentrated inside sibling groups, so mined
/// rules share consequents and generalization has something to merge.
/// Deterministic for a fixed seed on every platform.
SynthData synthesize(const SynthParams& params);

} // namespace gar

#endif
