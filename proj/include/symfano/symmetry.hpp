#pragma once

#include "symfano/fan.hpp"
#include "symfano/lattice.hpp"

#include <cstddef>
#include <vector>

namespace symfano {

/// Two generators with first + second = 0; `first` is the lower index and
/// serves as the representative.
struct SymmetricPair {
    std::size_t first;
    std::size_t second;

    friend bool operator==(const SymmetricPair&, const SymmetricPair&) = default;
};

struct SymmetricPairSet {
    std::vector<SymmetricPair> pairs;

    std::vector<std::size_t> representatives() const;
    bool empty() const noexcept { return pairs.empty(); }
    std::size_t size() const noexcept { return pairs.size(); }
};

SymmetricPairSet symmetric_pairs(const Fan& f);

/// Saturated basis of the subspace spanned by the symmetric pairs. Throws NoPairs.
SublatticeBasis symmetric_span(const Fan& f);

/// Generators x_0..x_h, y_0..y_h of one del Pezzo block, signed so that
/// x_0 + x_1 + ... + x_h = 0 and y_i = -x_i.
struct DelPezzoComponent {
    std::size_t dim = 0;
    std::vector<std::size_t> pairs; ///< indices into the pair list, basis pairs only
    std::size_t extra_pair = 0;     ///< the dependent pair {x_0, y_0}
    std::vector<std::size_t> x;
    std::vector<std::size_t> y;

    /// Generator indices in the numbering of del_pezzo_fan(dim / 2).
    std::vector<std::size_t> local_to_global() const;
    IndexSet generators() const;
};

/// Pairs x_1..x_h, y_1..y_h plus an unpaired apex x_0 = -(x_1 + ... + x_h).
struct PseudoDelPezzoComponent {
    std::size_t dim = 0;
    std::vector<std::size_t> pairs;
    std::size_t apex = 0;
    std::vector<std::size_t> x;
    std::vector<std::size_t> y;

    /// Generator indices in the numbering of pseudo_del_pezzo_fan(dim / 2).
    std::vector<std::size_t> local_to_global() const;
    IndexSet generators() const;
};

/// Splitting of the symmetric subspace H into del Pezzo blocks, pseudo del
/// Pezzo blocks and a free block K of independent pairs.
struct Decomposition {
    SymmetricPairSet pairs;
    std::vector<DelPezzoComponent> del_pezzo;
    std::vector<PseudoDelPezzoComponent> pseudo;
    std::vector<std::size_t> free_pairs; ///< indices into the pair list
    SublatticeBasis h_basis;

    bool has_components() const noexcept { return !del_pezzo.empty() || !pseudo.empty(); }
    std::size_t free_dim() const noexcept { return free_pairs.size(); }
    /// Generators of all del Pezzo and pseudo del Pezzo blocks.
    IndexSet component_generators() const;
    /// Generators of the free block.
    IndexSet free_generators() const;
};

/// Requires a smooth complete Fano fan with at least one symmetric pair.
/// Throws NotFano, NoPairs, or StructureViolation when the block structure
/// (disjoint supports, coefficients in {-1,0,1}, even block dimensions,
/// generator counts) does not hold.
Decomposition decompose(const Fan& f);

} // namespace symfano
