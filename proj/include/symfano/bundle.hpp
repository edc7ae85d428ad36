#pragma once

#include "symfano/delpezzo.hpp"
#include "symfano/fan.hpp"
#include "symfano/fano.hpp"
#include "symfano/symmetry.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace symfano {

/// A base primitive relation together with the relation of its lift.
struct LiftedRelation {
    PrimitiveRelation base;
    PrimitiveRelation total;
    /// The lift has no fiber generators in its target.
    bool unchanged = false;
};

/// Toric bundle structure of a fan along a subspace H: every maximal cone is
/// a full cone of H plus a cone meeting H only at the origin.
struct BundleStructure {
    Fan total;
    SublatticeBasis h_basis;
    SublatticeBasis complement_basis;
    Fan fiber; ///< coordinates on h_basis
    Fan base;  ///< coordinates on complement_basis
    std::vector<std::size_t> fiber_generator_map; ///< fiber generator -> total index
    std::vector<std::size_t> base_generator_map;  ///< base generator -> total index
    std::vector<LiftedRelation> lifted_relations;
    bool trivial = false;
};

struct NoSplit {
    IndexSet witness_cone;
    std::string reason;
};

using SplitResult = std::variant<BundleStructure, NoSplit>;

/// Requires a smooth complete fan and a saturated H with 0 < dim H < n.
/// Throws NonPrimitiveProjection when a projected generator is not primitive.
SplitResult split_along(const Fan& f, const SublatticeBasis& h);

struct SectionsAndFibers {
    std::vector<IndexSet> sections; ///< full-dimensional cones of H, total indices
    std::vector<IndexSet> fibers;   ///< complementary cones completing with every section
};

SectionsAndFibers invariant_sections_and_fibers(const BundleStructure& b);
/// Throws PrecondViolation on NoSplit.
SectionsAndFibers invariant_sections_and_fibers(const SplitResult& s);

/// Fan with the same generators in which the span of the del Pezzo and pseudo
/// del Pezzo blocks carries their model product fan, and every complementary
/// cone of the input that completes a forced block cone is combined with all
/// cones of that product.
/// With no blocks the input is returned unchanged.
/// Throws NotFano, NoSymmetricStructure (no symmetric pairs), InternalInconsistency.
Fan construct_x_prime(const Fan& f);

/// Same generator set. Throws DimensionMismatch.
bool verify_birational_codim1(const Fan& a, const Fan& b);

enum class StructureCase {
    A, ///< dependent pairs: X is a bundle with del Pezzo product fiber
    B, ///< pseudo del Pezzo blocks: X' is a bundle with block product fiber
    C, ///< dim H = n - 1: X' is a bundle over P^1
    D, ///< dim H = n: X is a product
    E, ///< none of the above
};

char to_char(StructureCase c);

/// Case C data: the relation v + w - (target) = 0 in X'.
struct PencilNormalForm {
    std::size_t v = 0;
    std::size_t w = 0;
    PrimitiveRelation relation;
    std::size_t free_support = 0;      ///< target generators from the free block
    std::size_t component_support = 0; ///< target generators from the blocks
    bool odd = false;                  ///< free_support + component_support is odd
};

struct StructureReport {
    StructureCase kind = StructureCase::E;
    std::size_t num_pairs = 0;
    std::size_t h_dim = 0;
    std::optional<Decomposition> decomposition;
    std::optional<Fan> x_prime;
    std::optional<BundleStructure> bundle;
    std::optional<std::vector<FactorDescriptor>> factors;
    std::optional<PencilNormalForm> normal_form;
};

/// Throws NotFano.
StructureReport structure_report(const Fan& f);

} // namespace symfano
