#pragma once

#include "symfano/lattice.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace symfano {

/// Sorted list of generator indices.
using IndexSet = std::vector<std::size_t>;

std::string to_string(const IndexSet& s);

/// A simplicial fan in N_Q stored by its maximal cones.
///
/// Construction enforces the structural invariants: dim >= 1, every generator
/// primitive and distinct, every maximal cone made of `dim` distinct valid
/// indices, no repeated cone and no unused generator. Geometric properties
/// (fan axiom, smoothness, completeness) are checked by validate_fan().
/// Maximal cones are kept sorted so that equality is syntactic.
class Fan {
public:
    Fan(std::size_t dim, std::vector<LatticeVector> generators, std::vector<IndexSet> max_cones);

    std::size_t dim() const noexcept { return dim_; }
    std::size_t num_generators() const noexcept { return generators_.size(); }
    const std::vector<LatticeVector>& generators() const noexcept { return generators_; }
    const LatticeVector& generator(std::size_t i) const { return generators_.at(i); }
    const std::vector<IndexSet>& max_cones() const noexcept { return max_cones_; }

    std::vector<LatticeVector> cone_generators(const IndexSet& s) const;

    /// True iff `s` is a subset of some maximal cone.
    bool contains_cone(const IndexSet& s) const;

    /// Index of `v` among the generators.
    std::optional<std::size_t> find_generator(const LatticeVector& v) const;

    /// Inverse of the generator matrix of maximal cone i (rows = generators);
    /// nullopt when that cone is degenerate.
    const std::optional<RationalMatrix>& cone_inverse(std::size_t i) const { return inverses_.at(i); }

    friend bool operator==(const Fan& a, const Fan& b)
    {
        return a.dim_ == b.dim_ && a.generators_ == b.generators_ && a.max_cones_ == b.max_cones_;
    }

private:
    boost::dynamic_bitset<> mask(const IndexSet& s) const;

    std::size_t dim_;
    std::vector<LatticeVector> generators_;
    std::vector<IndexSet> max_cones_;
    std::vector<boost::dynamic_bitset<>> cone_masks_;
    std::vector<std::optional<RationalMatrix>> inverses_;
};

struct ValidityReport {
    bool is_fan = false;
    bool is_smooth = false;
    bool is_complete = false;
    /// Human-readable reason for the first failed flag, if any.
    std::string detail;
};

/// Checks the fan axiom on every pair of maximal cones (skipped when
/// `trust_fan_axiom` is set), smoothness and completeness.
ValidityReport validate_fan(const Fan& f, bool trust_fan_axiom = false);

bool is_smooth(const Fan& f);

/// Pairwise fan-axiom check: each two maximal cones meet exactly in the cone on
/// their shared generators.
bool satisfies_fan_axiom(const Fan& f, std::string* detail = nullptr);

/// Wall criterion. Requires a smooth fan satisfying the fan axiom.
bool is_complete(const Fan& f);

/// The wall criterion alone, without re-checking its preconditions: every
/// facet of a maximal cone is shared by exactly two maximal cones lying on
/// opposite sides, and the cones are connected through walls.
bool passes_wall_criterion(const Fan& f);

struct PointLocation {
    IndexSet cone;
    std::vector<Rational> coefficients;
};

/// Minimal cone whose relative interior contains p, with the positive
/// coefficients of p on its generators.
PointLocation locate_point(const Fan& f, const LatticeVector& p);

/// An (n-1)-face shared by two maximal cones.
struct Wall {
    IndexSet face;
    std::size_t cone_a = 0;
    std::size_t cone_b = 0;
    std::size_t opposite_a = 0;
    std::size_t opposite_b = 0;
};

/// All interior walls. For n = 1 the zero cone between the two rays is
/// reported as the single wall.
std::vector<Wall> interior_walls(const Fan& f);

/// Integral relation u_a + u_b + sum b_i w_i = 0 across a wall, as a
/// coefficient vector over all generators. Requires a smooth fan.
std::vector<Integer> wall_relation(const Fan& f, const Wall& w);

/// Existence of a strictly convex piecewise-linear support function, decided
/// by an exact feasibility problem over the wall relations. Requires a smooth
/// complete fan.
bool is_projective(const Fan& f);

} // namespace symfano
