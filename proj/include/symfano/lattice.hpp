#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace symfano {

using Integer = mpz_class;
using Rational = mpq_class;

/// A point of the lattice N = Z^n, stored with arbitrary-precision coordinates.
class LatticeVector {
public:
    LatticeVector() = default;
    explicit LatticeVector(std::size_t n) : coords_(n, 0) {}
    explicit LatticeVector(std::vector<Integer> coords) : coords_(std::move(coords)) {}
    LatticeVector(std::initializer_list<long> coords);

    std::size_t size() const noexcept { return coords_.size(); }
    const Integer& operator[](std::size_t i) const { return coords_[i]; }
    Integer& operator[](std::size_t i) { return coords_[i]; }
    auto begin() const noexcept { return coords_.begin(); }
    auto end() const noexcept { return coords_.end(); }
    const std::vector<Integer>& coords() const noexcept { return coords_; }

    bool is_zero() const;

    LatticeVector& operator+=(const LatticeVector& other);
    LatticeVector& operator-=(const LatticeVector& other);
    LatticeVector& operator*=(const Integer& factor);

    friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
    friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
    friend LatticeVector operator*(const Integer& k, LatticeVector a) { return a *= k; }
    friend LatticeVector operator-(LatticeVector a) { return a *= Integer(-1); }

    friend bool operator==(const LatticeVector& a, const LatticeVector& b) = default;
    /// Lexicographic order on coordinates.
    friend bool operator<(const LatticeVector& a, const LatticeVector& b);

private:
    std::vector<Integer> coords_;
};

std::ostream& operator<<(std::ostream& os, const LatticeVector& v);
std::string to_string(const LatticeVector& v);

Integer dot(const LatticeVector& a, const LatticeVector& b);

/// Basis of a sublattice of Z^ambient_dim. Outputs of this module are always
/// in row Hermite normal form.
struct SublatticeBasis {
    std::vector<LatticeVector> vectors;
    std::size_t ambient_dim = 0;
    bool saturated = false;

    std::size_t rank() const noexcept { return vectors.size(); }
    friend bool operator==(const SublatticeBasis&, const SublatticeBasis&) = default;
};

using RationalMatrix = std::vector<std::vector<Rational>>;

bool is_primitive(const LatticeVector& v);

/// Exact determinant of the square matrix whose rows are `rows`.
Integer determinant(std::span<const LatticeVector> rows);

bool is_unimodular(std::span<const LatticeVector> vectors);

/// Rank over Q.
std::size_t rank(std::span<const LatticeVector> vectors);

/// Row Hermite normal form: echelon, positive pivots, entries above each pivot
/// reduced into [0, pivot). Zero rows are dropped.
std::vector<LatticeVector> hermite_normal_form(std::span<const LatticeVector> rows);

/// Invariant factors (Smith normal form diagonal, divisibility chain, positive)
/// of the integer span of `vectors`.
std::vector<Integer> invariant_factors(std::span<const LatticeVector> vectors);

/// Basis of the integer kernel {c in Z^k : sum c_i v_i = 0}, HNF-normalized.
std::vector<LatticeVector> integer_relations(std::span<const LatticeVector> vectors,
                                             std::size_t ambient_dim);

SublatticeBasis saturate(std::span<const LatticeVector> vectors);

bool is_saturated(const SublatticeBasis& basis);

SublatticeBasis complement(const SublatticeBasis& basis);

std::vector<Rational> coefficients_in(std::span<const LatticeVector> vectors,
                                      const LatticeVector& p);

/// Inverse of the square matrix with the given rows, or nullopt if singular.
std::optional<RationalMatrix> inverse(std::span<const LatticeVector> rows);

/// Coordinates c with c^T * rows = p^T, given a precomputed inverse of rows.
std::vector<Rational> solve_with_inverse(const RationalMatrix& inv, const LatticeVector& p);

bool in_rational_span(std::span<const LatticeVector> vectors, const LatticeVector& p);

/// Integer vector if every entry of `coeffs` is integral.
std::optional<std::vector<Integer>> as_integers(std::span<const Rational> coeffs);

} // namespace symfano
