#pragma once

#include "symfano/fan.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace symfano {

enum class FactorKind { DelPezzo, PseudoDelPezzo, ProjLine, Other };

struct FactorDescriptor {
    FactorKind kind;
    std::size_t dim;

    friend auto operator<=>(const FactorDescriptor&, const FactorDescriptor&) = default;
};

std::string to_string(const FactorDescriptor& f);

// Generator numbering used by the constructors below, with x_0 = -(x_1+...+x_n)
// and y_i = -x_i, x_1..x_n the standard basis:
//   del Pezzo V^n:         x_0, y_0, x_1, y_1, ..., x_n, y_n
//   pseudo del Pezzo V~^n: x_0, x_1, y_1, ..., x_n, y_n

/// Maximal cones <x_i, y_j> over disjoint I, J of size r in {0..2r}.
std::vector<IndexSet> del_pezzo_cones(std::size_t r);

/// Maximal cones of the pseudo del Pezzo fan: <x_0, x_I, y_J> with |I| = r-1,
/// |J| = r disjoint in {1..2r}, and <x_I, y_J> for partitions with |I| = r+s.
std::vector<IndexSet> pseudo_del_pezzo_cones(std::size_t r);

/// The subfamily of pseudo del Pezzo cones that every Fano fan with this
/// generator configuration must contain: the x_0 family and the s = 0
/// partitions.
std::vector<IndexSet> pseudo_del_pezzo_forced_cones(std::size_t r);

/// V^{2r}. Throws BadDimension for r = 0.
Fan del_pezzo_fan(std::size_t r);

/// V~^{2r}. Throws BadDimension for r = 0.
Fan pseudo_del_pezzo_fan(std::size_t r);

/// (P^1)^k with generators e_1, -e_1, ..., e_k, -e_k.
Fan projective_line_power(std::size_t k);

/// Factor `a` occupies the first coordinates; generators of `a` come first.
Fan product_fan(const Fan& a, const Fan& b);

/// Fan of a product of the given factors, in order. Other is rejected.
Fan fan_of_factors(const std::vector<FactorDescriptor>& factors);

/// Factor list (del Pezzo, then pseudo del Pezzo, then P^1 factors, each
/// sorted by dimension) when the symmetric generators span N and the fan is
/// literally the product; nullopt otherwise. Throws NotFano.
std::optional<std::vector<FactorDescriptor>> recognize(const Fan& f);

} // namespace symfano
