#pragma once

#include "corpus.hpp"

#include <set>

namespace testsupport {

/// Closed-form primitive relation lists of V^{2r} and V~^{2r}, in the
/// generator numbering of del_pezzo_fan and pseudo_del_pezzo_fan.
std::set<PlainRelation> del_pezzo_relation_list(std::size_t r);
std::set<PlainRelation> pseudo_del_pezzo_relation_list(std::size_t r);

/// Computed relations; nullopt if some target coefficient is not 1.
std::optional<std::set<PlainRelation>> plain_relations(const Fan& f);

} // namespace testsupport
