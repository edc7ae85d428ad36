#include "symfano/bundle.hpp"

#include "symfano/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace symfano {

char to_char(StructureCase c)
{
    switch (c) {
    case StructureCase::A: return 'A';
    case StructureCase::B: return 'B';
    case StructureCase::C: return 'C';
    case StructureCase::D: return 'D';
    case StructureCase::E: return 'E';
    }
    return '?';
}

namespace {

LatticeVector slice(const std::vector<Rational>& coords, std::size_t from, std::size_t to)
{
    LatticeVector v(to - from);
    for (std::size_t i = from; i < to; ++i) {
        if (coords[i].get_den() != 1) {
            fail(Errc::InternalInconsistency, "non-integral coordinates in a unimodular basis");
        }
        v[i - from] = coords[i].get_num();
    }
    return v;
}

IndexSet sorted(IndexSet s)
{
    std::sort(s.begin(), s.end());
    return s;
}

IndexSet set_union(const IndexSet& a, const IndexSet& b)
{
    IndexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<IndexSet> map_cones(const std::vector<IndexSet>& local, const std::vector<std::size_t>& to_global)
{
    std::vector<IndexSet> out;
    for (const auto& c : local) {
        IndexSet g;
        for (auto i : c) {
            g.push_back(to_global[i]);
        }
        out.push_back(sorted(std::move(g)));
    }
    return out;
}

// Maximal cones of each block's model fan in global indices. With
// `forced_only`, pseudo blocks contribute only the cones every Fano fan on
// these generators contains.
std::vector<std::vector<IndexSet>> block_cones(const Decomposition& d, bool forced_only, bool with_free)
{
    std::vector<std::vector<IndexSet>> blocks;
    for (const auto& c : d.del_pezzo) {
        blocks.push_back(map_cones(del_pezzo_cones(c.dim / 2), c.local_to_global()));
    }
    for (const auto& c : d.pseudo) {
        const std::size_t r = c.dim / 2;
        blocks.push_back(map_cones(forced_only ? pseudo_del_pezzo_forced_cones(r)
                                               : pseudo_del_pezzo_cones(r),
                                   c.local_to_global()));
    }
    if (with_free) {
        for (std::size_t p : d.free_pairs) {
            blocks.push_back({{d.pairs.pairs[p].first}, {d.pairs.pairs[p].second}});
        }
    }
    return blocks;
}

std::set<IndexSet> product_of_blocks(const std::vector<std::vector<IndexSet>>& blocks)
{
    std::set<IndexSet> out{IndexSet{}};
    for (const auto& block : blocks) {
        std::set<IndexSet> next;
        for (const auto& partial : out) {
            for (const auto& c : block) {
                next.insert(set_union(partial, c));
            }
        }
        out = std::move(next);
    }
    return out;
}

Fan checked_fan(const Fan& like, std::vector<IndexSet> cones, const std::string& what)
{
    try {
        Fan out(like.dim(), like.generators(), std::move(cones));
        auto report = validate_fan(out);
        if (!report.is_fan || !report.is_smooth || !report.is_complete) {
            fail(Errc::InternalInconsistency, what + " is not a smooth complete fan: " + report.detail);
        }
        return out;
    } catch (const Error& e) {
        if (e.code() == Errc::InternalInconsistency) {
            throw;
        }
        fail(Errc::InternalInconsistency, what + ": " + e.what());
    }
}

BundleStructure require_split(const Fan& f, const SublatticeBasis& h, const std::string& what)
{
    auto s = split_along(f, h);
    if (auto* ns = std::get_if<NoSplit>(&s)) {
        fail(Errc::InternalInconsistency, what + " does not split: " + ns->reason);
    }
    return std::get<BundleStructure>(std::move(s));
}

void require_fano_base(const BundleStructure& b)
{
    if (!is_fano(b.base)) {
        fail(Errc::InternalInconsistency, "base of the bundle is not Fano");
    }
}

Decomposition decomposition_for_x_prime(const Fan& f)
{
    if (!is_fano(f)) {
        fail(Errc::NotFano, "X' is constructed only for Fano fans");
    }
    try {
        return decompose(f);
    } catch (const Error& e) {
        if (e.code() == Errc::NoPairs) {
            fail(Errc::NoSymmetricStructure, "no centrally symmetric generators");
        }
        throw;
    }
}

Fan x_prime_from(const Fan& f, const Decomposition& d)
{
    const IndexSet block_gens = d.component_generators();
    if (!block_gens.empty()) {
        // No generator outside the blocks may lie in their span.
        std::vector<LatticeVector> span = f.cone_generators(block_gens);
        for (std::size_t g = 0; g < f.num_generators(); ++g) {
            if (!std::binary_search(block_gens.begin(), block_gens.end(), g)
                && in_rational_span(span, f.generator(g))) {
                fail(Errc::StructureViolation, "generator " + std::to_string(g)
                                                   + " lies in the block span but in no block");
            }
        }
    }
    const auto forced = product_of_blocks(block_cones(d, true, false));
    const auto model = product_of_blocks(block_cones(d, false, false));

    std::set<IndexSet> complements;
    for (const auto& cone : f.max_cones()) {
        IndexSet eta, tau;
        for (auto g : cone) {
            (std::binary_search(block_gens.begin(), block_gens.end(), g) ? eta : tau).push_back(g);
        }
        if (forced.count(eta)) {
            complements.insert(std::move(tau));
        }
    }
    std::vector<IndexSet> cones;
    for (const auto& tau : complements) {
        for (const auto& sigma : model) {
            cones.push_back(set_union(tau, sigma));
        }
    }
    return checked_fan(f, std::move(cones), "constructed X'");
}

// Bundle over P^1 whose fiber is the full product over H, for dim H = n - 1.
Fan pencil_model(const Fan& f, const Decomposition& d, std::size_t v, std::size_t w)
{
    const auto fiber = product_of_blocks(block_cones(d, false, true));
    std::vector<IndexSet> cones;
    for (const auto& sigma : fiber) {
        cones.push_back(set_union(sigma, {v}));
        cones.push_back(set_union(sigma, {w}));
    }
    return checked_fan(f, std::move(cones), "bundle over P^1");
}

} // namespace

SplitResult split_along(const Fan& f, const SublatticeBasis& h)
{
    const std::size_t n = f.dim();
    const std::size_t r = h.rank();
    if (h.ambient_dim != n) {
        fail(Errc::DimensionMismatch, "subspace lives in dimension " + std::to_string(h.ambient_dim));
    }
    if (r == 0 || r >= n) {
        fail(Errc::PrecondViolation, "splitting subspace must have 0 < dim < n");
    }
    if (!h.saturated || !is_saturated(h)) {
        fail(Errc::NotSaturated, "splitting subspace basis is not saturated");
    }
    if (!is_smooth(f) || !passes_wall_criterion(f)) {
        fail(Errc::PrecondViolation, "split_along requires a smooth complete fan");
    }

    std::vector<bool> in_h(f.num_generators());
    for (std::size_t g = 0; g < f.num_generators(); ++g) {
        in_h[g] = in_rational_span(h.vectors, f.generator(g));
    }
    std::vector<std::pair<IndexSet, IndexSet>> parts;
    for (const auto& cone : f.max_cones()) {
        IndexSet eta, tau;
        for (auto g : cone) {
            (in_h[g] ? eta : tau).push_back(g);
        }
        if (eta.size() != r) {
            return NoSplit{cone, "maximal cone " + to_string(cone) + " has " + std::to_string(eta.size())
                                     + " generators in H, expected " + std::to_string(r)};
        }
        if (rank(f.cone_generators(eta)) != r) {
            return NoSplit{cone, "generators of " + to_string(cone) + " in H do not span H"};
        }
        parts.emplace_back(std::move(eta), std::move(tau));
    }

    SublatticeBasis k = complement(h);
    std::vector<LatticeVector> basis = h.vectors;
    basis.insert(basis.end(), k.vectors.begin(), k.vectors.end());
    const auto inv = inverse(basis);

    std::vector<std::size_t> fiber_map, base_map;
    std::vector<LatticeVector> fiber_gens, base_gens;
    std::map<std::size_t, std::size_t> to_fiber, to_base;
    for (std::size_t g = 0; g < f.num_generators(); ++g) {
        auto c = solve_with_inverse(*inv, f.generator(g));
        if (in_h[g]) {
            to_fiber[g] = fiber_gens.size();
            fiber_map.push_back(g);
            fiber_gens.push_back(slice(c, 0, r));
        } else {
            auto p = slice(c, r, n);
            if (!is_primitive(p)) {
                fail(Errc::NonPrimitiveProjection, "generator " + std::to_string(g)
                                                       + " projects to the non-primitive "
                                                       + to_string(p));
            }
            if (std::find(base_gens.begin(), base_gens.end(), p) != base_gens.end()) {
                fail(Errc::InternalInconsistency, "two generators project to " + to_string(p));
            }
            to_base[g] = base_gens.size();
            base_map.push_back(g);
            base_gens.push_back(std::move(p));
        }
    }
    std::set<IndexSet> fiber_cones, base_cones;
    for (const auto& [eta, tau] : parts) {
        IndexSet fc, bc;
        for (auto g : eta) {
            fc.push_back(to_fiber.at(g));
        }
        for (auto g : tau) {
            bc.push_back(to_base.at(g));
        }
        fiber_cones.insert(sorted(std::move(fc)));
        base_cones.insert(sorted(std::move(bc)));
    }
    Fan fiber(r, std::move(fiber_gens), {fiber_cones.begin(), fiber_cones.end()});
    Fan base(n - r, std::move(base_gens), {base_cones.begin(), base_cones.end()});

    std::vector<LiftedRelation> lifted;
    bool trivial = true;
    for (auto& rel : primitive_relations(base)) {
        IndexSet lifted_collection;
        for (auto i : rel.collection) {
            lifted_collection.push_back(base_map[i]);
        }
        auto total = primitive_relation(f, sorted(std::move(lifted_collection)));
        // The lift keeps the base part and may add fiber generators.
        std::map<std::size_t, Integer> base_part;
        bool unchanged = true;
        for (std::size_t j = 0; j < total.target_support.size(); ++j) {
            const auto g = total.target_support[j];
            if (in_h[g]) {
                unchanged = false;
            } else {
                base_part[to_base.at(g)] = total.target_coeffs[j];
            }
        }
        std::map<std::size_t, Integer> expected;
        for (std::size_t j = 0; j < rel.target_support.size(); ++j) {
            expected[rel.target_support[j]] = rel.target_coeffs[j];
        }
        if (base_part != expected) {
            fail(Errc::InternalInconsistency, "lift of " + to_string(rel)
                                                  + " does not project back to it");
        }
        trivial = trivial && unchanged;
        lifted.push_back({std::move(rel), std::move(total), unchanged});
    }

    return BundleStructure{f,
                           h,
                           std::move(k),
                           std::move(fiber),
                           std::move(base),
                           std::move(fiber_map),
                           std::move(base_map),
                           std::move(lifted),
                           trivial};
}

SectionsAndFibers invariant_sections_and_fibers(const BundleStructure& b)
{
    SectionsAndFibers out;
    for (const auto& c : b.fiber.max_cones()) {
        IndexSet s;
        for (auto i : c) {
            s.push_back(b.fiber_generator_map[i]);
        }
        out.sections.push_back(sorted(std::move(s)));
    }
    std::sort(out.sections.begin(), out.sections.end());
    const std::set<std::size_t> fiber_gens(b.fiber_generator_map.begin(), b.fiber_generator_map.end());
    std::set<IndexSet> candidates;
    for (const auto& cone : b.total.max_cones()) {
        IndexSet tau;
        for (auto g : cone) {
            if (!fiber_gens.count(g)) {
                tau.push_back(g);
            }
        }
        candidates.insert(std::move(tau));
    }
    for (const auto& tau : candidates) {
        bool completes = std::all_of(out.sections.begin(), out.sections.end(), [&](const IndexSet& eta) {
            return b.total.contains_cone(set_union(tau, eta));
        });
        if (completes) {
            out.fibers.push_back(tau);
        }
    }
    return out;
}

SectionsAndFibers invariant_sections_and_fibers(const SplitResult& s)
{
    if (const auto* b = std::get_if<BundleStructure>(&s)) {
        return invariant_sections_and_fibers(*b);
    }
    fail(Errc::PrecondViolation, "no bundle structure: " + std::get<NoSplit>(s).reason);
}

Fan construct_x_prime(const Fan& f)
{
    return x_prime_from(f, decomposition_for_x_prime(f));
}

bool verify_birational_codim1(const Fan& a, const Fan& b)
{
    if (a.dim() != b.dim()) {
        fail(Errc::DimensionMismatch, "fans of dimensions " + std::to_string(a.dim()) + " and "
                                          + std::to_string(b.dim()));
    }
    auto ga = a.generators();
    auto gb = b.generators();
    std::sort(ga.begin(), ga.end());
    std::sort(gb.begin(), gb.end());
    return ga == gb;
}

StructureReport structure_report(const Fan& f)
{
    if (!is_fano(f)) {
        fail(Errc::NotFano, "structure report requires a Fano fan");
    }
    StructureReport rep;
    const auto pairs = symmetric_pairs(f);
    rep.num_pairs = pairs.size();
    if (pairs.empty()) {
        rep.kind = StructureCase::E;
        return rep;
    }
    Decomposition d = decompose(f);
    rep.h_dim = d.h_basis.rank();
    const std::size_t n = f.dim();

    if (rep.h_dim == n) {
        rep.kind = StructureCase::D;
        rep.factors = recognize(f);
        if (!rep.factors) {
            fail(Errc::InternalInconsistency, "symmetric generators span N but the fan is not a product");
        }
        rep.x_prime = x_prime_from(f, d);
    } else if (rep.h_dim + 1 == n) {
        rep.kind = StructureCase::C;
        std::vector<std::size_t> outside;
        for (std::size_t g = 0; g < f.num_generators(); ++g) {
            if (!in_rational_span(d.h_basis.vectors, f.generator(g))) {
                outside.push_back(g);
            }
        }
        if (outside.size() != 2) {
            fail(Errc::StructureViolation, std::to_string(outside.size())
                                               + " generators lie off the symmetric hyperplane, expected 2");
        }
        Fan model = pencil_model(f, d, outside[0], outside[1]);
        rep.bundle = require_split(model, d.h_basis, "bundle over P^1");
        PencilNormalForm nf;
        nf.v = outside[0];
        nf.w = outside[1];
        nf.relation = primitive_relation(model, {nf.v, nf.w});
        const IndexSet free_gens = d.free_generators();
        for (auto g : nf.relation.target_support) {
            if (std::binary_search(free_gens.begin(), free_gens.end(), g)) {
                ++nf.free_support;
            } else {
                ++nf.component_support;
            }
        }
        nf.odd = (nf.free_support + nf.component_support) % 2 == 1;
        rep.normal_form = std::move(nf);
        rep.x_prime = std::move(model);
    } else if (!d.del_pezzo.empty()) {
        rep.kind = StructureCase::A;
        IndexSet gens;
        for (const auto& c : d.del_pezzo) {
            auto g = c.generators();
            gens.insert(gens.end(), g.begin(), g.end());
        }
        rep.bundle = require_split(f, saturate(f.cone_generators(gens)), "X along the del Pezzo blocks");
        require_fano_base(*rep.bundle);
    } else if (!d.pseudo.empty()) {
        rep.kind = StructureCase::B;
        Fan xp = x_prime_from(f, d);
        rep.bundle = require_split(xp, saturate(xp.cone_generators(d.component_generators())),
                                   "X' along the block span");
        require_fano_base(*rep.bundle);
        rep.x_prime = std::move(xp);
    } else {
        rep.kind = StructureCase::E;
    }
    rep.decomposition = std::move(d);
    return rep;
}

} // namespace symfano
