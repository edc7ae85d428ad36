#include "support/corpus.hpp"
#include "support/expect.hpp"

#include "symfano/bundle.hpp"
#include "symfano/delpezzo.hpp"

#include <doctest.h>

#include <map>

using namespace symfano;
using namespace testsupport;

namespace {

Fan f1_fan()
{
    // x1, y1, v, w
    return make_fan(2, {{1, 0}, {-1, 0}, {0, 1}, {1, -1}}, {{0, 2}, {1, 2}, {1, 3}, {0, 3}});
}

SublatticeBasis span_of(std::vector<LatticeVector> v) { return saturate(v); }

} // namespace

TEST_CASE("split_along a product")
{
    auto f = product_fan(del_pezzo_fan(1), projective_line_power(1));
    auto s = split_along(f, span_of({{1, 0, 0}, {0, 1, 0}}));
    REQUIRE(std::holds_alternative<BundleStructure>(s));
    const auto& b = std::get<BundleStructure>(s);
    CHECK(b.fiber == del_pezzo_fan(1));
    CHECK(b.base == projective_line_power(1));
    CHECK(b.trivial);
    CHECK(b.fiber_generator_map == std::vector<std::size_t>{0, 1, 2, 3, 4, 5});
    CHECK(b.base_generator_map == std::vector<std::size_t>{6, 7});

    auto sf = invariant_sections_and_fibers(b);
    CHECK(sf.sections.size() == 6);
    CHECK(sf.fibers == std::vector<IndexSet>{{6}, {7}});
}

TEST_CASE("split_along the first Hirzebruch surface")
{
    auto f = f1_fan();
    auto s = split_along(f, span_of({{1, 0}}));
    REQUIRE(std::holds_alternative<BundleStructure>(s));
    const auto& b = std::get<BundleStructure>(s);
    CHECK(b.fiber == projective_line_power(1));
    CHECK(b.base.num_generators() == 2);
    CHECK_FALSE(b.trivial);
    REQUIRE(b.lifted_relations.size() == 1);
    const auto& lift = b.lifted_relations[0];
    CHECK(lift.base.target_support.empty());
    CHECK(lift.total.collection == IndexSet{2, 3});
    CHECK(lift.total.target_support == IndexSet{0});
    CHECK(lift.total.target_coeffs == std::vector<Integer>{1});
    CHECK_FALSE(lift.unchanged);

    auto sf = invariant_sections_and_fibers(s);
    CHECK(sf.sections == std::vector<IndexSet>{{0}, {1}});
}

TEST_CASE("split_along failures")
{
    auto p2 = projective_space(2);
    auto s = split_along(p2, span_of({{1, 0}}));
    REQUIRE(std::holds_alternative<NoSplit>(s));
    CHECK(std::get<NoSplit>(s).witness_cone == IndexSet{1, 2});
    CHECK_ERRC(invariant_sections_and_fibers(s), Errc::PrecondViolation);

    CHECK_ERRC(split_along(p2, span_of({{1, 0}, {0, 1}})), Errc::PrecondViolation);
    CHECK_ERRC(split_along(p2, span_of({{1, 0, 0}})), Errc::DimensionMismatch);
    SublatticeBasis doubled{{{2, 0}}, 2, true};
    CHECK_ERRC(split_along(p2, doubled), Errc::NotSaturated);
}

TEST_CASE("construct_x_prime")
{
    auto t = pseudo_del_pezzo_fan(1);
    CHECK(construct_x_prime(t) == t);
    auto vp = product_fan(del_pezzo_fan(1), projective_line_power(1));
    CHECK(construct_x_prime(vp) == vp);
    auto q = projective_line_power(2);
    CHECK(construct_x_prime(q) == q);
    CHECK_ERRC(construct_x_prime(hirzebruch(2)), Errc::NotFano);
    CHECK_ERRC(construct_x_prime(projective_space(2)), Errc::NoSymmetricStructure);
}

TEST_CASE("verify_birational_codim1")
{
    auto p2 = projective_space(2);
    CHECK(verify_birational_codim1(p2, p2));
    CHECK_FALSE(verify_birational_codim1(p2, projective_line_power(2)));
    CHECK_ERRC(verify_birational_codim1(p2, projective_space(3)), Errc::DimensionMismatch);
}

TEST_CASE("structure_report")
{
    auto v4 = structure_report(del_pezzo_fan(2));
    CHECK(v4.kind == StructureCase::D);
    REQUIRE(v4.factors);
    CHECK(*v4.factors == std::vector<FactorDescriptor>{{FactorKind::DelPezzo, 4}});

    auto f1 = structure_report(f1_fan());
    CHECK(f1.kind == StructureCase::C);
    REQUIRE(f1.normal_form);
    CHECK(f1.normal_form->free_support + f1.normal_form->component_support == 1);
    CHECK(f1.normal_form->odd);
    REQUIRE(f1.bundle);
    CHECK(f1.bundle->fiber == projective_line_power(1));
    CHECK(f1.bundle->base.num_generators() == 2);

    CHECK(structure_report(projective_space(3)).kind == StructureCase::E);
    CHECK_ERRC(structure_report(hirzebruch(2)), Errc::NotFano);
    CHECK(to_char(StructureCase::B) == 'B');
}

TEST_CASE("case C instances recover an odd r")
{
    for (std::size_t r : {1, 3}) {
        CAPTURE(r);
        auto f = pencil_fan(r);
        REQUIRE(is_fano(f));
        auto rep = structure_report(f);
        CHECK(rep.kind == StructureCase::C);
        REQUIRE(rep.normal_form);
        CHECK(rep.normal_form->free_support == r);
        CHECK(rep.normal_form->component_support == 0);
        CHECK(rep.normal_form->odd);
        CHECK(f.num_generators() == 2 * f.dim());
        REQUIRE(rep.x_prime);
        CHECK(verify_birational_codim1(f, *rep.x_prime));
    }
}

TEST_CASE("property: split invariants on the corpus")
{
    for (const auto& e : corpus()) {
        if (!e.fano) {
            continue;
        }
        INFO(e.name);
        auto rep = structure_report(e.fan);
        if (!rep.bundle) {
            continue;
        }
        const auto& b = *rep.bundle;
        const Fan& total = b.total;
        CHECK(total.num_generators() == b.fiber.num_generators() + b.base.num_generators());
        // Primitive collections inside H are those of the fiber, with the same relations.
        std::map<IndexSet, PrimitiveRelation> in_h;
        std::vector<bool> is_fiber(total.num_generators(), false);
        for (auto g : b.fiber_generator_map) {
            is_fiber[g] = true;
        }
        for (auto& r : primitive_relations(total)) {
            if (std::all_of(r.collection.begin(), r.collection.end(), [&](std::size_t g) { return is_fiber[g]; })) {
                in_h.emplace(r.collection, r);
            }
        }
        auto fiber_rels = primitive_relations(b.fiber);
        CHECK(fiber_rels.size() == in_h.size());
        for (const auto& fr : fiber_rels) {
            IndexSet coll, supp;
            for (auto i : fr.collection) {
                coll.push_back(b.fiber_generator_map[i]);
            }
            std::map<std::size_t, Integer> tgt;
            for (std::size_t j = 0; j < fr.target_support.size(); ++j) {
                tgt[b.fiber_generator_map[fr.target_support[j]]] = fr.target_coeffs[j];
            }
            std::sort(coll.begin(), coll.end());
            auto it = in_h.find(coll);
            REQUIRE(it != in_h.end());
            std::map<std::size_t, Integer> got;
            for (std::size_t j = 0; j < it->second.target_support.size(); ++j) {
                got[it->second.target_support[j]] = it->second.target_coeffs[j];
            }
            CHECK(got == tgt);
        }
        if (rep.kind == StructureCase::A || rep.kind == StructureCase::B) {
            CHECK(is_fano(b.base));
        }
    }
}

TEST_CASE("property: case D reproduces the product")
{
    for (const auto& e : corpus()) {
        if (!e.fano) {
            continue;
        }
        auto rep = structure_report(e.fan);
        if (rep.kind != StructureCase::D) {
            continue;
        }
        INFO(e.name);
        REQUIRE(rep.factors);
        REQUIRE(rep.x_prime);
        CHECK(*rep.x_prime == e.fan);
        CHECK(fan_of_factors(*rep.factors) == e.fan);
    }
}

TEST_CASE("property: X' keeps the generators on the corpus")
{
    for (const auto& e : corpus()) {
        if (!e.fano || symmetric_pairs(e.fan).empty()) {
            continue;
        }
        INFO(e.name);
        auto xp = construct_x_prime(e.fan);
        CHECK(verify_birational_codim1(e.fan, xp));
        auto rep = validate_fan(xp);
        CHECK((rep.is_fan && rep.is_smooth && rep.is_complete));
    }
}

TEST_CASE("cases A and B on bundles over P^2")
{
    for (const auto& e : corpus()) {
        if (e.name.find("bundle/P2") == std::string::npos) {
            continue;
        }
        INFO(e.name);
        REQUIRE(is_fano(e.fan));
        auto rep = structure_report(e.fan);
        REQUIRE(rep.bundle);
        CHECK(rep.bundle->fiber.dim() == 2);
        CHECK(rep.bundle->base.num_generators() == 3);
        CHECK(is_fano(rep.bundle->base));
        if (e.name.rfind("V2", 0) == 0) {
            CHECK(rep.kind == StructureCase::A);
            CHECK(rep.bundle->fiber == del_pezzo_fan(1));
        } else {
            CHECK(rep.kind == StructureCase::B);
            REQUIRE(rep.x_prime);
            CHECK(verify_birational_codim1(e.fan, *rep.x_prime));
            CHECK(rep.bundle->fiber.max_cones().size() == 5);
        }
    }
}
