#include "support/corpus.hpp"
#include "support/expect.hpp"
#include "support/relation_lists.hpp"

#include "symfano/delpezzo.hpp"
#include "symfano/fano.hpp"

#include <doctest.h>

using namespace symfano;
using namespace testsupport;

namespace {

std::size_t binomial(std::size_t n, std::size_t k)
{
    std::size_t b = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        b = b * (n - k + i) / i;
    }
    return b;
}

} // namespace

TEST_CASE("del_pezzo_fan")
{
    auto v2 = del_pezzo_fan(1);
    CHECK(v2.num_generators() == 6);
    CHECK(v2.max_cones().size() == binomial(3, 1) * binomial(2, 1));
    auto v4 = del_pezzo_fan(2);
    CHECK(v4.num_generators() == 10);
    CHECK(v4.max_cones().size() == binomial(5, 2) * binomial(3, 2));
    for (std::size_t r = 1; r <= 3; ++r) {
        auto f = del_pezzo_fan(r);
        CHECK(picard_number(f) == 2 * r + 2);
        auto rep = validate_fan(f);
        CHECK((rep.is_fan && rep.is_smooth && rep.is_complete));
        CHECK(is_fano(f));
    }
    CHECK_ERRC(del_pezzo_fan(0), Errc::BadDimension);
}

TEST_CASE("generator sets follow the closed form")
{
    for (std::size_t r = 1; r <= 3; ++r) {
        const std::size_t n = 2 * r;
        auto v = del_pezzo_fan(r);
        auto t = pseudo_del_pezzo_fan(r);
        LatticeVector x0(n);
        for (std::size_t i = 1; i <= n; ++i) {
            LatticeVector e(n);
            e[i - 1] = 1;
            x0 -= e;
            CHECK(v.generator(2 * i) == e);
            CHECK(v.generator(2 * i + 1) == -e);
            CHECK(t.generator(2 * i - 1) == e);
            CHECK(t.generator(2 * i) == -e);
        }
        CHECK(v.generator(0) == x0);
        CHECK(v.generator(1) == -x0);
        CHECK(t.generator(0) == x0);
        CHECK(t.num_generators() == 2 * n + 1);
        CHECK_FALSE(t.find_generator(-x0).has_value());
    }
}

TEST_CASE("pseudo_del_pezzo_fan")
{
    auto t = pseudo_del_pezzo_fan(1);
    CHECK(t.num_generators() == 5);
    CHECK(t.max_cones().size() == 5);
    // x0=0, x1=1, y1=2, x2=3, y2=4
    const std::set<PlainRelation> listed{
        {{1, 2}, {}}, {{3, 4}, {}}, {{0, 1}, {4}}, {{0, 3}, {2}}, {{2, 4}, {0}},
    };
    CHECK(plain_relations(t) == listed);
    for (std::size_t r = 1; r <= 3; ++r) {
        auto f = pseudo_del_pezzo_fan(r);
        CHECK(picard_number(f) == 2 * r + 1);
        CHECK(is_fano(f));
    }
    CHECK_ERRC(pseudo_del_pezzo_fan(0), Errc::BadDimension);
}

TEST_CASE("property: relation sets match the closed-form lists")
{
    for (std::size_t r = 1; r <= 3; ++r) {
        CAPTURE(r);
        CHECK(plain_relations(del_pezzo_fan(r)) == del_pezzo_relation_list(r));
        CHECK(plain_relations(pseudo_del_pezzo_fan(r)) == pseudo_del_pezzo_relation_list(r));
    }
}

TEST_CASE("product_fan and projective_line_power")
{
    auto p1 = projective_line_power(1);
    CHECK(p1.generators() == std::vector<LatticeVector>{{1}, {-1}});
    auto q = product_fan(p1, p1);
    CHECK(q.num_generators() == 4);
    CHECK(q.max_cones().size() == 4);
    CHECK(q == projective_line_power(2));
    auto vp = product_fan(del_pezzo_fan(1), p1);
    CHECK(vp.num_generators() == 8);
    CHECK(vp.max_cones().size() == 12);
    auto p3 = projective_line_power(3);
    CHECK(p3.num_generators() == 6);
    CHECK(p3.max_cones().size() == 8);
    CHECK(picard_number(p3) == 3);
    CHECK_ERRC(projective_line_power(0), Errc::BadDimension);
}

TEST_CASE("property: products are Fano iff both factors are")
{
    std::vector<Fan> factors{projective_line_power(1), projective_space(2), hirzebruch(1), hirzebruch(2),
                             del_pezzo_fan(1), pseudo_del_pezzo_fan(1)};
    for (const auto& a : factors) {
        for (const auto& b : factors) {
            auto p = product_fan(a, b);
            CHECK(is_fano(p) == (is_fano(a) && is_fano(b)));
            auto pc = primitive_collections(p);
            auto ca = primitive_collections(a);
            auto cb = primitive_collections(b);
            CHECK(pc.size() == ca.size() + cb.size());
        }
    }
}

TEST_CASE("recognize")
{
    auto t4 = recognize(pseudo_del_pezzo_fan(2));
    REQUIRE(t4);
    CHECK(*t4 == std::vector<FactorDescriptor>{{FactorKind::PseudoDelPezzo, 4}});

    auto mixed = fan_of_factors({{FactorKind::DelPezzo, 2}, {FactorKind::PseudoDelPezzo, 2}, {FactorKind::ProjLine, 1}});
    CHECK(mixed.dim() == 5);
    auto got = recognize(mixed);
    REQUIRE(got);
    CHECK(*got == std::vector<FactorDescriptor>{{FactorKind::DelPezzo, 2}, {FactorKind::PseudoDelPezzo, 2},
                                                {FactorKind::ProjLine, 1}});
    CHECK_FALSE(recognize(hirzebruch(1)).has_value());
    CHECK_FALSE(recognize(projective_space(2)).has_value());
    CHECK_ERRC(recognize(hirzebruch(2)), Errc::NotFano);
    CHECK(to_string(FactorDescriptor{FactorKind::PseudoDelPezzo, 4}) == "V~^4");
}

TEST_CASE("fan_of_factors rejects odd dimensions")
{
    CHECK_ERRC(fan_of_factors({{FactorKind::DelPezzo, 3}}), Errc::BadDimension);
    CHECK_ERRC(fan_of_factors({}), Errc::BadDimension);
    CHECK_ERRC(fan_of_factors({{FactorKind::Other, 2}}), Errc::BadDimension);
}
