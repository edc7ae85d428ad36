#include "symfano/fan.hpp"

#include "exact_lp.hpp"
#include "symfano/errors.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace symfano {

std::string to_string(const IndexSet& s)
{
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) {
            os << ',';
        }
        os << s[i];
    }
    os << '}';
    return os.str();
}

Fan::Fan(std::size_t dim, std::vector<LatticeVector> generators, std::vector<IndexSet> max_cones)
    : dim_(dim), generators_(std::move(generators)), max_cones_(std::move(max_cones))
{
    if (dim_ == 0) {
        fail(Errc::BadDimension, "fans of dimension 0 are not supported");
    }
    if (generators_.empty()) {
        fail(Errc::MalformedInput, "fan without generators");
    }
    if (max_cones_.empty()) {
        fail(Errc::MalformedInput, "fan without maximal cones");
    }
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        const auto& g = generators_[i];
        if (g.size() != dim_) {
            fail(Errc::MalformedInput, "generator " + std::to_string(i) + " has length "
                                           + std::to_string(g.size()) + ", expected "
                                           + std::to_string(dim_));
        }
        if (!is_primitive(g)) {
            fail(Errc::MalformedInput, "generator " + std::to_string(i) + " " + to_string(g)
                                           + " is not primitive");
        }
    }
    {
        std::vector<LatticeVector> sorted = generators_;
        std::sort(sorted.begin(), sorted.end());
        auto dup = std::adjacent_find(sorted.begin(), sorted.end());
        if (dup != sorted.end()) {
            fail(Errc::MalformedInput, "duplicate generator " + to_string(*dup));
        }
    }
    std::vector<bool> used(generators_.size(), false);
    for (auto& cone : max_cones_) {
        std::sort(cone.begin(), cone.end());
        if (std::adjacent_find(cone.begin(), cone.end()) != cone.end()) {
            fail(Errc::MalformedInput, "maximal cone " + to_string(cone) + " repeats an index");
        }
        if (cone.size() != dim_) {
            fail(Errc::MalformedInput, "maximal cone " + to_string(cone) + " has "
                                           + std::to_string(cone.size()) + " generators, expected "
                                           + std::to_string(dim_));
        }
        for (std::size_t idx : cone) {
            if (idx >= generators_.size()) {
                fail(Errc::MalformedInput, "maximal cone " + to_string(cone)
                                               + " references missing generator "
                                               + std::to_string(idx));
            }
            used[idx] = true;
        }
    }
    std::sort(max_cones_.begin(), max_cones_.end());
    if (std::adjacent_find(max_cones_.begin(), max_cones_.end()) != max_cones_.end()) {
        fail(Errc::MalformedInput, "repeated maximal cone");
    }
    for (std::size_t i = 0; i < used.size(); ++i) {
        if (!used[i]) {
            fail(Errc::MalformedInput, "generator " + std::to_string(i) + " lies in no maximal cone");
        }
    }
    cone_masks_.reserve(max_cones_.size());
    inverses_.reserve(max_cones_.size());
    for (const auto& cone : max_cones_) {
        cone_masks_.push_back(mask(cone));
        inverses_.push_back(inverse(cone_generators(cone)));
    }
}

boost::dynamic_bitset<> Fan::mask(const IndexSet& s) const
{
    boost::dynamic_bitset<> m(generators_.size());
    for (std::size_t idx : s) {
        if (idx >= generators_.size()) {
            fail(Errc::BadIndex, "generator index " + std::to_string(idx) + " out of range");
        }
        m.set(idx);
    }
    return m;
}

std::vector<LatticeVector> Fan::cone_generators(const IndexSet& s) const
{
    std::vector<LatticeVector> out;
    out.reserve(s.size());
    for (std::size_t idx : s) {
        if (idx >= generators_.size()) {
            fail(Errc::BadIndex, "generator index " + std::to_string(idx) + " out of range");
        }
        out.push_back(generators_[idx]);
    }
    return out;
}

bool Fan::contains_cone(const IndexSet& s) const
{
    const auto m = mask(s);
    return std::any_of(cone_masks_.begin(), cone_masks_.end(),
                       [&m](const auto& c) { return m.is_subset_of(c); });
}

std::optional<std::size_t> Fan::find_generator(const LatticeVector& v) const
{
    auto it = std::find(generators_.begin(), generators_.end(), v);
    if (it == generators_.end()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - generators_.begin());
}

bool is_smooth(const Fan& f)
{
    for (const auto& cone : f.max_cones()) {
        if (abs(determinant(f.cone_generators(cone))) != 1) {
            return false;
        }
    }
    return true;
}

namespace {

IndexSet set_difference(const IndexSet& a, const IndexSet& b)
{
    IndexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

IndexSet set_intersection(const IndexSet& a, const IndexSet& b)
{
    IndexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Coordinates, restricted to `rows`, of the generators `others` in the basis
// of maximal cone `cone`.
std::vector<std::vector<Rational>> coordinates_on(const Fan& f, std::size_t cone,
                                                  const IndexSet& rows, const IndexSet& others)
{
    const auto& inv = *f.cone_inverse(cone);
    const auto& gens = f.max_cones()[cone];
    std::vector<std::vector<Rational>> out;
    for (std::size_t v : others) {
        auto c = solve_with_inverse(inv, f.generator(v));
        std::vector<Rational> r;
        for (std::size_t pos = 0; pos < gens.size(); ++pos) {
            if (std::binary_search(rows.begin(), rows.end(), gens[pos])) {
                r.push_back(c[pos]);
            }
        }
        out.push_back(std::move(r));
    }
    return out;
}

// Certificate that the functional "sum of dual coordinates of own \ shared" is
// positive on one side and negative on every generator of the other side.
bool quick_separated(const std::vector<std::vector<Rational>>& coords)
{
    for (const auto& row : coords) {
        Rational s = 0;
        for (const auto& x : row) {
            s += x;
        }
        if (s >= 0) {
            return false;
        }
    }
    return true;
}

// Two full-dimensional simplicial cones meet exactly in the cone on their
// shared generators iff no nonzero mu >= 0 puts sum mu_v v inside the first
// cone modulo the shared face.
bool cones_meet_in_common_face(const Fan& f, std::size_t a, std::size_t b)
{
    const auto& ca = f.max_cones()[a];
    const auto& cb = f.max_cones()[b];
    const IndexSet shared = set_intersection(ca, cb);
    const IndexSet own_a = set_difference(ca, shared);
    const IndexSet own_b = set_difference(cb, shared);
    const auto coords_ab = coordinates_on(f, a, own_a, own_b);
    if (quick_separated(coords_ab)) {
        return true;
    }
    if (quick_separated(coordinates_on(f, b, own_b, own_a))) {
        return true;
    }
    const std::size_t k = own_b.size();
    const std::size_t m = own_a.size();
    RationalMatrix lp(m + 1, std::vector<Rational>(k + m, 0));
    std::vector<Rational> rhs(m + 1, 0);
    for (std::size_t u = 0; u < m; ++u) {
        for (std::size_t v = 0; v < k; ++v) {
            lp[u][v] = coords_ab[v][u];
        }
        lp[u][k + u] = -1;
    }
    for (std::size_t v = 0; v < k; ++v) {
        lp[m][v] = 1;
    }
    rhs[m] = 1;
    return !detail::find_nonnegative_solution(lp, rhs).has_value();
}

struct FaceIncidence {
    std::size_t cone;
    std::size_t opposite_pos;
};

std::map<IndexSet, std::vector<FaceIncidence>> facets_of_max_cones(const Fan& f)
{
    std::map<IndexSet, std::vector<FaceIncidence>> faces;
    for (std::size_t c = 0; c < f.max_cones().size(); ++c) {
        const auto& cone = f.max_cones()[c];
        for (std::size_t pos = 0; pos < cone.size(); ++pos) {
            IndexSet face;
            for (std::size_t q = 0; q < cone.size(); ++q) {
                if (q != pos) {
                    face.push_back(cone[q]);
                }
            }
            faces[face].push_back({c, pos});
        }
    }
    return faces;
}

bool wall_criterion(const Fan& f, std::string* detail)
{
    if (f.dim() == 1) {
        LatticeVector plus{1}, minus{-1};
        bool ok = f.find_generator(plus).has_value() && f.find_generator(minus).has_value();
        if (!ok && detail) {
            *detail = "a one-dimensional complete fan needs both rays (1) and (-1)";
        }
        return ok;
    }
    const auto faces = facets_of_max_cones(f);
    const std::size_t nc = f.max_cones().size();
    std::vector<std::vector<std::size_t>> adjacency(nc);
    for (const auto& [face, inc] : faces) {
        if (inc.size() != 2) {
            if (detail) {
                *detail = "wall " + to_string(face) + " lies in " + std::to_string(inc.size())
                          + " maximal cone(s)";
            }
            return false;
        }
        const std::size_t a = inc[0].cone;
        const std::size_t b = inc[1].cone;
        const std::size_t ub = f.max_cones()[b][inc[1].opposite_pos];
        auto c = solve_with_inverse(*f.cone_inverse(a), f.generator(ub));
        if (c[inc[0].opposite_pos] >= 0) {
            if (detail) {
                *detail = "opposite generators of wall " + to_string(face)
                          + " lie on the same side";
            }
            return false;
        }
        adjacency[a].push_back(b);
        adjacency[b].push_back(a);
    }
    std::vector<bool> seen(nc, false);
    std::queue<std::size_t> todo;
    todo.push(0);
    seen[0] = true;
    std::size_t count = 1;
    while (!todo.empty()) {
        auto c = todo.front();
        todo.pop();
        for (auto d : adjacency[c]) {
            if (!seen[d]) {
                seen[d] = true;
                ++count;
                todo.push(d);
            }
        }
    }
    if (count != nc) {
        if (detail) {
            *detail = "maximal cones are not connected through walls";
        }
        return false;
    }
    return true;
}

} // namespace

bool satisfies_fan_axiom(const Fan& f, std::string* detail)
{
    const auto& cones = f.max_cones();
    for (std::size_t i = 0; i < cones.size(); ++i) {
        if (!f.cone_inverse(i)) {
            if (detail) {
                *detail = "maximal cone " + to_string(cones[i]) + " is not full-dimensional";
            }
            return false;
        }
    }
    for (std::size_t i = 0; i < cones.size(); ++i) {
        for (std::size_t j = i + 1; j < cones.size(); ++j) {
            if (!cones_meet_in_common_face(f, i, j)) {
                if (detail) {
                    *detail = "maximal cones " + to_string(cones[i]) + " and " + to_string(cones[j])
                              + " overlap outside their common face";
                }
                return false;
            }
        }
    }
    return true;
}

ValidityReport validate_fan(const Fan& f, bool trust_fan_axiom)
{
    ValidityReport r;
    if (trust_fan_axiom) {
        r.is_fan = true;
        for (std::size_t i = 0; i < f.max_cones().size(); ++i) {
            if (!f.cone_inverse(i)) {
                r.is_fan = false;
                r.detail = "maximal cone " + to_string(f.max_cones()[i]) + " is not full-dimensional";
            }
        }
    } else {
        r.is_fan = satisfies_fan_axiom(f, &r.detail);
    }
    r.is_smooth = is_smooth(f);
    if (!r.is_smooth && r.detail.empty()) {
        r.detail = "some maximal cone is not unimodular";
    }
    if (r.is_fan && r.is_smooth) {
        std::string why;
        r.is_complete = wall_criterion(f, &why);
        if (!r.is_complete && r.detail.empty()) {
            r.detail = why;
        }
    }
    return r;
}

bool is_complete(const Fan& f)
{
    if (!is_smooth(f) || !satisfies_fan_axiom(f)) {
        fail(Errc::PrecondViolation, "completeness is decided only for smooth fans");
    }
    return wall_criterion(f, nullptr);
}

bool passes_wall_criterion(const Fan& f)
{
    for (std::size_t i = 0; i < f.max_cones().size(); ++i) {
        if (!f.cone_inverse(i)) {
            return false;
        }
    }
    return wall_criterion(f, nullptr);
}

PointLocation locate_point(const Fan& f, const LatticeVector& p)
{
    if (p.size() != f.dim()) {
        fail(Errc::DimensionMismatch, "point " + to_string(p) + " in a fan of dimension "
                                          + std::to_string(f.dim()));
    }
    if (p.is_zero()) {
        return {};
    }
    for (std::size_t c = 0; c < f.max_cones().size(); ++c) {
        const auto& inv = f.cone_inverse(c);
        if (!inv) {
            continue;
        }
        auto coeffs = solve_with_inverse(*inv, p);
        if (std::any_of(coeffs.begin(), coeffs.end(), [](const Rational& x) { return x < 0; })) {
            continue;
        }
        PointLocation loc;
        const auto& cone = f.max_cones()[c];
        for (std::size_t pos = 0; pos < cone.size(); ++pos) {
            if (coeffs[pos] > 0) {
                loc.cone.push_back(cone[pos]);
                loc.coefficients.push_back(coeffs[pos]);
            }
        }
        return loc;
    }
    fail(Errc::Incomplete, "no maximal cone contains " + to_string(p));
}

std::vector<Wall> interior_walls(const Fan& f)
{
    std::vector<Wall> out;
    for (const auto& [face, inc] : facets_of_max_cones(f)) {
        if (inc.size() != 2) {
            continue;
        }
        Wall w;
        w.face = face;
        w.cone_a = inc[0].cone;
        w.cone_b = inc[1].cone;
        w.opposite_a = f.max_cones()[w.cone_a][inc[0].opposite_pos];
        w.opposite_b = f.max_cones()[w.cone_b][inc[1].opposite_pos];
        out.push_back(std::move(w));
    }
    return out;
}

std::vector<Integer> wall_relation(const Fan& f, const Wall& w)
{
    const auto& inv = f.cone_inverse(w.cone_a);
    if (!inv) {
        fail(Errc::PrecondViolation, "wall of a degenerate cone");
    }
    const auto& cone = f.max_cones()[w.cone_a];
    auto c = solve_with_inverse(*inv, f.generator(w.opposite_b));
    std::vector<Integer> rel(f.num_generators(), 0);
    rel[w.opposite_b] = 1;
    for (std::size_t pos = 0; pos < cone.size(); ++pos) {
        if (c[pos].get_den() != 1) {
            fail(Errc::NonIntegralCoefficients, "wall " + to_string(w.face)
                                                    + " carries a non-integral relation");
        }
        if (cone[pos] == w.opposite_a) {
            if (c[pos] != -1) {
                fail(Errc::PrecondViolation, "wall " + to_string(w.face)
                                                 + " is not a smooth wall between opposite sides");
            }
            rel[cone[pos]] = 1;
        } else {
            rel[cone[pos]] = -c[pos].get_num();
        }
    }
    return rel;
}

bool is_projective(const Fan& f)
{
    if (!is_smooth(f) || !wall_criterion(f, nullptr)) {
        fail(Errc::PrecondViolation, "projectivity is decided only for smooth complete fans");
    }
    const auto walls = interior_walls(f);
    const std::size_t g = f.num_generators();
    const std::size_t nw = walls.size();
    // Support function values a = p - q; each wall relation r must give r.a >= 1.
    RationalMatrix lp(nw, std::vector<Rational>(2 * g + nw, 0));
    std::vector<Rational> rhs(nw, 1);
    for (std::size_t i = 0; i < nw; ++i) {
        auto rel = wall_relation(f, walls[i]);
        for (std::size_t x = 0; x < g; ++x) {
            lp[i][x] = rel[x];
            lp[i][g + x] = -rel[x];
        }
        lp[i][2 * g + i] = -1;
    }
    return detail::find_nonnegative_solution(lp, rhs).has_value();
}

} // namespace symfano
