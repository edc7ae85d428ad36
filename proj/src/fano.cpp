#include "symfano/fano.hpp"

#include "symfano/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace symfano {

OneCycle PrimitiveRelation::cycle(std::size_t num_generators) const
{
    OneCycle c{std::vector<Integer>(num_generators, 0)};
    for (std::size_t x : collection) {
        c.coeffs.at(x) += 1;
    }
    for (std::size_t j = 0; j < target_support.size(); ++j) {
        c.coeffs.at(target_support[j]) -= target_coeffs[j];
    }
    return c;
}

std::string to_string(const PrimitiveRelation& r)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < r.collection.size(); ++i) {
        os << (i ? " + " : "") << 'g' << r.collection[i];
    }
    for (std::size_t j = 0; j < r.target_support.size(); ++j) {
        os << " - ";
        if (r.target_coeffs[j] != 1) {
            os << r.target_coeffs[j] << '*';
        }
        os << 'g' << r.target_support[j];
    }
    os << " = 0";
    return os.str();
}

namespace {

void require_smooth_complete(const Fan& f, const char* what)
{
    if (!is_smooth(f) || !passes_wall_criterion(f)) {
        fail(Errc::PrecondViolation, std::string(what) + " requires a smooth complete fan");
    }
}

} // namespace

bool is_fano(const Fan& f)
{
    require_smooth_complete(f, "is_fano");
    const std::size_t n = f.dim();
    const LatticeVector ones = [n] {
        LatticeVector v(n);
        for (std::size_t i = 0; i < n; ++i) {
            v[i] = 1;
        }
        return v;
    }();
    for (std::size_t c = 0; c < f.max_cones().size(); ++c) {
        // m solves G m = 1 with G the generator rows, so m = G^{-1} 1.
        const auto& inv = *f.cone_inverse(c);
        LatticeVector m(n);
        for (std::size_t i = 0; i < n; ++i) {
            Rational s = 0;
            for (std::size_t j = 0; j < n; ++j) {
                s += inv[i][j];
            }
            if (s.get_den() != 1) {
                fail(Errc::NonIntegralCoefficients, "dual vertex of cone "
                                                        + to_string(f.max_cones()[c])
                                                        + " is not integral");
            }
            m[i] = s.get_num();
        }
        const auto& cone = f.max_cones()[c];
        for (std::size_t y = 0; y < f.num_generators(); ++y) {
            if (std::binary_search(cone.begin(), cone.end(), y)) {
                continue;
            }
            if (dot(m, f.generator(y)) >= 1) {
                return false;
            }
        }
    }
    return true;
}

std::vector<IndexSet> primitive_collections(const Fan& f, std::size_t max_size)
{
    if (max_size == 0) {
        max_size = f.dim() + 1;
    }
    const std::size_t g = f.num_generators();
    std::vector<IndexSet> out;
    // Level-wise growth: faces of size k-1 are extended by a larger index; a
    // non-face all of whose facets are faces is a primitive collection.
    std::set<IndexSet> faces{IndexSet{}};
    for (std::size_t k = 1; k <= max_size && !faces.empty(); ++k) {
        std::set<IndexSet> next;
        for (const auto& face : faces) {
            const std::size_t start = face.empty() ? 0 : face.back() + 1;
            for (std::size_t j = start; j < g; ++j) {
                IndexSet cand = face;
                cand.push_back(j);
                if (f.contains_cone(cand)) {
                    next.insert(std::move(cand));
                    continue;
                }
                bool minimal = true;
                for (std::size_t drop = 0; drop + 1 < cand.size() && minimal; ++drop) {
                    IndexSet sub;
                    for (std::size_t q = 0; q < cand.size(); ++q) {
                        if (q != drop) {
                            sub.push_back(cand[q]);
                        }
                    }
                    minimal = faces.count(sub) > 0;
                }
                if (minimal) {
                    out.push_back(std::move(cand));
                }
            }
        }
        faces = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

PrimitiveRelation primitive_relation(const Fan& f, const IndexSet& collection)
{
    IndexSet p = collection;
    std::sort(p.begin(), p.end());
    if (p.empty() || std::adjacent_find(p.begin(), p.end()) != p.end()) {
        fail(Errc::NotPrimitiveCollection, to_string(collection) + " is not a set of generators");
    }
    if (f.contains_cone(p)) {
        fail(Errc::NotPrimitiveCollection, to_string(p) + " spans a cone");
    }
    for (std::size_t drop = 0; drop < p.size(); ++drop) {
        IndexSet sub;
        for (std::size_t q = 0; q < p.size(); ++q) {
            if (q != drop) {
                sub.push_back(p[q]);
            }
        }
        if (!f.contains_cone(sub)) {
            fail(Errc::NotPrimitiveCollection, to_string(p) + " is not minimal");
        }
    }
    LatticeVector sum(f.dim());
    for (std::size_t x : p) {
        sum += f.generator(x);
    }
    auto loc = locate_point(f, sum);
    auto coeffs = as_integers(loc.coefficients);
    if (!coeffs) {
        fail(Errc::NonIntegralCoefficients, "sum of " + to_string(p) + " has fractional coordinates");
    }
    PrimitiveRelation r;
    r.collection = std::move(p);
    r.target_support = std::move(loc.cone);
    r.target_coeffs = std::move(*coeffs);
    r.degree = static_cast<long>(r.collection.size());
    for (const auto& a : r.target_coeffs) {
        r.degree -= a;
    }
    return r;
}

std::vector<PrimitiveRelation> primitive_relations(const Fan& f)
{
    std::vector<PrimitiveRelation> out;
    for (const auto& p : primitive_collections(f)) {
        out.push_back(primitive_relation(f, p));
    }
    return out;
}

std::vector<OneCycle> one_cycle_basis(const Fan& f)
{
    std::vector<OneCycle> out;
    for (auto& v : integer_relations(f.generators(), f.dim())) {
        out.push_back(OneCycle{v.coords()});
    }
    return out;
}

std::size_t picard_number(const Fan& f)
{
    return f.num_generators() - f.dim();
}

Integer anticanonical_degree(const OneCycle& c)
{
    return std::accumulate(c.coeffs.begin(), c.coeffs.end(), Integer(0));
}

bool is_effective_by_cone_test(const Fan& f, const OneCycle& c)
{
    if (c.coeffs.size() != f.num_generators()) {
        fail(Errc::DimensionMismatch, "cycle has " + std::to_string(c.coeffs.size())
                                          + " coefficients for " + std::to_string(f.num_generators())
                                          + " generators");
    }
    LatticeVector sum(f.dim());
    IndexSet positive, negative;
    for (std::size_t x = 0; x < c.coeffs.size(); ++x) {
        if (c.coeffs[x] == 0) {
            continue;
        }
        sum += c.coeffs[x] * f.generator(x);
        (c.coeffs[x] > 0 ? positive : negative).push_back(x);
    }
    if (positive.empty() && negative.empty()) {
        fail(Errc::ZeroCycle, "the zero cycle");
    }
    if (!sum.is_zero()) {
        fail(Errc::PrecondViolation, "coefficients do not define a relation among the generators");
    }
    if (positive.empty() || negative.empty()) {
        fail(Errc::NotApplicable, "cycle needs both positive and negative coefficients");
    }
    return f.contains_cone(negative);
}

} // namespace symfano
