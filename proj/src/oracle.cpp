#include "symfano/oracle.hpp"

#include "symfano/errors.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

namespace symfano::oracle {

namespace {

using Row = std::vector<Rational>;
using Mat = std::vector<Row>;

Mat to_matrix(const std::vector<LatticeVector>& rows)
{
    Mat m;
    for (const auto& r : rows) {
        Row row;
        for (const auto& x : r) {
            row.emplace_back(x);
        }
        m.push_back(std::move(row));
    }
    return m;
}

Rational det(Mat m)
{
    const std::size_t n = m.size();
    Rational d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) {
            ++p;
        }
        if (p == n) {
            return 0;
        }
        if (p != c) {
            std::swap(m[p], m[c]);
            d = -d;
        }
        d *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            const Rational q = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) {
                m[r][k] -= q * m[c][k];
            }
        }
    }
    return d;
}

std::size_t matrix_rank(Mat m)
{
    std::size_t rk = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rk < m.size(); ++c) {
        std::size_t p = rk;
        while (p < m.size() && m[p][c] == 0) {
            ++p;
        }
        if (p == m.size()) {
            continue;
        }
        std::swap(m[p], m[rk]);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r != rk && m[r][c] != 0) {
                const Rational q = m[r][c] / m[rk][c];
                for (std::size_t k = c; k < cols; ++k) {
                    m[r][k] -= q * m[rk][k];
                }
            }
        }
        ++rk;
    }
    return rk;
}

// Solves a x = b for square a; nullopt when singular.
std::optional<Row> solve(Mat a, Row b)
{
    const std::size_t n = a.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) {
            ++p;
        }
        if (p == n) {
            return std::nullopt;
        }
        std::swap(a[p], a[c]);
        std::swap(b[p], b[c]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r != c && a[r][c] != 0) {
                const Rational q = a[r][c] / a[c][c];
                for (std::size_t k = c; k < n; ++k) {
                    a[r][k] -= q * a[c][k];
                }
                b[r] -= q * b[c];
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        b[i] /= a[i][i];
    }
    return b;
}

Rational inner(const Row& a, const LatticeVector& g)
{
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * Rational(g[i]);
    }
    return s;
}

void subsets(std::size_t n, std::size_t k, std::size_t start, IndexSet& cur, std::vector<IndexSet>& out)
{
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i + (k - cur.size()) <= n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

std::vector<LatticeVector> pick(const Fan& f, const IndexSet& s)
{
    std::vector<LatticeVector> out;
    for (auto i : s) {
        out.push_back(f.generators()[i]);
    }
    return out;
}

} // namespace

bool brute_force_fano(const Fan& f)
{
    const std::size_t n = f.dim();
    if (n > 4) {
        fail(Errc::DimTooLarge, "hull oracle supports dimension <= 4, got " + std::to_string(n));
    }
    const auto& gens = f.generators();
    for (const auto& c : f.max_cones()) {
        const Rational d = det(to_matrix(pick(f, c)));
        if (d != 1 && d != -1) {
            return false;
        }
    }

    // Facets not through the origin: {x : a.x = 1} with a.g <= 1 for all g.
    std::map<IndexSet, Row> facets;
    std::vector<IndexSet> candidates;
    IndexSet cur;
    subsets(gens.size(), n, 0, cur, candidates);
    for (const auto& s : candidates) {
        auto a = solve(to_matrix(pick(f, s)), Row(n, Rational(1)));
        if (!a) {
            continue;
        }
        IndexSet on;
        bool supporting = true;
        for (std::size_t g = 0; g < gens.size() && supporting; ++g) {
            const Rational v = inner(*a, gens[g]);
            if (v > 1) {
                supporting = false;
            } else if (v == 1) {
                on.push_back(g);
            }
        }
        if (supporting) {
            facets.emplace(on, *a);
        }
    }
    if (facets.empty()) {
        return false;
    }

    // Closed boundary: each ridge of a found facet lies in exactly two.
    std::map<IndexSet, int> ridges;
    for (const auto& [pts, a] : facets) {
        if (pts.size() != n) {
            return false;
        }
        for (std::size_t drop = 0; drop < n; ++drop) {
            IndexSet r;
            for (std::size_t i = 0; i < n; ++i) {
                if (i != drop) {
                    r.push_back(pts[i]);
                }
            }
            ++ridges[r];
        }
    }
    for (const auto& [r, count] : ridges) {
        if (count != 2) {
            return false;
        }
    }

    for (std::size_t g = 0; g < gens.size(); ++g) {
        Mat normals;
        for (const auto& [pts, a] : facets) {
            if (std::find(pts.begin(), pts.end(), g) != pts.end()) {
                normals.push_back(a);
            }
        }
        if (normals.empty() || matrix_rank(normals) != n) {
            return false;
        }
    }

    std::set<IndexSet> facet_sets;
    for (const auto& [pts, a] : facets) {
        facet_sets.insert(pts);
    }
    const std::set<IndexSet> cones(f.max_cones().begin(), f.max_cones().end());
    return facet_sets == cones;
}

std::vector<IndexSet> brute_force_primitive_collections(const Fan& f, std::size_t max_size)
{
    const std::size_t m = f.num_generators();
    if (m > 16) {
        fail(Errc::TooLarge, "subset scan supports at most 16 generators, got " + std::to_string(m));
    }
    std::vector<unsigned> cone_masks;
    for (const auto& c : f.max_cones()) {
        unsigned mask = 0;
        for (auto i : c) {
            mask |= 1U << i;
        }
        cone_masks.push_back(mask);
    }
    auto is_face = [&](unsigned s) {
        return std::any_of(cone_masks.begin(), cone_masks.end(), [s](unsigned c) { return (s & c) == s; });
    };
    std::vector<IndexSet> out;
    for (unsigned s = 1; s < (1U << m); ++s) {
        const auto size = static_cast<std::size_t>(__builtin_popcount(s));
        if ((max_size != 0 && size > max_size) || is_face(s)) {
            continue;
        }
        bool minimal = true;
        for (std::size_t i = 0; i < m && minimal; ++i) {
            if ((s >> i) & 1U) {
                minimal = is_face(s & ~(1U << i));
            }
        }
        if (minimal) {
            IndexSet c;
            for (std::size_t i = 0; i < m; ++i) {
                if ((s >> i) & 1U) {
                    c.push_back(i);
                }
            }
            out.push_back(std::move(c));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<WallCurve> wall_curve_degrees(const Fan& f)
{
    const std::size_t n = f.dim();
    const auto& cones = f.max_cones();
    std::vector<WallCurve> out;
    for (std::size_t a = 0; a < cones.size(); ++a) {
        for (std::size_t b = a + 1; b < cones.size(); ++b) {
            IndexSet wall;
            std::set_intersection(cones[a].begin(), cones[a].end(), cones[b].begin(), cones[b].end(),
                                  std::back_inserter(wall));
            if (wall.size() + 1 != n) {
                continue;
            }
            std::size_t ua = 0, ub = 0;
            for (auto g : cones[a]) {
                if (!std::binary_search(wall.begin(), wall.end(), g)) {
                    ua = g;
                }
            }
            for (auto g : cones[b]) {
                if (!std::binary_search(wall.begin(), wall.end(), g)) {
                    ub = g;
                }
            }
            // u_a + u_b in the basis of cone a, transposed system.
            Mat at(n, Row(n));
            const auto basis = pick(f, cones[a]);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    at[i][j] = Rational(basis[j][i]);
                }
            }
            Row rhs(n);
            for (std::size_t i = 0; i < n; ++i) {
                rhs[i] = Rational(f.generators()[ua][i] + f.generators()[ub][i]);
            }
            auto c = solve(at, rhs);
            if (!c) {
                fail(Errc::PrecondViolation, "maximal cone " + to_string(cones[a]) + " is degenerate");
            }
            WallCurve w;
            w.wall = wall;
            w.cycle.coeffs.assign(f.num_generators(), 0);
            w.cycle.coeffs[ua] += 1;
            w.cycle.coeffs[ub] += 1;
            for (std::size_t j = 0; j < n; ++j) {
                if ((*c)[j].get_den() != 1) {
                    fail(Errc::PrecondViolation, "wall relation is not integral");
                }
                w.cycle.coeffs[cones[a][j]] -= (*c)[j].get_num();
            }
            w.degree = 0;
            for (const auto& x : w.cycle.coeffs) {
                w.degree += x;
            }
            out.push_back(std::move(w));
        }
    }
    return out;
}

} // namespace symfano::oracle
