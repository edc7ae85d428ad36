#include "corpus.hpp"

#include "symfano/delpezzo.hpp"
#include "symfano/symmetry.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

namespace testsupport {

using symfano::Integer;
using symfano::Rational;

Fan make_fan(std::size_t dim, const std::vector<std::vector<long>>& gens, const std::vector<IndexSet>& cones)
{
    std::vector<LatticeVector> g;
    for (const auto& v : gens) {
        std::vector<Integer> c(v.begin(), v.end());
        g.emplace_back(std::move(c));
    }
    return Fan(dim, std::move(g), cones);
}

Fan projective_space(std::size_t n)
{
    std::vector<LatticeVector> g;
    LatticeVector last(n);
    for (std::size_t i = 0; i < n; ++i) {
        LatticeVector e(n);
        e[i] = 1;
        last[i] = -1;
        g.push_back(e);
    }
    g.push_back(last);
    std::vector<IndexSet> cones;
    for (std::size_t skip = 0; skip <= n; ++skip) {
        IndexSet c;
        for (std::size_t i = 0; i <= n; ++i) {
            if (i != skip) {
                c.push_back(i);
            }
        }
        cones.push_back(c);
    }
    return Fan(n, std::move(g), std::move(cones));
}

Fan hirzebruch(long a)
{
    return make_fan(2, {{1, 0}, {0, 1}, {-1, a}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

namespace {

std::optional<std::vector<Rational>> solve_rows(const std::vector<LatticeVector>& rows)
{
    // a . row_i = 1 for every row.
    const std::size_t n = rows.size();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m[i][j] = rows[i][j];
        }
        m[i][n] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) {
            ++p;
        }
        if (p == n) {
            return std::nullopt;
        }
        std::swap(m[p], m[c]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r != c && m[r][c] != 0) {
                const Rational q = m[r][c] / m[c][c];
                for (std::size_t k = c; k <= n; ++k) {
                    m[r][k] -= q * m[c][k];
                }
            }
        }
    }
    std::vector<Rational> a(n);
    for (std::size_t i = 0; i < n; ++i) {
        a[i] = m[i][n] / m[i][i];
    }
    return a;
}

void choose(std::size_t n, std::size_t k, std::size_t start, IndexSet& cur, std::vector<IndexSet>& out)
{
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        choose(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

Fan face_fan(const std::vector<LatticeVector>& gens)
{
    const std::size_t n = gens.front().size();
    std::vector<IndexSet> subsets;
    IndexSet cur;
    choose(gens.size(), n, 0, cur, subsets);
    std::set<IndexSet> facets;
    for (const auto& s : subsets) {
        std::vector<LatticeVector> rows;
        for (auto i : s) {
            rows.push_back(gens[i]);
        }
        auto a = solve_rows(rows);
        if (!a) {
            continue;
        }
        IndexSet on;
        bool ok = true;
        for (std::size_t g = 0; g < gens.size(); ++g) {
            Rational v = 0;
            for (std::size_t j = 0; j < n; ++j) {
                v += (*a)[j] * Rational(gens[g][j]);
            }
            if (v > 1) {
                ok = false;
                break;
            }
            if (v == 1) {
                on.push_back(g);
            }
        }
        if (ok) {
            facets.insert(on);
        }
    }
    return Fan(n, gens, {facets.begin(), facets.end()});
}

Fan pencil_fan(std::size_t r)
{
    const std::size_t n = r + 1;
    std::vector<LatticeVector> g;
    LatticeVector v(n), w(n);
    for (std::size_t i = 0; i < r; ++i) {
        LatticeVector e(n);
        e[i] = 1;
        g.push_back(e);
        g.push_back(-e);
        w[i] = 1;
    }
    v[r] = 1;
    w[r] = -1;
    g.push_back(v);
    g.push_back(w);
    return face_fan(g);
}

std::vector<CorpusEntry> corpus()
{
    using namespace symfano;
    const Fan p1 = projective_line_power(1);
    const Fan v2 = del_pezzo_fan(1);
    const Fan vt2 = pseudo_del_pezzo_fan(1);
    const Fan p2 = projective_space(2);

    std::vector<CorpusEntry> c;
    auto add = [&](std::string name, Fan f, bool valid, bool fano) {
        c.push_back({std::move(name), std::move(f), valid, fano});
    };
    add("P1", p1, true, true);
    add("P2", p2, true, true);
    add("P3", projective_space(3), true, true);
    add("P4", projective_space(4), true, true);
    add("P1^2", projective_line_power(2), true, true);
    add("P1^3", projective_line_power(3), true, true);
    add("P1^4", projective_line_power(4), true, true);
    add("F1", hirzebruch(1), true, true);
    add("F2", hirzebruch(2), true, false);
    add("F3", hirzebruch(3), true, false);
    add("V2", v2, true, true);
    add("V4", del_pezzo_fan(2), true, true);
    add("V~2", vt2, true, true);
    add("V~4", pseudo_del_pezzo_fan(2), true, true);
    add("V2xP1", product_fan(v2, p1), true, true);
    add("V~2xP1", product_fan(vt2, p1), true, true);
    add("V2xP1^2", product_fan(v2, projective_line_power(2)), true, true);
    add("V~2xP1^2", product_fan(vt2, projective_line_power(2)), true, true);
    add("V2xV2", product_fan(v2, v2), true, true);
    add("V2xV~2", product_fan(v2, vt2), true, true);
    add("V~2xV~2", product_fan(vt2, vt2), true, true);
    add("P2xP1", product_fan(p2, p1), true, true);
    add("P2xP2", product_fan(p2, p2), true, true);
    add("F1xP1", product_fan(hirzebruch(1), p1), true, true);
    add("F2xP1", product_fan(hirzebruch(2), p1), true, false);
    add("pencil3", pencil_fan(3), true, true);
    add("BlP3", face_fan({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}, {1, 1, 1}}), true, true);
    add("pencilV2", face_fan({{-1, -1, 0}, {1, 1, 0}, {1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0},
                              {0, 0, 1}, {1, 0, -1}}),
        true, true);

    add("V2-bundle/P2", face_fan({{-1, -1, 0, 0}, {1, 1, 0, 0}, {1, 0, 0, 0}, {-1, 0, 0, 0}, {0, 1, 0, 0},
                                  {0, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, -1, -1}}),
        true, true);
    add("V~2-bundle/P2", face_fan({{-1, -1, 0, 0}, {1, 0, 0, 0}, {-1, 0, 0, 0}, {0, 1, 0, 0}, {0, -1, 0, 0},
                                   {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, -1, -1}}),
        true, true);
    add("V~2-bundle/P2 twisted", face_fan({{-1, -1, 0, 0}, {1, 0, 0, 0}, {-1, 0, 0, 0}, {0, 1, 0, 0},
                                           {0, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 1, -1, -1}}),
        true, true);

    add("P2-missing-cone", make_fan(2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}}), false, false);
    add("singular-triangle", make_fan(2, {{1, 0}, {1, 2}, {-1, -1}}, {{0, 1}, {1, 2}, {0, 2}}), false, false);
    add("overlapping", make_fan(2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, 1}}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {2, 4}}),
        false, false);
    add("quadrant", make_fan(2, {{1, 0}, {0, 1}}, {{0, 1}}), false, false);
    add("half-line", make_fan(1, {{1}}, {{0}}), false, false);
    add("octant", make_fan(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {{0, 1, 2}}), false, false);
    return c;
}

std::vector<LatticeVector> random_unimodular(std::size_t n, Rng& rng, int moves)
{
    std::vector<LatticeVector> u;
    for (std::size_t i = 0; i < n; ++i) {
        LatticeVector e(n);
        e[i] = 1;
        u.push_back(e);
    }
    if (n < 2) {
        if (rng.uniform(0, 1)) {
            u[0] = -u[0];
        }
        return u;
    }
    for (int m = 0; m < moves; ++m) {
        const auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
        auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 2));
        if (j >= i) {
            ++j;
        }
        switch (rng.uniform(0, 2)) {
        case 0: u[i] += Integer(rng.uniform(-2, 2)) * u[j]; break;
        case 1: std::swap(u[i], u[j]); break;
        default: u[i] = -u[i]; break;
        }
    }
    return u;
}

LatticeVector apply(const std::vector<LatticeVector>& u, const LatticeVector& x)
{
    LatticeVector out(u.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        out += x[i] * u[i];
    }
    return out;
}

Fan transform(const Fan& f, const std::vector<LatticeVector>& u)
{
    std::vector<LatticeVector> g;
    for (const auto& x : f.generators()) {
        g.push_back(apply(u, x));
    }
    return Fan(f.dim(), std::move(g), f.max_cones());
}

std::vector<std::string> pair_relation_violations(const Fan& f)
{
    std::vector<std::string> out;
    std::map<IndexSet, symfano::PrimitiveRelation> rels;
    for (auto& r : symfano::primitive_relations(f)) {
        rels.emplace(r.collection, r);
    }
    for (const auto& p : symfano::symmetric_pairs(f).pairs) {
        const IndexSet pair{p.first, p.second};
        for (auto [x, mx] : {std::pair{p.first, p.second}, std::pair{p.second, p.first}}) {
            for (const auto& [coll, r] : rels) {
                if (coll == pair || !std::binary_search(coll.begin(), coll.end(), x)) {
                    continue;
                }
                const std::string where = "collection " + symfano::to_string(coll);
                const std::size_t h = coll.size() - 1;
                if (!std::all_of(r.target_coeffs.begin(), r.target_coeffs.end(), [](const Integer& a) { return a == 1; })) {
                    out.push_back(where + ": non-unit target coefficient");
                }
                if (r.degree != 1) {
                    out.push_back(where + ": degree " + r.degree.get_str());
                }
                if (r.target_support.size() != h || 2 * h > f.dim()) {
                    out.push_back(where + ": wrong shape");
                }
                IndexSet mirror = r.target_support;
                mirror.push_back(mx);
                std::sort(mirror.begin(), mirror.end());
                IndexSet rest;
                for (auto g : coll) {
                    if (g != x) {
                        rest.push_back(g);
                    }
                }
                auto it = rels.find(mirror);
                if (it == rels.end()) {
                    out.push_back(where + ": mirror " + symfano::to_string(mirror) + " is not primitive");
                } else if (it->second.target_support != rest
                           || !std::all_of(it->second.target_coeffs.begin(), it->second.target_coeffs.end(),
                                           [](const Integer& a) { return a == 1; })) {
                    out.push_back(where + ": mirror relation " + symfano::to_string(it->second));
                }
            }
        }
    }
    return out;
}

std::vector<std::string> cone_completion_violations(const Fan& f, std::size_t* checked)
{
    std::vector<std::string> out;
    std::size_t count = 0;
    for (const auto& r : symfano::primitive_relations(f)) {
        if (r.degree != 1) {
            continue;
        }
        IndexSet used = r.collection;
        used.insert(used.end(), r.target_support.begin(), r.target_support.end());
        std::sort(used.begin(), used.end());
        std::set<IndexSet> nus;
        for (const auto& sigma : f.max_cones()) {
            if (!std::includes(sigma.begin(), sigma.end(), r.target_support.begin(), r.target_support.end())) {
                continue;
            }
            IndexSet free;
            std::set_difference(sigma.begin(), sigma.end(), used.begin(), used.end(), std::back_inserter(free));
            for (std::size_t mask = 0; mask < (std::size_t{1} << free.size()); ++mask) {
                IndexSet nu;
                for (std::size_t i = 0; i < free.size(); ++i) {
                    if ((mask >> i) & 1U) {
                        nu.push_back(free[i]);
                    }
                }
                nus.insert(nu);
            }
        }
        for (const auto& nu : nus) {
            for (auto xi : r.collection) {
                IndexSet cone = nu;
                for (auto x : r.collection) {
                    if (x != xi) {
                        cone.push_back(x);
                    }
                }
                cone.insert(cone.end(), r.target_support.begin(), r.target_support.end());
                std::sort(cone.begin(), cone.end());
                ++count;
                if (!f.contains_cone(cone)) {
                    out.push_back(symfano::to_string(r) + ": missing cone " + symfano::to_string(cone));
                }
            }
        }
    }
    if (checked) {
        *checked += count;
    }
    return out;
}

} // namespace testsupport
