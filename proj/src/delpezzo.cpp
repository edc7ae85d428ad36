#include "symfano/delpezzo.hpp"

#include "symfano/errors.hpp"
#include "symfano/fano.hpp"
#include "symfano/symmetry.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace symfano {

std::string to_string(const FactorDescriptor& f)
{
    switch (f.kind) {
    case FactorKind::DelPezzo: return "V^" + std::to_string(f.dim);
    case FactorKind::PseudoDelPezzo: return "V~^" + std::to_string(f.dim);
    case FactorKind::ProjLine: return "P^1";
    case FactorKind::Other: return "other(" + std::to_string(f.dim) + ")";
    }
    return "?";
}

namespace {

// Calls visit(subset) for every k-subset of `items`, in lexicographic order.
void for_each_subset(const std::vector<std::size_t>& items, std::size_t k,
                     const std::function<void(const std::vector<std::size_t>&)>& visit)
{
    std::vector<std::size_t> chosen;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (chosen.size() == k) {
            visit(chosen);
            return;
        }
        for (std::size_t i = start; i + (k - chosen.size()) <= items.size(); ++i) {
            chosen.push_back(items[i]);
            rec(i + 1);
            chosen.pop_back();
        }
    };
    rec(0);
}

std::vector<std::size_t> without(const std::vector<std::size_t>& all, const std::vector<std::size_t>& drop)
{
    std::vector<std::size_t> out;
    for (auto v : all) {
        if (std::find(drop.begin(), drop.end(), v) == drop.end()) {
            out.push_back(v);
        }
    }
    return out;
}

std::vector<std::size_t> range(std::size_t from, std::size_t to)
{
    std::vector<std::size_t> out;
    for (std::size_t i = from; i <= to; ++i) {
        out.push_back(i);
    }
    return out;
}

// Pseudo del Pezzo local numbering.
std::size_t px(std::size_t i) { return i == 0 ? 0 : 2 * i - 1; }
std::size_t py(std::size_t i) { return 2 * i; }

void require_rank(std::size_t r)
{
    if (r == 0) {
        fail(Errc::BadDimension, "del Pezzo fans need even dimension >= 2");
    }
}

std::vector<LatticeVector> x_vectors(std::size_t n)
{
    std::vector<LatticeVector> x(n + 1, LatticeVector(n));
    for (std::size_t i = 1; i <= n; ++i) {
        x[i][i - 1] = 1;
        x[0][i - 1] = -1;
    }
    return x;
}

void add_pseudo_x0_family(std::size_t r, std::vector<IndexSet>& out)
{
    const auto idx = range(1, 2 * r);
    for_each_subset(idx, r - 1, [&](const auto& i_set) {
        for_each_subset(without(idx, i_set), r, [&](const auto& j_set) {
            IndexSet c{px(0)};
            for (auto i : i_set) {
                c.push_back(px(i));
            }
            for (auto j : j_set) {
                c.push_back(py(j));
            }
            std::sort(c.begin(), c.end());
            out.push_back(std::move(c));
        });
    });
}

void add_pseudo_partitions(std::size_t r, std::size_t s_max, std::vector<IndexSet>& out)
{
    const auto idx = range(1, 2 * r);
    for (std::size_t s = 0; s <= s_max; ++s) {
        for_each_subset(idx, r + s, [&](const auto& i_set) {
            IndexSet c;
            for (auto i : i_set) {
                c.push_back(px(i));
            }
            for (auto j : without(idx, i_set)) {
                c.push_back(py(j));
            }
            std::sort(c.begin(), c.end());
            out.push_back(std::move(c));
        });
    }
}

} // namespace

std::vector<IndexSet> del_pezzo_cones(std::size_t r)
{
    require_rank(r);
    const auto idx = range(0, 2 * r);
    std::vector<IndexSet> out;
    for_each_subset(idx, r, [&](const auto& i_set) {
        for_each_subset(without(idx, i_set), r, [&](const auto& j_set) {
            IndexSet c;
            for (auto i : i_set) {
                c.push_back(2 * i);
            }
            for (auto j : j_set) {
                c.push_back(2 * j + 1);
            }
            std::sort(c.begin(), c.end());
            out.push_back(std::move(c));
        });
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<IndexSet> pseudo_del_pezzo_cones(std::size_t r)
{
    require_rank(r);
    std::vector<IndexSet> out;
    add_pseudo_x0_family(r, out);
    add_pseudo_partitions(r, r, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<IndexSet> pseudo_del_pezzo_forced_cones(std::size_t r)
{
    require_rank(r);
    std::vector<IndexSet> out;
    add_pseudo_x0_family(r, out);
    add_pseudo_partitions(r, 0, out);
    std::sort(out.begin(), out.end());
    return out;
}

Fan del_pezzo_fan(std::size_t r)
{
    require_rank(r);
    const std::size_t n = 2 * r;
    const auto x = x_vectors(n);
    std::vector<LatticeVector> gens;
    for (std::size_t i = 0; i <= n; ++i) {
        gens.push_back(x[i]);
        gens.push_back(-x[i]);
    }
    return Fan(n, std::move(gens), del_pezzo_cones(r));
}

Fan pseudo_del_pezzo_fan(std::size_t r)
{
    require_rank(r);
    const std::size_t n = 2 * r;
    const auto x = x_vectors(n);
    std::vector<LatticeVector> gens{x[0]};
    for (std::size_t i = 1; i <= n; ++i) {
        gens.push_back(x[i]);
        gens.push_back(-x[i]);
    }
    return Fan(n, std::move(gens), pseudo_del_pezzo_cones(r));
}

Fan projective_line_power(std::size_t k)
{
    if (k == 0) {
        fail(Errc::BadDimension, "(P^1)^0 is a point");
    }
    std::vector<LatticeVector> gens;
    for (std::size_t i = 0; i < k; ++i) {
        LatticeVector e(k);
        e[i] = 1;
        gens.push_back(e);
        gens.push_back(-e);
    }
    std::vector<IndexSet> cones;
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        IndexSet c;
        for (std::size_t i = 0; i < k; ++i) {
            c.push_back(2 * i + ((mask >> i) & 1U));
        }
        cones.push_back(std::move(c));
    }
    return Fan(k, std::move(gens), std::move(cones));
}

Fan product_fan(const Fan& a, const Fan& b)
{
    const std::size_t n = a.dim() + b.dim();
    std::vector<LatticeVector> gens;
    for (const auto& g : a.generators()) {
        LatticeVector v(n);
        for (std::size_t i = 0; i < a.dim(); ++i) {
            v[i] = g[i];
        }
        gens.push_back(std::move(v));
    }
    for (const auto& g : b.generators()) {
        LatticeVector v(n);
        for (std::size_t i = 0; i < b.dim(); ++i) {
            v[a.dim() + i] = g[i];
        }
        gens.push_back(std::move(v));
    }
    const std::size_t offset = a.num_generators();
    std::vector<IndexSet> cones;
    for (const auto& ca : a.max_cones()) {
        for (const auto& cb : b.max_cones()) {
            IndexSet c = ca;
            for (auto j : cb) {
                c.push_back(offset + j);
            }
            cones.push_back(std::move(c));
        }
    }
    return Fan(n, std::move(gens), std::move(cones));
}

Fan fan_of_factors(const std::vector<FactorDescriptor>& factors)
{
    if (factors.empty()) {
        fail(Errc::BadDimension, "empty factor list");
    }
    auto single = [](const FactorDescriptor& d) {
        switch (d.kind) {
        case FactorKind::DelPezzo:
        case FactorKind::PseudoDelPezzo:
            if (d.dim == 0 || d.dim % 2 != 0) {
                fail(Errc::BadDimension, "del Pezzo factors need even dimension, got "
                                             + std::to_string(d.dim));
            }
            return d.kind == FactorKind::DelPezzo ? del_pezzo_fan(d.dim / 2)
                                                  : pseudo_del_pezzo_fan(d.dim / 2);
        case FactorKind::ProjLine:
            return projective_line_power(1);
        case FactorKind::Other:
            break;
        }
        fail(Errc::BadDimension, "cannot build an unspecified factor");
    };
    Fan out = single(factors.front());
    for (std::size_t i = 1; i < factors.size(); ++i) {
        out = product_fan(out, single(factors[i]));
    }
    return out;
}

std::optional<std::vector<FactorDescriptor>> recognize(const Fan& f)
{
    if (!is_fano(f)) {
        fail(Errc::NotFano, "recognize requires a Fano fan");
    }
    if (symmetric_pairs(f).empty()) {
        return std::nullopt;
    }
    const Decomposition d = decompose(f);
    if (d.h_basis.rank() != f.dim()) {
        return std::nullopt;
    }
    // The product structure predicts every maximal cone.
    std::vector<std::vector<IndexSet>> blocks;
    std::vector<FactorDescriptor> factors;
    auto map_cones = [](const std::vector<IndexSet>& local, const std::vector<std::size_t>& to_global) {
        std::vector<IndexSet> out;
        for (const auto& c : local) {
            IndexSet g;
            for (auto i : c) {
                g.push_back(to_global[i]);
            }
            out.push_back(std::move(g));
        }
        return out;
    };
    for (const auto& c : d.del_pezzo) {
        blocks.push_back(map_cones(del_pezzo_cones(c.dim / 2), c.local_to_global()));
        factors.push_back({FactorKind::DelPezzo, c.dim});
    }
    for (const auto& c : d.pseudo) {
        blocks.push_back(map_cones(pseudo_del_pezzo_cones(c.dim / 2), c.local_to_global()));
        factors.push_back({FactorKind::PseudoDelPezzo, c.dim});
    }
    for (std::size_t p : d.free_pairs) {
        blocks.push_back({{d.pairs.pairs[p].first}, {d.pairs.pairs[p].second}});
        factors.push_back({FactorKind::ProjLine, 1});
    }
    std::set<IndexSet> expected{IndexSet{}};
    for (const auto& block : blocks) {
        std::set<IndexSet> next;
        for (const auto& partial : expected) {
            for (const auto& c : block) {
                IndexSet u = partial;
                u.insert(u.end(), c.begin(), c.end());
                std::sort(u.begin(), u.end());
                next.insert(std::move(u));
            }
        }
        expected = std::move(next);
    }
    const std::set<IndexSet> actual(f.max_cones().begin(), f.max_cones().end());
    if (expected != actual) {
        return std::nullopt;
    }
    std::sort(factors.begin(), factors.end());
    return factors;
}

} // namespace symfano
