#include "symfano/symmetry.hpp"

#include "symfano/errors.hpp"
#include "symfano/fano.hpp"

#include <algorithm>
#include <map>

namespace symfano {

std::vector<std::size_t> SymmetricPairSet::representatives() const
{
    std::vector<std::size_t> out;
    out.reserve(pairs.size());
    for (const auto& p : pairs) {
        out.push_back(p.first);
    }
    return out;
}

SymmetricPairSet symmetric_pairs(const Fan& f)
{
    SymmetricPairSet out;
    for (std::size_t i = 0; i < f.num_generators(); ++i) {
        auto j = f.find_generator(-f.generator(i));
        if (j && *j > i) {
            out.pairs.push_back({i, *j});
        }
    }
    return out;
}

SublatticeBasis symmetric_span(const Fan& f)
{
    auto pairs = symmetric_pairs(f);
    if (pairs.empty()) {
        fail(Errc::NoPairs, "no centrally symmetric generators");
    }
    return saturate(f.cone_generators(pairs.representatives()));
}

std::vector<std::size_t> DelPezzoComponent::local_to_global() const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < x.size(); ++i) {
        out.push_back(x[i]);
        out.push_back(y[i]);
    }
    return out;
}

IndexSet DelPezzoComponent::generators() const
{
    IndexSet out = local_to_global();
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> PseudoDelPezzoComponent::local_to_global() const
{
    std::vector<std::size_t> out{apex};
    for (std::size_t i = 0; i < x.size(); ++i) {
        out.push_back(x[i]);
        out.push_back(y[i]);
    }
    return out;
}

IndexSet PseudoDelPezzoComponent::generators() const
{
    IndexSet out = local_to_global();
    std::sort(out.begin(), out.end());
    return out;
}

IndexSet Decomposition::component_generators() const
{
    IndexSet out;
    for (const auto& c : del_pezzo) {
        auto g = c.generators();
        out.insert(out.end(), g.begin(), g.end());
    }
    for (const auto& c : pseudo) {
        auto g = c.generators();
        out.insert(out.end(), g.begin(), g.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

IndexSet Decomposition::free_generators() const
{
    IndexSet out;
    for (std::size_t p : free_pairs) {
        out.push_back(pairs.pairs[p].first);
        out.push_back(pairs.pairs[p].second);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// A generator of H outside the chosen basis pairs, written over the basis
// representatives.
struct Seed {
    bool is_pair;           // dependent pair (del Pezzo) or unpaired apex (pseudo)
    std::size_t generator;  // representative of the pair, or the apex
    std::size_t pair_index; // valid when is_pair
    std::map<std::size_t, int> support; // basis slot -> epsilon
};

std::size_t count_generators_in_span(const Fan& f, const std::vector<LatticeVector>& span)
{
    std::size_t count = 0;
    for (const auto& g : f.generators()) {
        if (in_rational_span(span, g)) {
            ++count;
        }
    }
    return count;
}

} // namespace

Decomposition decompose(const Fan& f)
{
    if (!is_fano(f)) {
        fail(Errc::NotFano, "decomposition requires a Fano fan");
    }
    Decomposition d;
    d.pairs = symmetric_pairs(f);
    if (d.pairs.empty()) {
        fail(Errc::NoPairs, "no centrally symmetric generators");
    }
    d.h_basis = saturate(f.cone_generators(d.pairs.representatives()));

    // Basis pairs: greedily in index order.
    std::vector<std::size_t> basis_pairs;
    std::vector<LatticeVector> basis_vectors;
    std::vector<std::size_t> dependent_pairs;
    for (std::size_t p = 0; p < d.pairs.size(); ++p) {
        const auto& rep = f.generator(d.pairs.pairs[p].first);
        if (!basis_vectors.empty() && in_rational_span(basis_vectors, rep)) {
            dependent_pairs.push_back(p);
        } else {
            basis_pairs.push_back(p);
            basis_vectors.push_back(rep);
        }
    }

    std::vector<bool> paired(f.num_generators(), false);
    for (const auto& p : d.pairs.pairs) {
        paired[p.first] = paired[p.second] = true;
    }

    std::vector<Seed> seeds;
    auto make_seed = [&](bool is_pair, std::size_t gen, std::size_t pair_index) {
        auto coeffs = coefficients_in(basis_vectors, f.generator(gen));
        Seed s{is_pair, gen, pair_index, {}};
        for (std::size_t slot = 0; slot < coeffs.size(); ++slot) {
            const auto& c = coeffs[slot];
            if (c == 0) {
                continue;
            }
            if (c != 1 && c != -1) {
                fail(Errc::StructureViolation, "generator " + std::to_string(gen)
                                                   + " has a coefficient outside {-1,0,1} over the "
                                                     "symmetric pairs");
            }
            s.support[slot] = c > 0 ? 1 : -1;
        }
        if (s.support.size() < 2) {
            fail(Errc::StructureViolation, "generator " + std::to_string(gen)
                                               + " is a multiple of a single symmetric pair");
        }
        seeds.push_back(std::move(s));
    };
    for (std::size_t p : dependent_pairs) {
        make_seed(true, d.pairs.pairs[p].first, p);
    }
    for (std::size_t g = 0; g < f.num_generators(); ++g) {
        if (!paired[g] && in_rational_span(basis_vectors, f.generator(g))) {
            make_seed(false, g, 0);
        }
    }

    std::vector<int> owner(basis_pairs.size(), -1);
    for (std::size_t s = 0; s < seeds.size(); ++s) {
        for (const auto& [slot, eps] : seeds[s].support) {
            if (owner[slot] >= 0) {
                fail(Errc::StructureViolation,
                     "generators " + std::to_string(seeds[static_cast<std::size_t>(owner[slot])].generator)
                         + " and " + std::to_string(seeds[s].generator)
                         + " share symmetric pair " + std::to_string(basis_pairs[slot]));
            }
            owner[slot] = static_cast<int>(s);
        }
    }

    for (const auto& s : seeds) {
        const std::size_t h = s.support.size();
        if (h % 2 != 0) {
            fail(Errc::StructureViolation, "block through generator " + std::to_string(s.generator)
                                               + " has odd dimension " + std::to_string(h));
        }
        std::vector<std::size_t> pairs, xs, ys;
        std::vector<LatticeVector> span;
        for (const auto& [slot, eps] : s.support) {
            const auto& pr = d.pairs.pairs[basis_pairs[slot]];
            pairs.push_back(basis_pairs[slot]);
            // x_k = -eps_k * rep_k, so that seed = -(sum of x_k).
            const std::size_t xk = eps > 0 ? pr.second : pr.first;
            const std::size_t yk = eps > 0 ? pr.first : pr.second;
            xs.push_back(xk);
            ys.push_back(yk);
            span.push_back(f.generator(xk));
        }
        const std::size_t count = count_generators_in_span(f, span);
        if (s.is_pair) {
            DelPezzoComponent c;
            c.dim = h;
            c.pairs = std::move(pairs);
            c.extra_pair = s.pair_index;
            c.x.push_back(s.generator);
            c.y.push_back(d.pairs.pairs[s.pair_index].second);
            c.x.insert(c.x.end(), xs.begin(), xs.end());
            c.y.insert(c.y.end(), ys.begin(), ys.end());
            if (count != 2 * (h + 1)) {
                fail(Errc::StructureViolation, "del Pezzo block of dimension " + std::to_string(h)
                                                   + " contains " + std::to_string(count)
                                                   + " generators");
            }
            d.del_pezzo.push_back(std::move(c));
        } else {
            PseudoDelPezzoComponent c;
            c.dim = h;
            c.pairs = std::move(pairs);
            c.apex = s.generator;
            c.x = std::move(xs);
            c.y = std::move(ys);
            if (count != 2 * h + 1) {
                fail(Errc::StructureViolation, "pseudo del Pezzo block of dimension "
                                                   + std::to_string(h) + " contains "
                                                   + std::to_string(count) + " generators");
            }
            d.pseudo.push_back(std::move(c));
        }
    }

    std::vector<LatticeVector> free_span;
    for (std::size_t slot = 0; slot < basis_pairs.size(); ++slot) {
        if (owner[slot] < 0) {
            d.free_pairs.push_back(basis_pairs[slot]);
            free_span.push_back(f.generator(d.pairs.pairs[basis_pairs[slot]].first));
        }
    }
    if (!free_span.empty() && count_generators_in_span(f, free_span) != 2 * free_span.size()) {
        fail(Errc::StructureViolation, "free block contains generators beyond its pairs");
    }
    return d;
}

} // namespace symfano
