#include "monoideal/depth.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>

#include "monoideal/detail/exact_rank.hpp"
#include "monoideal/error.hpp"
#include "monoideal/primes.hpp"

namespace monoideal {

const char* to_string(Field f) noexcept {
    switch (f) {
        case Field::rationals: return "QQ";
        case Field::gf2: return "GF(2)";
    }
    return "?";
}

SimplicialComplex::SimplicialComplex(std::size_t vertex_count, std::vector<VarSet> facets)
    : vertex_count_(vertex_count) {
    if (vertex_count > VarSet::capacity) throw Error(Errc::domain, "too many vertices");
    for (const auto& f : facets) {
        for (auto v : f.indices())
            if (v >= vertex_count) throw Error(Errc::domain, "facet vertex out of range");
    }
    std::sort(facets.begin(), facets.end(), [](const VarSet& a, const VarSet& b) {
        return a.count() != b.count() ? a.count() > b.count() : a < b;
    });
    for (const auto& f : facets) {
        const bool covered = std::any_of(facets_.begin(), facets_.end(),
                                         [&](const VarSet& g) { return f.is_subset_of(g); });
        if (!covered) facets_.push_back(f);
    }
    std::sort(facets_.begin(), facets_.end());
}

SimplicialComplex SimplicialComplex::stanley_reisner(const MonomialIdeal& squarefree) {
    if (!squarefree.is_squarefree()) throw Error(Errc::domain, "Stanley-Reisner complex needs a squarefree ideal");
    const std::size_t n = squarefree.nvars();
    VarSet all;
    for (std::size_t i = 0; i < n; ++i) all.insert(i);
    if (squarefree.is_zero()) return SimplicialComplex(n, {all});
    std::vector<VarSet> facets;
    for (const auto& p : minimal_primes(squarefree)) facets.push_back(all - p.vars);
    return SimplicialComplex(n, std::move(facets));
}

std::vector<std::vector<VarSet>> SimplicialComplex::faces_by_size() const {
    std::vector<std::set<VarSet>> acc;
    for (const auto& f : facets_) {
        const auto verts = f.indices();
        if (acc.size() <= verts.size()) acc.resize(verts.size() + 1);
        // Facets here are small; walk all subsets.
        const std::uint64_t total = std::uint64_t{1} << verts.size();
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            VarSet face;
            for (std::size_t j = 0; j < verts.size(); ++j)
                if ((mask >> j) & 1U) face.insert(verts[j]);
            acc[face.count()].insert(face);
        }
    }
    std::vector<std::vector<VarSet>> out;
    for (auto& s : acc) out.emplace_back(s.begin(), s.end());
    return out;
}

bool HomologyRanks::acyclic() const {
    return std::all_of(ranks_.begin(), ranks_.end(), [](std::size_t r) { return r == 0; });
}

namespace {

/// rank of the boundary map from faces of size k to faces of size k-1.
std::size_t boundary_rank(const std::vector<VarSet>& lower, const std::vector<VarSet>& upper, Field field) {
    if (lower.empty() || upper.empty()) return 0;
    detail::DenseMatrix<std::int64_t> m(lower.size(), upper.size());
    for (std::size_t c = 0; c < upper.size(); ++c) {
        std::int64_t sign = 1;
        for (auto v : upper[c].indices()) {
            VarSet facet = upper[c];
            facet.erase(v);
            const auto it = std::lower_bound(lower.begin(), lower.end(), facet);
            m(static_cast<std::size_t>(it - lower.begin()), c) = sign;
            sign = -sign;
        }
    }
    return field == Field::gf2 ? detail::rank_over_gf2(m) : detail::rank_over_rationals(m);
}

}  // namespace

HomologyRanks homology_from_faces(const std::vector<std::vector<VarSet>>& faces, Field field, bool complete) {
    if (faces.empty() || faces[0].empty()) return HomologyRanks({});  // void complex
    std::vector<std::size_t> rank(faces.size() + 1, 0);  // rank[k]: boundary from size k
    for (std::size_t k = 1; k < faces.size(); ++k) rank[k] = boundary_rank(faces[k - 1], faces[k], field);
    const std::size_t known = complete ? faces.size() : faces.size() - 1;
    std::vector<std::size_t> out(known, 0);
    for (std::size_t k = 0; k < known; ++k) out[k] = faces[k].size() - rank[k] - rank[k + 1];
    return HomologyRanks(std::move(out));
}

HomologyRanks homology_ranks(const SimplicialComplex& complex, Field field) {
    return homology_from_faces(complex.faces_by_size(), field);
}

namespace {

/// Faces of the Stanley-Reisner complex restricted to sigma, with at most
/// `max_size` vertices.
class RestrictedFaces {
public:
    RestrictedFaces(const std::vector<VarSet>& supports, std::size_t nvars) : by_vertex_(nvars) {
        for (const auto& s : supports)
            for (auto v : s.indices()) by_vertex_[v].push_back(s);
    }

    std::vector<std::vector<VarSet>> collect(const VarSet& sigma, std::size_t max_size) {
        verts_ = sigma.indices();
        out_.assign(std::min(max_size, verts_.size()) + 1, {});
        extend(VarSet{}, 0);
        for (auto& layer : out_) std::sort(layer.begin(), layer.end());
        return std::move(out_);
    }

private:
    void extend(const VarSet& face, std::size_t from) {
        out_[face.count()].push_back(face);
        if (face.count() + 1 >= out_.size()) return;
        for (std::size_t j = from; j < verts_.size(); ++j) {
            VarSet next = face;
            next.insert(verts_[j]);
            const auto& gens = by_vertex_[verts_[j]];
            if (std::any_of(gens.begin(), gens.end(), [&](const VarSet& g) { return g.is_subset_of(next); })) continue;
            extend(next, j + 1);
        }
    }

    std::vector<std::vector<VarSet>> by_vertex_;
    std::vector<std::size_t> verts_;
    std::vector<std::vector<VarSet>> out_;
};

VarSet from_mask(std::uint64_t mask) {
    VarSet s;
    while (mask != 0) {
        s.insert(static_cast<std::size_t>(std::countr_zero(mask)));
        mask &= mask - 1;
    }
    return s;
}

}  // namespace

ProjectiveDimension projective_dimension_detail(const MonomialIdeal& ideal, Field field, const Budget& budget,
                                                SubsetScan scan) {
    if (ideal.is_zero()) return {0, VarSet{}, ideal.ring()};
    const MonomialIdeal sq = ideal.is_squarefree() ? ideal : polarize(ideal).ideal;
    const std::size_t n = sq.nvars();
    if (n > budget.polarized_vars || n > 62)
        throw Error(Errc::budget_exceeded, "polarized ring has " + std::to_string(n) + " variables, cap is " +
                                               std::to_string(std::min<std::size_t>(budget.polarized_vars, 62)));

    std::vector<VarSet> supports;
    for (const auto& g : sq.gens()) supports.push_back(support_set(g));
    RestrictedFaces faces(supports, n);

    // beta_{0,{}} = 1, so pd >= 0 with the empty multidegree. A multidegree of
    // size s only yields i <= s, so sizes are scanned downward and the scan
    // stops once s cannot beat the best value found.
    ProjectiveDimension best{0, VarSet{}, sq.ring()};
    for (std::size_t s = n; s > best.value; --s) {
        std::uint64_t mask = (std::uint64_t{1} << s) - 1;
        const std::uint64_t limit = std::uint64_t{1} << n;
        for (; mask < limit; ) {
            const VarSet sigma = from_mask(mask);
            bool eligible = true;
            if (scan == SubsetScan::lcm_lattice) {
                VarSet covered;
                for (const auto& g : supports)
                    if (g.is_subset_of(sigma)) covered |= g;
                eligible = covered == sigma;
            }
            if (eligible && s > best.value) {
                // i = s - d - 1 > best needs d <= s - best - 2, so faces up to
                // size s - best suffice.
                const std::size_t max_size = s - best.value;
                const auto layers = faces.collect(sigma, max_size);
                const bool complete = layers.back().empty() || max_size >= s;
                const auto h = homology_from_faces(layers, field, complete);
                for (int d = -1; d <= h.top_dimension(); ++d) {
                    if (h[d] == 0) continue;
                    const std::size_t i = s - static_cast<std::size_t>(d + 1);
                    if (i > best.value) best = {i, sigma, sq.ring()};
                    break;  // lowest d gives the largest i
                }
            }
            // Gosper's hack: next mask with the same popcount.
            const std::uint64_t low = mask & (~mask + 1);
            const std::uint64_t ripple = mask + low;
            if (ripple == 0) break;
            mask = ripple | (((ripple ^ mask) >> 2) / low);
        }
    }
    return best;
}

std::size_t projective_dimension(const MonomialIdeal& ideal, Field field, const Budget& budget, SubsetScan scan) {
    return projective_dimension_detail(ideal, field, budget, scan).value;
}

DepthResult depth_oracle(const MonomialIdeal& ideal, Field field, const Budget& budget) {
    const auto pd = projective_dimension_detail(ideal, field, budget);
    DepthResult r{ideal.nvars() - pd.value, DepthMethod::oracle, field, std::nullopt};
    DepthWitness w{pd.value, {}};
    for (auto v : pd.multidegree.indices()) w.multidegree.push_back(pd.ring.name(v));
    r.witness = std::move(w);
    return r;
}

namespace {
std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }
}  // namespace

std::size_t depth_cycle_formula(std::size_t n) {
    if (n < 3) throw Error(Errc::domain, "cycle needs n >= 3");
    return ceil_div(n - 1, 3);
}

std::size_t depth_path_formula(std::size_t p) {
    if (p < 1) throw Error(Errc::domain, "path needs p >= 1");
    return ceil_div(p, 3);
}

std::size_t depth_unicyclic_formula(std::size_t n, std::size_t m) {
    if (n < 3) throw Error(Errc::domain, "cycle needs n >= 3");
    switch (m % 3) {
        case 0: return ceil_div(n - 1, 3) + m / 3;
        case 1: return ceil_div(n, 3) + (m - 1) / 3;
        default: return ceil_div(n - 1, 3) + (m + 1) / 3;
    }
}

namespace {

Monomial edge(std::size_t nvars, std::size_t i, std::size_t j) {
    Monomial m = Monomial::variable(nvars, i);
    m.set(j, 1);
    return m;
}

std::vector<std::string> graph_names(std::size_t n, std::size_t m) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    for (std::size_t j = 1; j <= m; ++j) names.push_back("y" + std::to_string(j));
    return names;
}

}  // namespace

MonomialIdeal cycle_ideal(std::size_t n) { return unicyclic_ideal(n, 0); }

MonomialIdeal path_ideal(std::size_t p) {
    if (p < 1) throw Error(Errc::domain, "path needs p >= 1");
    std::vector<Monomial> gens;
    for (std::size_t j = 0; j + 1 < p; ++j) gens.push_back(edge(p, j, j + 1));
    return MonomialIdeal(RingSpec::indexed("y", p), std::move(gens));
}

MonomialIdeal unicyclic_ideal(std::size_t n, std::size_t m) {
    if (n < 3) throw Error(Errc::domain, "cycle needs n >= 3");
    const std::size_t total = n + m;
    std::vector<Monomial> gens;
    for (std::size_t i = 0; i < n; ++i) gens.push_back(edge(total, i, (i + 1) % n));
    if (m >= 1) gens.push_back(edge(total, 1, n));
    for (std::size_t j = 0; j + 1 < m; ++j) gens.push_back(edge(total, n + j, n + j + 1));
    return MonomialIdeal(RingSpec(graph_names(n, m)), std::move(gens));
}

MonomialIdeal build_graph_ideal(GraphKind kind, std::size_t size, std::size_t tail) {
    switch (kind) {
        case GraphKind::cycle: return cycle_ideal(size);
        case GraphKind::path: return path_ideal(size);
        case GraphKind::unicyclic: return unicyclic_ideal(size, tail);
    }
    throw Error(Errc::domain, "unknown graph kind");
}

}  // namespace monoideal
