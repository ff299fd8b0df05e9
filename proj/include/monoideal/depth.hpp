#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "monoideal/budget.hpp"
#include "monoideal/ideal.hpp"
#include "monoideal/varset.hpp"

namespace monoideal {

enum class Field { rationals, gf2 };
const char* to_string(Field f) noexcept;

/// Finite simplicial complex given by its facets; faces are all subsets of
/// facets. No facets at all is the void complex; a single empty facet is
/// the complex {{}}.
class SimplicialComplex {
public:
    /// Keeps only the inclusion-maximal facets.
    SimplicialComplex(std::size_t vertex_count, std::vector<VarSet> facets);

    /// Stanley-Reisner complex of a squarefree ideal: its faces are the
    /// vertex sets containing no generator support, its facets the
    /// complements of the minimal primes.
    static SimplicialComplex stanley_reisner(const MonomialIdeal& squarefree);

    std::size_t vertex_count() const noexcept { return vertex_count_; }
    const std::vector<VarSet>& facets() const noexcept { return facets_; }
    bool is_void() const noexcept { return facets_.empty(); }

    /// faces[k] holds the faces with k vertices, sorted.
    std::vector<std::vector<VarSet>> faces_by_size() const;

private:
    std::size_t vertex_count_;
    std::vector<VarSet> facets_;
};

/// Reduced homology ranks; dimension -1 included.
class HomologyRanks {
public:
    explicit HomologyRanks(std::vector<std::size_t> by_size) : ranks_(std::move(by_size)) {}

    /// rank of H~_dim, zero outside the stored range.
    std::size_t operator[](int dim) const {
        const auto k = static_cast<std::size_t>(dim + 1);
        return dim >= -1 && k < ranks_.size() ? ranks_[k] : 0;
    }
    /// Highest dimension stored (faces exist up to it).
    int top_dimension() const noexcept { return static_cast<int>(ranks_.size()) - 2; }
    bool acyclic() const;

private:
    std::vector<std::size_t> ranks_;
};

/// Reduced simplicial homology from exact ranks of the boundary maps.
HomologyRanks homology_ranks(const SimplicialComplex& complex, Field field = Field::rationals);

/// Same, from faces grouped by size (faces[k] sorted, faces[0] = {{}}).
/// With `complete` false the list is truncated and the top size present only
/// feeds the boundary map into the dimension below it.
HomologyRanks homology_from_faces(const std::vector<std::vector<VarSet>>& faces, Field field, bool complete = true);

enum class SubsetScan {
    lcm_lattice,  ///< only multidegrees that are unions of generator supports
    all,          ///< every vertex subset
};

struct ProjectiveDimension {
    std::size_t value;
    VarSet multidegree;       ///< an extremal sigma, over `ring`
    RingSpec ring;            ///< the squarefree ring the scan ran over
};

/// pd(R/I) via Hochster's formula on the Stanley-Reisner complex of the
/// polarization: beta_{i,sigma} = dim H~_{|sigma|-i-1}(Delta restricted to
/// sigma). Errc::budget_exceeded if the polarized ring is larger than
/// budget.polarized_vars.
ProjectiveDimension projective_dimension_detail(const MonomialIdeal& ideal, Field field = Field::rationals,
                                                const Budget& budget = {}, SubsetScan scan = SubsetScan::lcm_lattice);
std::size_t projective_dimension(const MonomialIdeal& ideal, Field field = Field::rationals,
                                 const Budget& budget = {}, SubsetScan scan = SubsetScan::lcm_lattice);

enum class DepthMethod { formula, oracle };

struct DepthWitness {
    std::size_t projective_dimension;
    std::vector<std::string> multidegree;
};

struct DepthResult {
    std::size_t value;
    DepthMethod method;
    Field field = Field::rationals;
    std::optional<DepthWitness> witness;
};

/// depth(R/I) = n - pd(R/I). The zero ideal has depth n.
DepthResult depth_oracle(const MonomialIdeal& ideal, Field field = Field::rationals, const Budget& budget = {});

/// ceil((n-1)/3), n >= 3.
std::size_t depth_cycle_formula(std::size_t n);
/// ceil(p/3), p >= 1.
std::size_t depth_path_formula(std::size_t p);
/// Cycle C_n with a path of m vertices hung off x2:
///   m = 0 mod 3: ceil((n-1)/3) + m/3
///   m = 1 mod 3: ceil(n/3) + (m-1)/3
///   m = 2 mod 3: ceil((n-1)/3) + (m+1)/3
std::size_t depth_unicyclic_formula(std::size_t n, std::size_t m);

/// I(C_n) in k[x1..xn], n >= 3.
MonomialIdeal cycle_ideal(std::size_t n);
/// I(P_p) in k[y1..yp], p >= 1; the zero ideal for p = 1.
MonomialIdeal path_ideal(std::size_t p);
/// I(G_{n,m}) = (I(C_n), x2 y1, I(P_m)) in k[x1..xn, y1..ym].
MonomialIdeal unicyclic_ideal(std::size_t n, std::size_t m);

enum class GraphKind { cycle, path, unicyclic };
/// `size` is n (cycle, unicyclic) or p (path); `tail` is m for unicyclic.
MonomialIdeal build_graph_ideal(GraphKind kind, std::size_t size, std::size_t tail = 0);

}  // namespace monoideal
