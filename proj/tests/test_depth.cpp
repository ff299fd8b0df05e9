#include <algorithm>
#include <climits>
#include <set>

#include "doctest.h"
#include "monoideal/depth.hpp"
#include "monoideal/detail/exact_rank.hpp"
#include "monoideal/error.hpp"
#include "monoideal/io.hpp"
#include "monoideal/primes.hpp"
#include "monoideal/random.hpp"

using namespace monoideal;

namespace {

MonomialIdeal parse(const std::string& vars, const std::string& gens) {
    return parse_ideal_text("vars " + vars + "\ngens " + gens + "\n");
}

SimplicialComplex complex_of(std::size_t n, std::initializer_list<std::initializer_list<std::size_t>> facets) {
    std::vector<VarSet> fs;
    for (auto f : facets) fs.push_back(VarSet::of(f));
    return SimplicialComplex(n, fs);
}

// Local cohomology route: H^i_m(k[D]) != 0 iff H~_{i-|F|-1}(lk F) != 0 for
// some face F, so depth is the least such i. Links, not restrictions.
std::size_t depth_by_links(const MonomialIdeal& squarefree, Field field) {
    const auto delta = SimplicialComplex::stanley_reisner(squarefree);
    const auto n = squarefree.nvars();
    std::size_t best = SIZE_MAX;
    for (const auto& layer : delta.faces_by_size()) {
        for (const auto& f : layer) {
            std::vector<VarSet> link;
            for (const auto& facet : delta.facets())
                if (f.is_subset_of(facet)) link.push_back(facet - f);
            const auto h = homology_ranks(SimplicialComplex(n, link), field);
            for (int j = -1; j <= h.top_dimension(); ++j) {
                if (h[j] == 0) continue;
                best = std::min(best, static_cast<std::size_t>(static_cast<int>(f.count()) + 1 + j));
                break;
            }
        }
    }
    return best;
}

std::size_t depth_independent(const MonomialIdeal& ideal, Field field = Field::rationals) {
    if (ideal.gens().empty()) return ideal.nvars();
    const auto pol = polarize(ideal);
    return depth_by_links(pol.ideal, field) - (pol.ideal.nvars() - ideal.nvars());
}

}  // namespace

TEST_CASE("homology of small complexes") {
    const auto hollow = complex_of(3, {{0, 1}, {1, 2}, {0, 2}});
    const auto h = homology_ranks(hollow);
    CHECK(h[-1] == 0);
    CHECK(h[0] == 0);
    CHECK(h[1] == 1);

    CHECK(homology_ranks(complex_of(3, {{0, 1, 2}})).acyclic());

    const auto points = homology_ranks(complex_of(2, {{0}, {1}}));
    CHECK(points[0] == 1);

    const auto empty_face = homology_ranks(SimplicialComplex(3, {VarSet{}}));
    CHECK(empty_face[-1] == 1);
    CHECK(homology_ranks(SimplicialComplex(3, {})).acyclic());

    // facets inside other facets are dropped
    CHECK(complex_of(3, {{0, 1, 2}, {0, 1}}).facets().size() == 1);
}

TEST_CASE("torsion separates the fields") {
    // six-vertex real projective plane
    const auto rp2 = complex_of(6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
                                    {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}});
    const auto qq = homology_ranks(rp2, Field::rationals);
    const auto f2 = homology_ranks(rp2, Field::gf2);
    CHECK(qq.acyclic());
    CHECK(f2[1] == 1);
    CHECK(f2[2] == 1);
    CHECK(std::string(to_string(Field::rationals)) == "QQ");
    CHECK(std::string(to_string(Field::gf2)) == "GF(2)");
}

TEST_CASE("reduced Euler characteristic matches face counts") {
    Rng rng(11);
    for (int k = 0; k < 60; ++k) {
        const auto I = random_squarefree_ideal(rng, 7, 6);
        const auto delta = SimplicialComplex::stanley_reisner(I);
        const auto faces = delta.faces_by_size();
        long chi_faces = 0;
        for (std::size_t s = 0; s < faces.size(); ++s)
            chi_faces += (s % 2 == 1 ? 1 : -1) * static_cast<long>(faces[s].size());
        for (auto field : {Field::rationals, Field::gf2}) {
            const auto h = homology_ranks(delta, field);
            long chi_h = 0;
            for (int d = -1; d <= h.top_dimension(); ++d) chi_h += (d % 2 == 0 ? 1 : -1) * static_cast<long>(h[d]);
            CHECK(chi_h == chi_faces);
        }
    }
}

TEST_CASE("Stanley-Reisner complexes") {
    const auto c = SimplicialComplex::stanley_reisner(cycle_ideal(4));
    const std::set<VarSet> facets(c.facets().begin(), c.facets().end());
    CHECK(facets == std::set<VarSet>{VarSet::of({1, 3}), VarSet::of({0, 2})});
    const auto full = SimplicialComplex::stanley_reisner(MonomialIdeal::zero(RingSpec::indexed("x", 3)));
    CHECK(full.facets() == std::vector<VarSet>{VarSet::of({0, 1, 2})});
}

TEST_CASE("projective dimension examples") {
    CHECK(projective_dimension(parse("x1 x2", "x1*x2")) == 1);
    CHECK(projective_dimension(cycle_ideal(5)) == 3);
    CHECK(projective_dimension(parse("x1 x2", "x1^2 x1*x2")) == 2);
    CHECK(projective_dimension(parse("x y z", "x y z")) == 3);
    const auto d = projective_dimension_detail(cycle_ideal(5));
    CHECK(d.value == 3);
    CHECK(d.multidegree.count() >= d.value);
}

TEST_CASE("depth oracle examples") {
    CHECK(depth_oracle(MonomialIdeal::zero(RingSpec::indexed("x", 4))).value == 4);
    CHECK(depth_oracle(cycle_ideal(5)).value == 2);
    CHECK(depth_oracle(parse("x1 x2", "x1^2 x1*x2")).value == 0);
    const auto r = depth_oracle(path_ideal(4));
    CHECK(r.value == 2);
    CHECK(r.method == DepthMethod::oracle);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->projective_dimension == 2);
}

TEST_CASE("formulas") {
    CHECK(depth_cycle_formula(3) == 1);
    CHECK(depth_cycle_formula(5) == 2);
    CHECK(depth_cycle_formula(8) == 3);
    CHECK(depth_path_formula(1) == 1);
    CHECK(depth_path_formula(4) == 2);
    CHECK(depth_unicyclic_formula(5, 2) == 3);
    CHECK(depth_unicyclic_formula(3, 0) == 1);
    CHECK(depth_unicyclic_formula(4, 1) == 2);
    CHECK(depth_unicyclic_formula(6, 3) == 3);
}

TEST_CASE("graph builders") {
    CHECK(cycle_ideal(4) == parse("x1 x2 x3 x4", "x1*x2 x2*x3 x3*x4 x1*x4"));
    CHECK(path_ideal(3) == parse("y1 y2 y3", "y1*y2 y2*y3"));
    CHECK(path_ideal(1).gens().empty());
    CHECK(unicyclic_ideal(3, 2) == parse("x1 x2 x3 y1 y2", "x1*x2 x2*x3 x1*x3 x2*y1 y1*y2"));
    CHECK(unicyclic_ideal(5, 0) == cycle_ideal(5));
    CHECK(build_graph_ideal(GraphKind::unicyclic, 4, 1) == unicyclic_ideal(4, 1));
    CHECK(build_graph_ideal(GraphKind::path, 5) == path_ideal(5));
    CHECK_THROWS_AS(cycle_ideal(2), Error);
}

TEST_CASE("oracle agrees with the link computation") {
    Rng rng(99);
    for (int k = 0; k < 80; ++k) {
        const auto I = k % 2 ? random_ideal(rng, 4, 4, 2) : random_squarefree_ideal(rng, 7, 6);
        CHECK(depth_oracle(I).value == depth_independent(I));
    }
    CHECK(depth_oracle(cycle_ideal(7)).value == depth_independent(cycle_ideal(7)));
}

TEST_CASE("both subset scans agree") {
    Rng rng(4);
    for (int k = 0; k < 60; ++k) {
        const auto I = random_ideal(rng, 4, 5, 2);
        CHECK(projective_dimension(I, Field::rationals, {}, SubsetScan::lcm_lattice) ==
              projective_dimension(I, Field::rationals, {}, SubsetScan::all));
    }
}

TEST_CASE("polarization keeps projective dimension") {
    Rng rng(8);
    for (int k = 0; k < 60; ++k) {
        const auto I = random_ideal(rng, 4, 4, 3);
        CHECK(projective_dimension(I) == projective_dimension(polarize(I).ideal));
    }
}

TEST_CASE("depth zero iff the maximal ideal is associated") {
    Rng rng(21);
    for (int k = 0; k < 100; ++k) {
        const auto I = random_ideal(rng, 4, 5, 3);
        VarSet all;
        for (std::size_t v = 0; v < I.nvars(); ++v) all.insert(v);
        const auto ass = associated_primes(I);
        const bool maximal = std::find(ass.begin(), ass.end(), MonomialPrime{all}) != ass.end();
        CHECK((depth_oracle(I).value == 0) == maximal);
    }
}

TEST_CASE("GF(2) and QQ agree on edge ideals of paths and cycles") {
    for (std::size_t p = 1; p <= 11; ++p) {
        CHECK(depth_oracle(path_ideal(p)).value == depth_path_formula(p));
        CHECK(depth_oracle(path_ideal(p), Field::gf2).value == depth_path_formula(p));
    }
    for (std::size_t n = 3; n <= 11; ++n) {
        CHECK(depth_oracle(cycle_ideal(n)).value == depth_cycle_formula(n));
        CHECK(depth_oracle(cycle_ideal(n), Field::gf2).value == depth_cycle_formula(n));
    }
}

TEST_CASE("unicyclic formula on small graphs") {
    for (std::size_t n = 3; n <= 6; ++n)
        for (std::size_t m = 0; m <= 4; ++m)
            CHECK(depth_oracle(unicyclic_ideal(n, m)).value == depth_unicyclic_formula(n, m));
}

TEST_CASE("oracle refuses rings past the budget") {
    Budget b;
    b.polarized_vars = 4;
    try {
        depth_oracle(cycle_ideal(5), Field::rationals, b);
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::budget_exceeded);
    }
}

TEST_CASE("exact rank falls back past 64 bits") {
    using detail::DenseMatrix;
    const std::int64_t big = std::int64_t{1} << 40;
    DenseMatrix<std::int64_t> full(2, 2);
    full(0, 0) = big;
    full(0, 1) = 1;
    full(1, 0) = 1;
    full(1, 1) = big;
    CHECK(detail::rank_over_rationals(full) == 2);
    DenseMatrix<std::int64_t> low(2, 2);
    low(0, 0) = big;
    low(0, 1) = 2 * big;
    low(1, 0) = 2 * big;
    low(1, 1) = 4 * big;
    CHECK(detail::rank_over_rationals(low) == 1);
    CHECK(detail::rank_over_gf2(low) == 0);
    DenseMatrix<std::int64_t> odd(2, 3);
    odd(0, 0) = 3;
    odd(1, 1) = 5;
    odd(1, 2) = 2;
    CHECK(detail::rank_over_gf2(odd) == 2);
}
