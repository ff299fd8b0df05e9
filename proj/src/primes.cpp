#include "monoideal/primes.hpp"

#include <algorithm>
#include <limits>
#include <optional>

#include "monoideal/error.hpp"

namespace monoideal {

VarSet support_set(const Monomial& m) {
    VarSet s;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i] > 0) s.insert(i);
    return s;
}

namespace {

void require_nonzero(const MonomialIdeal& ideal, const char* what) {
    if (ideal.is_zero()) throw Error(Errc::zero_ideal, std::string(what) + " of the zero ideal");
}

void require_capacity(std::size_t nvars) {
    if (nvars > VarSet::capacity)
        throw Error(Errc::domain, "prime computations support at most " +
                                      std::to_string(VarSet::capacity) + " variables");
}

class TransversalSearch {
public:
    explicit TransversalSearch(std::vector<VarSet> edges) : edges_(std::move(edges)) {}

    std::vector<VarSet> run() {
        if (std::any_of(edges_.begin(), edges_.end(), [](const VarSet& e) { return e.empty(); }))
            return {};
        descend(VarSet{}, VarSet{});
        std::sort(out_.begin(), out_.end());
        return std::move(out_);
    }

private:
    // Every chosen vertex must keep an edge that no other chosen vertex hits;
    // adding vertices only destroys private edges, so failure is final.
    bool all_private(const VarSet& chosen) const {
        for (auto u : chosen.indices()) {
            VarSet others = chosen;
            others.erase(u);
            bool has_private = std::any_of(edges_.begin(), edges_.end(), [&](const VarSet& e) {
                return e.contains(u) && !e.intersects(others);
            });
            if (!has_private) return false;
        }
        return true;
    }

    void descend(VarSet chosen, VarSet excluded) {
        std::optional<VarSet> branch;
        for (const auto& e : edges_) {
            if (e.intersects(chosen)) continue;
            VarSet avail = e - excluded;
            if (avail.empty()) return;
            if (!branch || avail.count() < branch->count()) branch = avail;
        }
        if (!branch) {
            out_.push_back(chosen);
            return;
        }
        for (auto v : branch->indices()) {
            VarSet next = chosen;
            next.insert(v);
            if (all_private(next)) descend(next, excluded);
            excluded.insert(v);
        }
    }

    std::vector<VarSet> edges_;
    std::vector<VarSet> out_;
};

PrimeSet to_primes(std::vector<VarSet> sets) {
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    PrimeSet out;
    out.reserve(sets.size());
    for (auto& s : sets) out.push_back(MonomialPrime{s});
    return out;
}

}  // namespace

bool MonomialPrime::contains(const Monomial& m) const {
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i] > 0 && vars.contains(i)) return true;
    return false;
}

std::vector<VarSet> minimal_transversals(std::span<const VarSet> edges) {
    // Only inclusion-minimal edges constrain a transversal.
    std::vector<VarSet> sorted(edges.begin(), edges.end());
    std::sort(sorted.begin(), sorted.end(), [](const VarSet& a, const VarSet& b) {
        return a.count() != b.count() ? a.count() < b.count() : a < b;
    });
    std::vector<VarSet> minimal;
    for (const auto& e : sorted) {
        bool dominated = std::any_of(minimal.begin(), minimal.end(),
                                     [&](const VarSet& m) { return m.is_subset_of(e); });
        if (!dominated) minimal.push_back(e);
    }
    return TransversalSearch(std::move(minimal)).run();
}

PrimeSet minimal_primes(const MonomialIdeal& ideal) {
    require_nonzero(ideal, "minimal primes");
    require_capacity(ideal.nvars());
    std::vector<VarSet> edges;
    for (const auto& g : ideal.gens()) edges.push_back(support_set(g));
    return to_primes(minimal_transversals(edges));
}

PolarizationMap::PolarizationMap(RingSpec source, std::vector<Exponent> copies)
    : source_(source), target_(source), copies_(std::move(copies)) {
    if (copies_.size() != source_.size()) throw Error(Errc::ring_mismatch, "copy counts differ from ring size");
    std::vector<std::string> names;
    for (std::size_t v = 0; v < copies_.size(); ++v) {
        offset_.push_back(names.size());
        for (Exponent j = 1; j <= copies_[v]; ++j) {
            names.push_back(source_.name(v) + "_" + std::to_string(j));
            source_of_.push_back(v);
        }
    }
    if (names.empty()) throw Error(Errc::domain, "polarization ring would have no variables");
    try {
        target_ = RingSpec(std::move(names));
    } catch (const Error&) {
        throw Error(Errc::domain, "polarized variable names collide with each other");
    }
}

std::size_t PolarizationMap::target_index(std::size_t var, std::size_t copy) const {
    if (copy == 0 || copy > copies_.at(var)) throw Error(Errc::domain, "polarization copy out of range");
    return offset_[var] + copy - 1;
}

Monomial PolarizationMap::polarize(const Monomial& m) const {
    if (m.size() != source_.size()) throw Error(Errc::ring_mismatch, "monomial not over the source ring");
    Monomial out(target_.size());
    for (std::size_t v = 0; v < m.size(); ++v) {
        if (m[v] > copies_[v]) throw Error(Errc::domain, "exponent exceeds polarization copies");
        for (std::size_t j = 1; j <= m[v]; ++j) out.set(target_index(v, j), 1);
    }
    return out;
}

VarSet PolarizationMap::depolarize(const VarSet& target_vars) const {
    VarSet out;
    for (auto t : target_vars.indices()) out.insert(source_of_.at(t));
    return out;
}

Polarization polarize(const MonomialIdeal& ideal) {
    require_nonzero(ideal, "polarization");
    std::vector<Exponent> copies(ideal.nvars());
    for (std::size_t v = 0; v < ideal.nvars(); ++v) copies[v] = var_degree(ideal, v);
    PolarizationMap map(ideal.ring(), std::move(copies));
    std::vector<Monomial> gens;
    for (const auto& g : ideal.gens()) gens.push_back(map.polarize(g));
    return {MonomialIdeal(map.target(), std::move(gens)), std::move(map)};
}

PrimeSet associated_primes(const MonomialIdeal& ideal) {
    require_nonzero(ideal, "associated primes");
    require_capacity(ideal.nvars());
    auto pol = polarize(ideal);
    std::vector<VarSet> depolarized;
    for (const auto& p : minimal_primes(pol.ideal)) depolarized.push_back(pol.map.depolarize(p.vars));
    return to_primes(std::move(depolarized));
}

PrimeSet associated_primes_bruteforce(const MonomialIdeal& ideal, std::uint64_t max_candidates) {
    require_nonzero(ideal, "associated primes");
    require_capacity(ideal.nvars());
    const auto n = ideal.nvars();
    std::vector<Exponent> bound(n);
    std::uint64_t lattice = 1;
    for (std::size_t v = 0; v < n; ++v) {
        bound[v] = var_degree(ideal, v);
        if (__builtin_mul_overflow(lattice, std::uint64_t{bound[v]} + 1, &lattice) || lattice > max_candidates)
            throw Error(Errc::budget_exceeded, "witness lattice exceeds " + std::to_string(max_candidates) +
                                                   " candidates");
    }
    std::vector<VarSet> found;
    std::vector<Exponent> exps(n, 0);
    while (true) {
        Monomial c(exps);
        if (!ideal.contains(c)) {
            auto q = colon(ideal, c);
            bool linear = std::all_of(q.gens().begin(), q.gens().end(),
                                      [](const Monomial& g) { return g.total_degree() == 1; });
            if (linear) {
                VarSet p;
                for (const auto& g : q.gens()) p |= support_set(g);
                found.push_back(p);
            }
        }
        std::size_t k = 0;
        while (k < n && exps[k] == bound[k]) exps[k++] = 0;
        if (k == n) break;
        ++exps[k];
    }
    return to_primes(std::move(found));
}

PrimeSet embedded_primes(const MonomialIdeal& ideal) {
    auto ass = associated_primes(ideal);
    auto min = minimal_primes(ideal);
    PrimeSet out;
    std::set_difference(ass.begin(), ass.end(), min.begin(), min.end(), std::back_inserter(out));
    return out;
}

VarSet star_neighbors(const MonomialIdeal& ideal, std::size_t w) {
    require_nonzero(ideal, "star neighbors");
    require_capacity(ideal.nvars());
    const auto top = var_degree(ideal, w);
    VarSet out;
    for (const auto& g : ideal.gens()) {
        if (g[w] == 0 || g[w] >= top) continue;
        for (std::size_t z = 0; z < g.size(); ++z)
            if (z != w && g[z] > 0) out.insert(z);
    }
    return out;
}

MonomialPrime EmbeddedDecomposition::combined() const {
    MonomialPrime p = minimal_prime;
    for (const auto& e : extras) p.vars.insert(e.z);
    return p;
}

EmbeddedDecomposition embedded_decomposition(const MonomialIdeal& ideal, const MonomialPrime& q) {
    auto ass = associated_primes(ideal);
    if (!std::binary_search(ass.begin(), ass.end(), q))
        throw Error(Errc::domain, "prime is not associated to R/I");
    auto min = minimal_primes(ideal);
    if (std::binary_search(min.begin(), min.end(), q))
        throw Error(Errc::not_embedded, "prime is a minimal prime of R/I");

    std::vector<VarSet> star(ideal.nvars());
    for (std::size_t w = 0; w < ideal.nvars(); ++w) star[w] = star_neighbors(ideal, w);

    std::optional<EmbeddedDecomposition> best;
    for (const auto& p : min) {  // ascending, so the first hit per size is least
        if (!p.vars.is_subset_of(q.vars) || p == q) continue;
        // Witnesses for z are the w with z in N*(w). Label with a smallest
        // witness set (a minimum transversal), each z by its least member.
        const auto extras = (q.vars - p.vars).indices();
        std::vector<VarSet> options;
        for (auto z : extras) {
            VarSet ws;
            for (std::size_t w = 0; w < star.size(); ++w)
                if (star[w].contains(z)) ws.insert(w);
            if (ws.empty()) break;
            options.push_back(ws);
        }
        if (options.size() != extras.size()) continue;
        const auto covers = minimal_transversals(options);
        const auto chosen = *std::min_element(covers.begin(), covers.end(), [](const VarSet& a, const VarSet& b) {
            return a.count() != b.count() ? a.count() < b.count() : a < b;
        });
        EmbeddedDecomposition candidate{p, {}};
        for (std::size_t k = 0; k < extras.size(); ++k)
            candidate.extras.push_back({extras[k], (options[k] & chosen).front()});
        if (!best || candidate.extras.size() < best->extras.size()) best = std::move(candidate);
    }
    if (!best)
        throw Error(Errc::no_decomposition,
                    "embedded prime is not a minimal prime plus star neighbors");
    return *best;
}

bool has_no_embedded_hypothesis(const MonomialIdeal& ideal) {
    require_nonzero(ideal, "embedded-prime hypothesis");
    for (std::size_t x = 0; x < ideal.nvars(); ++x) {
        const auto top = var_degree(ideal, x);
        for (const auto& g : ideal.gens())
            if (g[x] > 0 && g[x] != top) return false;
    }
    return true;
}

bool is_regular_linear_form(const MonomialIdeal& ideal, const LinearForm& f) {
    VarSet supp;
    for (auto v : f.support()) {
        if (v >= ideal.nvars()) throw Error(Errc::ring_mismatch, "linear form not over the ideal's ring");
        supp.insert(v);
    }
    for (const auto& p : associated_primes(ideal))
        if (supp.is_subset_of(p.vars)) return false;
    return true;
}

std::vector<std::string> prime_names(const RingSpec& ring, const MonomialPrime& p) {
    std::vector<std::string> out;
    for (auto v : p.vars.indices()) out.push_back(ring.name(v));
    return out;
}

std::string format_prime(const RingSpec& ring, const MonomialPrime& p) {
    std::string out = "(";
    for (const auto& n : prime_names(ring, p)) {
        if (out.size() > 1) out += ", ";
        out += n;
    }
    return out + ")";
}

}  // namespace monoideal
