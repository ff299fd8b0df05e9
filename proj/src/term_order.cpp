#include "monoideal/term_order.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "monoideal/error.hpp"

namespace monoideal {

TermOrder::TermOrder(std::vector<std::size_t> precedence)
    : precedence_(std::move(precedence)), rank_(precedence_.size(), std::numeric_limits<std::size_t>::max()) {
    for (std::size_t pos = 0; pos < precedence_.size(); ++pos) {
        auto v = precedence_[pos];
        if (v >= precedence_.size() || rank_[v] != std::numeric_limits<std::size_t>::max())
            throw Error(Errc::domain, "term order precedence is not a permutation");
        rank_[v] = pos;
    }
}

TermOrder TermOrder::natural(std::size_t nvars) {
    std::vector<std::size_t> p(nvars);
    for (std::size_t i = 0; i < nvars; ++i) p[i] = i;
    return TermOrder(std::move(p));
}

std::strong_ordering TermOrder::compare(const Monomial& a, const Monomial& b) const {
    for (auto v : precedence_) {
        if (a[v] != b[v]) return a[v] <=> b[v];
    }
    return std::strong_ordering::equal;
}

namespace {

struct ChainGraph {
    std::vector<std::vector<std::size_t>> succ;
    std::vector<std::size_t> indegree;
    std::vector<bool> constrained;
    // first chain (and position) a variable appears in; used as a priority
    std::vector<std::size_t> first_seen;
};

ChainGraph build_graph(std::size_t nvars, std::span<const OrderChain> chains) {
    ChainGraph g{std::vector<std::vector<std::size_t>>(nvars), std::vector<std::size_t>(nvars, 0),
                 std::vector<bool>(nvars, false),
                 std::vector<std::size_t>(nvars, std::numeric_limits<std::size_t>::max())};
    std::size_t stamp = 0;
    for (const auto& chain : chains) {
        for (std::size_t k = 0; k < chain.size(); ++k) {
            auto v = chain[k];
            if (v >= nvars) throw Error(Errc::domain, "order constraint names an unknown variable");
            g.constrained[v] = true;
            if (g.first_seen[v] == std::numeric_limits<std::size_t>::max()) g.first_seen[v] = stamp;
            ++stamp;
            if (k + 1 < chain.size()) {
                if (chain[k + 1] == v) throw Error(Errc::domain, "order constraint repeats a variable");
                g.succ[v].push_back(chain[k + 1]);
                ++g.indegree[chain[k + 1]];
            }
        }
    }
    return g;
}

// Kahn's algorithm restricted to `pool`, always taking the available vertex
// that is smallest under `before`.
std::vector<std::size_t> topo_sort(ChainGraph g, const std::vector<std::size_t>& pool,
                                   const std::function<bool(std::size_t, std::size_t)>& before) {
    std::vector<bool> in_pool(g.succ.size(), false);
    for (auto v : pool) in_pool[v] = true;
    std::vector<std::size_t> available;
    for (auto v : pool)
        if (g.indegree[v] == 0) available.push_back(v);
    std::vector<std::size_t> out;
    while (!available.empty()) {
        auto it = std::min_element(available.begin(), available.end(), before);
        auto v = *it;
        available.erase(it);
        out.push_back(v);
        for (auto s : g.succ[v]) {
            if (--g.indegree[s] == 0 && in_pool[s]) available.push_back(s);
        }
    }
    if (out.size() != pool.size()) throw Error(Errc::domain, "order constraints are cyclic");
    return out;
}

}  // namespace

TermOrder complete_order(std::size_t nvars, std::span<const OrderChain> chains, Completion strategy) {
    auto graph = build_graph(nvars, chains);
    std::vector<std::size_t> constrained, free_vars, all;
    for (std::size_t v = 0; v < nvars; ++v) {
        (graph.constrained[v] ? constrained : free_vars).push_back(v);
        all.push_back(v);
    }
    auto by_chain = [&](std::size_t a, std::size_t b) { return graph.first_seen[a] < graph.first_seen[b]; };

    std::vector<std::size_t> order;
    switch (strategy) {
    case Completion::chain_priority:
        order = topo_sort(graph, constrained, by_chain);
        order.insert(order.end(), free_vars.begin(), free_vars.end());
        break;
    case Completion::unconstrained_descending:
        order = topo_sort(graph, constrained, by_chain);
        order.insert(order.end(), free_vars.rbegin(), free_vars.rend());
        break;
    case Completion::unconstrained_first: {
        order = free_vars;
        auto tail = topo_sort(graph, constrained, by_chain);
        order.insert(order.end(), tail.begin(), tail.end());
        break;
    }
    case Completion::index_ascending:
        order = topo_sort(graph, all, std::less<>{});
        break;
    case Completion::index_descending:
        order = topo_sort(graph, all, std::greater<>{});
        break;
    }
    return TermOrder(std::move(order));
}

std::vector<TermOrder> distinct_completions(std::size_t nvars, std::span<const OrderChain> chains,
                                            std::size_t limit) {
    std::vector<TermOrder> out;
    for (auto s : {Completion::chain_priority, Completion::unconstrained_descending,
                   Completion::unconstrained_first, Completion::index_ascending,
                   Completion::index_descending}) {
        if (out.size() >= limit) break;
        auto o = complete_order(nvars, chains, s);
        if (std::find(out.begin(), out.end(), o) == out.end()) out.push_back(std::move(o));
    }
    return out;
}

bool satisfies(const TermOrder& order, std::span<const OrderChain> chains) {
    for (const auto& chain : chains) {
        for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
            if (!order.var_greater(chain[k], chain[k + 1])) return false;
        }
    }
    return true;
}

}  // namespace monoideal
