#include "gracelab/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "gracelab/errors.hpp"
#include "gracelab/verify.hpp"

namespace gracelab {

std::string search_status_name(SearchStatus s) {
    switch (s) {
        case SearchStatus::Found: return "FOUND";
        case SearchStatus::ExhaustedNone: return "EXHAUSTED_NONE";
        case SearchStatus::Indeterminate: return "INDETERMINATE";
    }
    return "?";
}

namespace {

struct SearchState {
    const Graph* g = nullptr;
    int q = 0;
    std::vector<int> order;             // ordinals in assignment order
    std::vector<int> position;          // ordinal -> position in order (-1 = n/a)
    std::vector<int> label;             // ordinal -> assigned label (-1 = unassigned)
    std::vector<char> used_vertex;      // label -> taken
    std::vector<char> used_edge;        // diff  -> taken
    std::int64_t nodes = 0;
    std::int64_t max_nodes = 0;
    std::chrono::steady_clock::time_point deadline;
    bool budget_hit = false;

    bool out_of_budget() {
        if (nodes >= max_nodes) return budget_hit = true;
        if ((nodes & 1023) == 0 && std::chrono::steady_clock::now() >= deadline)
            return budget_hit = true;
        return false;
    }
};

// Assignment order: degree descending, ties by input position.  Keeps runs
// deterministic and places constrained vertices early.
std::vector<int> degree_order(const Graph& g) {
    std::vector<int> order(g.vertex_count());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&g](int a, int b) {
        return g.adjacency()[a].size() > g.adjacency()[b].size();
    });
    return order;
}

void init_state(SearchState& st, const Graph& g, const SearchBudget& budget) {
    st.g = &g;
    st.q = g.edge_count();
    st.order = degree_order(g);
    st.position.assign(g.vertex_count(), -1);
    for (int pos = 0; pos < static_cast<int>(st.order.size()); ++pos)
        st.position[st.order[pos]] = pos;
    st.label.assign(g.vertex_count(), -1);
    st.used_vertex.assign(st.q + 1, 0);
    st.used_edge.assign(st.q + 1, 0);
    st.max_nodes = budget.max_nodes;
    st.deadline = std::chrono::steady_clock::now() + budget.time_limit;
}

// Try to place `value` on the vertex at `pos`; returns false (with no state
// change) if it collides.  On success the caller must undo via unplace().
bool place(SearchState& st, int pos, int value, std::vector<int>& touched_diffs) {
    int v = st.order[pos];
    if (st.used_vertex[value]) return false;
    touched_diffs.clear();
    for (int w : st.g->adjacency()[v]) {
        if (st.label[w] < 0) continue;
        int diff = value > st.label[w] ? value - st.label[w] : st.label[w] - value;
        if (diff == 0 || st.used_edge[diff]) {
            for (int d : touched_diffs) st.used_edge[d] = 0;
            return false;
        }
        st.used_edge[diff] = 1;
        touched_diffs.push_back(diff);
    }
    st.used_vertex[value] = 1;
    st.label[v] = value;
    ++st.nodes;
    return true;
}

void unplace(SearchState& st, int pos, const std::vector<int>& touched_diffs) {
    int v = st.order[pos];
    st.used_vertex[st.label[v]] = 0;
    st.label[v] = -1;
    for (int d : touched_diffs) st.used_edge[d] = 0;
}

Labeling labeling_from(const SearchState& st) {
    Labeling out;
    const auto& verts = st.g->vertices();
    for (int v = 0; v < static_cast<int>(verts.size()); ++v) out.set(verts[v], st.label[v]);
    return out;
}

void assert_graceful(const Graph& g, const Labeling& f) {
    auto cert = verify_graceful(LabeledGraph::create(g, f));
    if (!cert.ok())
        throw std::logic_error("oracle returned a non-graceful labeling: " + cert.summary());
}

// Depth-first over positions.  Returns true when a full assignment is found.
bool dfs_graceful(SearchState& st, int pos) {
    if (pos == static_cast<int>(st.order.size())) return true;
    if (st.out_of_budget()) return false;
    // First vertex capped at floor(q/2): of f and its complement q-f, one
    // satisfies the cap, so no solution is lost.
    int hi = pos == 0 ? st.q / 2 : st.q;
    std::vector<int> touched;
    for (int value = 0; value <= hi; ++value) {
        if (!place(st, pos, value, touched)) continue;
        if (dfs_graceful(st, pos + 1)) return true;
        unplace(st, pos, touched);
        if (st.budget_hit) return false;
    }
    return false;
}

}  // namespace

SearchOutcome find_graceful(const Graph& g, const SearchBudget& budget) {
    const int p = g.vertex_count();
    const int q = g.edge_count();
    if (p == 0) return {SearchStatus::Found, Labeling{}, 0};
    if (p > q + 1) return {SearchStatus::ExhaustedNone, std::nullopt, 0};

    SearchState st;
    init_state(st, g, budget);
    if (dfs_graceful(st, 0)) {
        Labeling f = labeling_from(st);
        assert_graceful(g, f);
        return {SearchStatus::Found, std::move(f), st.nodes};
    }
    if (st.budget_hit) return {SearchStatus::Indeterminate, std::nullopt, st.nodes};
    return {SearchStatus::ExhaustedNone, std::nullopt, st.nodes};
}

namespace {

// Alpha search: side[v] says whether ordinal v must sit on the low (0) or
// high (1) side; values on the low side ascend from 0, values on the high
// side descend from q, and the boundary max(low) < min(high) is maintained
// incrementally.
struct AlphaState : SearchState {
    std::vector<int> side;
};

bool dfs_alpha(AlphaState& st, int pos) {
    if (pos == static_cast<int>(st.order.size())) return true;
    if (st.out_of_budget()) return false;

    int max_low = -1, min_high = st.q + 1;
    for (int v = 0; v < static_cast<int>(st.label.size()); ++v) {
        if (st.label[v] < 0) continue;
        if (st.side[v] == 0) max_low = std::max(max_low, st.label[v]);
        else min_high = std::min(min_high, st.label[v]);
    }

    int v = st.order[pos];
    std::vector<int> touched;
    if (st.side[v] == 0) {
        for (int value = 0; value < min_high; ++value) {
            if (!place(st, pos, value, touched)) continue;
            if (dfs_alpha(st, pos + 1)) return true;
            unplace(st, pos, touched);
            if (st.budget_hit) return false;
        }
    } else {
        for (int value = st.q; value > max_low; --value) {
            if (!place(st, pos, value, touched)) continue;
            if (dfs_alpha(st, pos + 1)) return true;
            unplace(st, pos, touched);
            if (st.budget_hit) return false;
        }
    }
    return false;
}

}  // namespace

SearchOutcome find_alpha(const Graph& g, const SearchBudget& budget) {
    const int p = g.vertex_count();
    const int q = g.edge_count();
    if (p == 0) return {SearchStatus::Found, Labeling{}, 0};
    auto colouring = g.two_colouring();
    if (!colouring) return {SearchStatus::ExhaustedNone, std::nullopt, 0};
    if (p > q + 1) return {SearchStatus::ExhaustedNone, std::nullopt, 0};

    // Component ids, to enumerate per-component side flips.
    std::vector<int> comp(p, -1);
    int comp_count = 0;
    for (int s = 0; s < p; ++s) {
        if (comp[s] != -1) continue;
        std::vector<int> stack{s};
        comp[s] = comp_count;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.adjacency()[v])
                if (comp[w] == -1) {
                    comp[w] = comp_count;
                    stack.push_back(w);
                }
        }
        ++comp_count;
    }

    std::int64_t total_nodes = 0;
    auto deadline = std::chrono::steady_clock::now() + budget.time_limit;
    bool budget_hit = false;

    // Component 0's colour class 0 is pinned to the low side; flipping it
    // would only produce complements of labelings already in the space.
    const std::int64_t flips = comp_count > 1 ? (std::int64_t{1} << (comp_count - 1)) : 1;
    for (std::int64_t mask = 0; mask < flips && !budget_hit; ++mask) {
        AlphaState st;
        init_state(st, g, budget);
        st.max_nodes = budget.max_nodes - total_nodes;
        st.deadline = deadline;
        st.side.resize(p);
        for (int v = 0; v < p; ++v) {
            bool flip = comp[v] > 0 && ((mask >> (comp[v] - 1)) & 1);
            st.side[v] = (*colouring)[v] ^ (flip ? 1 : 0);
        }
        bool found = dfs_alpha(st, 0);
        total_nodes += st.nodes;
        if (found) {
            Labeling f = labeling_from(st);
            assert_graceful(g, f);
            return {SearchStatus::Found, std::move(f), total_nodes};
        }
        budget_hit = st.budget_hit;
    }
    if (budget_hit) return {SearchStatus::Indeterminate, std::nullopt, total_nodes};
    return {SearchStatus::ExhaustedNone, std::nullopt, total_nodes};
}

SearchOutcome cross_check_enumeration(const Graph& g) {
    const int q = g.edge_count();
    if (q > 8)
        throw ValidationError("cross_check_enumeration is limited to q <= 8, got q = " +
                              std::to_string(q));
    const int p = g.vertex_count();
    if (p == 0) return {SearchStatus::Found, Labeling{}, 0};
    if (p > q + 1) return {SearchStatus::ExhaustedNone, std::nullopt, 0};

    std::vector<int> label(p, -1);
    std::vector<char> used(q + 1, 0);
    std::int64_t nodes = 0;
    std::vector<int> diff_count;

    // Plain nested enumeration of injections in input vertex order; the only
    // "pruning" is injectivity, which is part of the definition of the space.
    auto graceful_at_leaf = [&]() {
        diff_count.assign(q + 1, 0);
        for (const auto& e : g.edges()) {
            int a = label[g.ordinal(e.first)];
            int b = label[g.ordinal(e.second)];
            int d = a > b ? a - b : b - a;
            if (d == 0 || ++diff_count[d] > 1) return false;
        }
        return true;
    };

    std::function<bool(int)> enumerate = [&](int v) -> bool {
        if (v == p) return graceful_at_leaf();
        for (int value = 0; value <= q; ++value) {
            if (used[value]) continue;
            used[value] = 1;
            label[v] = value;
            ++nodes;
            if (enumerate(v + 1)) return true;
            used[value] = 0;
            label[v] = -1;
        }
        return false;
    };

    if (enumerate(0)) {
        Labeling f;
        for (int v = 0; v < p; ++v) f.set(g.vertices()[v], label[v]);
        assert_graceful(g, f);
        return {SearchStatus::Found, std::move(f), nodes};
    }
    return {SearchStatus::ExhaustedNone, std::nullopt, nodes};
}

}  // namespace gracelab
