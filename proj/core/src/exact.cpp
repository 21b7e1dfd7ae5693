#include "listpack/exact.hpp"

#include "listpack/matching.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace listpack::exact {

namespace {

using Mask = unsigned long long;

Mask full_mask(int k) { return k >= 64 ? ~Mask{0} : (Mask{1} << k) - 1; }

struct BudgetExhausted {};

class PackingSearch {
  public:
    PackingSearch(const CorrespondenceCover& cover, SearchBudget budget)
        : cover_(cover),
          g_(cover.graph()),
          k_(cover.k()),
          n_(cover.vertex_count()),
          budget_(budget),
          columns_(static_cast<std::size_t>(n_)) {
        order_ = degeneracy_order(g_).order;
        // the first vertex of each component may take the identity column
        std::vector<int> component(static_cast<std::size_t>(n_), -1);
        int next = 0;
        for (Vertex root = 0; root < n_; ++root) {
            if (component[static_cast<std::size_t>(root)] >= 0)
                continue;
            std::vector<Vertex> stack{root};
            component[static_cast<std::size_t>(root)] = next;
            while (!stack.empty()) {
                Vertex v = stack.back();
                stack.pop_back();
                for (auto [w, e] : g_.incident(v))
                    if (component[static_cast<std::size_t>(w)] < 0) {
                        component[static_cast<std::size_t>(w)] = next;
                        stack.push_back(w);
                    }
            }
            ++next;
        }
        std::vector<bool> seen(static_cast<std::size_t>(next), false);
        component_leader_.assign(static_cast<std::size_t>(n_), false);
        for (Vertex v : order_) {
            auto c = static_cast<std::size_t>(component[static_cast<std::size_t>(v)]);
            if (!seen[c]) {
                seen[c] = true;
                component_leader_[static_cast<std::size_t>(v)] = true;
            }
        }
    }

    SearchOutcome<Packing> run() {
        SearchOutcome<Packing> out;
        try {
            bool ok = search(0);
            out.status = ok ? SearchStatus::found : SearchStatus::none;
            if (ok) {
                Packing p{k_, PackingMode::cover, std::vector<std::vector<int>>(static_cast<std::size_t>(k_), std::vector<int>(static_cast<std::size_t>(n_)))};
                for (Vertex v = 0; v < n_; ++v)
                    for (int i = 0; i < k_; ++i)
                        p.colourings[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)] =
                            columns_[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)];
                out.value = std::move(p);
            }
        } catch (const BudgetExhausted&) {
            out.status = SearchStatus::budget_exceeded;
        }
        out.nodes = nodes_;
        return out;
    }

  private:
    std::vector<Mask> usable(Vertex v) const {
        std::vector<Mask> rows(static_cast<std::size_t>(k_), full_mask(k_));
        for (auto [w, e] : g_.incident(v)) {
            const auto& col = columns_[static_cast<std::size_t>(w)];
            if (col.empty())
                continue;
            for (int i = 0; i < k_; ++i) {
                Slot s = cover_.partner(e, w, col[static_cast<std::size_t>(i)]);
                if (s >= 0)
                    rows[static_cast<std::size_t>(i)] &= ~(Mask{1} << s);
            }
        }
        return rows;
    }

    bool neighbours_feasible(Vertex v) {
        std::vector<int> scratch;
        for (auto [w, e] : g_.incident(v))
            if (columns_[static_cast<std::size_t>(w)].empty() && !perfect_matching_bitmask(usable(w), scratch))
                return false;
        return true;
    }

    bool try_column(std::size_t pos, Vertex v, std::vector<int>& column) {
        if (++nodes_ > budget_.max_nodes)
            throw BudgetExhausted{};
        columns_[static_cast<std::size_t>(v)] = column;
        if (neighbours_feasible(v) && search(pos + 1))
            return true;
        columns_[static_cast<std::size_t>(v)].clear();
        return false;
    }

    bool enumerate(std::size_t pos, Vertex v, const std::vector<Mask>& rows, int i, Mask used, std::vector<int>& column) {
        if (i == k_)
            return try_column(pos, v, column);
        Mask options = rows[static_cast<std::size_t>(i)] & ~used;
        while (options) {
            int s = __builtin_ctzll(options);
            options &= options - 1;
            column[static_cast<std::size_t>(i)] = s;
            if (enumerate(pos, v, rows, i + 1, used | (Mask{1} << s), column))
                return true;
        }
        return false;
    }

    bool search(std::size_t pos) {
        if (pos == order_.size())
            return true;
        Vertex v = order_[pos];
        std::vector<int> column(static_cast<std::size_t>(k_));
        if (component_leader_[static_cast<std::size_t>(v)]) {
            std::iota(column.begin(), column.end(), 0);
            return try_column(pos, v, column);
        }
        auto rows = usable(v);
        return enumerate(pos, v, rows, 0, 0, column);
    }

    const CorrespondenceCover& cover_;
    const Graph& g_;
    int k_;
    int n_;
    SearchBudget budget_;
    std::vector<Vertex> order_;
    std::vector<bool> component_leader_;
    std::vector<std::vector<int>> columns_;
    std::uint64_t nodes_ = 0;
};

class TransversalSearch {
  public:
    TransversalSearch(const CorrespondenceCover& cover, const std::vector<std::vector<Slot>>& allowed, SearchBudget budget)
        : cover_(cover), g_(cover.graph()), budget_(budget), chosen_(static_cast<std::size_t>(cover.vertex_count()), -1) {
        const int n = cover.vertex_count();
        if (static_cast<int>(allowed.size()) != n)
            throw std::invalid_argument("find_independent_transversal: allowed sets do not match vertex count");
        allowed_.resize(static_cast<std::size_t>(n));
        for (Vertex v = 0; v < n; ++v)
            for (Slot s : allowed[static_cast<std::size_t>(v)]) {
                if (s < 0 || s >= cover.k())
                    throw std::invalid_argument("find_independent_transversal: allowed slot out of range");
                allowed_[static_cast<std::size_t>(v)] |= Mask{1} << s;
            }
    }

    SearchOutcome<std::vector<Slot>> run() {
        SearchOutcome<std::vector<Slot>> out;
        try {
            bool ok = search(0);
            out.status = ok ? SearchStatus::found : SearchStatus::none;
            if (ok)
                out.value = chosen_;
        } catch (const BudgetExhausted&) {
            out.status = SearchStatus::budget_exceeded;
        }
        out.nodes = nodes_;
        return out;
    }

  private:
    Mask domain(Vertex v) const {
        Mask d = allowed_[static_cast<std::size_t>(v)];
        for (auto [w, e] : g_.incident(v)) {
            Slot s = chosen_[static_cast<std::size_t>(w)];
            if (s < 0)
                continue;
            Slot blocked = cover_.partner(e, w, s);
            if (blocked >= 0)
                d &= ~(Mask{1} << blocked);
        }
        return d;
    }

    bool search(int placed) {
        const int n = cover_.vertex_count();
        if (placed == n)
            return true;
        // smallest remaining domain first, lowest id on ties
        Vertex best = -1;
        Mask best_domain = 0;
        int best_size = 65;
        for (Vertex v = 0; v < n; ++v) {
            if (chosen_[static_cast<std::size_t>(v)] >= 0)
                continue;
            Mask d = domain(v);
            int size = __builtin_popcountll(d);
            if (size == 0)
                return false;
            if (size < best_size) {
                best = v;
                best_domain = d;
                best_size = size;
            }
        }
        while (best_domain) {
            int s = __builtin_ctzll(best_domain);
            best_domain &= best_domain - 1;
            if (++nodes_ > budget_.max_nodes)
                throw BudgetExhausted{};
            chosen_[static_cast<std::size_t>(best)] = s;
            if (search(placed + 1))
                return true;
        }
        chosen_[static_cast<std::size_t>(best)] = -1;
        return false;
    }

    const CorrespondenceCover& cover_;
    const Graph& g_;
    SearchBudget budget_;
    std::vector<Mask> allowed_;
    std::vector<Slot> chosen_;
    std::uint64_t nodes_ = 0;
};

void check_fold(const CorrespondenceCover& cover) {
    cover.require_valid();
    if (cover.k() > 64)
        throw std::invalid_argument("exact search supports k <= 64");
}

}  // namespace

SearchOutcome<Packing> find_packing(const CorrespondenceCover& cover, SearchBudget budget) {
    check_fold(cover);
    return PackingSearch(cover, budget).run();
}

SearchOutcome<std::vector<Slot>> find_independent_transversal(const CorrespondenceCover& cover,
                                                              const std::vector<std::vector<Slot>>& allowed,
                                                              SearchBudget budget) {
    check_fold(cover);
    return TransversalSearch(cover, allowed, budget).run();
}

ListChiStarResult decide_chi_star_list(const Graph& g, int k, SearchBudget budget) {
    if (k < 1)
        throw std::invalid_argument("decide_chi_star_list: k must be positive");
    ListChiStarResult result;
    std::uint64_t remaining = budget.max_nodes;
    result.assignments_checked = for_each_canonical_assignment(g.vertex_count(), k, [&](const auto& raw) {
        ListAssignment lists(raw);
        auto outcome = find_packing(list_to_cover(g, lists), SearchBudget{remaining});
        result.nodes += outcome.nodes;
        if (outcome.status == SearchStatus::budget_exceeded) {
            result.verdict = ChiStarVerdict::budget_exceeded;
            return false;
        }
        remaining -= std::min(remaining, outcome.nodes);
        if (outcome.status == SearchStatus::none) {
            result.verdict = ChiStarVerdict::witness;
            result.witness = std::move(lists);
            return false;
        }
        return true;
    });
    return result;
}

CorrChiStarResult decide_chi_star_corr(const Graph& g, int k, SearchBudget budget) {
    if (k < 1 || k > 12)
        throw std::invalid_argument("decide_chi_star_corr: k must be in 1..12");
    // spanning forest edges get the identity matching
    const int n = g.vertex_count();
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x)
            x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    };
    std::vector<Edge> tree, free_edges;
    for (auto e : g.edges()) {
        int a = find(e.first), b = find(e.second);
        if (a != b) {
            parent[static_cast<std::size_t>(a)] = b;
            tree.push_back(e);
        } else {
            free_edges.push_back(e);
        }
    }

    std::vector<std::vector<int>> perms;
    std::vector<int> p(static_cast<std::size_t>(k));
    std::iota(p.begin(), p.end(), 0);
    do
        perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));

    CorrChiStarResult result;
    // the enumeration itself must fit in the budget
    long double total = 1;
    for (std::size_t i = 0; i < free_edges.size(); ++i)
        total *= static_cast<long double>(perms.size());
    if (total > static_cast<long double>(budget.max_nodes)) {
        result.verdict = ChiStarVerdict::budget_exceeded;
        return result;
    }

    MatchingMap base;
    std::vector<SlotPair> identity;
    for (int i = 0; i < k; ++i)
        identity.emplace_back(i, i);
    for (auto e : tree)
        base[e] = identity;

    std::vector<std::size_t> odometer(free_edges.size(), 0);
    std::uint64_t remaining = budget.max_nodes;
    while (true) {
        MatchingMap matchings = base;
        for (std::size_t f = 0; f < free_edges.size(); ++f) {
            std::vector<SlotPair> pairs;
            const auto& perm = perms[odometer[f]];
            for (int i = 0; i < k; ++i)
                pairs.emplace_back(i, perm[static_cast<std::size_t>(i)]);
            matchings[free_edges[f]] = std::move(pairs);
        }
        CorrespondenceCover cover(g, k, std::move(matchings));
        ++result.covers_checked;
        auto outcome = find_packing(cover, SearchBudget{remaining});
        result.nodes += outcome.nodes;
        if (outcome.status == SearchStatus::budget_exceeded) {
            result.verdict = ChiStarVerdict::budget_exceeded;
            return result;
        }
        remaining -= std::min(remaining, outcome.nodes);
        if (outcome.status == SearchStatus::none) {
            result.verdict = ChiStarVerdict::witness;
            result.witness = std::move(cover);
            return result;
        }
        std::size_t f = 0;
        while (f < odometer.size() && ++odometer[f] == perms.size())
            odometer[f++] = 0;
        if (f == odometer.size())
            break;
    }
    return result;
}

}  // namespace listpack::exact
