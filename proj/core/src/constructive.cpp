#include "listpack/constructive.hpp"

#include "listpack/exact.hpp"
#include "listpack/matching.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace listpack::constructive {

namespace {

std::vector<std::vector<int>> empty_colourings(int k, int n) {
    return std::vector<std::vector<int>>(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(n), unassigned));
}

}  // namespace

Packing pack_degenerate(const CorrespondenceCover& cover) {
    cover.require_valid();
    const auto& g = cover.graph();
    const int k = cover.k();
    const int n = g.vertex_count();
    auto [order, d] = degeneracy_order(g);
    if (k < 2 * d)
        throw PreconditionError("pack_degenerate: k=" + std::to_string(k) + " is below 2*degeneracy=" + std::to_string(2 * d));

    auto colourings = empty_colourings(k, n);
    std::vector<bool> done(static_cast<std::size_t>(n), false);
    for (Vertex v : order) {
        std::vector<std::vector<bool>> blocked(static_cast<std::size_t>(k), std::vector<bool>(static_cast<std::size_t>(k), false));
        for (auto [w, e] : g.incident(v)) {
            if (!done[static_cast<std::size_t>(w)])
                continue;
            for (int i = 0; i < k; ++i) {
                Slot s = cover.partner(e, w, colourings[static_cast<std::size_t>(i)][static_cast<std::size_t>(w)]);
                if (s >= 0)
                    blocked[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)] = true;
            }
        }
        std::vector<std::vector<int>> adjacency(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i)
            for (int s = 0; s < k; ++s)
                if (!blocked[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)])
                    adjacency[static_cast<std::size_t>(i)].push_back(s);
        BipartiteMatching m(k, k, std::move(adjacency));
        if (!m.perfect())
            throw InternalError("pack_degenerate: no perfect matching at vertex " + std::to_string(v));
        for (int i = 0; i < k; ++i)
            colourings[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)] = m.left_partner()[static_cast<std::size_t>(i)];
        done[static_cast<std::size_t>(v)] = true;
    }
    return Packing{k, PackingMode::cover, std::move(colourings)};
}

Packing pack_complete(const ListInstance& instance, CompleteTrace* trace) {
    const auto& g = instance.graph;
    const int n = g.vertex_count();
    if (static_cast<long long>(g.edge_count()) != static_cast<long long>(n) * (n - 1) / 2)
        throw PreconditionError("pack_complete: graph is not complete");
    if (instance.lists.vertex_count() != n)
        throw PreconditionError("pack_complete: list assignment does not match graph");
    auto size = instance.lists.uniform_size();
    if (!size || *size < 1 || *size > n)
        throw PreconditionError("pack_complete: lists must share one size k with 1 <= k <= n");
    const int k = *size;

    std::vector<std::vector<Colour>> lists = instance.lists.lists();
    {
        std::map<Colour, int> freq;
        for (const auto& l : lists)
            for (Colour c : l)
                ++freq[c];
        for (auto [c, f] : freq)
            if (f > k)
                throw PreconditionError("pack_complete: colour " + std::to_string(c) + " lies in " + std::to_string(f) +
                                        " lists, more than k=" + std::to_string(k));
    }

    Packing packing{k, PackingMode::list, {}};
    for (int stage = 0; stage < k; ++stage) {
        const int current = k - stage;
        std::vector<Colour> palette;
        std::map<Colour, int> freq;
        for (const auto& l : lists)
            for (Colour c : l)
                ++freq[c];
        for (auto [c, f] : freq)
            palette.push_back(c);
        auto index_of = [&](Colour c) {
            return static_cast<int>(std::lower_bound(palette.begin(), palette.end(), c) - palette.begin());
        };

        // proper colouring of K_n = system of distinct representatives
        std::vector<std::vector<int>> adjacency(static_cast<std::size_t>(n));
        for (Vertex v = 0; v < n; ++v)
            for (Colour c : lists[static_cast<std::size_t>(v)])
                adjacency[static_cast<std::size_t>(v)].push_back(index_of(c));
        BipartiteMatching sdr(n, static_cast<int>(palette.size()), std::move(adjacency));
        if (sdr.size() != n)
            throw InternalError("pack_complete: lists have no system of distinct representatives");
        std::vector<Colour> colouring(static_cast<std::size_t>(n));
        std::vector<Vertex> holder(palette.size(), -1);
        for (Vertex v = 0; v < n; ++v) {
            int idx = sdr.left_partner()[static_cast<std::size_t>(v)];
            colouring[static_cast<std::size_t>(v)] = palette[static_cast<std::size_t>(idx)];
            holder[static_cast<std::size_t>(idx)] = v;
        }

        // injection f from rich colours to vertices whose list holds them
        std::vector<Colour> rich;
        for (auto [c, f] : freq)
            if (f == current)
                rich.push_back(c);
        std::vector<std::vector<int>> rich_adjacency(rich.size());
        for (std::size_t r = 0; r < rich.size(); ++r)
            for (Vertex v = 0; v < n; ++v)
                if (std::binary_search(lists[static_cast<std::size_t>(v)].begin(), lists[static_cast<std::size_t>(v)].end(), rich[r]))
                    rich_adjacency[r].push_back(v);
        BipartiteMatching f(static_cast<int>(rich.size()), n, std::move(rich_adjacency));
        if (f.size() != static_cast<int>(rich.size()))
            throw InternalError("pack_complete: rich colours admit no injection into vertices");

        // while some rich colour r is unused, recolour f(r) with r
        std::size_t passes = 0;
        while (true) {
            bool changed = false;
            for (std::size_t r = 0; r < rich.size(); ++r) {
                int idx = index_of(rich[r]);
                if (holder[static_cast<std::size_t>(idx)] >= 0)
                    continue;
                Vertex target = f.left_partner()[r];
                int old = index_of(colouring[static_cast<std::size_t>(target)]);
                holder[static_cast<std::size_t>(old)] = -1;
                colouring[static_cast<std::size_t>(target)] = rich[r];
                holder[static_cast<std::size_t>(idx)] = target;
                changed = true;
            }
            if (!changed)
                break;
            if (++passes > rich.size())
                throw InternalError("pack_complete: rich-colour swap loop did not settle");
        }

        packing.colourings.push_back(colouring);
        for (Vertex v = 0; v < n; ++v) {
            auto& l = lists[static_cast<std::size_t>(v)];
            l.erase(std::find(l.begin(), l.end(), colouring[static_cast<std::size_t>(v)]));
        }
        if (trace) {
            trace->depth = stage + 1;
            trace->rich_counts.push_back(static_cast<int>(rich.size()));
        }
    }
    return packing;
}

std::vector<int> ordered_sides(const Graph& g) {
    auto side = bipartition(g);
    if (!side)
        throw PreconditionError("graph is not bipartite");
    int max_deg[2] = {0, 0};
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        max_deg[(*side)[static_cast<std::size_t>(v)]] = std::max(max_deg[(*side)[static_cast<std::size_t>(v)]], g.degree(v));
    if (max_deg[1] < max_deg[0])
        for (auto& s : *side)
            s = 1 - s;
    return *side;
}

Packing pack_bipartite_ordered(const ListInstance& instance) {
    const auto& g = instance.graph;
    const int n = g.vertex_count();
    if (instance.lists.vertex_count() != n)
        throw PreconditionError("pack_bipartite_ordered: list assignment does not match graph");
    auto side = ordered_sides(g);
    auto size = instance.lists.uniform_size();
    if (!size)
        throw PreconditionError("pack_bipartite_ordered: lists have unequal sizes");
    const int k = *size;
    int delta_a = 0;
    for (Vertex v = 0; v < n; ++v)
        if (side[static_cast<std::size_t>(v)] == 0)
            delta_a = std::max(delta_a, g.degree(v));
    if (k < delta_a + 1)
        throw PreconditionError("pack_bipartite_ordered: k=" + std::to_string(k) + " is below Delta_A+1=" +
                                std::to_string(delta_a + 1));

    auto colourings = empty_colourings(k, n);
    for (Vertex b = 0; b < n; ++b)
        if (side[static_cast<std::size_t>(b)] == 1)
            for (int i = 0; i < k; ++i)
                colourings[static_cast<std::size_t>(i)][static_cast<std::size_t>(b)] = instance.lists.list(b)[static_cast<std::size_t>(i)];

    for (Vertex a = 0; a < n; ++a) {
        if (side[static_cast<std::size_t>(a)] != 0)
            continue;
        auto list = instance.lists.list(a);
        // I_j: indices i where no neighbour b has c_i(b) = j
        std::vector<std::vector<int>> adjacency(static_cast<std::size_t>(k));
        for (int j = 0; j < k; ++j) {
            Colour colour = list[static_cast<std::size_t>(j)];
            for (int i = 0; i < k; ++i) {
                bool free = true;
                for (auto [b, e] : g.incident(a))
                    if (colourings[static_cast<std::size_t>(i)][static_cast<std::size_t>(b)] == colour) {
                        free = false;
                        break;
                    }
                if (free)
                    adjacency[static_cast<std::size_t>(j)].push_back(i);
            }
        }
        BipartiteMatching m(k, k, std::move(adjacency));
        if (!m.perfect())
            throw InternalError("pack_bipartite_ordered: Hall's condition failed at vertex " + std::to_string(a));
        for (int j = 0; j < k; ++j)
            colourings[static_cast<std::size_t>(m.left_partner()[static_cast<std::size_t>(j)])][static_cast<std::size_t>(a)] =
                list[static_cast<std::size_t>(j)];
    }
    return Packing{k, PackingMode::list, std::move(colourings)};
}

Packing pack_augment(const CorrespondenceCover& cover, int chi_c_bound, AugmentTrace* trace) {
    cover.require_valid();
    const auto& g = cover.graph();
    const int k = cover.k();
    const int n = g.vertex_count();
    if (chi_c_bound < 0)
        chi_c_bound = 1 + degeneracy_order(g).degeneracy;
    if (k < 1 + g.max_degree() + chi_c_bound)
        throw PreconditionError("pack_augment: k=" + std::to_string(k) + " is below 1+Delta+chi_c_bound=" +
                                std::to_string(1 + g.max_degree() + chi_c_bound));

    // colour[v][s]: colouring index held by slot s of v; holder[v][c]: inverse
    std::vector<std::vector<int>> colour(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(k), unassigned));
    std::vector<std::vector<int>> holder = colour;
    auto at = [](auto& table, Vertex v, int i) -> int& { return table[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)]; };

    auto to_partial = [&] {
        PartialPacking partial(k, n);
        for (Vertex v = 0; v < n; ++v)
            for (int c = 0; c < k; ++c)
                partial.colourings[static_cast<std::size_t>(c)][static_cast<std::size_t>(v)] = at(holder, v, c);
        return partial;
    };

    int coloured = 0;
    if (trace)
        trace->coloured_cells.assign(1, 0);
    const int max_rounds = n * k;
    for (int round = 0; coloured < n * k; ++round) {
        if (round >= max_rounds)
            throw InternalError("pack_augment: exceeded n*k augmentation rounds");
        Vertex v1 = -1;
        Slot x = -1;
        for (Vertex v = 0; v < n && v1 < 0; ++v)
            for (Slot s = 0; s < k; ++s)
                if (at(colour, v, s) == unassigned) {
                    v1 = v;
                    x = s;
                    break;
                }
        int red = 0;
        while (at(holder, v1, red) != unassigned)
            ++red;

        std::vector<std::vector<Slot>> allowed(static_cast<std::size_t>(n));
        for (Vertex v = 0; v < n; ++v) {
            if (v == v1) {
                allowed[static_cast<std::size_t>(v)] = {x};
                continue;
            }
            std::vector<bool> keep(static_cast<std::size_t>(k), true);
            // L'(v): slots whose colour could move onto the red slot r_v
            Slot red_slot = at(holder, v, red);
            if (red_slot != unassigned)
                for (auto [w, e] : g.incident(v)) {
                    Slot z = cover.partner(e, v, red_slot);
                    if (z < 0 || at(colour, w, z) == unassigned)
                        continue;
                    Slot clash = at(holder, v, at(colour, w, z));
                    if (clash != unassigned)
                        keep[static_cast<std::size_t>(clash)] = false;
                }
            // L''(v): drop neighbours of x
            int e = g.edge_index(v, v1);
            if (e >= 0) {
                Slot nx = cover.partner(e, v1, x);
                if (nx >= 0)
                    keep[static_cast<std::size_t>(nx)] = false;
            }
            for (Slot s = 0; s < k; ++s)
                if (keep[static_cast<std::size_t>(s)])
                    allowed[static_cast<std::size_t>(v)].push_back(s);
            if (static_cast<int>(allowed[static_cast<std::size_t>(v)].size()) < chi_c_bound)
                throw InternalError("pack_augment: restricted part at vertex " + std::to_string(v) + " is smaller than chi_c_bound");
        }

        auto it = exact::find_independent_transversal(cover, allowed);
        if (it.status != exact::SearchStatus::found)
            throw InternalError("pack_augment: no independent transversal of the restricted parts; chi_c_bound=" +
                                std::to_string(chi_c_bound) + " is not a valid bound");
        const auto& transversal = *it.value;

        for (Vertex v = 0; v < n; ++v) {
            Slot t = transversal[static_cast<std::size_t>(v)];
            Slot r = at(holder, v, red);
            if (t == r)
                continue;
            int displaced = at(colour, v, t);
            at(colour, v, t) = red;
            at(holder, v, red) = t;
            if (r != unassigned) {
                at(colour, v, r) = displaced;
                if (displaced != unassigned)
                    at(holder, v, displaced) = r;
            } else if (displaced != unassigned) {
                at(holder, v, displaced) = unassigned;
            }
        }

        auto partial = to_partial();
        if (auto bad = validate_partial(cover, partial))
            throw InternalError("pack_augment: augmentation broke the partial packing: " + bad->message);
        int now = partial.assigned_count();
        if (now <= coloured)
            throw InternalError("pack_augment: augmentation did not grow the partial packing");
        coloured = now;
        if (trace)
            trace->coloured_cells.push_back(coloured);
    }

    return to_partial().to_packing();
}

}  // namespace listpack::constructive
