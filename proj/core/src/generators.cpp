#include "listpack/generators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace listpack::generators {

ListInstance gen_c4() {
    return {cycle_graph(4), ListAssignment({{1, 2}, {1, 2}, {1, 3}, {2, 3}})};
}

CorrespondenceCover gen_kab_cover(int d) {
    if (d < 2 || d > 3)
        throw std::invalid_argument("gen_kab_cover: d must be 2 or 3, got " + std::to_string(d));
    const int k = 2 * d - 1;
    std::vector<std::vector<int>> perms;
    std::vector<int> p(static_cast<std::size_t>(k));
    std::iota(p.begin(), p.end(), 0);
    do
        perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));

    std::size_t b_count = 1;
    for (int j = 1; j < d; ++j)
        b_count *= perms.size();

    std::vector<Edge> edges;
    for (std::size_t b = 0; b < b_count; ++b)
        for (int a = 0; a < d; ++a)
            edges.emplace_back(a, d + static_cast<int>(b));
    MatchingMap matchings;
    for (std::size_t b = 0; b < b_count; ++b) {
        const Vertex bv = d + static_cast<int>(b);
        std::size_t rest = b;
        for (int a = 0; a < d; ++a) {
            const std::vector<int>* pi = &perms.front();  // identity
            if (a > 0) {
                pi = &perms[rest % perms.size()];
                rest /= perms.size();
            }
            auto& m = matchings[{a, bv}];
            for (int j = 0; j < k; ++j)
                m.emplace_back((*pi)[static_cast<std::size_t>(j)], j);
        }
    }
    return {Graph(d + static_cast<int>(b_count), std::move(edges)), k, std::move(matchings)};
}

ListInstance gen_shift_construction(int d) {
    if (d < 2 || d > 3)
        throw std::invalid_argument("gen_shift_construction: d must be 2 or 3, got " + std::to_string(d));
    const int width = d + 1;
    const int fresh = d + 2;

    std::vector<std::pair<int, int>> shifts;
    for (int cycle = 0; cycle < d - 1; ++cycle)
        for (int a = 1; a < d; ++a) {
            const int b = a + 1;
            shifts.insert(shifts.end(), {{a, fresh}, {b, a}, {fresh, b}});
        }

    std::vector<Edge> edges;
    std::vector<std::vector<Colour>> lists;
    std::vector<int> base(static_cast<std::size_t>(width));
    std::iota(base.begin(), base.end(), 1);
    for (int i = 0; i < width; ++i) {
        lists.push_back(base);
        for (int j = 0; j < i; ++j)
            edges.emplace_back(j, i);
    }
    for (std::size_t step = 0; step < shifts.size(); ++step) {
        const int prev = static_cast<int>(step) * width;
        const int cur = prev + width;
        auto [from, to] = shifts[step];
        for (int i = 0; i < width; ++i) {
            auto list = lists[static_cast<std::size_t>(prev + i)];
            std::replace(list.begin(), list.end(), from, to);
            lists.push_back(std::move(list));
            for (int j = 0; j < width; ++j)
                if (j != i)
                    edges.emplace_back(prev + j, cur + i);
        }
    }
    const int apex = static_cast<int>(lists.size());
    lists.push_back(base);
    const int layers_per_cycle = 3 * (d - 1);
    for (int p = 0; p < d; ++p)
        edges.emplace_back(p * layers_per_cycle * width, apex);
    return {Graph(apex + 1, std::move(edges)), ListAssignment(std::move(lists))};
}

ListInstance gen_kbb_lists(int b) {
    if (b < 1 || b > 3)
        throw std::invalid_argument("gen_kbb_lists: b must be in 1..3, got " + std::to_string(b));
    std::vector<std::vector<Colour>> lists;
    for (int i = 0; i < b; ++i) {
        std::vector<Colour> l;
        for (int c = 1; c <= b; ++c)
            l.push_back(i * b + c);
        lists.push_back(std::move(l));
    }
    int tuples = 1;
    for (int i = 0; i < b; ++i)
        tuples *= b;
    std::vector<Edge> edges;
    for (int t = 0; t < tuples; ++t) {
        std::vector<Colour> l(static_cast<std::size_t>(b));
        for (int i = b - 1, rest = t; i >= 0; --i, rest /= b)
            l[static_cast<std::size_t>(i)] = i * b + rest % b + 1;
        lists.push_back(std::move(l));
        for (int i = 0; i < b; ++i)
            edges.emplace_back(i, b + t);
    }
    return {Graph(b + tuples, std::move(edges)), ListAssignment(std::move(lists))};
}

ListAssignment pad_with_fresh_colours(const ListAssignment& lists, int extra) {
    if (extra < 0)
        throw std::invalid_argument("pad_with_fresh_colours: negative padding");
    Colour next = 0;
    for (const auto& l : lists.lists())
        if (!l.empty())
            next = std::max(next, l.back() + 1);
    auto out = lists.lists();
    for (auto& l : out)
        for (int i = 0; i < extra; ++i)
            l.push_back(next++);
    return ListAssignment(std::move(out));
}

}  // namespace listpack::generators
