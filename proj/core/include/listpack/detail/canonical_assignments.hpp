#pragma once

#include <cstdint>
#include <vector>

namespace listpack::exact {

namespace detail {

template <class Visit>
bool canonical_step(int v, int n, int k, int used, std::vector<std::vector<Colour>>& lists, std::uint64_t& count,
                    Visit& visit) {
    if (v == n) {
        ++count;
        return visit(static_cast<const std::vector<std::vector<Colour>>&>(lists));
    }
    auto& list = lists[static_cast<std::size_t>(v)];
    const int max_old = std::min(k, used);
    // j old colours chosen as a combination of 0..used-1, then k-j fresh ones
    for (int j = max_old; j >= 0; --j) {
        std::vector<int> pick(static_cast<std::size_t>(j));
        for (int i = 0; i < j; ++i)
            pick[static_cast<std::size_t>(i)] = i;
        while (true) {
            list.clear();
            list.insert(list.end(), pick.begin(), pick.end());
            for (int f = 0; f < k - j; ++f)
                list.push_back(used + f);
            if (!canonical_step(v + 1, n, k, used + (k - j), lists, count, visit))
                return false;
            int i = j - 1;
            while (i >= 0 && pick[static_cast<std::size_t>(i)] == used - j + i)
                --i;
            if (i < 0)
                break;
            ++pick[static_cast<std::size_t>(i)];
            for (int t = i + 1; t < j; ++t)
                pick[static_cast<std::size_t>(t)] = pick[static_cast<std::size_t>(t - 1)] + 1;
        }
    }
    return true;
}

}  // namespace detail

template <class Visit>
std::uint64_t for_each_canonical_assignment(int n, int k, Visit&& visit) {
    std::vector<std::vector<Colour>> lists(static_cast<std::size_t>(n));
    std::uint64_t count = 0;
    if (n <= 0 || k <= 0)
        return count;
    detail::canonical_step(0, n, k, 0, lists, count, visit);
    return count;
}

}  // namespace listpack::exact
