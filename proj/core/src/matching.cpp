#include "listpack/matching.hpp"

#include <algorithm>
#include <stdexcept>

namespace listpack {

BipartiteMatching::BipartiteMatching(int left, int right, std::vector<std::vector<int>> adjacency)
    : left_(left),
      right_(right),
      adjacency_(std::move(adjacency)),
      left_match_(static_cast<std::size_t>(left), -1),
      right_match_(static_cast<std::size_t>(right), -1) {
    if (static_cast<int>(adjacency_.size()) != left_)
        throw std::invalid_argument("BipartiteMatching: adjacency size mismatch");
    std::vector<char> visited(static_cast<std::size_t>(right_));
    for (int u = 0; u < left_; ++u) {
        std::fill(visited.begin(), visited.end(), 0);
        if (augment(u, visited))
            ++size_;
    }
}

bool BipartiteMatching::augment(int u, std::vector<char>& visited) {
    // a free neighbour first, so uncontested rows keep their lowest option
    for (int w : adjacency_[static_cast<std::size_t>(u)])
        if (!visited[static_cast<std::size_t>(w)] && right_match_[static_cast<std::size_t>(w)] < 0) {
            visited[static_cast<std::size_t>(w)] = 1;
            right_match_[static_cast<std::size_t>(w)] = u;
            left_match_[static_cast<std::size_t>(u)] = w;
            return true;
        }
    for (int w : adjacency_[static_cast<std::size_t>(u)]) {
        if (visited[static_cast<std::size_t>(w)])
            continue;
        visited[static_cast<std::size_t>(w)] = 1;
        int& owner = right_match_[static_cast<std::size_t>(w)];
        if (owner < 0 || augment(owner, visited)) {
            owner = u;
            left_match_[static_cast<std::size_t>(u)] = w;
            return true;
        }
    }
    return false;
}

BipartiteMatching::HallViolator BipartiteMatching::hall_violator(int unmatched_left) const {
    if (left_match_[static_cast<std::size_t>(unmatched_left)] >= 0)
        throw std::invalid_argument("hall_violator: left vertex is matched");
    std::vector<char> left_seen(static_cast<std::size_t>(left_), 0), right_seen(static_cast<std::size_t>(right_), 0);
    std::vector<int> stack{unmatched_left};
    left_seen[static_cast<std::size_t>(unmatched_left)] = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : adjacency_[static_cast<std::size_t>(u)]) {
            if (right_seen[static_cast<std::size_t>(w)])
                continue;
            right_seen[static_cast<std::size_t>(w)] = 1;
            // maximality: every reachable right vertex is matched
            int next = right_match_[static_cast<std::size_t>(w)];
            if (next >= 0 && !left_seen[static_cast<std::size_t>(next)]) {
                left_seen[static_cast<std::size_t>(next)] = 1;
                stack.push_back(next);
            }
        }
    }
    HallViolator out;
    for (int u = 0; u < left_; ++u)
        if (left_seen[static_cast<std::size_t>(u)])
            out.left.push_back(u);
    for (int w = 0; w < right_; ++w)
        if (right_seen[static_cast<std::size_t>(w)])
            out.right.push_back(w);
    return out;
}

namespace {

bool augment_mask(int u, const std::vector<unsigned long long>& rows, unsigned long long& visited, std::vector<int>& owner,
                  std::vector<int>& assignment) {
    unsigned long long options = rows[static_cast<std::size_t>(u)] & ~visited;
    for (unsigned long long free = options; free; free &= free - 1) {
        int s = __builtin_ctzll(free);
        if (owner[static_cast<std::size_t>(s)] < 0) {
            visited |= 1ULL << s;
            owner[static_cast<std::size_t>(s)] = u;
            assignment[static_cast<std::size_t>(u)] = s;
            return true;
        }
    }
    while (options) {
        int s = __builtin_ctzll(options);
        options &= options - 1;
        visited |= 1ULL << s;
        int& o = owner[static_cast<std::size_t>(s)];
        if (o < 0 || augment_mask(o, rows, visited, owner, assignment)) {
            o = u;
            assignment[static_cast<std::size_t>(u)] = s;
            return true;
        }
    }
    return false;
}

}  // namespace

bool perfect_matching_bitmask(const std::vector<unsigned long long>& rows, std::vector<int>& assignment) {
    const int k = static_cast<int>(rows.size());
    assignment.assign(static_cast<std::size_t>(k), -1);
    std::vector<int> owner(static_cast<std::size_t>(k), -1);
    for (int u = 0; u < k; ++u) {
        unsigned long long visited = 0;
        if (!augment_mask(u, rows, visited, owner, assignment))
            return false;
    }
    return true;
}

}  // namespace listpack
