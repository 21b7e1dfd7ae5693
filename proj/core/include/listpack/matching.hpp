#pragma once

#include <vector>

namespace listpack {

/// Maximum bipartite matching by augmenting paths (Kuhn). Left vertices are
/// matched in increasing order and each tries its right neighbours in the
/// order given, so outputs are deterministic; sorted adjacency gives
/// lowest-index tie-breaking.
class BipartiteMatching {
  public:
    BipartiteMatching(int left, int right, std::vector<std::vector<int>> adjacency);

    int size() const { return size_; }
    bool perfect() const { return size_ == left_ && left_ == right_; }
    /// Right partner of each left vertex, or -1.
    const std::vector<int>& left_partner() const { return left_match_; }
    const std::vector<int>& right_partner() const { return right_match_; }

    /// For an unmatched left vertex: the left vertices reachable from it by
    /// alternating paths, and their joint neighbourhood. The neighbourhood
    /// has exactly one element fewer than the left set (a Hall violator).
    struct HallViolator {
        std::vector<int> left;
        std::vector<int> right;
    };
    HallViolator hall_violator(int unmatched_left) const;

  private:
    bool augment(int u, std::vector<char>& visited);

    int left_;
    int right_;
    std::vector<std::vector<int>> adjacency_;
    std::vector<int> left_match_;
    std::vector<int> right_match_;
    int size_ = 0;
};

/// Perfect matching in a k x k bipartite graph given as row bitmasks
/// (bit s of rows[i] set iff i may take s); k <= 64. Fills `assignment` and
/// returns true on success.
bool perfect_matching_bitmask(const std::vector<unsigned long long>& rows, std::vector<int>& assignment);

}  // namespace listpack
