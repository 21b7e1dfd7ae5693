#pragma once

#include "listpack/rng.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace listpack::matrix {

using Rational = boost::multiprecision::cpp_rational;
/// sigma[i] is the column used in row i.
using Permutation = std::vector<int>;

class BinaryMatrix {
  public:
    explicit BinaryMatrix(int k) : k_(k), bits_(static_cast<std::size_t>(k) * static_cast<std::size_t>(k), 0) {}
    /// Row-major 0/1 entries; throws std::invalid_argument otherwise.
    BinaryMatrix(int k, std::vector<std::uint8_t> bits);
    /// Bit i*k + j of `mask` is entry (i, j); k <= 8.
    static BinaryMatrix from_mask(int k, std::uint64_t mask);
    static BinaryMatrix identity(int k);

    int k() const { return k_; }
    bool at(int i, int j) const { return bits_[index(i, j)] != 0; }
    void set(int i, int j, bool value) { bits_[index(i, j)] = value ? 1 : 0; }
    int zero_count() const;

  private:
    std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(j); }

    int k_;
    std::vector<std::uint8_t> bits_;
};

class CountMatrix {
  public:
    explicit CountMatrix(int k) : k_(k), counts_(static_cast<std::size_t>(k) * static_cast<std::size_t>(k), 0) {}

    int k() const { return k_; }
    int at(int i, int j) const { return counts_[index(i, j)]; }
    int& at(int i, int j) { return counts_[index(i, j)]; }

  private:
    std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(j); }

    int k_;
    std::vector<int> counts_;
};

inline constexpr int max_permanent_dimension = 24;

/// Ryser inclusion-exclusion over column subsets in Gray-code order, with
/// checked 128-bit accumulation. Throws std::invalid_argument for
/// k > max_permanent_dimension and std::overflow_error if the value does not
/// fit in 64 bits.
std::uint64_t permanent(const BinaryMatrix& a);

/// A permutation hitting only 1-entries, via maximum bipartite matching of
/// rows to columns.
std::optional<Permutation> one_transversal(const BinaryMatrix& a);

/// A permutation hitting only zero entries.
std::optional<Permutation> zero_transversal(const CountMatrix& m);

/// Rows S and columns T with |S| + |T| = k + 1 and a zero on S x T.
struct FrobeniusKonigWitness {
    std::vector<int> rows;
    std::vector<int> columns;
};

/// nullopt iff a has a 1-transversal; otherwise the zero block read off the
/// Hall violator of a maximum column-to-row matching.
std::optional<FrobeniusKonigWitness> frobenius_konig_witness(const BinaryMatrix& a);

/// count[z] = number of k x k binary matrices with z zero entries and zero
/// permanent (exhaustive over all 2^(k*k) matrices, k <= 4).
std::vector<std::uint64_t> zero_permanent_profile(int k);

/// Exact Pr[Per(A) = 0] when entries are independently 0 with probability p.
Rational zero_permanent_prob_exact(int k, const Rational& p);

/// The union-bound-minus-pairs lower bound on Pr[some all-zero row or
/// column]: 2k p^k - (2 C(k,2) p^(2k) + k^2 p^(2k-1)).
Rational truncated_inclusion_exclusion_bound(int k, const Rational& p);

/// 2 k p^k.
double zero_permanent_asymptotic(int k, double p);

/// Monte Carlo estimate with a 99% interval. When the hit count is 0 or all
/// trials, the interval is the exact one-sided bound (the estimate is at the
/// closed end); otherwise it is the normal approximation widened by 1/(2n).
struct Estimate {
    std::uint64_t hits = 0;
    std::uint64_t trials = 0;
    double estimate = 0;
    double ci_low = 0;
    double ci_high = 0;
    double half_width() const { return (ci_high - ci_low) / 2; }
    bool covers(double value) const { return ci_low <= value && value <= ci_high; }
};

Estimate make_estimate(std::uint64_t hits, std::uint64_t trials);

/// Fraction of sampled matrices (entries 0 with probability p) with no
/// 1-transversal. Trial t draws from CounterRng(seed, t), so any thread
/// count gives the same result.
Estimate zero_permanent_prob_mc(int k, double p, std::uint64_t trials, std::uint64_t seed, int threads = 1);

/// Sum of n uniformly random k x k permutation matrices, each by Fisher-Yates.
CountMatrix sample_sum_of_permutations(int n, int k, CounterRng& rng);
CountMatrix sample_sum_of_permutations(int n, int k, std::uint64_t seed);

/// Fraction of sampled sums with no 0-transversal.
Estimate no_zero_transversal_prob_mc(int n, int k, std::uint64_t trials, std::uint64_t seed, int threads = 1);

/// Exact probability by enumerating all (k!)^n tuples of permutations.
Rational no_zero_transversal_prob_exact(int n, int k);

/// 3 k^2 exp(-n^(eps/3)) with eps solved from k = (1 + eps) n / ln n; nullopt
/// when eps <= 0.
std::optional<double> zero_transversal_bound(int n, int k);

/// Exact joint and marginal nonzero probabilities for the top-left s x t
/// block of a sum of n random k x k permutation matrices: returns
/// (Pr[all block cells nonzero], Pr[cell (0,0) nonzero]).
std::pair<Rational, Rational> block_nonzero_probabilities(int n, int k, int s, int t);

/// Decimal string ("0.25", "3/4", "1e-2" not supported) to an exact rational.
Rational parse_rational(const std::string& text);

}  // namespace listpack::matrix
