#include "listpack/matrix.hpp"

#include "listpack/matching.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

namespace listpack::matrix {

namespace {

using Mask = unsigned long long;

bool has_perfect(const std::vector<Mask>& rows) {
    std::vector<int> scratch;
    return perfect_matching_bitmask(rows, scratch);
}

Rational power(const Rational& base, int exponent) {
    Rational out = 1;
    for (int i = 0; i < exponent; ++i)
        out *= base;
    return out;
}

template <class Trial>
std::uint64_t count_hits(std::uint64_t trials, int threads, Trial trial) {
    threads = std::max(1, threads);
    if (threads == 1 || trials < 2) {
        std::uint64_t hits = 0;
        for (std::uint64_t t = 0; t < trials; ++t)
            hits += trial(t) ? 1 : 0;
        return hits;
    }
    std::vector<std::uint64_t> partial(static_cast<std::size_t>(threads), 0);
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (trials + static_cast<std::uint64_t>(threads) - 1) / static_cast<std::uint64_t>(threads);
    for (int w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
            std::uint64_t begin = chunk * static_cast<std::uint64_t>(w);
            std::uint64_t end = std::min(trials, begin + chunk);
            std::uint64_t hits = 0;
            for (std::uint64_t t = begin; t < end; ++t)
                hits += trial(t) ? 1 : 0;
            partial[static_cast<std::size_t>(w)] = hits;
        });
    }
    for (auto& th : pool)
        th.join();
    return std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
}

template <class Visit>
void for_each_permutation_tuple(int n, int k, Visit visit) {
    std::vector<int> base(static_cast<std::size_t>(k));
    std::iota(base.begin(), base.end(), 0);
    std::vector<std::vector<int>> perms;
    do
        perms.push_back(base);
    while (std::next_permutation(base.begin(), base.end()));
    double total = std::pow(static_cast<double>(perms.size()), n);
    if (total > 2e7)
        throw std::invalid_argument("exact enumeration over (k!)^n = " + std::to_string(total) + " tuples is too large");
    std::vector<std::size_t> odometer(static_cast<std::size_t>(n), 0);
    while (true) {
        CountMatrix m(k);
        for (int r = 0; r < n; ++r)
            for (int i = 0; i < k; ++i)
                ++m.at(i, perms[odometer[static_cast<std::size_t>(r)]][static_cast<std::size_t>(i)]);
        visit(m);
        std::size_t f = 0;
        while (f < odometer.size() && ++odometer[f] == perms.size())
            odometer[f++] = 0;
        if (f == odometer.size())
            break;
    }
}

}  // namespace

BinaryMatrix::BinaryMatrix(int k, std::vector<std::uint8_t> bits) : k_(k), bits_(std::move(bits)) {
    if (k < 0 || bits_.size() != static_cast<std::size_t>(k) * static_cast<std::size_t>(k))
        throw std::invalid_argument("BinaryMatrix: expected k*k entries");
    for (auto b : bits_)
        if (b > 1)
            throw std::invalid_argument("BinaryMatrix: entries must be 0 or 1");
}

BinaryMatrix BinaryMatrix::from_mask(int k, std::uint64_t mask) {
    if (k > 8)
        throw std::invalid_argument("BinaryMatrix::from_mask: k must be <= 8");
    BinaryMatrix a(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            a.set(i, j, (mask >> (i * k + j)) & 1);
    return a;
}

BinaryMatrix BinaryMatrix::identity(int k) {
    BinaryMatrix a(k);
    for (int i = 0; i < k; ++i)
        a.set(i, i, true);
    return a;
}

int BinaryMatrix::zero_count() const { return static_cast<int>(std::count(bits_.begin(), bits_.end(), 0)); }

std::uint64_t permanent(const BinaryMatrix& a) {
    const int k = a.k();
    if (k > max_permanent_dimension)
        throw std::invalid_argument("permanent: k=" + std::to_string(k) + " exceeds " + std::to_string(max_permanent_dimension));
    if (k == 0)
        return 1;
    std::vector<__int128> row_sum(static_cast<std::size_t>(k), 0);
    __int128 total = 0;
    std::uint64_t subset = 0;
    for (std::uint64_t g = 1; g < (std::uint64_t{1} << k); ++g) {
        int j = __builtin_ctzll(g);
        subset ^= std::uint64_t{1} << j;
        const bool added = (subset >> j) & 1;
        for (int i = 0; i < k; ++i)
            if (a.at(i, j))
                row_sum[static_cast<std::size_t>(i)] += added ? 1 : -1;
        __int128 product = 1;
        for (int i = 0; i < k && product != 0; ++i)
            if (__builtin_mul_overflow(product, row_sum[static_cast<std::size_t>(i)], &product))
                throw std::overflow_error("permanent: intermediate product overflow");
        // (-1)^(k - |S|) sign
        const bool negative = ((k - __builtin_popcountll(subset)) & 1) != 0;
        if (negative ? __builtin_sub_overflow(total, product, &total) : __builtin_add_overflow(total, product, &total))
            throw std::overflow_error("permanent: accumulator overflow");
    }
    if (total < 0 || total > static_cast<__int128>(std::numeric_limits<std::uint64_t>::max()))
        throw std::overflow_error("permanent: value does not fit in 64 bits");
    return static_cast<std::uint64_t>(total);
}

std::optional<Permutation> one_transversal(const BinaryMatrix& a) {
    const int k = a.k();
    std::vector<std::vector<int>> adjacency(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (a.at(i, j))
                adjacency[static_cast<std::size_t>(i)].push_back(j);
    BipartiteMatching m(k, k, std::move(adjacency));
    if (!m.perfect())
        return std::nullopt;
    return m.left_partner();
}

std::optional<Permutation> zero_transversal(const CountMatrix& m) {
    BinaryMatrix zeros(m.k());
    for (int i = 0; i < m.k(); ++i)
        for (int j = 0; j < m.k(); ++j)
            zeros.set(i, j, m.at(i, j) == 0);
    return one_transversal(zeros);
}

std::optional<FrobeniusKonigWitness> frobenius_konig_witness(const BinaryMatrix& a) {
    const int k = a.k();
    // columns on the left, R_j = rows with a 1 in column j
    std::vector<std::vector<int>> adjacency(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < k; ++i)
            if (a.at(i, j))
                adjacency[static_cast<std::size_t>(j)].push_back(i);
    BipartiteMatching m(k, k, std::move(adjacency));
    if (m.perfect())
        return std::nullopt;
    int unmatched = static_cast<int>(std::find(m.left_partner().begin(), m.left_partner().end(), -1) - m.left_partner().begin());
    auto violator = m.hall_violator(unmatched);
    FrobeniusKonigWitness w;
    w.columns = violator.left;
    std::vector<bool> covered(static_cast<std::size_t>(k), false);
    for (int r : violator.right)
        covered[static_cast<std::size_t>(r)] = true;
    for (int i = 0; i < k; ++i)
        if (!covered[static_cast<std::size_t>(i)])
            w.rows.push_back(i);
    return w;
}

std::vector<std::uint64_t> zero_permanent_profile(int k) {
    if (k < 1 || k > 4)
        throw std::invalid_argument("zero_permanent_profile: k must be in 1..4");
    const int cells = k * k;
    std::vector<std::uint64_t> count(static_cast<std::size_t>(cells + 1), 0);
    std::vector<Mask> rows(static_cast<std::size_t>(k));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells); ++mask) {
        for (int i = 0; i < k; ++i)
            rows[static_cast<std::size_t>(i)] = (mask >> (i * k)) & ((Mask{1} << k) - 1);
        if (!has_perfect(rows))
            ++count[static_cast<std::size_t>(cells - __builtin_popcountll(mask))];
    }
    return count;
}

Rational zero_permanent_prob_exact(int k, const Rational& p) {
    if (p < 0 || p > 1)
        throw std::invalid_argument("zero_permanent_prob_exact: p must lie in [0, 1]");
    auto profile = zero_permanent_profile(k);
    const int cells = k * k;
    Rational total = 0;
    for (int z = 0; z <= cells; ++z)
        if (profile[static_cast<std::size_t>(z)])
            total += Rational(profile[static_cast<std::size_t>(z)]) * power(p, z) * power(1 - p, cells - z);
    return total;
}

Rational truncated_inclusion_exclusion_bound(int k, const Rational& p) {
    Rational pairs = Rational(k) * (k - 1) / 2;
    return 2 * Rational(k) * power(p, k) - (2 * pairs * power(p, 2 * k) + Rational(k) * k * power(p, 2 * k - 1));
}

double zero_permanent_asymptotic(int k, double p) { return 2.0 * k * std::pow(p, k); }

Estimate make_estimate(std::uint64_t hits, std::uint64_t trials) {
    if (trials == 0)
        throw std::invalid_argument("make_estimate: no trials");
    constexpr double z99 = 2.5758293035489004;
    constexpr double alpha = 0.01;
    Estimate e;
    e.hits = hits;
    e.trials = trials;
    const auto n = static_cast<double>(trials);
    e.estimate = static_cast<double>(hits) / n;
    if (hits == 0) {
        e.ci_low = 0;
        e.ci_high = 1 - std::pow(alpha, 1 / n);
    } else if (hits == trials) {
        e.ci_low = std::pow(alpha, 1 / n);
        e.ci_high = 1;
    } else {
        double half = z99 * std::sqrt(e.estimate * (1 - e.estimate) / n) + 0.5 / n;
        e.ci_low = std::max(0.0, e.estimate - half);
        e.ci_high = std::min(1.0, e.estimate + half);
    }
    return e;
}

Estimate zero_permanent_prob_mc(int k, double p, std::uint64_t trials, std::uint64_t seed, int threads) {
    if (k < 1 || k > 64)
        throw std::invalid_argument("zero_permanent_prob_mc: k must be in 1..64");
    if (p < 0 || p > 1)
        throw std::invalid_argument("zero_permanent_prob_mc: p must lie in [0, 1]");
    auto hits = count_hits(trials, threads, [&](std::uint64_t t) {
        CounterRng rng(seed, t);
        std::vector<Mask> rows(static_cast<std::size_t>(k), 0);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                if (!rng.bernoulli(p))
                    rows[static_cast<std::size_t>(i)] |= Mask{1} << j;
        return !has_perfect(rows);
    });
    return make_estimate(hits, trials);
}

CountMatrix sample_sum_of_permutations(int n, int k, CounterRng& rng) {
    if (n < 1 || k < 1)
        throw std::invalid_argument("sample_sum_of_permutations: n and k must be positive");
    CountMatrix m(k);
    std::vector<int> perm(static_cast<std::size_t>(k));
    for (int r = 0; r < n; ++r) {
        std::iota(perm.begin(), perm.end(), 0);
        rng.shuffle(std::span<int>(perm));
        for (int i = 0; i < k; ++i)
            ++m.at(i, perm[static_cast<std::size_t>(i)]);
    }
    return m;
}

CountMatrix sample_sum_of_permutations(int n, int k, std::uint64_t seed) {
    CounterRng rng(seed);
    return sample_sum_of_permutations(n, k, rng);
}

Estimate no_zero_transversal_prob_mc(int n, int k, std::uint64_t trials, std::uint64_t seed, int threads) {
    if (k > 64)
        throw std::invalid_argument("no_zero_transversal_prob_mc: k must be <= 64");
    auto hits = count_hits(trials, threads, [&](std::uint64_t t) {
        CounterRng rng(seed, t);
        auto m = sample_sum_of_permutations(n, k, rng);
        std::vector<Mask> rows(static_cast<std::size_t>(k), 0);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                if (m.at(i, j) == 0)
                    rows[static_cast<std::size_t>(i)] |= Mask{1} << j;
        return !has_perfect(rows);
    });
    return make_estimate(hits, trials);
}

Rational no_zero_transversal_prob_exact(int n, int k) {
    std::uint64_t bad = 0, total = 0;
    for_each_permutation_tuple(n, k, [&](const CountMatrix& m) {
        ++total;
        if (!zero_transversal(m))
            ++bad;
    });
    return Rational(bad) / Rational(total);
}

std::optional<double> zero_transversal_bound(int n, int k) {
    if (n < 2)
        return std::nullopt;
    const double eps = static_cast<double>(k) * std::log(static_cast<double>(n)) / n - 1;
    if (eps <= 0)
        return std::nullopt;
    return 3.0 * k * k * std::exp(-std::pow(static_cast<double>(n), eps / 3));
}

std::pair<Rational, Rational> block_nonzero_probabilities(int n, int k, int s, int t) {
    if (s < 1 || t < 1 || s > k || t > k)
        throw std::invalid_argument("block_nonzero_probabilities: block must fit in the matrix");
    std::uint64_t block = 0, corner = 0, total = 0;
    for_each_permutation_tuple(n, k, [&](const CountMatrix& m) {
        ++total;
        corner += m.at(0, 0) != 0;
        bool all = true;
        for (int i = 0; i < s && all; ++i)
            for (int j = 0; j < t && all; ++j)
                all = m.at(i, j) != 0;
        block += all;
    });
    return {Rational(block) / Rational(total), Rational(corner) / Rational(total)};
}

Rational parse_rational(const std::string& text) {
    auto fail = [&] { return std::invalid_argument("not a rational number: '" + text + "'"); };
    if (text.empty())
        throw fail();
    if (auto slash = text.find('/'); slash != std::string::npos) {
        auto num = parse_rational(text.substr(0, slash));
        auto den = parse_rational(text.substr(slash + 1));
        if (den == 0)
            throw fail();
        return num / den;
    }
    std::size_t pos = 0;
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-')
        negative = text[pos++] == '-';
    boost::multiprecision::cpp_int num = 0, den = 1;
    bool digits = false, point = false;
    for (; pos < text.size(); ++pos) {
        char c = text[pos];
        if (c == '.' && !point) {
            point = true;
        } else if (c >= '0' && c <= '9') {
            num = num * 10 + (c - '0');
            if (point)
                den *= 10;
            digits = true;
        } else {
            throw fail();
        }
    }
    if (!digits)
        throw fail();
    Rational r(num, den);
    return negative ? Rational(-r) : r;
}

}  // namespace listpack::matrix
