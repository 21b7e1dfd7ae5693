// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance [--expect-fail 12,...] [--with-k4]
//
// Exit status is 0 when the failing criteria are exactly the expected ones.

#include "oracles.hpp"

#include "listpack/constructive.hpp"
#include "listpack/exact.hpp"
#include "listpack/generators.hpp"
#include "listpack/matrix.hpp"
#include "listpack/probabilistic.hpp"
#include "listpack/random_instances.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

using namespace listpack;
using exact::ChiStarVerdict;
using exact::SearchStatus;
using matrix::Rational;

namespace {

// Frozen from pilot runs with seeds disjoint from the ones below.
constexpr double kPermZeroPilotValue = 0.00591575;  // 4e6 trials, seed 9002
constexpr double kPermZeroRatioLow = 0.944;          // pilot ratio 1.0096 -/+ 5 sd at 1e6 trials
constexpr double kPermZeroRatioHigh = 1.075;
constexpr double kZeroTransversalFence = 0.05;
constexpr double kBaselineSlack = 0.05;

struct Outcome {
    bool pass = true;
    std::string detail;
    std::string report;  // deterministic content, compared for criterion 15
};

struct Criterion {
    int id;
    std::string name;
    double time_limit;  // seconds, 0 for none
    bool seeded;
    std::function<Outcome()> run;
};

std::string verdict_name(ChiStarVerdict v) {
    return v == ChiStarVerdict::all_pack ? "all-pack" : v == ChiStarVerdict::witness ? "witness" : "budget";
}

std::string status_name(SearchStatus s) {
    return s == SearchStatus::found ? "found" : s == SearchStatus::none ? "none" : "budget";
}

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

bool with_k4 = false;

Outcome c4_criterion() {
    Outcome o;
    auto c4 = generators::gen_c4();
    auto find = exact::find_packing(list_to_cover(c4.graph, c4.lists));
    auto k2 = exact::decide_chi_star_list(c4.graph, 2);
    auto k3 = exact::decide_chi_star_list(c4.graph, 3);
    o.pass = find.status == SearchStatus::none && k2.verdict == ChiStarVerdict::witness && k3.verdict == ChiStarVerdict::all_pack;
    o.detail = "find_packing=" + status_name(find.status) + ", k=2 " + verdict_name(k2.verdict) + ", k=3 " +
               verdict_name(k3.verdict) + " over " + std::to_string(k3.assignments_checked) + " assignments";
    o.report = o.detail;
    return o;
}

Outcome complete_graphs_criterion() {
    Outcome o;
    std::ostringstream d;
    auto check = [&](const std::string& name, const Graph& g, int value) {
        auto at = exact::decide_chi_star_list(g, value);
        auto below = exact::decide_chi_star_list(g, value - 1);
        bool ok = at.verdict == ChiStarVerdict::all_pack && below.verdict == ChiStarVerdict::witness;
        o.pass = o.pass && ok;
        d << name << "=" << (ok ? std::to_string(value) : "?(" + verdict_name(at.verdict) + "/" + verdict_name(below.verdict) + ")")
          << " ";
    };
    check("K2", complete_graph(2), 2);
    check("K3", complete_graph(3), 3);
    check("P3", path_graph(3), 2);
    if (with_k4)
        check("K4", complete_graph(4), 4);
    o.detail = d.str();
    o.report = o.detail;
    return o;
}

Outcome kab_criterion() {
    Outcome o;
    auto cover = generators::gen_kab_cover(2);
    auto find = exact::find_packing(cover);
    int packed = 0;
    const int trials = 50;
    for (int s = 0; s < trials; ++s) {
        CounterRng rng(static_cast<std::uint64_t>(s), 300);
        auto four = sample::random_cover(cover.graph(), 4, rng);
        auto p = constructive::pack_degenerate(four);
        packed += !validate_packing(four, p) && oracle::is_cover_packing(four, p);
    }
    o.pass = find.status == SearchStatus::none && degeneracy_order(cover.graph()).degeneracy == 2 && packed == trials;
    o.detail = "k=3 find_packing=" + status_name(find.status) + ", k=4 pack_degenerate valid on " + std::to_string(packed) + "/" +
               std::to_string(trials) + " full covers";
    o.report = o.detail;
    return o;
}

Outcome shift_criterion() {
    Outcome o;
    auto inst = generators::gen_shift_construction(2);
    auto d = degeneracy_order(inst.graph).degeneracy;
    auto find = exact::find_packing(list_to_cover(inst.graph, inst.lists));
    o.pass = d == 2 && inst.lists.uniform_size() == 3 && find.status == SearchStatus::none;
    o.detail = std::to_string(inst.graph.vertex_count()) + " vertices, degeneracy " + std::to_string(d) +
               ", 3-lists, find_packing=" + status_name(find.status) + " (" + std::to_string(find.nodes) + " nodes)";
    o.report = o.detail;
    return o;
}

Outcome degenerate_suite() {
    Outcome o;
    std::ostringstream rep;
    int failures = 0;
    int runs = 0;
    const char* classes[] = {"path", "cycle", "random"};
    for (int c = 0; c < 3; ++c)
        for (std::uint64_t s = 0; s < 200; ++s) {
            CounterRng rng(s, 500 + static_cast<std::uint64_t>(c));
            Graph g;
            if (c == 0)
                g = path_graph(2 + static_cast<int>(rng.below(11)));
            else if (c == 1)
                g = cycle_graph(3 + static_cast<int>(rng.below(10)));
            else
                g = sample::random_graph(1 + static_cast<int>(rng.below(12)), rng.unit(), rng);
            const int k = std::max(1, 2 * degeneracy_order(g).degeneracy);
            auto cover = sample::random_cover(g, k, rng, rng.bernoulli(0.5));
            ++runs;
            try {
                auto p = constructive::pack_degenerate(cover);
                bool ok = !validate_packing(cover, p) && oracle::is_cover_packing(cover, p);
                failures += !ok;
                rep << p.colourings.size() << ':' << (p.colourings.empty() ? 0 : p.colourings[0].size()) << ';';
                for (const auto& row : p.colourings)
                    for (int x : row)
                        rep << x;
                rep << '|';
            } catch (const std::exception& e) {
                ++failures;
                rep << "error " << classes[c] << ' ' << s << ' ' << e.what() << '|';
            }
        }
    o.pass = failures == 0;
    o.detail = std::to_string(runs) + " covers (paths, cycles, random graphs n<=12), " + std::to_string(failures) + " failures";
    o.report = rep.str();
    return o;
}

std::string packing_text(const Packing& p) {
    std::ostringstream out;
    for (const auto& row : p.colourings) {
        for (int x : row)
            out << x << ',';
        out << ';';
    }
    return out.str();
}

Outcome complete_suite() {
    Outcome o;
    std::ostringstream rep;
    int failures = 0;
    for (std::uint64_t s = 0; s < 200; ++s) {
        CounterRng rng(s, 600);
        const int n = 1 + static_cast<int>(s % 7);
        const int k = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        ListInstance inst{complete_graph(n), sample::random_bounded_lists(n, k, rng)};
        try {
            constructive::CompleteTrace trace;
            auto p = constructive::pack_complete(inst, &trace);
            bool ok = !validate_packing(inst, p) && oracle::is_list_packing(inst, p) && trace.depth == k;
            failures += !ok;
            rep << packing_text(p) << '|';
        } catch (const std::exception& e) {
            ++failures;
            rep << "error " << s << ' ' << e.what() << '|';
        }
    }
    o.pass = failures == 0;
    o.detail = "200 list assignments of K_n (n<=7, each colour in <=k lists), " + std::to_string(failures) + " failures";
    o.report = rep.str();
    return o;
}

Outcome ordered_suite() {
    Outcome o;
    std::ostringstream rep;
    int failures = 0;
    for (std::uint64_t s = 0; s < 200; ++s) {
        CounterRng rng(s, 700);
        const int left = 1 + static_cast<int>(rng.below(8));
        const int right = 1 + static_cast<int>(rng.below(8));
        auto g = sample::random_bipartite_graph(left, right, 0.2 + 0.6 * rng.unit(), rng);
        auto side = constructive::ordered_sides(g);
        int delta_a = 0;
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (side[static_cast<std::size_t>(v)] == 0)
                delta_a = std::max(delta_a, g.degree(v));
        const int k = delta_a + 1;
        ListInstance inst{g, sample::random_lists(g.vertex_count(), k, k + static_cast<int>(rng.below(5)), rng)};
        try {
            auto p = constructive::pack_bipartite_ordered(inst);
            bool ok = !validate_packing(inst, p) && oracle::is_list_packing(inst, p);
            for (Vertex b = 0; b < g.vertex_count(); ++b)
                if (side[static_cast<std::size_t>(b)] == 1)
                    for (int i = 0; i + 1 < k; ++i)
                        ok = ok && p.colourings[static_cast<std::size_t>(i)][static_cast<std::size_t>(b)] <
                                       p.colourings[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(b)];
            failures += !ok;
            rep << packing_text(p) << '|';
        } catch (const std::exception& e) {
            ++failures;
            rep << "error " << s << ' ' << e.what() << '|';
        }
    }
    o.pass = failures == 0;
    o.detail = "200 bipartite instances at k = Delta_A + 1, " + std::to_string(failures) + " failures (validity or B-side order)";
    o.report = rep.str();
    return o;
}

Outcome augment_suite() {
    Outcome o;
    std::ostringstream rep;
    int failures = 0;
    std::size_t rounds = 0;
    for (std::uint64_t s = 0; s < 100; ++s) {
        CounterRng rng(s, 800);
        auto g = sample::random_graph(2 + static_cast<int>(rng.below(7)), 0.2 + 0.6 * rng.unit(), rng);
        const int k = 1 + g.max_degree() + 1 + degeneracy_order(g).degeneracy;
        auto cover = sample::random_cover(g, k, rng, rng.bernoulli(0.5));
        try {
            constructive::AugmentTrace trace;
            auto p = constructive::pack_augment(cover, -1, &trace);
            bool ok = !validate_packing(cover, p) && oracle::is_cover_packing(cover, p);
            for (std::size_t i = 1; i < trace.coloured_cells.size(); ++i)
                ok = ok && trace.coloured_cells[i] > trace.coloured_cells[i - 1];
            ok = ok && trace.coloured_cells.size() - 1 <= static_cast<std::size_t>(g.vertex_count() * k);
            failures += !ok;
            rounds += trace.coloured_cells.size() - 1;
            rep << packing_text(p) << '|';
        } catch (const std::exception& e) {
            ++failures;
            rep << "error " << s << ' ' << e.what() << '|';
        }
    }
    o.pass = failures == 0;
    o.detail = "100 covers at k = 1 + Delta + (1 + degeneracy), " + std::to_string(rounds) + " augmentation rounds, " +
               std::to_string(failures) + " failures";
    o.report = rep.str();
    return o;
}

Outcome transversal_equivalence() {
    Outcome o;
    std::uint64_t matrices = 0;
    std::uint64_t mismatches = 0;
    std::uint64_t zero = 0;
    for (int k = 1; k <= 4; ++k)
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (k * k)); ++mask) {
            auto a = matrix::BinaryMatrix::from_mask(k, mask);
            const bool per_zero = matrix::permanent(a) == 0;
            auto sigma = matrix::one_transversal(a);
            auto w = matrix::frobenius_konig_witness(a);
            bool ok = per_zero == !sigma && per_zero == w.has_value();
            if (w) {
                ok = ok && w->rows.size() + w->columns.size() == static_cast<std::size_t>(k + 1);
                for (int i : w->rows)
                    for (int j : w->columns)
                        ok = ok && !a.at(i, j);
            }
            if (sigma)
                for (int i = 0; i < k; ++i)
                    ok = ok && a.at(i, (*sigma)[static_cast<std::size_t>(i)]);
            mismatches += !ok;
            zero += per_zero;
            ++matrices;
        }
    o.pass = mismatches == 0;
    o.detail = std::to_string(matrices) + " matrices (k<=4), " + std::to_string(zero) + " with zero permanent, " +
               std::to_string(mismatches) + " disagreements";
    o.report = o.detail;
    return o;
}

Outcome perm_zero_criterion() {
    Outcome o;
    auto exact2 = matrix::zero_permanent_prob_exact(2, Rational(1, 2));
    auto e = matrix::zero_permanent_prob_mc(12, 0.5, 1'000'000, 2024);
    const double ratio = e.estimate / matrix::zero_permanent_asymptotic(12, 0.5);
    const bool covers = e.covers(kPermZeroPilotValue);
    const bool in_band = kPermZeroRatioLow <= ratio && ratio <= kPermZeroRatioHigh;
    o.pass = exact2 == Rational(9, 16) && covers && in_band;
    o.detail = "exact(2,1/2)=" + exact2.str() + "; k=12 estimate " + fmt(e.estimate) + " CI [" + fmt(e.ci_low) + ", " +
               fmt(e.ci_high) + "] " + (covers ? "covers" : "misses") + " pilot " + fmt(kPermZeroPilotValue) + "; ratio " +
               fmt(ratio) + " in [" + fmt(kPermZeroRatioLow) + ", " + fmt(kPermZeroRatioHigh) + "]: " + (in_band ? "yes" : "no");
    o.report = std::to_string(e.hits) + "/" + std::to_string(e.trials);
    return o;
}

Outcome truncated_bound_criterion() {
    Outcome o;
    int checks = 0;
    int violations = 0;
    for (int k = 1; k <= 4; ++k)
        for (int step = 1; step <= 9; ++step) {
            Rational p(step, 10);
            violations += !(matrix::truncated_inclusion_exclusion_bound(k, p) <= matrix::zero_permanent_prob_exact(k, p));
            ++checks;
        }
    o.pass = violations == 0;
    o.detail = std::to_string(checks) + " (k, p) pairs, " + std::to_string(violations) + " violations";
    o.report = o.detail;
    return o;
}

Outcome zero_transversal_criterion() {
    Outcome o;
    auto exact = matrix::no_zero_transversal_prob_exact(2, 3);
    auto small = matrix::no_zero_transversal_prob_mc(2, 3, 100'000, 2025);
    auto large = matrix::no_zero_transversal_prob_mc(30, 11, 100'000, 2026);
    const bool agree = small.covers(static_cast<double>(exact));
    const bool fence = large.estimate < kZeroTransversalFence;
    o.pass = agree && fence;
    auto bound = matrix::zero_transversal_bound(30, 11);
    o.detail = "(2,3) exact " + exact.str() + " " + (agree ? "inside" : "outside") + " CI [" + fmt(small.ci_low) + ", " +
               fmt(small.ci_high) + "]; (30,11) estimate " + fmt(large.estimate) + (fence ? " < " : " >= ") +
               fmt(kZeroTransversalFence) + " (asymptotic bound there: " + (bound ? fmt(*bound) : "n/a") + ")";
    o.report = std::to_string(small.hits) + "," + std::to_string(large.hits);
    return o;
}

Outcome correlation_criterion() {
    Outcome o;
    auto [block, corner] = matrix::block_nonzero_probabilities(2, 2, 2, 2);
    Rational product = corner * corner * corner * corner;
    o.pass = block > product;
    o.detail = "Pr[all four cells nonzero] = " + block.str() + " > Pr[cell nonzero]^4 = " + product.str();
    o.report = o.detail;
    return o;
}

// Success-rate baselines recorded at the first build (fractions of 500 runs).
constexpr double kFractionalBaseline = 0.734;
constexpr double kLllBaseline = 0.666;

Outcome randomized_criterion() {
    Outcome o;
    std::ostringstream rep;
    int invalid = 0;
    int frac_ok = 0;
    int lll_ok = 0;
    std::uint64_t rounds = 0;
    std::uint64_t resamples = 0;
    int frac_by_k[4] = {0, 0, 0, 0};
    int lll_by_k[3] = {0, 0, 0};
    for (std::uint64_t s = 0; s < 500; ++s) {
        CounterRng rng(s, 1400);
        const int k = 3 + static_cast<int>(s % 4);
        auto g = sample::random_bipartite_graph(6, 6, 0.5, rng);
        ListInstance inst{g, sample::random_lists(12, k, k + 4, rng)};
        auto r = probabilistic::pack_fractional(inst, probabilistic::bipartite_fractional(g), 0, s);
        if (r.packing) {
            invalid += validate_packing(inst, *r.packing).has_value() || !oracle::is_list_packing(inst, *r.packing);
            ++frac_ok;
            ++frac_by_k[k - 3];
            rounds += r.steps;
            rep << packing_text(*r.packing);
        }
        rep << r.steps << '|';
    }
    for (std::uint64_t s = 0; s < 500; ++s) {
        CounterRng rng(s, 1401);
        const int k = 7 + static_cast<int>(s % 3);
        auto g = sample::random_bipartite_regularish(40, 8, rng);
        auto cover = sample::random_cover(g, k, rng);
        auto r = probabilistic::pack_bipartite_lll(cover, 0, s);
        if (r.packing) {
            invalid += validate_packing(cover, *r.packing).has_value() || !oracle::is_cover_packing(cover, *r.packing);
            ++lll_ok;
            ++lll_by_k[k - 7];
            resamples += r.steps;
            rep << packing_text(*r.packing);
        }
        rep << r.steps << '|';
    }
    const double frac_rate = frac_ok / 500.0;
    const double lll_rate = lll_ok / 500.0;
    o.pass = invalid == 0 && frac_rate >= kFractionalBaseline - kBaselineSlack && lll_rate >= kLllBaseline - kBaselineSlack;
    std::ostringstream d;
    d << invalid << " invalid outputs; fractional success " << frac_rate << " (baseline " << kFractionalBaseline << "; k=3..6: "
      << frac_by_k[0] << '/' << frac_by_k[1] << '/' << frac_by_k[2] << '/' << frac_by_k[3] << " of 125, mean rounds "
      << fmt(frac_ok ? static_cast<double>(rounds) / frac_ok : 0) << "); resampling success " << lll_rate << " (baseline "
      << kLllBaseline << "; k=7..9 at max degree 8: " << lll_by_k[0] << '/' << lll_by_k[1] << '/' << lll_by_k[2]
      << ", mean resamples " << fmt(lll_ok ? static_cast<double>(resamples) / lll_ok : 0) << ")";
    o.detail = d.str();
    o.report = rep.str();
    return o;
}

std::set<int> parse_ids(const std::string& text) {
    std::set<int> ids;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ','))
        if (!item.empty())
            ids.insert(std::stoi(item));
    return ids;
}

}  // namespace

int main(int argc, char** argv) {
    std::set<int> expected_failures;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--expect-fail" && i + 1 < argc) {
            expected_failures = parse_ids(argv[++i]);
        } else if (arg == "--with-k4") {
            with_k4 = true;
        } else {
            std::cerr << "usage: acceptance [--expect-fail ID,...] [--with-k4]\n";
            return 64;
        }
    }

    std::vector<Criterion> criteria{
        {1, "C4 has list packing number 3", 1, false, c4_criterion},
        {2, "complete graphs and P3 by canonical enumeration", 300, false, complete_graphs_criterion},
        {3, "K_{2,6} cover needs 4 colours", 10, true, kab_criterion},
        {4, "shift construction has no 3-packing", 60, false, shift_criterion},
        {5, "degenerate packer at k = 2 * degeneracy", 0, true, degenerate_suite},
        {6, "complete-graph packer with colours in <= k lists", 0, true, complete_suite},
        {7, "ordered bipartite packer at k = Delta_A + 1", 0, true, ordered_suite},
        {8, "augmentation packer at k = 1 + Delta + chi_c bound", 0, true, augment_suite},
        {9, "zero permanent <=> no 1-transversal <=> zero block", 120, false, transversal_equivalence},
        {10, "zero-permanent probability at k = 12", 300, true, perm_zero_criterion},
        {11, "truncated inclusion-exclusion lower bound", 0, false, truncated_bound_criterion},
        {12, "0-transversals in sums of permutation matrices", 600, true, zero_transversal_criterion},
        {13, "negative correlation fails at k = n = 2", 0, false, correlation_criterion},
        {14, "randomized packers emit only valid packings", 0, true, randomized_criterion},
    };

    std::set<int> failed;
    std::vector<std::pair<int, std::string>> reports;
    auto print = [](int id, bool pass, const std::string& name, const std::string& detail) {
        std::printf("%s %02d %s: %s\n", pass ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
        std::fflush(stdout);
    };
    for (auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::string detail = o.detail + " [" + fmt(seconds) + " s";
        if (c.time_limit > 0) {
            const bool in_time = seconds < c.time_limit;
            o.pass = o.pass && in_time;
            detail += in_time ? ", limit " + fmt(c.time_limit) + " s]" : ", OVER limit " + fmt(c.time_limit) + " s]";
        } else {
            detail += "]";
        }
        if (!o.pass)
            failed.insert(c.id);
        print(c.id, o.pass, c.name, detail);
        if (c.seeded)
            reports.emplace_back(c.id, o.report);
    }

    // Criterion 15: rerun every seeded criterion and compare reports byte for byte.
    int identical = 0;
    std::string differing;
    for (const auto& [id, report] : reports) {
        auto again = criteria[static_cast<std::size_t>(id - 1)].run();
        if (again.report == report)
            ++identical;
        else
            differing += " " + std::to_string(id);
    }
    const bool deterministic = identical == static_cast<int>(reports.size());
    if (!deterministic)
        failed.insert(15);
    print(15, deterministic, "seeded criteria repeat byte for byte",
          std::to_string(identical) + "/" + std::to_string(reports.size()) + " reports identical" +
              (differing.empty() ? "" : "; differing:" + differing));

    std::printf("%zu/15 criteria passed\n", 15 - failed.size());
    if (failed != expected_failures) {
        std::printf("failing set differs from the expected set\n");
        return 1;
    }
    return 0;
}
