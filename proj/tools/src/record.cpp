#include "record.hpp"

#include "listpack/version.hpp"

#include <stdexcept>

namespace listpack::cli {

using nlohmann::ordered_json;

ordered_json record(const char* schema) {
    ordered_json j;
    j["schema"] = schema;
    j["version"] = listpack::version;
    return j;
}

ordered_json embed(const std::string& json_text) {
    auto j = ordered_json::parse(json_text);
    j.erase("schema");
    j.erase("version");
    return j;
}

namespace {

void put_estimate(ordered_json& j, const matrix::Estimate& e) {
    j["hits"] = e.hits;
    j["estimate"] = e.estimate;
    j["ci"] = {e.ci_low, e.ci_high};
}

}  // namespace

ordered_json perm_zero_record(int k, const matrix::Rational& p, std::uint64_t trials, std::uint64_t seed, int threads,
                              bool with_exact) {
    if (p < 0 || p > 1)
        throw std::invalid_argument("p must lie in [0, 1]");
    const double pd = static_cast<double>(p);
    auto rec = record("listpack.matrix.perm-zero");
    rec["k"] = k;
    rec["p"] = pd;
    rec["trials"] = trials;
    rec["seed"] = seed;
    auto e = matrix::zero_permanent_prob_mc(k, pd, trials, seed, threads);
    put_estimate(rec, e);
    const double predicted = matrix::zero_permanent_asymptotic(k, pd);
    rec["predicted"] = predicted;
    rec["ratio"] = predicted > 0 ? ordered_json(e.estimate / predicted) : ordered_json(nullptr);
    if (with_exact) {
        auto exact = matrix::zero_permanent_prob_exact(k, p);
        rec["exact"] = static_cast<double>(exact);
        rec["exact_fraction"] = exact.str();
    }
    return rec;
}

ordered_json zero_transversal_record(int n, int k, std::uint64_t trials, std::uint64_t seed, int threads) {
    auto rec = record("listpack.matrix.zero-transversal");
    rec["n"] = n;
    rec["k"] = k;
    rec["trials"] = trials;
    rec["seed"] = seed;
    auto e = matrix::no_zero_transversal_prob_mc(n, k, trials, seed, threads);
    put_estimate(rec, e);
    auto bound = matrix::zero_transversal_bound(n, k);
    rec["predicted"] = bound ? ordered_json(*bound) : ordered_json(nullptr);
    rec["ratio"] = bound && *bound > 0 ? ordered_json(e.estimate / *bound) : ordered_json(nullptr);
    return rec;
}

}  // namespace listpack::cli
