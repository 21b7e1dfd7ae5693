#include "listpack/cli.hpp"

#include "record.hpp"

#include "listpack/probabilistic.hpp"
#include "listpack/random_instances.hpp"

#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

namespace listpack::cli {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

struct Job {
    std::string name;
    std::string kind;
    json params;
    std::uint64_t seed;
};

[[noreturn]] void schema_error(const std::string& what) { throw std::invalid_argument("experiment config: " + what); }

const json& param(const Job& job, const char* key) {
    auto it = job.params.find(key);
    if (it == job.params.end())
        schema_error("experiment '" + job.name + "' is missing parameter '" + key + "'");
    return *it;
}

int int_param(const Job& job, const char* key) {
    const auto& v = param(job, key);
    if (!v.is_number_integer())
        schema_error("parameter '" + std::string(key) + "' of '" + job.name + "' must be an integer");
    return v.get<int>();
}

int int_param_or(const Job& job, const char* key, int fallback) {
    return job.params.contains(key) ? int_param(job, key) : fallback;
}

matrix::Rational rational_param(const Job& job, const char* key) {
    const auto& v = param(job, key);
    if (v.is_string())
        return matrix::parse_rational(v.get<std::string>());
    if (v.is_number())
        return matrix::parse_rational(v.dump());
    schema_error("parameter '" + std::string(key) + "' of '" + job.name + "' must be a number or a fraction string");
}

ordered_json run_job(const Job& job) {
    ordered_json rec;
    if (job.kind == "perm-zero") {
        rec = perm_zero_record(int_param(job, "k"), rational_param(job, "p"), static_cast<std::uint64_t>(int_param(job, "trials")),
                               job.seed, 1, false);
    } else if (job.kind == "zero-transversal") {
        rec = zero_transversal_record(int_param(job, "n"), int_param(job, "k"), static_cast<std::uint64_t>(int_param(job, "trials")),
                                      job.seed, 1);
    } else if (job.kind == "bip-lll") {
        CounterRng rng(job.seed, 1);
        auto g = sample::random_bipartite_regularish(int_param(job, "side"), int_param(job, "degree"), rng);
        auto cover = sample::random_cover(g, int_param(job, "k"), rng);
        auto r = probabilistic::pack_bipartite_lll(cover, static_cast<std::uint64_t>(int_param_or(job, "max_resamples", 0)), job.seed);
        rec = record("listpack.experiment.bip-lll");
        rec["success"] = r.packing.has_value();
        rec["valid"] = !r.packing || !validate_packing(cover, *r.packing);
        rec["resamples"] = r.steps;
        rec["budget"] = r.budget;
    } else if (job.kind == "fractional") {
        CounterRng rng(job.seed, 1);
        const int left = int_param(job, "left");
        const int right = int_param(job, "right");
        auto g = sample::random_bipartite_graph(left, right, static_cast<double>(rational_param(job, "edge_p")), rng);
        const int k = int_param(job, "k");
        ListInstance inst{g, sample::random_lists(left + right, k, int_param(job, "palette"), rng)};
        auto r = probabilistic::pack_fractional(inst, probabilistic::bipartite_fractional(g),
                                                static_cast<std::uint64_t>(int_param_or(job, "max_rounds", 0)), job.seed);
        rec = record("listpack.experiment.fractional");
        rec["success"] = r.packing.has_value();
        rec["valid"] = !r.packing || !validate_packing(inst, *r.packing);
        rec["rounds"] = r.steps;
        rec["budget"] = r.budget;
    } else {
        schema_error("unknown kind '" + job.kind + "'");
    }
    ordered_json out = record("listpack.experiment");
    out["experiment"] = job.name;
    out["kind"] = job.kind;
    out["seed"] = job.seed;
    out["params"] = job.params;
    for (auto& [key, value] : rec.items())
        if (key != "schema" && key != "version" && key != "seed")
            out[key] = value;
    return out;
}

std::vector<Job> parse_config(const std::string& text) {
    json config;
    try {
        config = json::parse(text);
    } catch (const json::parse_error& e) {
        schema_error(std::string("invalid JSON: ") + e.what());
    }
    if (!config.is_object() || !config.contains("experiments") || !config["experiments"].is_array())
        schema_error("expected an object with an \"experiments\" array");
    static const std::set<std::string> kinds{"perm-zero", "zero-transversal", "bip-lll", "fractional"};
    std::set<std::string> names;
    std::vector<Job> jobs;
    for (const auto& e : config["experiments"]) {
        if (!e.is_object() || !e.contains("name") || !e["name"].is_string())
            schema_error("every experiment needs a string \"name\"");
        auto name = e["name"].get<std::string>();
        if (!names.insert(name).second)
            schema_error("duplicate experiment name '" + name + "'");
        if (!e.contains("kind") || !e["kind"].is_string() || !kinds.count(e["kind"].get<std::string>()))
            schema_error("experiment '" + name + "' needs a kind among perm-zero, zero-transversal, bip-lll, fractional");
        json params = e.value("params", json::object());
        if (!params.is_object())
            schema_error("\"params\" of '" + name + "' must be an object");
        std::vector<std::uint64_t> seeds;
        if (e.contains("seeds")) {
            if (!e["seeds"].is_array())
                schema_error("\"seeds\" of '" + name + "' must be an array");
            for (const auto& s : e["seeds"]) {
                if (!s.is_number_unsigned())
                    schema_error("seeds of '" + name + "' must be non-negative integers");
                seeds.push_back(s.get<std::uint64_t>());
            }
        } else if (e.contains("repetitions")) {
            if (!e["repetitions"].is_number_unsigned())
                schema_error("\"repetitions\" of '" + name + "' must be a non-negative integer");
            const auto base = e.value("seed", std::uint64_t{0});
            for (std::uint64_t r = 0; r < e["repetitions"].get<std::uint64_t>(); ++r)
                seeds.push_back(base + r);
        } else {
            schema_error("experiment '" + name + "' needs \"seeds\" or \"repetitions\"");
        }
        for (auto s : seeds)
            jobs.push_back({name, e["kind"].get<std::string>(), params, s});
    }
    return jobs;
}

}  // namespace

void run_experiments(const std::string& config, std::ostream& report, int threads) {
    auto jobs = parse_config(config);
    std::vector<std::string> lines(jobs.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_lock;
    auto worker = [&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) {
            try {
                lines[i] = run_job(jobs[i]).dump();
            } catch (...) {
                std::lock_guard lock(failure_lock);
                if (!failure)
                    failure = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < std::max(1, threads); ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
    for (const auto& line : lines)
        report << line << '\n';
}

}  // namespace listpack::cli
