#pragma once

#include "listpack/matrix.hpp"

#include "json.hpp"

#include <cstdint>
#include <string>

namespace listpack::cli {

nlohmann::ordered_json record(const char* schema);
/// Re-reads a serialised object so it can be nested in a record; the stamps
/// of the inner object are dropped.
nlohmann::ordered_json embed(const std::string& json_text);

nlohmann::ordered_json perm_zero_record(int k, const matrix::Rational& p, std::uint64_t trials, std::uint64_t seed,
                                        int threads, bool with_exact);
nlohmann::ordered_json zero_transversal_record(int n, int k, std::uint64_t trials, std::uint64_t seed, int threads);

}  // namespace listpack::cli
