#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chromzeta/euler.hpp"
#include "chromzeta/lattice.hpp"
#include "chromzeta/montecarlo.hpp"

namespace chromzeta {

// 17 significant digits; round-trips every finite double.
std::string format_double(double x);

std::string json_escape(std::string_view s);

/// Insertion-ordered JSON object builder. Floats use format_double; non-finite
/// values become null.
class JsonObject {
 public:
  JsonObject& add(std::string_view key, double value);
  JsonObject& add(std::string_view key, std::uint64_t value);
  JsonObject& add(std::string_view key, std::int64_t value);
  JsonObject& add(std::string_view key, int value) { return add(key, static_cast<std::int64_t>(value)); }
  JsonObject& add(std::string_view key, unsigned value) { return add(key, static_cast<std::uint64_t>(value)); }
  JsonObject& add(std::string_view key, bool value);
  JsonObject& add(std::string_view key, const char* value) { return add_string(key, value); }
  JsonObject& add_string(std::string_view key, std::string_view value);
  JsonObject& add_raw(std::string_view key, std::string raw_json);

  std::string str() const;

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
};

// {value, lower, upper, truncation_prime, tail_epsilon, exact_zero, rounding}
std::string to_json(const CertifiedProduct& p);
std::string to_json(const Estimate& e);
// {"fraction": "3/4", "numerator": "3", "denominator": "4", "value": 0.75}
std::string to_json(const ExactFraction& f);
std::string to_json(const SweepRow& row);

// n,trials,successes,point,ci_low,ci_high,limit_value,limit_lower,limit_upper,deviation
std::string sweep_csv_header();
std::string to_csv(const SweepRow& row);

}  // namespace chromzeta
