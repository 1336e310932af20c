#include "chromzeta/report.hpp"

#include <cmath>
#include <cstdio>

namespace chromzeta {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string json_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

JsonObject& JsonObject::add(std::string_view key, double value) {
  return add_raw(key, std::isfinite(value) ? format_double(value) : "null");
}

JsonObject& JsonObject::add(std::string_view key, std::uint64_t value) { return add_raw(key, std::to_string(value)); }

JsonObject& JsonObject::add(std::string_view key, std::int64_t value) { return add_raw(key, std::to_string(value)); }

JsonObject& JsonObject::add(std::string_view key, bool value) { return add_raw(key, value ? "true" : "false"); }

JsonObject& JsonObject::add_string(std::string_view key, std::string_view value) {
  return add_raw(key, "\"" + json_escape(value) + "\"");
}

JsonObject& JsonObject::add_raw(std::string_view key, std::string raw_json) {
  fields_.emplace_back(std::string(key), std::move(raw_json));
  return *this;
}

std::string JsonObject::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < fields_.size(); ++i) {
    if (i) out += ", ";
    out += "\"" + json_escape(fields_[i].first) + "\": " + fields_[i].second;
  }
  return out + "}";
}

std::string to_json(const CertifiedProduct& p) {
  return JsonObject()
      .add("value", p.value)
      .add("lower", p.lower)
      .add("upper", p.upper)
      .add("truncation_prime", p.truncation_prime)
      .add("tail_epsilon", p.tail_epsilon)
      .add("exact_zero", p.exact_zero)
      .add("rounding", p.rounding)
      .str();
}

std::string to_json(const Estimate& e) {
  return JsonObject()
      .add("successes", e.successes)
      .add("trials", e.trials)
      .add("point", e.point)
      .add("ci_low", e.ci_low)
      .add("ci_high", e.ci_high)
      .add("confidence", e.confidence)
      .add("seed", e.seed)
      .str();
}

std::string to_json(const ExactFraction& f) {
  return JsonObject()
      .add_string("fraction", f.str())
      .add_string("numerator", f.numerator.str())
      .add_string("denominator", f.denominator.str())
      .add("value", f.to_double())
      .str();
}

std::string to_json(const SweepRow& row) {
  return JsonObject()
      .add("n", static_cast<std::int64_t>(row.n))
      .add("trials", row.estimate.trials)
      .add("successes", row.estimate.successes)
      .add("point", row.estimate.point)
      .add("ci_low", row.estimate.ci_low)
      .add("ci_high", row.estimate.ci_high)
      .add("limit_value", row.limit.value)
      .add("limit_lower", row.limit.lower)
      .add("limit_upper", row.limit.upper)
      .add("deviation", row.deviation)
      .str();
}

std::string sweep_csv_header() {
  return "n,trials,successes,point,ci_low,ci_high,limit_value,limit_lower,limit_upper,deviation";
}

std::string to_csv(const SweepRow& row) {
  return std::to_string(row.n) + "," + std::to_string(row.estimate.trials) + "," +
         std::to_string(row.estimate.successes) + "," + format_double(row.estimate.point) + "," +
         format_double(row.estimate.ci_low) + "," + format_double(row.estimate.ci_high) + "," +
         format_double(row.limit.value) + "," + format_double(row.limit.lower) + "," +
         format_double(row.limit.upper) + "," + format_double(row.deviation);
}

}  // namespace chromzeta
