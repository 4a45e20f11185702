#include "sidon/report.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

namespace sidon {

namespace {

std::string json_quote(std::string_view s) { return nlohmann::json(std::string(s)).dump(); }

std::string json_number(double x) { return std::isfinite(x) ? format_number(x) : "null"; }

std::string csv_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return format_number(x);
}

}  // namespace

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

JsonObject& JsonObject::number(std::string_view key, double value) {
  return raw(key, json_number(value));
}

JsonObject& JsonObject::integer(std::string_view key, long long value) {
  return raw(key, std::to_string(value));
}

JsonObject& JsonObject::boolean(std::string_view key, bool value) { return raw(key, value ? "true" : "false"); }

JsonObject& JsonObject::string(std::string_view key, std::string_view value) { return raw(key, json_quote(value)); }

JsonObject& JsonObject::null(std::string_view key) { return raw(key, "null"); }

JsonObject& JsonObject::raw(std::string_view key, std::string value) {
  fields_.emplace_back(std::string(key), std::move(value));
  return *this;
}

std::string JsonObject::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < fields_.size(); ++i) {
    if (i) out += ",";
    out += json_quote(fields_[i].first) + ":" + fields_[i].second;
  }
  return out + "}";
}

std::string json_array(const std::vector<std::string>& rendered) {
  std::string out = "[";
  for (std::size_t i = 0; i < rendered.size(); ++i) {
    if (i) out += ",";
    out += rendered[i];
  }
  return out + "]";
}

std::string to_json(const Enclosure& e) {
  return JsonObject().number("lo", e.lo).number("hi", e.hi).string("method", e.method).str();
}

std::string to_json(const GeneralPoly& q) {
  std::vector<std::string> terms;
  for (const auto& [alpha, c] : q.all_terms()) {
    std::vector<std::string> exps;
    for (int j = 0; j < alpha.size(); ++j) exps.push_back(std::to_string(alpha[j]));
    terms.push_back(JsonObject().raw("alpha", json_array(exps)).number("re", c.real()).number("im", c.imag()).str());
  }
  return JsonObject().integer("n", q.num_vars()).raw("terms", json_array(terms)).str();
}

std::string to_json(const SidonBoundReport& r) {
  JsonObject o;
  o.integer("m", r.m).integer("n", r.n).number("upper_trivial", r.upper_trivial);
  if (r.upper_main) {
    o.number("upper_main", *r.upper_main);
  } else {
    o.null("upper_main");
  }
  o.number("upper_best", r.upper_best)
      .boolean("trivial_applicable", r.trivial_applicable)
      .boolean("main_applicable", r.main_applicable)
      .string("best_formula", r.best_formula)
      .number("lower_certified", r.lower_certified);
  if (r.witness) {
    o.raw("witness", to_json(GeneralPoly(*r.witness)));
  } else {
    o.null("witness");
  }
  o.number("old_bound_shape", r.old_bound_shape);
  return o.str();
}

std::string to_json(const BohrReport& r) {
  return JsonObject()
      .integer("n", r.n)
      .number("r_lower", r.r_lower)
      .number("r_upper", r.r_upper)
      .number("b_estimate", r.b_estimate)
      .integer("terms_used", r.terms_used)
      .number("tail_bound", r.tail_bound)
      .number("series_at_lower", r.series_at_lower)
      .string("strategy", strategy_name(r.strategy))
      .str();
}

std::string sidon_csv_header() { return "m,n,lower,upper_trivial,upper_main,upper_best\n"; }

std::string to_csv(const SidonBoundReport& r) {
  return std::to_string(r.m) + "," + std::to_string(r.n) + "," + csv_number(r.lower_certified) + "," +
         csv_number(r.upper_trivial) + "," + (r.upper_main ? csv_number(*r.upper_main) : std::string()) + "," +
         csv_number(r.upper_best) + "\n";
}

std::string bohr_csv_header() { return "n,r_lower,r_upper,b_estimate,terms_used\n"; }

std::string to_csv(const BohrReport& r) {
  return std::to_string(r.n) + "," + csv_number(r.r_lower) + "," + csv_number(r.r_upper) + "," +
         csv_number(r.b_estimate) + "," + std::to_string(r.terms_used) + "\n";
}

std::string strategy_name(DegreeStrategy s) {
  return s == DegreeStrategy::MinSelection ? "min" : "refined";
}

}  // namespace sidon
