#include "sidon/poly.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <json.hpp>

#include "sidon/error.hpp"
#include "sidon/summation.hpp"

namespace sidon {

namespace {

void check_alpha(const MultiIndex& alpha, int n) {
  if (alpha.size() != n) {
    throw DimensionError("multi-index of length " + std::to_string(alpha.size()) +
                         " in a polynomial of " + std::to_string(n) + " variables");
  }
}

}  // namespace

HomPoly::HomPoly(int n, int m) : n_(n), m_(m) {
  if (n < 1) throw DimensionError("a polynomial needs n >= 1 variables");
  if (m < 0) throw DimensionError("negative degree");
}

HomPoly::HomPoly(int n, int m, const TermMap& terms) : HomPoly(n, m) {
  for (const auto& [alpha, c] : terms) {
    check_alpha(alpha, n);
    if (alpha.degree() != m) {
      throw DimensionError("term of degree " + std::to_string(alpha.degree()) +
                           " in a polynomial of degree " + std::to_string(m));
    }
    if (c != Complex(0.0, 0.0)) terms_.emplace(alpha, c);
  }
}

HomPoly HomPoly::from_terms(int n, int m,
                            const std::vector<std::pair<MultiIndex, Complex>>& terms) {
  TermMap merged;
  for (const auto& [alpha, c] : terms) merged[alpha] += c;
  return HomPoly(n, m, merged);
}

Complex HomPoly::coefficient(const MultiIndex& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? Complex(0.0, 0.0) : it->second;
}

HomPoly HomPoly::scaled(Complex factor) const {
  TermMap out;
  for (const auto& [alpha, c] : terms_) out.emplace(alpha, c * factor);
  return HomPoly(n_, m_, out);
}

GeneralPoly::GeneralPoly(int n) : n_(n) {
  if (n < 1) throw DimensionError("a polynomial needs n >= 1 variables");
}

GeneralPoly::GeneralPoly(const HomPoly& p) : GeneralPoly(p.num_vars()) { set_part(p); }

GeneralPoly GeneralPoly::from_terms(int n,
                                    const std::vector<std::pair<MultiIndex, Complex>>& terms) {
  std::map<int, std::vector<std::pair<MultiIndex, Complex>>> by_degree;
  for (const auto& term : terms) {
    check_alpha(term.first, n);
    by_degree[term.first.degree()].push_back(term);
  }
  GeneralPoly q(n);
  for (const auto& [m, part_terms] : by_degree) q.set_part(HomPoly::from_terms(n, m, part_terms));
  return q;
}

int GeneralPoly::degree() const { return parts_.empty() ? 0 : parts_.rbegin()->first; }

std::size_t GeneralPoly::size() const {
  std::size_t total = 0;
  for (const auto& [m, p] : parts_) total += p.size();
  return total;
}

Complex GeneralPoly::constant() const {
  auto it = parts_.find(0);
  return it == parts_.end() ? Complex(0.0, 0.0) : it->second.terms().begin()->second;
}

void GeneralPoly::set_part(const HomPoly& p) {
  if (p.num_vars() != n_) throw DimensionError("part has a different variable count");
  parts_.erase(p.degree());
  if (!p.is_zero()) parts_.emplace(p.degree(), p);
}

GeneralPoly GeneralPoly::scaled(Complex factor) const {
  GeneralPoly out(n_);
  for (const auto& [m, p] : parts_) out.set_part(p.scaled(factor));
  return out;
}

std::vector<std::pair<MultiIndex, Complex>> GeneralPoly::all_terms() const {
  std::vector<std::pair<MultiIndex, Complex>> out;
  for (const auto& [m, p] : parts_) {
    for (const auto& term : p.terms()) out.push_back(term);
  }
  return out;
}

Enclosure::Enclosure(double lo_, double hi_, std::string method_)
    : lo(lo_), hi(hi_), method(std::move(method_)) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi) {
    throw Error("invalid enclosure [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

double Enclosure::relative_width() const {
  if (hi == 0.0) return 0.0;
  if (lo <= 0.0) return std::numeric_limits<double>::infinity();
  return (hi - lo) / lo;
}

double l1_coeff_norm(const HomPoly& p) {
  CompensatedSum sum;
  for (const auto& [alpha, c] : p.terms()) sum.add(std::abs(c));
  return sum.value();
}

double l1_coeff_norm(const GeneralPoly& p) {
  CompensatedSum sum;
  for (const auto& [m, part] : p.parts()) {
    for (const auto& [alpha, c] : part.terms()) sum.add(std::abs(c));
  }
  return sum.value();
}

namespace {

Complex monomial(const MultiIndex& alpha, std::span<const Complex> z) {
  Complex value(1.0, 0.0);
  for (int j = 0; j < alpha.size(); ++j) {
    for (int e = 0; e < alpha[j]; ++e) value *= z[static_cast<std::size_t>(j)];
  }
  return value;
}

void check_point(int n, std::span<const Complex> z) {
  if (static_cast<int>(z.size()) != n) {
    throw DimensionError("point of length " + std::to_string(z.size()) + " for a polynomial in " +
                         std::to_string(n) + " variables");
  }
}

}  // namespace

Complex evaluate(const HomPoly& p, std::span<const Complex> z) {
  check_point(p.num_vars(), z);
  Complex value(0.0, 0.0);
  for (const auto& [alpha, c] : p.terms()) value += c * monomial(alpha, z);
  return value;
}

Complex evaluate(const GeneralPoly& p, std::span<const Complex> z) {
  check_point(p.num_vars(), z);
  Complex value(0.0, 0.0);
  for (const auto& [m, part] : p.parts()) {
    for (const auto& [alpha, c] : part.terms()) value += c * monomial(alpha, z);
  }
  return value;
}

TetraSplit tetra_split(const HomPoly& p) {
  TermMap tetra;
  TermMap rest;
  for (const auto& [alpha, c] : p.terms()) {
    (alpha.is_tetrahedral() ? tetra : rest).emplace(alpha, c);
  }
  return {HomPoly(p.num_vars(), p.degree(), tetra), HomPoly(p.num_vars(), p.degree(), rest)};
}

std::vector<std::pair<int, HomPoly>> homogeneous_parts(const GeneralPoly& q) {
  return {q.parts().begin(), q.parts().end()};
}

// ---------------------------------------------------------------------------
// JSON file format

namespace {

using nlohmann::json;

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

void require_keys(const json& object, const std::string& where,
                  std::initializer_list<const char*> keys) {
  if (!object.is_object()) throw SchemaError(where, "expected an object");
  for (const char* key : keys) {
    if (!object.contains(key)) throw SchemaError(where + "." + key, "missing");
  }
  for (const auto& item : object.items()) {
    if (std::find_if(keys.begin(), keys.end(), [&](const char* k) { return item.key() == k; }) ==
        keys.end()) {
      throw SchemaError(where + "." + item.key(), "unknown field");
    }
  }
}

double require_number(const json& value, const std::string& where) {
  if (!value.is_number()) throw SchemaError(where, "expected a number");
  return value.get<double>();
}

}  // namespace

GeneralPoly read_poly(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("malformed polynomial JSON", line, column);
  }
  require_keys(doc, "$", {"n", "terms"});
  const json& n_field = doc["n"];
  if (!n_field.is_number_integer() || n_field.get<long long>() < 1) {
    throw SchemaError("$.n", "expected an integer >= 1");
  }
  const int n = n_field.get<int>();
  const json& terms = doc["terms"];
  if (!terms.is_array()) throw SchemaError("$.terms", "expected an array");

  std::vector<std::pair<MultiIndex, Complex>> parsed;
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const std::string where = "$.terms[" + std::to_string(t) + "]";
    const json& term = terms[t];
    require_keys(term, where, {"alpha", "re", "im"});
    const json& alpha = term["alpha"];
    if (!alpha.is_array()) throw SchemaError(where + ".alpha", "expected an array");
    if (static_cast<int>(alpha.size()) != n) {
      throw DimensionError(where + ".alpha has length " + std::to_string(alpha.size()) +
                           " but n = " + std::to_string(n));
    }
    std::vector<int> exponents;
    for (std::size_t j = 0; j < alpha.size(); ++j) {
      const json& e = alpha[j];
      if (!e.is_number_integer() || e.get<long long>() < 0) {
        throw SchemaError(where + ".alpha[" + std::to_string(j) + "]",
                          "expected an integer >= 0");
      }
      exponents.push_back(e.get<int>());
    }
    const double re = require_number(term["re"], where + ".re");
    const double im = require_number(term["im"], where + ".im");
    parsed.emplace_back(MultiIndex(std::move(exponents)), Complex(re, im));
  }
  return GeneralPoly::from_terms(n, parsed);
}

HomPoly read_hom_poly(std::string_view text) {
  const GeneralPoly q = read_poly(text);
  if (q.parts().size() > 1) {
    throw SchemaError("$.terms", "terms of different degrees in a homogeneous polynomial");
  }
  if (q.is_zero()) return HomPoly(q.num_vars(), 0);
  return q.parts().begin()->second;
}

std::string write_poly(const GeneralPoly& q) {
  nlohmann::ordered_json doc;
  doc["n"] = q.num_vars();
  doc["terms"] = nlohmann::ordered_json::array();
  for (const auto& [alpha, c] : q.all_terms()) {
    nlohmann::ordered_json term;
    term["alpha"] = alpha.exponents();
    term["re"] = c.real();
    term["im"] = c.imag();
    doc["terms"].push_back(std::move(term));
  }
  return doc.dump();
}

}  // namespace sidon
