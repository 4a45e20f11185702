#pragma once

// Text serialization of reports. Every number is printed with 17
// significant digits; non-finite values print as null (JSON) or inf (CSV).

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sidon/bohr.hpp"
#include "sidon/poly.hpp"
#include "sidon/sidon_bounds.hpp"

namespace sidon {

std::string format_number(double x);

/// Flat JSON object writer that keeps insertion order.
class JsonObject {
 public:
  JsonObject& number(std::string_view key, double value);
  JsonObject& integer(std::string_view key, long long value);
  JsonObject& boolean(std::string_view key, bool value);
  JsonObject& string(std::string_view key, std::string_view value);
  JsonObject& null(std::string_view key);
  /// Inserts pre-rendered JSON (an object, array or literal).
  JsonObject& raw(std::string_view key, std::string value);
  std::string str() const;

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
};

std::string json_array(const std::vector<std::string>& rendered);

std::string to_json(const Enclosure& e);
/// Polynomial in the input file schema, numbers at 17 digits.
std::string to_json(const GeneralPoly& q);
std::string to_json(const SidonBoundReport& r);
std::string to_json(const BohrReport& r);

std::string sidon_csv_header();
std::string to_csv(const SidonBoundReport& r);
std::string bohr_csv_header();
std::string to_csv(const BohrReport& r);

std::string strategy_name(DegreeStrategy s);

}  // namespace sidon
