#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "lpcompact/scalar.hpp"

namespace lpcompact {

inline constexpr std::string_view kToolName = "lpcompact";
inline constexpr std::string_view kToolVersion = "0.1.0";

std::uint64_t fnv1a64(std::string_view data);
std::string hex64(std::uint64_t value);

// Line-oriented machine report: a fixed two-line header (tool version and
// config hash), then one CSV record per line, first field naming the record
// kind. Numeric fields always travel as an exact-rational column (empty
// when no exact value exists) next to a 12-digit decimal column. Output is
// byte-deterministic for a fixed config.
class ReportWriter {
 public:
  explicit ReportWriter(std::ostream& out) : out_(out) {}

  void header(std::string_view config_hash_hex);
  void record(const std::vector<std::string>& fields);

  // appends the exact-rational and decimal columns for one value
  static void append(std::vector<std::string>& fields, const Scalar& v);
  static void append(std::vector<std::string>& fields, const Rational& v);

 private:
  std::ostream& out_;
};

std::string csv_escape(const std::string& raw);

}  // namespace lpcompact
