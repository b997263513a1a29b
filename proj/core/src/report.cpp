#include "lpcompact/report.hpp"

namespace lpcompact {

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (const char c : data) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string hex64(std::uint64_t value) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[static_cast<std::size_t>(i)] = digits[value & 0xf];
    value >>= 4;
  }
  return s;
}

std::string csv_escape(const std::string& raw) {
  if (raw.find_first_of(",\"\n") == std::string::npos) return raw;
  std::string out = "\"";
  for (const char c : raw) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

void ReportWriter::header(std::string_view config_hash_hex) {
  out_ << "# " << kToolName << " " << kToolVersion << "\n";
  out_ << "# config-hash: " << config_hash_hex << "\n";
}

void ReportWriter::record(const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out_ << ',';
    out_ << csv_escape(fields[i]);
  }
  out_ << '\n';
}

void ReportWriter::append(std::vector<std::string>& fields, const Scalar& v) {
  const auto exact = v.exact_text();
  fields.push_back(exact ? *exact : std::string());
  fields.push_back(v.decimal_text());
}

void ReportWriter::append(std::vector<std::string>& fields, const Rational& v) {
  fields.push_back(v.to_string());
  fields.push_back(v.to_decimal());
}

}  // namespace lpcompact
