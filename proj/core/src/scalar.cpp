#include "lpcompact/scalar.hpp"

#include <cstdio>

namespace lpcompact {

std::string Scalar::decimal_text(unsigned digits) const {
  if (exact_) return r_.to_decimal(digits);
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", static_cast<int>(digits), a_);
  return buf;
}

}  // namespace lpcompact
