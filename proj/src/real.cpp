#include "qapery/real.hpp"

#include <cstdio>
#include <vector>

namespace qapery {

std::string Real::to_string(int digits) const {
  if (digits < 2) digits = 2;
  std::vector<char> buf(digits + 32);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, v_);
  return std::string(buf.data());
}

}  // namespace qapery
