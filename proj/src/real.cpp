#include "geomin/real.hpp"

#include <cstdio>
#include <vector>

namespace geomin {

Real Real::parse(std::string_view text, mpfr_prec_t prec) {
  std::string buf(text);
  Real r(prec);
  char* end = nullptr;
  mpfr_strtofr(r.v_, buf.c_str(), &end, 10, MPFR_RNDN);
  if (end == buf.c_str() || *end != '\0') {
    throw DomainError("Real::parse: not a decimal number: '" + buf + "'");
  }
  return r;
}

std::string Real::fixed(int digits) const {
  std::vector<char> buf(static_cast<size_t>(digits) + 64);
  int n = mpfr_snprintf(buf.data(), buf.size(), "%.*RNf", digits, v_);
  if (n < 0 || static_cast<size_t>(n) >= buf.size()) {
    buf.resize(static_cast<size_t>(n > 0 ? n + 1 : 4096));
    n = mpfr_snprintf(buf.data(), buf.size(), "%.*RNf", digits, v_);
  }
  return std::string(buf.data());
}

std::string Real::sci(int digits) const {
  std::vector<char> buf(static_cast<size_t>(digits) + 64);
  int n = mpfr_snprintf(buf.data(), buf.size(), "%.*RNe", digits, v_);
  if (n < 0 || static_cast<size_t>(n) >= buf.size()) {
    buf.resize(static_cast<size_t>(n > 0 ? n + 1 : 4096));
    n = mpfr_snprintf(buf.data(), buf.size(), "%.*RNe", digits, v_);
  }
  return std::string(buf.data());
}

}  // namespace geomin
