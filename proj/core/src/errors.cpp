#include "fracsum/errors.hpp"

#include <cstdio>

namespace fracsum {

DomainError::DomainError(const std::string& what, Complex point)
    : Error(what + " at " + format_complex(point)), point_(point) {}

std::string format_complex(Complex z) {
  char buf[96];
  if (z.imag() == 0.0) {
    std::snprintf(buf, sizeof buf, "%.17g", z.real());
  } else {
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
  }
  return buf;
}

}  // namespace fracsum
