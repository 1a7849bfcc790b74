#include "qvote/common.hpp"

#include <cstdio>

namespace qvote {

std::string format_real(double x) {
  if (x == 0.0) x = 0.0; // normalize -0
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", x);
  return buf;
}

std::string format_complex(const Complex& z) {
  std::string out = format_real(z.real());
  if (z.imag() != 0.0) {
    out += (z.imag() > 0 ? "+" : "-");
    out += format_real(std::abs(z.imag()));
    out += "i";
  }
  return out;
}

} // namespace qvote
