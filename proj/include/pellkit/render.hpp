#pragma once

#include <string>

#include "pellkit/exact_int.hpp"
#include "pellkit/hypercomplex.hpp"
#include "pellkit/pell_vec.hpp"

namespace pellkit {

// Canonical text renderings used by the report and the CLI data stream:
//   integers  full decimal, no separators
//   complex   "a+bi" / "a-bi"  (second coordinate shown as sign + magnitude)
//   dual      "a+be" / "a-be"
//   vectors   "(x, y, z)"

inline std::string render(const ExactInt& v) { return to_decimal(v); }

inline std::string render_pair(const ExactInt& a, const ExactInt& b,
                               char suffix) {
  std::string out = to_decimal(a);
  out += (b >= 0) ? '+' : '-';
  out += to_decimal(abs(b));
  out += suffix;
  return out;
}

inline std::string render(const ComplexPellValue& v) {
  return render_pair(v.re, v.im, 'i');
}

inline std::string render(const DualPellValue& v) {
  return render_pair(v.re, v.du, 'e');
}

template <typename S>
std::string render(const Vec3Of<S>& v) {
  return "(" + render(v.x) + ", " + render(v.y) + ", " + render(v.z) + ")";
}

}  // namespace pellkit
