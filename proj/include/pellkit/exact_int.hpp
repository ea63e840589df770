#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace pellkit {

// Arbitrary-precision signed integer backing every sequence value.
// Arithmetic never overflows or truncates; equality is exact.
using ExactInt = boost::multiprecision::cpp_int;

// Signed sequence index. Negative indices are meaningful everywhere: the
// sequences extend backward via x_{n-2} = x_n - 2 x_{n-1}.
using SeqIndex = long long;

// Thrown when an internal exactness postcondition fails (a closed-form route
// produced a value outside the expected sublattice, a cross-check table was
// indexed out of range, ...). Always indicates an implementation bug, never
// bad user input; the CLI maps it to a dedicated exit code.
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string to_decimal(const ExactInt& v) { return v.str(); }

// (-1)^k as a plain int factor.
inline int parity_sign(SeqIndex k) { return (k & 1LL) ? -1 : 1; }

}  // namespace pellkit
