#pragma once

#include <Eigen/Core>
#include <gmpxx.h>

#include <istream>
#include <stdexcept>
#include <string>

namespace Eigen {

/// Traits so that dense Eigen containers can carry exact GMP rationals.
/// Cost constants are rough; nothing branches on them for correctness.
template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;

  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace cutsig {

/// Exact arithmetic everywhere: every quantity on a decision path is an
/// arbitrary-precision rational, kept canonical (reduced, denominator > 0)
/// by GMP. There is deliberately no floating-point fallback.
using Rational = mpq_class;

using Index = Eigen::Index;
using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// Thrown when an operation would exceed a configured size bound
/// (cut enumeration and LP column counts grow as 2^(n-1)).
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Canonical text form: "p" for integers, "p/q" with q > 0 and gcd(p,q) = 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses "p" or "p/q" (q > 0). This is the only accepted syntax in all
/// file formats, so output re-parses bit-exactly.
inline Rational parse_rational(const std::string& token) {
  const auto fail = [&]() -> Rational {
    throw std::invalid_argument("malformed rational '" + token + "'");
  };
  std::size_t pos = 0;
  if (pos < token.size() && token[pos] == '-') ++pos;
  std::size_t digits = 0;
  while (pos < token.size() && token[pos] >= '0' && token[pos] <= '9') {
    ++pos;
    ++digits;
  }
  if (digits == 0) return fail();
  if (pos < token.size()) {
    if (token[pos] != '/') return fail();
    ++pos;
    std::size_t den_digits = 0;
    bool den_nonzero = false;
    while (pos < token.size() && token[pos] >= '0' && token[pos] <= '9') {
      if (token[pos] != '0') den_nonzero = true;
      ++pos;
      ++den_digits;
    }
    if (den_digits == 0 || pos != token.size() || !den_nonzero) return fail();
  }
  Rational value(token, 10);
  value.canonicalize();
  return value;
}

/// Reads one whitespace-delimited rational token from a stream.
inline Rational read_rational(std::istream& in, const char* what) {
  std::string token;
  if (!(in >> token)) {
    throw std::invalid_argument(std::string("unexpected end of input reading ") + what);
  }
  return parse_rational(token);
}

/// Reads one nonnegative integer token (sizes, counts, vertex labels).
inline long read_count(std::istream& in, const char* what) {
  std::string token;
  if (!(in >> token)) {
    throw std::invalid_argument(std::string("unexpected end of input reading ") + what);
  }
  if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
    throw std::invalid_argument(std::string("malformed ") + what + " '" + token + "'");
  }
  try {
    return std::stol(token);
  } catch (const std::out_of_range&) {
    throw std::invalid_argument(std::string(what) + " out of range '" + token + "'");
  }
}

/// Consumes the "---" section separator used by multi-part file formats.
inline void read_separator(std::istream& in) {
  std::string token;
  if (!(in >> token) || token != "---") {
    throw std::invalid_argument("expected '---' section separator");
  }
}

}  // namespace cutsig
