#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <string>
#include <string_view>

#include "octomod/errors.hpp"

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
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

namespace octomod {

// All computation is over exact arbitrary-precision rationals; every
// dimension/rank statement in the library is an exact integer fact.
using Rational = mpq_class;

using Vec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using Mat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// Parses "p/q" or "p" (optionally signed). Throws ParseError on junk input
/// or zero denominator.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw DomainError(ErrorCode::ParseError, "empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw DomainError(ErrorCode::ParseError, "bad rational literal '" + s + "'");
  if (q.get_den() == 0)
    throw DomainError(ErrorCode::ParseError, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

/// Formats as "p/q" with the denominator always present ("3" -> "3/1").
inline std::string format_rational(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace octomod
