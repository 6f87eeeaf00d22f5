#ifndef ORDREV_ORDINAL_HPP
#define ORDREV_ORDINAL_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ordrev/errors.hpp"

namespace ordrev {

struct CnfTerm;

// An ordinal below epsilon_0 in Cantor normal form:
//   w^e1 * c1 + ... + w^ek * ck
// with exponents strictly decreasing and coefficients >= 1. The empty
// term list is 0. Values are immutable once constructed.
class Ordinal {
 public:
  Ordinal() = default;  // zero

  static Ordinal nat(std::uint64_t n);
  static Ordinal omega();
  // w^exponent * coefficient as a single-term ordinal; coefficient >= 1.
  static Ordinal omegaPow(const Ordinal& exponent, std::uint64_t coefficient = 1);

  const std::vector<CnfTerm>& terms() const { return terms_; }

  bool isZero() const { return terms_.empty(); }
  bool isFinite() const;
  bool isLimit() const;  // nonzero with finite tail 0

  // Finite value; only meaningful when isFinite().
  std::uint64_t finiteValue() const;

  friend Ordinal makeCnf(std::vector<CnfTerm> terms);

 private:
  struct Trusted {};
  Ordinal(std::vector<CnfTerm> terms, Trusted);

  std::vector<CnfTerm> terms_;
};

struct CnfTerm {
  Ordinal exponent;
  std::uint64_t coefficient = 1;
};

// Validates strict exponent decrease and positive coefficients;
// throws MalformedCnf otherwise.
Ordinal makeCnf(std::vector<CnfTerm> terms);

std::strong_ordering compare(const Ordinal& a, const Ordinal& b);

inline bool operator==(const Ordinal& a, const Ordinal& b) {
  return compare(a, b) == std::strong_ordering::equal;
}
inline bool operator!=(const Ordinal& a, const Ordinal& b) { return !(a == b); }
inline bool operator<(const Ordinal& a, const Ordinal& b) {
  return compare(a, b) == std::strong_ordering::less;
}
inline bool operator<=(const Ordinal& a, const Ordinal& b) { return !(b < a); }
inline bool operator>(const Ordinal& a, const Ordinal& b) { return b < a; }
inline bool operator>=(const Ordinal& a, const Ordinal& b) { return !(a < b); }

// Ordinal addition (non-commutative): terms of `a` below the leading
// exponent of `b` are absorbed.
Ordinal add(const Ordinal& a, const Ordinal& b);

// The unique split a = gamma + tail with gamma limit-or-zero and tail finite.
struct Decomposition {
  Ordinal gamma;
  std::uint64_t tail = 0;
};

Decomposition decompose(const Ordinal& a);

// Canonical text form, re-parseable by the DSL ordinal grammar,
// e.g. "w^2*3 + w + 4".
std::string toText(const Ordinal& a);

}  // namespace ordrev

#endif
