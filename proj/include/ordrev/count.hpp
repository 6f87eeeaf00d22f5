#ifndef ORDREV_COUNT_HPP
#define ORDREV_COUNT_HPP

#include <cstdint>
#include <string>

#include "ordrev/errors.hpp"

namespace ordrev {

// A multiplicity: a positive finite count or "infinitely many". Every
// infinite cardinal collapses to Inf; the decision clauses only ever test
// finite versus infinite.
class Count {
 public:
  Count() = default;  // one occurrence

  static Count fin(std::uint64_t k) {
    if (k == 0) throw Error("finite count must be >= 1");
    Count c;
    c.finite_ = k;
    return c;
  }
  static Count inf() {
    Count c;
    c.finite_ = 0;
    return c;
  }

  bool isInf() const { return finite_ == 0; }
  bool isFin() const { return finite_ != 0; }
  std::uint64_t finiteValue() const { return finite_; }

  friend Count operator+(Count a, Count b) {
    if (a.isInf() || b.isInf()) return inf();
    return fin(a.finite_ + b.finite_);
  }
  friend bool operator==(Count a, Count b) { return a.finite_ == b.finite_; }
  friend bool operator!=(Count a, Count b) { return !(a == b); }

 private:
  std::uint64_t finite_ = 1;  // 0 encodes Inf
};

inline std::string toText(Count c) {
  return c.isInf() ? "inf" : std::to_string(c.finiteValue());
}

}  // namespace ordrev

#endif
