#ifndef ORDREV_TESTS_HELPERS_HPP
#define ORDREV_TESTS_HELPERS_HPP

#include "ordrev/family.hpp"
#include "ordrev/ordinal.hpp"

namespace ordrev::testing {

inline Ordinal nat(std::uint64_t k) { return Ordinal::nat(k); }
inline Ordinal w() { return Ordinal::omega(); }
inline Ordinal wTimes(std::uint64_t c) { return Ordinal::omegaPow(nat(1), c); }
inline Ordinal wPow(std::uint64_t e, std::uint64_t c = 1) {
  return Ordinal::omegaPow(nat(e), c);
}
inline Ordinal wPlus(std::uint64_t k) { return add(w(), nat(k)); }

inline ChainEntry wo(const Ordinal& v, Count c = Count::fin(1)) {
  return singleEntry(Orientation::W, v, c);
}
inline ChainEntry rwo(const Ordinal& v, Count c = Count::fin(1)) {
  return singleEntry(Orientation::WStar, v, c);
}

// The worked example family:
//   all finite chain lengths, 14 copies of w, infinitely many w+4 and w+6,
//   and one chain of each odd tail above w.
inline FamilyPresentation exampleFamily() {
  FamilyPresentation p;
  p.entries = {
      progressionEntry(Orientation::W, Ordinal{}, 1, 1),      // 1, 2, 3, ...
      wo(w(), Count::fin(14)),
      wo(wPlus(4), Count::inf()),
      wo(wPlus(6), Count::inf()),
      progressionEntry(Orientation::W, w(), 1, 2),            // w+1, w+3, ...
  };
  return p;
}

// Infinitely many singletons next to one copy of w.
inline FamilyPresentation familyP1() {
  FamilyPresentation p;
  p.entries = {wo(nat(1), Count::inf()), wo(w(), Count::fin(1))};
  return p;
}

// Infinitely many w+2 and infinitely many w+4.
inline FamilyPresentation familyP2() {
  FamilyPresentation p;
  p.entries = {wo(wPlus(2), Count::inf()), wo(wPlus(4), Count::inf())};
  return p;
}

}  // namespace ordrev::testing

#endif
