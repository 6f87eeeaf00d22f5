#ifndef ORDREV_COLORING_HPP
#define ORDREV_COLORING_HPP

#include <cstdint>
#include <optional>

#include "ordrev/count.hpp"
#include "ordrev/ordinal.hpp"

namespace ordrev {

// A finitely described partition of {x : x < gamma} into color classes,
// each carrying an explicit two-sided rank isomorphism onto its target
// order type. Three schemes:
//
//   Residue(lambda): lambda classes; x = beta + m is colored m mod lambda
//     and ranked beta + (m div lambda); every class is isomorphic to gamma.
//   Pairing: omega many classes via the Cantor pairing of the finite tail;
//     every class is isomorphic to gamma.
//   PrefixSplit(alpha): two classes, A isomorphic to alpha and B to gamma.
class Coloring {
 public:
  static constexpr std::uint64_t kColorA = 0;
  static constexpr std::uint64_t kColorB = 1;

  // Number of classes; Inf means omega many (Pairing).
  Count colorCount() const;

  const Ordinal& gamma() const { return gamma_; }

  // Target order type of a color class (gamma, or alpha for PrefixSplit A).
  Ordinal classTarget(std::uint64_t color) const;

  // Pre: x < gamma.
  std::uint64_t colorOf(const Ordinal& x) const;

  // Order isomorphism from x's color class onto classTarget(colorOf(x)).
  Ordinal rank(const Ordinal& x) const;

  // Inverse: the element of the given class whose rank is y.
  // Pre: y < classTarget(color); color < colorCount.
  Ordinal unrank(std::uint64_t color, const Ordinal& y) const;

  friend Coloring partitionLimit(const Ordinal& gamma, Count lambda);
  friend Coloring splitPrefix(const Ordinal& gamma, const Ordinal& alpha);

 private:
  enum class Scheme { Residue, Pairing, PrefixSplit };
  Scheme scheme_ = Scheme::Residue;
  Ordinal gamma_;
  std::uint64_t lambda_ = 1;  // Residue
  Ordinal alpha_;             // PrefixSplit
  Ordinal alphaGamma_;        // PrefixSplit: limit part of alpha
  std::uint64_t alphaTail_ = 0;
};

// Partition of a limit ordinal into lambda classes each isomorphic to the
// whole; 1 <= lambda <= omega (Count::inf() selects the pairing scheme).
// Throws NotLimit.
Coloring partitionLimit(const Ordinal& gamma, Count lambda);

// Two-class partition {A, B} of a limit ordinal with A isomorphic to alpha
// and B to gamma; alpha <= gamma. Throws NotLimit / AlphaTooBig.
Coloring splitPrefix(const Ordinal& gamma, const Ordinal& alpha);

// Cantor pairing bijection between naturals and pairs, increasing in the
// second component for a fixed first component.
std::uint64_t cantorPair(std::uint64_t first, std::uint64_t second);
std::pair<std::uint64_t, std::uint64_t> cantorUnpair(std::uint64_t n);

}  // namespace ordrev

#endif
