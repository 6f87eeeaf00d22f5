#ifndef ORDREV_FAMILY_HPP
#define ORDREV_FAMILY_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ordrev/count.hpp"
#include "ordrev/natseq.hpp"
#include "ordrev/ordinal.hpp"

namespace ordrev {

// Orientation of a chain: a well order or its inverse. Finite chains are
// order-isomorphic to their own inverses, so orientation only matters for
// infinite chains; normalization relabels finite entries as W.
enum class Orientation { W, WStar };

inline Orientation mirrored(Orientation o) {
  return o == Orientation::W ? Orientation::WStar : Orientation::W;
}

inline std::string toText(Orientation o) {
  return o == Orientation::W ? "w" : "w*";
}

// A single chain type with a multiplicity.
struct ChainSingle {
  Ordinal value;  // nonzero
  Count count;
  friend bool operator==(const ChainSingle&, const ChainSingle&) = default;
};

// The progression {gamma + (first + step*k) : k in omega} of chain types,
// each occurring copies times.
struct ChainProgression {
  Ordinal gamma;             // limit or zero
  std::uint64_t first = 0;   // >= 1 when gamma is zero
  std::uint64_t step = 1;    // >= 1
  std::uint64_t copies = 1;  // >= 1
  friend bool operator==(const ChainProgression&, const ChainProgression&) = default;

  Ordinal memberValue(std::uint64_t k) const {
    return add(gamma, Ordinal::nat(first + step * k));
  }
};

// One block of the presentation: an oriented single or progression.
struct ChainEntry {
  Orientation orientation = Orientation::W;
  std::variant<ChainSingle, ChainProgression> shape;

  bool isSingle() const { return std::holds_alternative<ChainSingle>(shape); }
  const ChainSingle& single() const { return std::get<ChainSingle>(shape); }
  const ChainProgression& progression() const {
    return std::get<ChainProgression>(shape);
  }

  // The common limit part of every chain type this entry presents.
  Ordinal limitPart() const;
  // True when every chain presented by the entry is finite.
  bool isFiniteChainEntry() const { return limitPart().isZero(); }

  friend bool operator==(const ChainEntry&, const ChainEntry&) = default;
};

ChainEntry singleEntry(Orientation o, const Ordinal& value, Count count);
ChainEntry progressionEntry(Orientation o, const Ordinal& gamma,
                            std::uint64_t first, std::uint64_t step,
                            std::uint64_t copies = 1);

// Finite presentation of a (possibly infinite) indexed family of pairwise
// disjoint oriented chains.
struct FamilyPresentation {
  std::vector<ChainEntry> entries;
  friend bool operator==(const FamilyPresentation&, const FamilyPresentation&) = default;
};

// Orientation split: finite chains belong to both parts, infinite chains
// to the part of their orientation.
struct OrientationSplit {
  FamilyPresentation wPart;
  FamilyPresentation wStarPart;
  bool hasInfiniteW = false;
  bool hasInfiniteWStar = false;
};

struct FamilyStats {
  std::vector<Ordinal> limitParts;  // distinct, ascending
  Ordinal gammaStar;                // max of limitParts
  bool finiteToOne = false;
  OrientationSplit orientationSplit;
};

// Validates entry invariants, merges singles with equal (orientation, value)
// and progressions with equal (orientation, gamma, first, step), relabels
// finite entries as W, and sorts canonically.
// Throws EmptyFamily / ZeroOrdinal.
FamilyPresentation normalize(const FamilyPresentation& p);

// Total multiplicity of the chain type (value, orientation). Orientation is
// ignored for finite values. Returns nullopt when the type does not occur.
std::optional<Count> multiplicity(const FamilyPresentation& p,
                                  const Ordinal& value, Orientation o);

// The multiset of nonzero finite tails n over indices whose chain type is
// gamma + n with the given orientation (any orientation when gamma is 0).
// Progressions are clipped so that members are >= 1.
NatMultiset tailMultiset(const FamilyPresentation& p, const Ordinal& gamma,
                         Orientation o);

// Derived quantities of a normalized presentation.
FamilyStats split(const FamilyPresentation& p);

// Entry ordering used by normalize; exposed for tests.
bool entryLess(const ChainEntry& a, const ChainEntry& b);

}  // namespace ordrev

#endif
