#ifndef ORDREV_NATSEQ_HPP
#define ORDREV_NATSEQ_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <variant>
#include <vector>

#include "ordrev/count.hpp"

namespace ordrev {

// {first + step*k : k in omega}, each member occurring copies times.
struct NatProgression {
  std::uint64_t first = 1;   // >= 1
  std::uint64_t step = 1;    // >= 1
  std::uint64_t copies = 1;  // >= 1

  bool contains(std::uint64_t v) const {
    return v >= first && (v - first) % step == 0;
  }
  friend bool operator==(const NatProgression&, const NatProgression&) = default;
};

// Finitely presented multiset over positive naturals.
struct NatMultiset {
  std::vector<std::pair<std::uint64_t, Count>> singles;  // value >= 1
  std::vector<NatProgression> progressions;

  bool empty() const { return singles.empty() && progressions.empty(); }

  // Total multiplicity of v; Count has no zero, hence the optional.
  std::optional<Count> multiplicity(std::uint64_t v) const;

  // Merges duplicate singles (Inf absorbs), merges identical progressions,
  // sorts both lists. Throws ZeroOrdinal on a zero value.
  NatMultiset normalized() const;

  friend bool operator==(const NatMultiset&, const NatMultiset&) = default;
};

// Witness that `target` lies in the additive semigroup generated by the
// certificate's keys: sum over (generator -> coefficient) of
// generator*coefficient equals target, with at least one addend.
struct SemigroupCertificate {
  std::uint64_t target = 0;
  std::map<std::uint64_t, std::uint64_t> coefficients;

  std::uint64_t sum() const;
  std::uint64_t addendCount() const;
};

// Membership of n in the subsemigroup generated by gens (empty sums
// excluded: 0 is never a member). Dynamic programming over 0..n.
std::optional<SemigroupCertificate> semigroupMember(
    std::uint64_t n, const std::set<std::uint64_t>& gens);

struct IndependenceResult {
  bool independent = true;
  // Set when independence fails: the violating element with its
  // decomposition over the remaining generators.
  std::optional<std::pair<std::uint64_t, SemigroupCertificate>> violation;
};

// K is independent iff no element is a nonempty sum of the others.
// The empty set is independent.
IndependenceResult isIndependent(const std::set<std::uint64_t>& K);

// True iff infinitely many distinct values of m are divisible by g.
// Singles contribute finitely many values; a progression (a, d) contributes
// infinitely many multiples of g iff gcd(d, g) divides a.
bool dividesInfinitelyMany(std::uint64_t g, const NatMultiset& m);

struct IndependenceFailure {
  std::uint64_t value = 0;  // element of K
  SemigroupCertificate certificate;
};

struct GcdFailure {
  std::uint64_t divisor = 0;          // gcd of K
  NatProgression progression;         // run providing infinitely many multiples
};

using NatFailure = std::variant<IndependenceFailure, GcdFailure>;

// Outcome of the natural-number sequence criterion, with the failing
// subcondition and its certificate when non-reversible.
struct NatVerdict {
  bool reversible = true;
  std::vector<std::uint64_t> kValues;  // values of infinite multiplicity, sorted
  std::optional<NatFailure> failure;
};

// A multiset of positive naturals is reversible iff the set K of values of
// infinite multiplicity is independent and, when K is nonempty, gcd(K)
// divides only finitely many distinct values.
NatVerdict decideNatReversible(const NatMultiset& m);

// ---- cardinal sequences ----

// A nonzero cardinal: a positive natural or an aleph.
struct CardinalValue {
  bool finite = true;
  std::uint64_t value = 1;  // the natural, or the aleph index

  static CardinalValue fin(std::uint64_t n) { return {true, n}; }
  static CardinalValue aleph(std::uint64_t index) { return {false, index}; }
  friend bool operator==(const CardinalValue&, const CardinalValue&) = default;
};

// {aleph_{firstIndex + indexStep*k} : k in omega}, each occurring
// copies times; presents infinitely many pairwise distinct alephs.
struct AlephRun {
  std::uint64_t firstIndex = 0;
  std::uint64_t indexStep = 1;  // >= 1
  std::uint64_t copies = 1;     // >= 1
};

struct CardinalMultiset {
  std::vector<std::pair<CardinalValue, Count>> singles;
  std::vector<NatProgression> finiteRuns;  // runs of distinct finite cardinals
  std::vector<AlephRun> alephRuns;

  bool empty() const {
    return singles.empty() && finiteRuns.empty() && alephRuns.empty();
  }
};

struct CardinalVerdict {
  bool reversible = true;
  bool finiteToOne = false;
  bool allFinite = false;
  std::optional<NatVerdict> natVerdict;  // set when decided via naturals
};

// Reversible iff the sequence is finite-to-one, or all values are finite
// and the induced natural-number multiset is reversible.
CardinalVerdict decideCardinalReversible(const CardinalMultiset& c);

std::uint64_t gcdOf(const std::set<std::uint64_t>& values);

}  // namespace ordrev

#endif
