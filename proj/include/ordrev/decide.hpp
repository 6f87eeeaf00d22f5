#ifndef ORDREV_DECIDE_HPP
#define ORDREV_DECIDE_HPP

#include <optional>
#include <variant>

#include "ordrev/family.hpp"
#include "ordrev/natseq.hpp"
#include "ordrev/verdict.hpp"
#include "ordrev/witness.hpp"

namespace ordrev {

// Decides a single-orientation family (finite chains admissible under
// either orientation): reversible iff the type sequence is finite-to-one,
// or no type of infinite multiplicity lies at or below the maximal limit
// part and the tail sequence there is reversible. Mirrored families are
// decided by the identical computation.
// Pre: normalized. Throws OrientationMixed.
Verdict decideWell(const FamilyPresentation& p, Orientation o);

// Independent cross-check, searching directly for a failure:
//   A: some type alpha of infinite multiplicity with alpha <= some entry's
//      limit part;
//   B: some limit part whose tail sequence is infinite and not reversible.
// Returns the first failure found, or nullopt.
// Pre: normalized, single orientation. Throws OrientationMixed.
std::optional<std::variant<ClauseAPayload, ClauseBPayload>> detectNonrevClause(
    const FamilyPresentation& p, Orientation o);

// Fixed limit part: the family {gamma + n_i} is reversible iff the count of
// indices with n_i = 0 is finite and the nonzero tails form a reversible
// sequence. countAtZeroTail == nullopt means no index has tail 0.
Verdict decideFixedGamma(const Ordinal& gamma, const NatMultiset& tails,
                         std::optional<Count> countAtZeroTail);

struct DecideOptions {
  bool attachWitness = true;
  std::size_t witnessDepth = kDefaultWitnessDepth;
};

// Top-level decision: normalizes, splits by orientation when both infinite
// orientations are present (reversible iff both parts are), otherwise
// decides the whole family under its single relevant orientation. Attaches
// a verified witness plan to every non-reversible verdict.
// Throws EmptyFamily; InternalInvariantError if a built witness fails to
// verify.
Verdict decide(const FamilyPresentation& p, const DecideOptions& options = {});

// A standalone natural-number multiset as a clause-NatSeq verdict, with a
// verified witness plan attached when non-reversible.
Verdict decideNatSequence(const NatMultiset& m, const DecideOptions& options = {});

// The sequence of chain-type cardinalities: finite types keep their value,
// infinite types below epsilon_0 are countable, so they all collapse to the
// first aleph.
CardinalMultiset toCardinals(const FamilyPresentation& p);

// Re-derives the verdict through the independent failure search and throws
// InternalInvariantError if the two routes disagree. `p` as passed to
// decide().
void crossCheckVerdict(const FamilyPresentation& p, const Verdict& v);

}  // namespace ordrev

#endif
