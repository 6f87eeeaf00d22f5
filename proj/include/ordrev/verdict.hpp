#ifndef ORDREV_VERDICT_HPP
#define ORDREV_VERDICT_HPP

#include <optional>
#include <string>
#include <vector>

#include "ordrev/natseq.hpp"
#include "ordrev/ordinal.hpp"
#include "ordrev/witness_plan.hpp"

namespace ordrev {

// Which clause of the decision procedure settled the verdict.
//   I          reversible: the type sequence is finite-to-one
//   II         reversible: max limit part passes the repetition scan and
//              its tail sequence is reversible
//   A          non-reversible: a type of infinite multiplicity embeds below
//              some limit part
//   B          non-reversible: the tail sequence at some limit part is not
//              reversible
//   MixedSplit decided by splitting into the two orientation parts
//   NatSeq     decided directly by the natural-number criterion
enum class Clause { I, II, A, B, MixedSplit, NatSeq };

std::string toText(Clause c);

struct ClauseAPayload {
  Ordinal repeatedValue;  // alpha with infinite multiplicity
  Ordinal hostValue;      // chain type whose limit part dominates alpha
};

struct ClauseBPayload {
  Ordinal limitPart;       // the gamma whose tails fail
  NatVerdict tailVerdict;  // non-reversible
};

struct Verdict {
  bool reversible = false;
  Clause clause = Clause::I;
  Orientation orientation = Orientation::W;

  std::optional<Ordinal> gammaStar;
  std::optional<NatVerdict> tailVerdict;       // clause II
  std::optional<ClauseAPayload> repeatedBelow;  // clause A
  std::optional<ClauseBPayload> failedTails;    // clause B
  std::vector<Verdict> parts;                   // MixedSplit: [W part, W* part]

  std::optional<WitnessPlan> witness;
};

}  // namespace ordrev

#endif
