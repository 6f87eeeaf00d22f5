#include "ordrev/decide.hpp"

namespace ordrev {

std::string toText(Clause c) {
  switch (c) {
    case Clause::I:
      return "I";
    case Clause::II:
      return "II";
    case Clause::A:
      return "A";
    case Clause::B:
      return "B";
    case Clause::MixedSplit:
      return "MixedSplit";
    case Clause::NatSeq:
      return "NatSeq";
  }
  return "?";
}

namespace {

void requireSingleOrientation(const FamilyPresentation& p, Orientation o) {
  for (const auto& e : p.entries)
    if (!e.isFiniteChainEntry() && e.orientation != o)
      throw OrientationMixed("family mixes both infinite orientations");
}

// The chain type of an entry attaining the given limit part, used as the
// host of a clause-A shift.
Ordinal hostValueAt(const FamilyPresentation& p, const Ordinal& gamma) {
  for (const auto& e : p.entries) {
    if (!(e.limitPart() == gamma)) continue;
    if (e.isSingle()) return e.single().value;
    return e.progression().memberValue(0);
  }
  throw InternalInvariantError("no entry attains the maximal limit part");
}

}  // namespace

Verdict decideWell(const FamilyPresentation& p, Orientation o) {
  requireSingleOrientation(p, o);
  FamilyStats stats = split(p);

  Verdict v;
  v.orientation = o;
  v.gammaStar = stats.gammaStar;

  if (stats.finiteToOne) {
    v.reversible = true;
    v.clause = Clause::I;
    return v;
  }

  // Types of infinite multiplicity come from infinite singles alone; one at
  // or below the maximal limit part embeds into a chain of that limit part.
  for (const auto& e : p.entries) {
    if (!e.isSingle() || !e.single().count.isInf()) continue;
    if (e.single().value <= stats.gammaStar) {
      v.reversible = false;
      v.clause = Clause::A;
      v.repeatedBelow =
          ClauseAPayload{e.single().value, hostValueAt(p, stats.gammaStar)};
      return v;
    }
  }

  NatMultiset tails = tailMultiset(p, stats.gammaStar, o);
  NatVerdict tailVerdict = decideNatReversible(tails);
  if (!tailVerdict.reversible) {
    v.reversible = false;
    v.clause = Clause::B;
    v.failedTails = ClauseBPayload{stats.gammaStar, tailVerdict};
    return v;
  }
  v.reversible = true;
  v.clause = Clause::II;
  v.tailVerdict = tailVerdict;
  return v;
}

std::optional<std::variant<ClauseAPayload, ClauseBPayload>> detectNonrevClause(
    const FamilyPresentation& p, Orientation o) {
  requireSingleOrientation(p, o);

  // A: a repeated type at or below some limit part present in the family.
  for (const auto& e : p.entries) {
    if (!e.isSingle() || !e.single().count.isInf()) continue;
    const Ordinal& alpha = e.single().value;
    for (const auto& host : p.entries) {
      if (alpha <= host.limitPart()) {
        Ordinal hostValue = host.isSingle() ? host.single().value
                                            : host.progression().memberValue(0);
        return ClauseAPayload{alpha, hostValue};
      }
    }
  }

  // B: some limit part with an infinite, non-reversible tail sequence.
  FamilyStats stats = split(p);
  for (const auto& gamma : stats.limitParts) {
    NatMultiset tails = tailMultiset(p, gamma, o);
    bool infinitelyManyTails = !tails.progressions.empty();
    for (const auto& [value, count] : tails.singles)
      if (count.isInf()) infinitelyManyTails = true;
    if (!infinitelyManyTails) continue;
    NatVerdict verdict = decideNatReversible(tails);
    if (!verdict.reversible) return ClauseBPayload{gamma, verdict};
  }
  return std::nullopt;
}

Verdict decideFixedGamma(const Ordinal& gamma, const NatMultiset& tails,
                         std::optional<Count> countAtZeroTail) {
  Verdict v;
  v.gammaStar = gamma;
  if (countAtZeroTail && countAtZeroTail->isInf()) {
    v.reversible = false;
    v.clause = Clause::A;
    v.repeatedBelow = ClauseAPayload{gamma, gamma};
    return v;
  }
  NatVerdict tailVerdict = decideNatReversible(tails.normalized());
  if (!tailVerdict.reversible) {
    v.reversible = false;
    v.clause = Clause::B;
    v.failedTails = ClauseBPayload{gamma, tailVerdict};
    return v;
  }
  v.reversible = true;
  v.clause = Clause::II;
  v.tailVerdict = tailVerdict;
  return v;
}

Verdict decide(const FamilyPresentation& p, const DecideOptions& options) {
  FamilyPresentation np = normalize(p);
  FamilyStats stats = split(np);

  Verdict v;
  const auto& os = stats.orientationSplit;
  if (os.hasInfiniteW && os.hasInfiniteWStar) {
    Verdict wVerdict = decideWell(normalize(os.wPart), Orientation::W);
    Verdict wStarVerdict = decideWell(normalize(os.wStarPart), Orientation::WStar);
    v.reversible = wVerdict.reversible && wStarVerdict.reversible;
    v.clause = Clause::MixedSplit;
    v.parts = {std::move(wVerdict), std::move(wStarVerdict)};
  } else {
    Orientation o = os.hasInfiniteWStar ? Orientation::WStar : Orientation::W;
    v = decideWell(np, o);
  }

  if (!v.reversible && options.attachWitness) {
    WitnessPlan plan = buildWitness(np, v);
    VerifyResult check = verifyWitness(np, plan, options.witnessDepth);
    if (!check)
      throw InternalInvariantError("constructed witness failed verification: " +
                                   check.reason);
    v.witness = std::move(plan);
  }
  return v;
}

Verdict decideNatSequence(const NatMultiset& m, const DecideOptions& options) {
  NatMultiset nm = m.normalized();
  Verdict v;
  v.clause = Clause::NatSeq;
  NatVerdict natVerdict = decideNatReversible(nm);
  v.reversible = natVerdict.reversible;
  v.tailVerdict = natVerdict;
  if (!v.reversible && options.attachWitness) {
    WitnessPlan plan = buildNatWitness(nm, natVerdict);
    VerifyResult check = verifyWitness(nm, plan, options.witnessDepth);
    if (!check)
      throw InternalInvariantError("constructed witness failed verification: " +
                                   check.reason);
    v.witness = std::move(plan);
  }
  return v;
}

void crossCheckVerdict(const FamilyPresentation& p, const Verdict& v) {
  FamilyPresentation np = normalize(p);
  auto checkPart = [](const FamilyPresentation& part, Orientation o,
                      const Verdict& verdict) {
    bool failureFound = detectNonrevClause(normalize(part), o).has_value();
    if (verdict.reversible == failureFound)
      throw InternalInvariantError("decision routes disagree on a " +
                                   toText(o) + " part");
  };
  if (v.clause == Clause::MixedSplit) {
    const auto& os = split(np).orientationSplit;
    checkPart(os.wPart, Orientation::W, v.parts.at(0));
    checkPart(os.wStarPart, Orientation::WStar, v.parts.at(1));
    return;
  }
  checkPart(np, v.orientation, v);
}

CardinalMultiset toCardinals(const FamilyPresentation& p) {
  CardinalMultiset out;
  std::optional<Count> alephCount;
  auto addAleph = [&alephCount](Count c) {
    alephCount = alephCount ? *alephCount + c : c;
  };
  for (const auto& e : p.entries) {
    if (e.isSingle()) {
      const auto& s = e.single();
      if (s.value.isFinite())
        out.singles.emplace_back(CardinalValue::fin(s.value.finiteValue()), s.count);
      else
        addAleph(s.count);
      continue;
    }
    const auto& run = e.progression();
    if (run.gamma.isZero())
      out.finiteRuns.push_back(NatProgression{run.first, run.step, run.copies});
    else
      addAleph(Count::inf());  // infinitely many countable chain types
  }
  if (alephCount)
    out.singles.emplace_back(CardinalValue::aleph(0), *alephCount);
  return out;
}

}  // namespace ordrev
