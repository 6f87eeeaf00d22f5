#include "ordrev/decide.hpp"

#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "helpers.hpp"

using namespace ordrev;
using namespace ordrev::testing;

TEST_CASE("the worked example is reversible via the maximal limit part") {
  Verdict v = decide(exampleFamily());
  CHECK(v.reversible);
  CHECK(v.clause == Clause::II);
  REQUIRE(v.gammaStar.has_value());
  CHECK(*v.gammaStar == w());
  REQUIRE(v.tailVerdict.has_value());
  CHECK(v.tailVerdict->kValues == std::vector<std::uint64_t>{4, 6});
  CHECK(!v.witness.has_value());
}

TEST_CASE("infinitely many singletons under one copy of w fail clause A") {
  Verdict v = decide(familyP1());
  CHECK(!v.reversible);
  CHECK(v.clause == Clause::A);
  REQUIRE(v.repeatedBelow.has_value());
  CHECK(v.repeatedBelow->repeatedValue == nat(1));
  CHECK(v.repeatedBelow->hostValue == w());
  REQUIRE(v.witness.has_value());
  CHECK(std::holds_alternative<OrdinalShiftPlan>(*v.witness));
}

TEST_CASE("repeated w+2 and w+4 fail clause B") {
  Verdict v = decide(familyP2());
  CHECK(!v.reversible);
  CHECK(v.clause == Clause::B);
  REQUIRE(v.failedTails.has_value());
  CHECK(v.failedTails->limitPart == w());
  const auto& failure = v.failedTails->tailVerdict.failure;
  REQUIRE(failure.has_value());
  CHECK(std::get<IndependenceFailure>(*failure).value == 4);
  REQUIRE(v.witness.has_value());
  const auto& plan = std::get<MergeShiftPlan>(*v.witness);
  CHECK(plan.targetValue == 4);
  CHECK(plan.parts.coefficients == std::map<std::uint64_t, std::uint64_t>{{2, 2}});
}

TEST_CASE("a progression of all tails above w is finite-to-one") {
  FamilyPresentation p;
  p.entries = {progressionEntry(Orientation::W, w(), 1, 1),
               wo(w(), Count::fin(1))};
  Verdict v = decide(p);
  CHECK(v.reversible);
  CHECK(v.clause == Clause::I);
}

TEST_CASE("a single finite value repeated infinitely is reversible") {
  FamilyPresentation p;
  p.entries = {wo(nat(5), Count::inf())};
  Verdict v = decide(p);
  CHECK(v.reversible);
  CHECK(v.clause == Clause::II);
  CHECK(v.gammaStar->isZero());
}

TEST_CASE("mirrored families decide identically") {
  auto mirror = [](FamilyPresentation p) {
    for (auto& e : p.entries) e.orientation = mirrored(e.orientation);
    return p;
  };
  for (const auto& p :
       {exampleFamily(), familyP1(), familyP2()}) {
    Verdict a = decide(p);
    Verdict b = decide(mirror(p));
    CHECK(a.reversible == b.reversible);
    CHECK(a.clause == b.clause);
  }
}

TEST_CASE("mixed orientations split and recombine") {
  FamilyPresentation p;
  p.entries = {wo(w()), rwo(w())};
  Verdict v = decide(p);
  CHECK(v.reversible);
  CHECK(v.clause == Clause::MixedSplit);
  REQUIRE(v.parts.size() == 2);
  CHECK(v.parts[0].reversible);
  CHECK(v.parts[1].reversible);

  p.entries = {wo(nat(1), Count::inf()), wo(w()), rwo(w())};
  v = decide(p);
  CHECK(!v.reversible);
  CHECK(v.clause == Clause::MixedSplit);
  REQUIRE(v.parts.size() == 2);
  CHECK(!v.parts[0].reversible);  // the W part is P1
  CHECK(v.parts[0].clause == Clause::A);
  CHECK(!v.parts[1].reversible);  // finite chains flow into the W* part too
  REQUIRE(v.witness.has_value());
}

TEST_CASE("fixed limit part decisions") {
  NatMultiset empty;
  Verdict v = decideFixedGamma(w(), empty, Count::inf());
  CHECK(!v.reversible);  // infinitely many copies of w itself

  NatMultiset exampleTails;
  exampleTails.singles = {{4, Count::inf()}, {6, Count::inf()}};
  exampleTails.progressions = {NatProgression{1, 2, 1}};
  v = decideFixedGamma(w(), exampleTails, Count::fin(14));
  CHECK(v.reversible);

  NatMultiset p2Tails;
  p2Tails.singles = {{2, Count::inf()}, {4, Count::inf()}};
  v = decideFixedGamma(w(), p2Tails, std::nullopt);
  CHECK(!v.reversible);
  CHECK(v.clause == Clause::B);
}

TEST_CASE("fixed limit part agrees with the full decision on single-gamma families") {
  std::mt19937_64 rng(321);
  for (int i = 0; i < 2000; ++i) {
    Ordinal gamma = corpusLimitPart(rng);
    FamilyPresentation p;
    int n = 1 + rng() % 4;
    for (int j = 0; j < n; ++j) {
      std::uint64_t tail = rng() % 6;
      if (gamma.isZero() && tail == 0) tail = 1;
      Count c = rng() % 2 ? Count::inf() : Count::fin(1 + rng() % 3);
      p.entries.push_back(
          singleEntry(Orientation::W, add(gamma, nat(tail)), c));
    }
    if (rng() % 2 && !gamma.isZero())
      p.entries.push_back(progressionEntry(Orientation::W, gamma, rng() % 4,
                                           1 + rng() % 3, 1));
    FamilyPresentation np = normalize(p);
    Verdict whole = decideWell(np, Orientation::W);
    Verdict fixed = decideFixedGamma(gamma, tailMultiset(np, gamma, Orientation::W),
                                     multiplicity(np, gamma, Orientation::W));
    CHECK(whole.reversible == fixed.reversible);
  }
}

TEST_CASE("cross-theorem agreement on a random corpus") {
  std::mt19937_64 rng(987654321);
  int nonReversible = 0;
  for (int i = 0; i < 3000; ++i) {
    FamilyPresentation p = normalize(corpusFamily(rng));
    Orientation o = Orientation::W;
    for (const auto& e : p.entries)
      if (!e.isFiniteChainEntry()) o = e.orientation;
    Verdict positive = decideWell(p, o);
    auto negative = detectNonrevClause(p, o);
    CHECK(positive.reversible == !negative.has_value());
    if (!positive.reversible) {
      ++nonReversible;
      // clause taxonomies agree as well
      bool splitA = positive.clause == Clause::A;
      bool detectA = std::holds_alternative<ClauseAPayload>(*negative);
      CHECK(splitA == detectA);
    }
    // exclusivity: a reversible verdict carries exactly one clause
    if (positive.reversible)
      CHECK((positive.clause == Clause::I) != (positive.clause == Clause::II));
  }
  CHECK(nonReversible > 300);
}

TEST_CASE("subfamily closure on reversible corpus families") {
  std::mt19937_64 rng(13579);
  int reversibleSeen = 0;
  for (int i = 0; i < 600; ++i) {
    FamilyPresentation p = corpusFamily(rng);
    Verdict v = decide(p, {false, 0});
    if (!v.reversible) continue;
    ++reversibleSeen;
    for (int j = 0; j < 10; ++j) {
      FamilyPresentation sub = subPresentation(p, rng);
      if (sub.entries.empty()) continue;
      CHECK(decide(sub, {false, 0}).reversible);
    }
  }
  CHECK(reversibleSeen > 60);
}

TEST_CASE("a reversible limit-part family forces reversibility") {
  // Applies to families whose entries all have nonzero limit part; their
  // limit-part presentation replaces every entry by its limit part.
  std::mt19937_64 rng(24680);
  int premiseHeld = 0;
  for (int i = 0; i < 4000; ++i) {
    FamilyPresentation p = corpusFamily(rng);
    bool pureLimit = true;
    for (const auto& e : p.entries)
      if (e.limitPart().isZero()) pureLimit = false;
    if (!pureLimit) continue;
    FamilyPresentation limits;
    for (const auto& e : p.entries) {
      if (e.isSingle())
        limits.entries.push_back(
            singleEntry(e.orientation, e.limitPart(), e.single().count));
      else
        limits.entries.push_back(
            singleEntry(e.orientation, e.limitPart(), Count::inf()));
    }
    if (limits.entries.empty()) continue;
    if (decide(limits, {false, 0}).reversible) {
      ++premiseHeld;
      CHECK(decide(p, {false, 0}).reversible);
    }
  }
  CHECK(premiseHeld > 50);
}

TEST_CASE("cardinalized families") {
  // The ordinal family {w+n : n in omega} is reversible, its cardinal
  // sequence collapses to one aleph repeated and is not.
  FamilyPresentation p;
  p.entries = {progressionEntry(Orientation::W, w(), 1, 1),
               wo(w(), Count::fin(1))};
  CHECK(decide(p).reversible);
  auto cardinalVerdict = decideCardinalReversible(toCardinals(normalize(p)));
  CHECK(!cardinalVerdict.reversible);
}

TEST_CASE("a reversible cardinal sequence forces a reversible family") {
  std::mt19937_64 rng(112358);
  int premiseHeld = 0;
  for (int i = 0; i < 4000; ++i) {
    FamilyPresentation p = normalize(corpusFamily(rng));
    Orientation o = Orientation::W;
    for (const auto& e : p.entries)
      if (!e.isFiniteChainEntry()) o = e.orientation;
    if (decideCardinalReversible(toCardinals(p)).reversible) {
      ++premiseHeld;
      CHECK(decideWell(p, o).reversible);
    }
  }
  CHECK(premiseHeld > 400);
}

TEST_CASE("verdicts survive the independent cross-check") {
  for (const auto& p : {exampleFamily(), familyP1(), familyP2()}) {
    Verdict v = decide(p);
    CHECK_NOTHROW(crossCheckVerdict(p, v));
    Verdict tampered = v;
    tampered.reversible = !tampered.reversible;
    CHECK_THROWS_AS(crossCheckVerdict(p, tampered), InternalInvariantError);
  }
  FamilyPresentation mixed;
  mixed.entries = {wo(w()), rwo(w()), wo(nat(1), Count::inf())};
  Verdict v = decide(mixed);
  CHECK_NOTHROW(crossCheckVerdict(mixed, v));
}

TEST_CASE("orientation preconditions") {
  FamilyPresentation p;
  p.entries = {wo(w()), rwo(w())};
  auto np = normalize(p);
  CHECK_THROWS_AS(decideWell(np, Orientation::W), OrientationMixed);
  CHECK_THROWS_AS(detectNonrevClause(np, Orientation::WStar), OrientationMixed);
  FamilyPresentation empty;
  CHECK_THROWS_AS(decide(empty), EmptyFamily);
}
