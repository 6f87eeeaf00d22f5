#include "ordrev/witness.hpp"

#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "helpers.hpp"
#include "ordrev/decide.hpp"

using namespace ordrev;
using namespace ordrev::testing;

namespace {

NatMultiset mset(std::vector<std::pair<std::uint64_t, Count>> singles,
                 std::vector<NatProgression> progs = {}) {
  NatMultiset m;
  m.singles = std::move(singles);
  m.progressions = std::move(progs);
  return m.normalized();
}

MergeShiftPlan mergePlan(std::uint64_t target,
                         std::map<std::uint64_t, std::uint64_t> parts) {
  MergeShiftPlan plan;
  plan.targetValue = target;
  plan.parts.target = target;
  plan.parts.coefficients = parts;
  plan.donorShifts = std::move(parts);
  return plan;
}

}  // namespace

TEST_CASE("merge-shift verification") {
  NatMultiset p2 = mset({{2, Count::inf()}, {4, Count::inf()}});

  CHECK(verifyWitness(p2, WitnessPlan{mergePlan(4, {{2, 2}})}).ok);

  auto bad = verifyWitness(p2, WitnessPlan{mergePlan(4, {{2, 1}})});
  CHECK(!bad.ok);
  CHECK(bad.reason == "certificate-sum-mismatch");

  // citing the target among its own parts
  bad = verifyWitness(p2, WitnessPlan{mergePlan(4, {{4, 1}})});
  CHECK(!bad.ok);

  // donor without infinite multiplicity
  NatMultiset thin = mset({{2, Count::fin(3)}, {4, Count::inf()}});
  bad = verifyWitness(thin, WitnessPlan{mergePlan(4, {{2, 2}})});
  CHECK(!bad.ok);
  CHECK(bad.reason == "donor-not-infinite");

  // inconsistent shift table
  MergeShiftPlan skew = mergePlan(4, {{2, 2}});
  skew.donorShifts[2] = 1;
  CHECK(!verifyWitness(p2, WitnessPlan{skew}).ok);
}

TEST_CASE("merge-shift verification against a family uses the plan scope") {
  auto family = normalize(familyP2());
  MergeShiftPlan plan = mergePlan(4, {{2, 2}});
  CHECK(!verifyWitness(family, WitnessPlan{plan}).ok);  // no scope
  plan.scope = PlanScope{Orientation::W, w()};
  CHECK(verifyWitness(family, WitnessPlan{plan}).ok);
  plan.scope = PlanScope{Orientation::WStar, w()};
  CHECK(!verifyWitness(family, WitnessPlan{plan}).ok);
}

TEST_CASE("sparse-chain verification") {
  NatMultiset m = mset({{4, Count::inf()}, {10, Count::inf()}},
                       {NatProgression{2, 2, 1}});
  NatVerdict v = decideNatReversible(m);
  REQUIRE(!v.reversible);
  REQUIRE(std::holds_alternative<GcdFailure>(*v.failure));

  WitnessPlan plan = buildNatWitness(m, v);
  const auto& sparse = std::get<SparseChainPlan>(plan);
  CHECK(sparse.g == 2);
  CHECK(sparse.k0 == 1);      // member 4 is the least in <4,10>
  CHECK(sparse.stride == 2);  // 2*2 = 4 in <4,10>
  CHECK(verifyWitness(m, plan).ok);

  // tampering with the certificates must be caught
  SparseChainPlan broken = sparse;
  broken.initCert.coefficients[4] += 1;
  CHECK(!verifyWitness(m, WitnessPlan{broken}).ok);
  broken = sparse;
  broken.donorDoubling.insert(10);
  CHECK(!verifyWitness(m, WitnessPlan{broken}).ok);
  broken = sparse;
  broken.source.first = 3;
  CHECK(!verifyWitness(m, WitnessPlan{broken}).ok);
}

TEST_CASE("ordinal-shift verification") {
  auto p1 = normalize(familyP1());
  OrdinalShiftPlan plan;
  plan.hostValue = w();
  plan.repeatedValue = nat(1);
  plan.splitGamma = w();
  plan.orientation = Orientation::W;
  CHECK(verifyWitness(p1, WitnessPlan{plan}).ok);

  OrdinalShiftPlan wrong = plan;
  wrong.repeatedValue = nat(2);  // multiplicity of 2 is not infinite
  CHECK(!verifyWitness(p1, WitnessPlan{wrong}).ok);
  wrong = plan;
  wrong.hostValue = wPlus(1);  // not present in the family
  CHECK(!verifyWitness(p1, WitnessPlan{wrong}).ok);
  wrong = plan;
  wrong.splitGamma = wTimes(2);
  CHECK(!verifyWitness(p1, WitnessPlan{wrong}).ok);

  // the repeated type itself can host the shift
  FamilyPresentation selfHost;
  selfHost.entries = {wo(w(), Count::inf())};
  OrdinalShiftPlan self;
  self.hostValue = w();
  self.repeatedValue = w();
  self.splitGamma = w();
  CHECK(verifyWitness(normalize(selfHost), WitnessPlan{self}).ok);

  // alpha above the host's limit part must be rejected
  FamilyPresentation above;
  above.entries = {wo(wPlus(1), Count::inf()), wo(w(), Count::fin(1))};
  OrdinalShiftPlan tooBig;
  tooBig.hostValue = w();
  tooBig.repeatedValue = wPlus(1);
  tooBig.splitGamma = w();
  CHECK(!verifyWitness(normalize(above), WitnessPlan{tooBig}).ok);
}

TEST_CASE("bounded oracle search") {
  auto found = boundedOracleSearch(mset({{2, Count::inf()}, {4, Count::inf()}}),
                                   {12, 6});
  REQUIRE(found.has_value());
  const auto& plan = std::get<MergeShiftPlan>(*found);
  CHECK(plan.targetValue == 4);
  CHECK(plan.parts.coefficients == std::map<std::uint64_t, std::uint64_t>{{2, 2}});

  CHECK(!boundedOracleSearch(
             mset({{4, Count::inf()}, {6, Count::inf()}}, {NatProgression{1, 2, 1}}),
             {12, 6})
             .has_value());

  found = boundedOracleSearch(
      mset({{3, Count::inf()}, {5, Count::inf()}}, {NatProgression{8, 15, 1}}),
      {40, 8});
  REQUIRE(found.has_value());
  CHECK(verifyWitness(mset({{3, Count::inf()}, {5, Count::inf()}},
                           {NatProgression{8, 15, 1}}),
                      *found)
            .ok);

  // a single independent value with finite distinct-value set: no witness
  CHECK(!boundedOracleSearch(mset({{5, Count::inf()}}), {30, 10}).has_value());
}

TEST_CASE("the worked example admits no witness at any limit part") {
  auto family = normalize(exampleFamily());
  for (const auto& gamma : split(family).limitParts) {
    NatMultiset tails = tailMultiset(family, gamma, Orientation::W);
    CHECK(!boundedOracleSearch(tails, {18, 8}).has_value());
  }
  // hand-aimed plans are rejected as well
  MergeShiftPlan aimed = mergePlan(6, {{4, 1}, {2, 1}});
  aimed.scope = PlanScope{Orientation::W, w()};
  CHECK(!verifyWitness(family, WitnessPlan{aimed}).ok);
  MergeShiftPlan aimed2 = mergePlan(10, {{4, 1}, {6, 1}});
  aimed2.scope = PlanScope{Orientation::W, w()};
  CHECK(!verifyWitness(family, WitnessPlan{aimed2}).ok);
}

TEST_CASE("witness construction requires a non-reversible verdict") {
  Verdict v = decide(exampleFamily());
  CHECK_THROWS_AS(buildWitness(normalize(exampleFamily()), v), NotNonReversible);
  NatVerdict nv;
  nv.reversible = true;
  CHECK_THROWS_AS(buildNatWitness(mset({{2, Count::inf()}}), nv),
                  NotNonReversible);
}

TEST_CASE("witness soundness and completeness on the corpus") {
  std::mt19937_64 rng(5550123);
  int nonReversible = 0;
  for (int i = 0; i < 1500; ++i) {
    FamilyPresentation p = normalize(corpusFamily(rng, {6, 2, 12, true}));
    Verdict v = decide(p);
    if (!v.reversible) {
      ++nonReversible;
      REQUIRE(v.witness.has_value());  // decide verifies before attaching
      CHECK(verifyWitness(p, *v.witness).ok);
    }
    // oracle direction: any plan found on any tail multiset implies a
    // non-reversible family
    FamilyStats stats = split(p);
    for (Orientation o : {Orientation::W, Orientation::WStar}) {
      for (const auto& gamma : stats.limitParts) {
        auto plan = boundedOracleSearch(tailMultiset(p, gamma, o), {14, 5});
        if (plan.has_value()) CHECK(!v.reversible);
      }
    }
  }
  CHECK(nonReversible > 150);
}

TEST_CASE("oracle agrees with the criterion on small multisets") {
  // A reduced version of the exhaustive sweep (the full grid runs in the
  // acceptance suite): all K subsets of {1..6} of size <= 2, progressions
  // with first, step <= 4.
  for (std::uint64_t a = 1; a <= 6; ++a) {
    for (std::uint64_t b = a; b <= 7; ++b) {
      for (std::uint64_t first = 0; first <= 4; ++first) {
        for (std::uint64_t step = 1; step <= 4; ++step) {
          NatMultiset m;
          m.singles.emplace_back(a, Count::inf());
          if (b <= 6 && b != a) m.singles.emplace_back(b, Count::inf());
          if (first > 0) m.progressions.push_back(NatProgression{first, step, 1});
          m = m.normalized();
          bool reversible = decideNatReversible(m).reversible;
          auto plan = boundedOracleSearch(m, {30, 10});
          CHECK(plan.has_value() == !reversible);
          if (plan) CHECK(verifyWitness(m, *plan).ok);
        }
      }
    }
  }
}
