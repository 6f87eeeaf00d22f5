#ifndef ORDREV_WITNESS_HPP
#define ORDREV_WITNESS_HPP

#include <cstddef>
#include <optional>
#include <string>

#include "ordrev/family.hpp"
#include "ordrev/natseq.hpp"
#include "ordrev/verdict.hpp"
#include "ordrev/witness_plan.hpp"

namespace ordrev {

struct VerifyResult {
  bool ok = false;
  std::string reason;  // violation code when !ok, empty otherwise

  explicit operator bool() const { return ok; }

  static VerifyResult pass() { return {true, {}}; }
  static VerifyResult fail(std::string code) { return {false, std::move(code)}; }
};

inline constexpr std::size_t kDefaultWitnessDepth = 256;

// Checks a plan against a natural-number multiset: schema-level certificate
// arithmetic and multiplicity availability, then an element-level
// instantiation of the induced index map on the first `depth` indices of
// each involved class. The map must assign exactly one image per index,
// satisfy the sum constraint on every fully resolved preimage set, give
// some index at least two preimages, and leave no index uncovered.
VerifyResult verifyWitness(const NatMultiset& m, const WitnessPlan& plan,
                           std::size_t depth = kDefaultWitnessDepth);

// Checks a plan against a family presentation. Ordinal plans are checked
// directly (including a spot check of the prefix-split coloring); plans at
// the natural-number level are checked against the tail multiset named by
// their scope.
VerifyResult verifyWitness(const FamilyPresentation& p, const WitnessPlan& plan,
                           std::size_t depth = kDefaultWitnessDepth);

// Builds the plan matching a non-reversible verdict's clause payload.
// Throws NotNonReversible on a reversible verdict.
WitnessPlan buildWitness(const FamilyPresentation& p, const Verdict& v);

// Natural-number-level builder, used for standalone sequence verdicts and
// by the family-level builder for clause B.
WitnessPlan buildNatWitness(const NatMultiset& m, const NatVerdict& v,
                            std::optional<PlanScope> scope = std::nullopt);

struct OracleBounds {
  std::uint64_t maxTarget = 30;
  std::uint64_t maxCoeff = 10;
};

// Independent oracle: exhaustively enumerates merge-shift plans (target up
// to maxTarget, coefficients up to maxCoeff) and sparse-chain plans (k0 and
// stride up to maxCoeff) and returns the first one the verifier accepts.
// Uses no part of the closed-form criterion.
std::optional<WitnessPlan> boundedOracleSearch(
    const NatMultiset& m, OracleBounds bounds,
    std::size_t depth = kDefaultWitnessDepth);

}  // namespace ordrev

#endif
