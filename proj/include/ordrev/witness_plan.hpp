#ifndef ORDREV_WITNESS_PLAN_HPP
#define ORDREV_WITNESS_PLAN_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <variant>

#include "ordrev/family.hpp"
#include "ordrev/natseq.hpp"
#include "ordrev/ordinal.hpp"

namespace ordrev {

// Where a natural-number-level plan acts inside a family: the tail multiset
// of the given limit part on the given side.
struct PlanScope {
  Orientation orientation = Orientation::W;
  Ordinal limitPart;
};

// Merge a bundle of donor chains into the first target chain and shift the
// rest of each class:
//   donors of value v:  the first c_v indices map to target#0, index k maps
//                       to index k - c_v afterwards (backward shift);
//   targets:            index k maps to index k + 1 (forward shift), so
//                       target#0 keeps only the donor bundle as preimage.
// Realizes a failure of independence: target = sum of parts over K\{target}.
struct MergeShiftPlan {
  std::uint64_t targetValue = 0;
  SemigroupCertificate parts;  // donor value -> coefficient, never citing target
  std::map<std::uint64_t, std::uint64_t> donorShifts;  // value -> shift = coeff
  bool targetChainForwardShift = true;
  std::optional<PlanScope> scope;
};

// Merge donor bundles into a sparse sub-progression of targets:
//   targets t_j = progression member at index k0 + j*stride;
//   t_0 receives a bundle summing to its value (initCert), t_{j+1} receives
//   t_j plus a bundle summing to step*stride (stepCert);
//   donor classes consumed at every step free infinitely many indices via
//   the doubling map (index 2k -> index k), classes consumed only by the
//   initial bundle use a finite backward shift instead.
// Realizes a failure of the gcd condition.
struct SparseChainPlan {
  std::uint64_t g = 0;  // gcd of K, bookkeeping
  NatProgression source;
  std::uint64_t k0 = 0;
  std::uint64_t stride = 1;
  SemigroupCertificate initCert;  // sums to source.first + source.step * k0
  SemigroupCertificate stepCert;  // sums to source.step * stride
  std::set<std::uint64_t> donorDoubling;  // classes using the doubling map
  std::optional<PlanScope> scope;
};

// Collapse one chain of an infinitely repeated type alpha into a host chain
// whose limit part dominates alpha:
//   f(i0) = f(i1) = i0 and f(i_{k+1}) = i_k for k >= 1,
// grounded by the prefix split of the host's limit part into a copy of
// alpha and a copy of itself.
struct OrdinalShiftPlan {
  Ordinal hostValue;      // gamma0 + n0 with alpha <= gamma0
  Ordinal repeatedValue;  // alpha, of infinite multiplicity
  Ordinal splitGamma;     // gamma0, the ordinal the prefix split partitions
  Orientation orientation = Orientation::W;
};

using WitnessPlan = std::variant<MergeShiftPlan, SparseChainPlan, OrdinalShiftPlan>;

}  // namespace ordrev

#endif
