#include "ordrev/witness.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "ordrev/coloring.hpp"

namespace ordrev {

namespace {

// ---- element-level instantiation of induced index maps -------------------
//
// Indices live in classes; a class instantiates its first `depth` slots.
// Class values are affine in the slot so that sparse-chain targets fit the
// same model as constant-valued classes.

struct SlotRef {
  int cls = -1;
  std::uint64_t slot = 0;
};

class IndexChecker {
 public:
  explicit IndexChecker(std::size_t depth) : depth_(depth) {}

  int addClass(std::uint64_t valueBase, std::uint64_t valuePerSlot) {
    classes_.push_back(Cls{valueBase, valuePerSlot,
                           std::vector<SlotRef>(depth_),
                           std::vector<char>(depth_, 0),
                           std::vector<std::vector<SlotRef>>(depth_),
                           std::vector<char>(depth_, 0),
                           std::vector<char>(depth_, 0)});
    return static_cast<int>(classes_.size()) - 1;
  }

  std::uint64_t valueAt(SlotRef r) const {
    const Cls& c = classes_[r.cls];
    return c.valueBase + c.valuePerSlot * r.slot;
  }

  // Assigns the image of `from`; the image may lie beyond the instantiated
  // prefix. Fails on double assignment.
  bool assign(SlotRef from, SlotRef to) {
    Cls& c = classes_[from.cls];
    if (from.slot >= depth_) return true;  // not instantiated, nothing to record
    if (c.assigned[from.slot]) {
      error_ = "index-has-two-images";
      return false;
    }
    c.assigned[from.slot] = 1;
    c.image[from.slot] = to;
    if (to.slot < depth_) classes_[to.cls].preimages[to.slot].push_back(from);
    return true;
  }

  // Schema guarantees an out-of-prefix preimage for this slot.
  void markRuleCovered(int cls, std::uint64_t slot) {
    if (slot < depth_) classes_[cls].ruleCovered[slot] = 1;
  }

  // All schema preimages of this slot lie inside the instantiated prefix,
  // so its sum constraint must hold exactly.
  void markSumResolved(int cls, std::uint64_t slot) {
    if (slot < depth_) classes_[cls].sumResolved[slot] = 1;
  }

  VerifyResult finish() const {
    if (!error_.empty()) return VerifyResult::fail(error_);
    bool somewhereNonInjective = false;
    for (int ci = 0; ci < static_cast<int>(classes_.size()); ++ci) {
      const Cls& c = classes_[ci];
      for (std::uint64_t s = 0; s < depth_; ++s) {
        if (!c.assigned[s]) return VerifyResult::fail("index-lacks-image");
        const auto& pre = c.preimages[s];
        if (pre.size() >= 2) somewhereNonInjective = true;
        if (pre.empty() && !c.ruleCovered[s])
          return VerifyResult::fail("index-lacks-preimage");
        if (c.sumResolved[s]) {
          std::uint64_t sum = 0;
          for (const SlotRef& r : pre) sum += valueAt(r);
          if (sum != c.valueBase + c.valuePerSlot * s)
            return VerifyResult::fail("preimage-sum-mismatch");
        }
      }
    }
    if (!somewhereNonInjective) return VerifyResult::fail("map-is-injective");
    return VerifyResult::pass();
  }

 private:
  struct Cls {
    std::uint64_t valueBase;
    std::uint64_t valuePerSlot;
    std::vector<SlotRef> image;
    std::vector<char> assigned;
    std::vector<std::vector<SlotRef>> preimages;
    std::vector<char> ruleCovered;
    std::vector<char> sumResolved;
  };
  std::size_t depth_;
  std::vector<Cls> classes_;
  std::string error_;
};

bool hasInfiniteSingle(const NatMultiset& m, std::uint64_t v) {
  for (const auto& [value, count] : m.singles)
    if (value == v && count.isInf()) return true;
  return false;
}

bool certificateWellFormed(const SemigroupCertificate& cert) {
  if (cert.coefficients.empty()) return false;
  for (const auto& [gen, coeff] : cert.coefficients)
    if (gen == 0 || coeff == 0) return false;
  return cert.sum() == cert.target && cert.addendCount() >= 1;
}

VerifyResult verifyMergeShift(const NatMultiset& m, const MergeShiftPlan& plan,
                              std::size_t depth) {
  if (plan.targetValue == 0) return VerifyResult::fail("target-zero");
  if (!plan.targetChainForwardShift)
    return VerifyResult::fail("target-chain-not-shifted");
  if (plan.parts.target != plan.targetValue)
    return VerifyResult::fail("certificate-target-mismatch");
  if (!certificateWellFormed(plan.parts))
    return VerifyResult::fail("certificate-sum-mismatch");
  if (plan.parts.coefficients.count(plan.targetValue))
    return VerifyResult::fail("target-cited-as-part");
  if (plan.donorShifts != plan.parts.coefficients)
    return VerifyResult::fail("donor-shift-mismatch");
  if (!hasInfiniteSingle(m, plan.targetValue))
    return VerifyResult::fail("target-not-infinite");
  for (const auto& [v, coeff] : plan.parts.coefficients)
    if (!hasInfiniteSingle(m, v)) return VerifyResult::fail("donor-not-infinite");

  IndexChecker chk(depth);
  const int target = chk.addClass(plan.targetValue, 0);
  for (std::uint64_t k = 0; k < depth; ++k)
    if (!chk.assign({target, k}, {target, k + 1})) return chk.finish();
  bool bundleWhole = true;
  for (const auto& [v, shift] : plan.donorShifts)
    if (shift > depth) bundleWhole = false;
  if (bundleWhole) chk.markSumResolved(target, 0);
  for (std::uint64_t k = 1; k < depth; ++k) chk.markSumResolved(target, k);

  for (const auto& [v, shift] : plan.donorShifts) {
    const int donor = chk.addClass(v, 0);
    for (std::uint64_t k = 0; k < depth; ++k) {
      SlotRef to = k < shift ? SlotRef{target, 0} : SlotRef{donor, k - shift};
      if (!chk.assign({donor, k}, to)) return chk.finish();
    }
    for (std::uint64_t k = 0; k < depth; ++k) {
      if (k + shift < depth)
        chk.markSumResolved(donor, k);
      else
        chk.markRuleCovered(donor, k);  // backward shift covers the tail
    }
  }
  return chk.finish();
}

VerifyResult verifySparseChain(const NatMultiset& m, const SparseChainPlan& plan,
                               std::size_t depth) {
  if (plan.stride == 0) return VerifyResult::fail("stride-zero");
  if (plan.g == 0) return VerifyResult::fail("gcd-zero");
  bool sourcePresent = false;
  for (const auto& p : m.progressions)
    if (p.first == plan.source.first && p.step == plan.source.step)
      sourcePresent = true;
  if (!sourcePresent) return VerifyResult::fail("source-progression-missing");

  const std::uint64_t initTarget = plan.source.first + plan.source.step * plan.k0;
  const std::uint64_t stepTarget = plan.source.step * plan.stride;
  if (plan.initCert.target != initTarget || !certificateWellFormed(plan.initCert))
    return VerifyResult::fail("init-certificate-mismatch");
  if (plan.stepCert.target != stepTarget || !certificateWellFormed(plan.stepCert))
    return VerifyResult::fail("step-certificate-mismatch");
  if (initTarget % plan.g != 0 || stepTarget % plan.g != 0)
    return VerifyResult::fail("gcd-inconsistent");

  std::set<std::uint64_t> doubling;
  for (const auto& [v, coeff] : plan.stepCert.coefficients) doubling.insert(v);
  if (doubling != plan.donorDoubling)
    return VerifyResult::fail("donor-doubling-mismatch");

  std::set<std::uint64_t> donorValues = doubling;
  for (const auto& [v, coeff] : plan.initCert.coefficients) donorValues.insert(v);
  for (std::uint64_t v : donorValues)
    if (!hasInfiniteSingle(m, v)) return VerifyResult::fail("donor-not-infinite");

  auto initCoeff = [&](std::uint64_t v) {
    auto it = plan.initCert.coefficients.find(v);
    return it == plan.initCert.coefficients.end() ? std::uint64_t{0} : it->second;
  };
  auto stepCoeff = [&](std::uint64_t v) {
    auto it = plan.stepCert.coefficients.find(v);
    return it == plan.stepCert.coefficients.end() ? std::uint64_t{0} : it->second;
  };

  IndexChecker chk(depth);
  const int targets = chk.addClass(initTarget, stepTarget);
  for (std::uint64_t j = 0; j < depth; ++j)
    if (!chk.assign({targets, j}, {targets, j + 1})) return chk.finish();

  // Whether every donor feeding target j sits inside the instantiated prefix.
  std::vector<char> bundleResolved(depth, 1);
  for (std::uint64_t v : donorValues) {
    const std::uint64_t ic = initCoeff(v);
    const std::uint64_t sc = stepCoeff(v);
    const int donor = chk.addClass(v, 0);
    if (sc >= 1) {
      // Doubling map: even slots cover the class, odd slots feed targets in
      // demand order (ic for target 0, then sc per step).
      for (std::uint64_t k = 0; 2 * k < depth; ++k)
        if (!chk.assign({donor, 2 * k}, {donor, k})) return chk.finish();
      for (std::uint64_t t = 0; 2 * t + 1 < depth; ++t) {
        std::uint64_t j = t < ic ? 0 : 1 + (t - ic) / sc;
        if (!chk.assign({donor, 2 * t + 1}, {targets, j})) return chk.finish();
      }
      for (std::uint64_t k = 0; k < depth; ++k) {
        if (2 * k < depth)
          chk.markSumResolved(donor, k);
        else
          chk.markRuleCovered(donor, k);
      }
      for (std::uint64_t j = 0; j < depth; ++j) {
        const std::uint64_t lastDemand = j == 0 ? ic : ic + j * sc;
        if (lastDemand == 0) continue;
        if (2 * (lastDemand - 1) + 1 >= depth) bundleResolved[j] = 0;
      }
    } else {
      // Consumed by the initial bundle only: finite backward shift.
      for (std::uint64_t k = 0; k < depth; ++k) {
        SlotRef to = k < ic ? SlotRef{targets, 0} : SlotRef{donor, k - ic};
        if (!chk.assign({donor, k}, to)) return chk.finish();
      }
      for (std::uint64_t k = 0; k < depth; ++k) {
        if (k + ic < depth)
          chk.markSumResolved(donor, k);
        else
          chk.markRuleCovered(donor, k);
      }
      if (ic > depth) bundleResolved[0] = 0;
    }
  }
  for (std::uint64_t j = 0; j < depth; ++j)
    if (bundleResolved[j]) chk.markSumResolved(targets, j);
  return chk.finish();
}

// Deterministic sample of elements below a limit ordinal, spread across its
// omega-blocks rather than taken from an order-enumeration prefix.
std::vector<Ordinal> sampleBelow(const Ordinal& gamma) {
  std::vector<Ordinal> limitParts{Ordinal{}};
  const auto& terms = gamma.terms();
  for (std::size_t i = 0; i < terms.size(); ++i) {
    for (std::uint64_t c = 1; c <= terms[i].coefficient && c <= 3; ++c) {
      std::vector<CnfTerm> prefix(terms.begin(), terms.begin() + i);
      prefix.push_back(CnfTerm{terms[i].exponent, c});
      Ordinal beta = makeCnf(std::move(prefix));
      if (beta < gamma && beta.isLimit()) limitParts.push_back(beta);
    }
    // A block strictly between exponent levels, when expressible.
    if (!terms[i].exponent.isZero() && terms[i].exponent > Ordinal::nat(1)) {
      std::vector<CnfTerm> prefix(terms.begin(), terms.begin() + i);
      prefix.push_back(CnfTerm{Ordinal::nat(1), 7});
      try {
        Ordinal beta = makeCnf(std::move(prefix));
        if (beta < gamma) limitParts.push_back(beta);
      } catch (const MalformedCnf&) {
      }
    }
  }
  static const std::uint64_t tails[] = {0, 1, 2, 3, 4, 5, 6, 9, 16, 27};
  std::vector<Ordinal> out;
  for (const auto& beta : limitParts)
    for (std::uint64_t t : tails) out.push_back(add(beta, Ordinal::nat(t)));
  return out;
}

VerifyResult spotCheckSplit(const Ordinal& gamma, const Ordinal& alpha) {
  Coloring coloring = splitPrefix(gamma, alpha);
  auto samples = sampleBelow(gamma);
  std::vector<std::pair<Ordinal, Ordinal>> byColor[2];
  for (const auto& x : samples) {
    std::uint64_t c = coloring.colorOf(x);
    if (c > 1) return VerifyResult::fail("coloring-bad-color");
    Ordinal r = coloring.rank(x);
    if (!(r < coloring.classTarget(c))) return VerifyResult::fail("rank-out-of-range");
    if (!(coloring.unrank(c, r) == x)) return VerifyResult::fail("rank-not-invertible");
    byColor[c].emplace_back(x, r);
  }
  for (auto& bucket : byColor) {
    std::sort(bucket.begin(), bucket.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < bucket.size(); ++i)
      if (!(bucket[i - 1].second < bucket[i].second))
        return VerifyResult::fail("rank-not-monotone");
  }
  return VerifyResult::pass();
}

VerifyResult verifyOrdinalShift(const FamilyPresentation& p,
                                const OrdinalShiftPlan& plan, std::size_t depth) {
  if (plan.repeatedValue.isZero() || plan.hostValue.isZero())
    return VerifyResult::fail("zero-chain-type");
  auto repeated = multiplicity(p, plan.repeatedValue, plan.orientation);
  if (!repeated || !repeated->isInf())
    return VerifyResult::fail("repeated-value-not-infinite");
  if (!multiplicity(p, plan.hostValue, plan.orientation))
    return VerifyResult::fail("host-value-missing");
  auto host = decompose(plan.hostValue);
  if (!(host.gamma == plan.splitGamma))
    return VerifyResult::fail("split-gamma-mismatch");
  if (!host.gamma.isLimit()) return VerifyResult::fail("host-limit-part-zero");
  if (plan.repeatedValue > host.gamma)
    return VerifyResult::fail("repeated-value-above-limit-part");
  if (auto split = spotCheckSplit(host.gamma, plan.repeatedValue); !split)
    return split;

  // f(i0) = f(i1) = i0 and f(i_{k+1}) = i_k: i0 a host index, i_k running
  // through the repeated class. When the host type equals the repeated type
  // the host index is slot 0 of the same class.
  IndexChecker chk(depth);
  const bool sameClass = plan.hostValue == plan.repeatedValue;
  const int repeatedCls = chk.addClass(0, 0);  // values tracked separately here
  const int hostCls = sameClass ? repeatedCls : chk.addClass(0, 0);
  if (sameClass) {
    if (!chk.assign({repeatedCls, 0}, {repeatedCls, 0})) return chk.finish();
    if (!chk.assign({repeatedCls, 1}, {repeatedCls, 0})) return chk.finish();
    for (std::uint64_t k = 2; k < depth; ++k)
      if (!chk.assign({repeatedCls, k}, {repeatedCls, k - 1})) return chk.finish();
    chk.markRuleCovered(repeatedCls, depth - 1);
  } else {
    if (!chk.assign({hostCls, 0}, {hostCls, 0})) return chk.finish();
    for (std::uint64_t k = 1; k < depth; ++k)
      if (!chk.assign({hostCls, k}, {hostCls, k})) return chk.finish();
    if (!chk.assign({repeatedCls, 0}, {hostCls, 0})) return chk.finish();
    for (std::uint64_t k = 1; k < depth; ++k)
      if (!chk.assign({repeatedCls, k}, {repeatedCls, k - 1})) return chk.finish();
    chk.markRuleCovered(repeatedCls, depth - 1);
  }
  return chk.finish();
}

std::optional<NatMultiset> scopedMultiset(const FamilyPresentation& p,
                                          const std::optional<PlanScope>& scope) {
  if (!scope) return std::nullopt;
  return tailMultiset(p, scope->limitPart, scope->orientation);
}

}  // namespace

VerifyResult verifyWitness(const NatMultiset& m, const WitnessPlan& plan,
                           std::size_t depth) {
  NatMultiset nm = m.normalized();
  if (const auto* merge = std::get_if<MergeShiftPlan>(&plan))
    return verifyMergeShift(nm, *merge, depth);
  if (const auto* sparse = std::get_if<SparseChainPlan>(&plan))
    return verifySparseChain(nm, *sparse, depth);
  return VerifyResult::fail("ordinal-plan-against-natural-multiset");
}

VerifyResult verifyWitness(const FamilyPresentation& p, const WitnessPlan& plan,
                           std::size_t depth) {
  FamilyPresentation np = normalize(p);
  if (const auto* shift = std::get_if<OrdinalShiftPlan>(&plan))
    return verifyOrdinalShift(np, *shift, depth);
  if (const auto* merge = std::get_if<MergeShiftPlan>(&plan)) {
    auto m = scopedMultiset(np, merge->scope);
    if (!m) return VerifyResult::fail("plan-lacks-family-scope");
    return verifyMergeShift(*m, *merge, depth);
  }
  const auto& sparse = std::get<SparseChainPlan>(plan);
  auto m = scopedMultiset(np, sparse.scope);
  if (!m) return VerifyResult::fail("plan-lacks-family-scope");
  return verifySparseChain(*m, sparse, depth);
}

WitnessPlan buildNatWitness(const NatMultiset& m, const NatVerdict& v,
                            std::optional<PlanScope> scope) {
  (void)m;  // the verdict payload carries everything the plans need
  if (v.reversible || !v.failure)
    throw NotNonReversible("witness requested for a reversible sequence verdict");
  const std::set<std::uint64_t> K(v.kValues.begin(), v.kValues.end());

  if (const auto* indep = std::get_if<IndependenceFailure>(&*v.failure)) {
    MergeShiftPlan plan;
    plan.targetValue = indep->value;
    plan.parts = indep->certificate;
    plan.donorShifts = indep->certificate.coefficients;
    plan.scope = std::move(scope);
    return plan;
  }

  const auto& gcdFail = std::get<GcdFailure>(*v.failure);
  const auto& run = gcdFail.progression;
  const std::uint64_t g = gcdFail.divisor;
  const std::uint64_t minK = *K.begin();
  const std::uint64_t maxK = *K.rbegin();

  SparseChainPlan plan;
  plan.g = g;
  plan.source = run;
  plan.scope = std::move(scope);

  // Every sufficiently large multiple of g lies in <K>, so the scans below
  // terminate well inside these limits.
  const std::uint64_t kLimit = (minK * maxK + g * run.step) / run.step + 2;
  std::optional<SemigroupCertificate> init;
  for (std::uint64_t k = 0; k <= kLimit; ++k) {
    if ((init = semigroupMember(run.first + run.step * k, K))) {
      plan.k0 = k;
      break;
    }
  }
  const std::uint64_t sLimit = minK * maxK / run.step + g + 2;
  std::optional<SemigroupCertificate> step;
  for (std::uint64_t s = 1; s <= sLimit; ++s) {
    if ((step = semigroupMember(run.step * s, K))) {
      plan.stride = s;
      break;
    }
  }
  if (!init || !step)
    throw InternalInvariantError("sparse-chain targets not found within bounds");
  plan.initCert = *init;
  plan.stepCert = *step;
  for (const auto& [gen, coeff] : plan.stepCert.coefficients)
    plan.donorDoubling.insert(gen);
  return plan;
}

WitnessPlan buildWitness(const FamilyPresentation& p, const Verdict& v) {
  if (v.reversible)
    throw NotNonReversible("witness requested for a reversible verdict");
  switch (v.clause) {
    case Clause::A: {
      OrdinalShiftPlan plan;
      plan.hostValue = v.repeatedBelow->hostValue;
      plan.repeatedValue = v.repeatedBelow->repeatedValue;
      plan.splitGamma = decompose(plan.hostValue).gamma;
      plan.orientation = v.orientation;
      return plan;
    }
    case Clause::B: {
      const auto& payload = *v.failedTails;
      PlanScope scope{v.orientation, payload.limitPart};
      NatMultiset tails = tailMultiset(normalize(p), payload.limitPart, v.orientation);
      return buildNatWitness(tails, payload.tailVerdict, scope);
    }
    case Clause::MixedSplit: {
      for (const auto& part : v.parts)
        if (!part.reversible) return buildWitness(p, part);
      throw InternalInvariantError("mixed verdict non-reversible without failing part");
    }
    default:
      throw NotNonReversible("verdict clause carries no witness payload");
  }
}

namespace {

// First coefficient map over `gens` (each coefficient <= maxCoeff) summing
// to `target`, in lexicographic order; nonempty sums only.
std::optional<std::map<std::uint64_t, std::uint64_t>> firstCombination(
    const std::vector<std::uint64_t>& gens, std::uint64_t target,
    std::uint64_t maxCoeff) {
  std::map<std::uint64_t, std::uint64_t> chosen;
  std::function<bool(std::size_t, std::uint64_t)> dfs =
      [&](std::size_t i, std::uint64_t remaining) {
        if (i == gens.size()) return remaining == 0 && !chosen.empty();
        const std::uint64_t v = gens[i];
        const std::uint64_t top = std::min(maxCoeff, remaining / v);
        for (std::uint64_t c = 0; c <= top; ++c) {
          if (c > 0) chosen[gens[i]] = c;
          if (dfs(i + 1, remaining - c * v)) return true;
          if (c > 0) chosen.erase(gens[i]);
        }
        return false;
      };
  if (!dfs(0, target)) return std::nullopt;
  return chosen;
}

// Enumerates all coefficient maps (not just the first); calls fn until it
// returns true.
bool forEachCombination(const std::vector<std::uint64_t>& gens,
                        std::uint64_t target, std::uint64_t maxCoeff,
                        const std::function<bool(
                            const std::map<std::uint64_t, std::uint64_t>&)>& fn) {
  std::map<std::uint64_t, std::uint64_t> chosen;
  std::function<bool(std::size_t, std::uint64_t)> dfs =
      [&](std::size_t i, std::uint64_t remaining) {
        if (i == gens.size())
          return remaining == 0 && !chosen.empty() && fn(chosen);
        const std::uint64_t v = gens[i];
        const std::uint64_t top = std::min(maxCoeff, remaining / v);
        for (std::uint64_t c = 0; c <= top; ++c) {
          if (c > 0) chosen[gens[i]] = c;
          if (dfs(i + 1, remaining - c * v)) return true;
          if (c > 0) chosen.erase(gens[i]);
        }
        return false;
      };
  return dfs(0, target);
}

}  // namespace

std::optional<WitnessPlan> boundedOracleSearch(const NatMultiset& m,
                                               OracleBounds bounds,
                                               std::size_t depth) {
  NatMultiset nm = m.normalized();
  std::vector<std::uint64_t> infValues;
  for (const auto& [value, count] : nm.singles)
    if (count.isInf()) infValues.push_back(value);

  std::optional<WitnessPlan> found;

  // Merge-shift candidates, smallest target first.
  for (std::uint64_t t : infValues) {
    if (t > bounds.maxTarget) continue;
    std::vector<std::uint64_t> donors;
    for (std::uint64_t v : infValues)
      if (v != t) donors.push_back(v);
    forEachCombination(donors, t, bounds.maxCoeff, [&](const auto& coeffs) {
      MergeShiftPlan plan;
      plan.targetValue = t;
      plan.parts.target = t;
      plan.parts.coefficients = coeffs;
      plan.donorShifts = coeffs;
      if (verifyWitness(nm, WitnessPlan{plan}, depth)) {
        found = WitnessPlan{plan};
        return true;
      }
      return false;
    });
    if (found) return found;
  }

  // Sparse-chain candidates over each presented progression.
  const std::set<std::uint64_t> K(infValues.begin(), infValues.end());
  for (const auto& run : nm.progressions) {
    for (std::uint64_t k0 = 0; k0 <= bounds.maxCoeff && !found; ++k0) {
      for (std::uint64_t stride = 1; stride <= bounds.maxCoeff && !found; ++stride) {
        const std::uint64_t initTarget = run.first + run.step * k0;
        const std::uint64_t stepTarget = run.step * stride;
        auto init = firstCombination(infValues, initTarget, bounds.maxCoeff);
        if (!init) continue;
        auto step = firstCombination(infValues, stepTarget, bounds.maxCoeff);
        if (!step) continue;
        SparseChainPlan plan;
        plan.g = std::max<std::uint64_t>(gcdOf(K), 1);
        plan.source = run;
        plan.k0 = k0;
        plan.stride = stride;
        plan.initCert.target = initTarget;
        plan.initCert.coefficients = *init;
        plan.stepCert.target = stepTarget;
        plan.stepCert.coefficients = *step;
        for (const auto& [gen, coeff] : *step) plan.donorDoubling.insert(gen);
        if (verifyWitness(nm, WitnessPlan{plan}, depth)) found = WitnessPlan{plan};
      }
    }
    if (found) return found;
  }
  return std::nullopt;
}

}  // namespace ordrev
