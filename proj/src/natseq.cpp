#include "ordrev/natseq.hpp"

#include <algorithm>
#include <numeric>

namespace ordrev {

std::optional<Count> NatMultiset::multiplicity(std::uint64_t v) const {
  std::optional<Count> total;
  auto accumulate = [&total](Count c) {
    total = total ? *total + c : c;
  };
  for (const auto& [value, count] : singles)
    if (value == v) accumulate(count);
  for (const auto& p : progressions)
    if (p.contains(v)) accumulate(Count::fin(p.copies));
  return total;
}

NatMultiset NatMultiset::normalized() const {
  std::map<std::uint64_t, Count> merged;
  for (const auto& [value, count] : singles) {
    if (value == 0) throw ZeroOrdinal("natural multiset values must be >= 1");
    auto it = merged.find(value);
    if (it == merged.end())
      merged.emplace(value, count);
    else
      it->second = it->second + count;
  }
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> runs;
  for (const auto& p : progressions) {
    if (p.first == 0 || p.step == 0 || p.copies == 0)
      throw ZeroOrdinal("progression members and counts must be >= 1");
    runs[{p.first, p.step}] += p.copies;
  }
  NatMultiset out;
  for (const auto& [value, count] : merged) out.singles.emplace_back(value, count);
  for (const auto& [key, copies] : runs)
    out.progressions.push_back(NatProgression{key.first, key.second, copies});
  return out;
}

std::uint64_t SemigroupCertificate::sum() const {
  std::uint64_t s = 0;
  for (const auto& [gen, coeff] : coefficients) s += gen * coeff;
  return s;
}

std::uint64_t SemigroupCertificate::addendCount() const {
  std::uint64_t s = 0;
  for (const auto& [gen, coeff] : coefficients) s += coeff;
  return s;
}

std::optional<SemigroupCertificate> semigroupMember(
    std::uint64_t n, const std::set<std::uint64_t>& gens) {
  if (n == 0) return std::nullopt;
  // usedGen[x] = some generator ending a nonempty sum for x; 0 = unreachable.
  std::vector<std::uint64_t> usedGen(n + 1, 0);
  for (std::uint64_t x = 1; x <= n; ++x) {
    for (std::uint64_t g : gens) {
      if (g == 0 || g > x) continue;
      if (g == x || usedGen[x - g] != 0) {
        usedGen[x] = g;
        break;
      }
    }
  }
  if (usedGen[n] == 0) return std::nullopt;
  SemigroupCertificate cert;
  cert.target = n;
  for (std::uint64_t x = n; x > 0; x -= usedGen[x]) cert.coefficients[usedGen[x]]++;
  return cert;
}

IndependenceResult isIndependent(const std::set<std::uint64_t>& K) {
  for (std::uint64_t n : K) {
    std::set<std::uint64_t> rest = K;
    rest.erase(n);
    if (auto cert = semigroupMember(n, rest)) {
      IndependenceResult r;
      r.independent = false;
      r.violation = {n, *cert};
      return r;
    }
  }
  return IndependenceResult{};
}

bool dividesInfinitelyMany(std::uint64_t g, const NatMultiset& m) {
  for (const auto& p : m.progressions)
    if (p.first % std::gcd(p.step, g) == 0) return true;
  return false;
}

std::uint64_t gcdOf(const std::set<std::uint64_t>& values) {
  std::uint64_t g = 0;
  for (std::uint64_t v : values) g = std::gcd(g, v);
  return g;
}

NatVerdict decideNatReversible(const NatMultiset& m) {
  NatVerdict verdict;
  std::set<std::uint64_t> K;
  // Progressions never make a single value infinitely frequent (step >= 1),
  // so K comes from the infinite singles alone.
  for (const auto& [value, count] : m.singles)
    if (count.isInf()) K.insert(value);
  verdict.kValues.assign(K.begin(), K.end());

  auto independence = isIndependent(K);
  if (!independence.independent) {
    verdict.reversible = false;
    verdict.failure = IndependenceFailure{independence.violation->first,
                                          independence.violation->second};
    return verdict;
  }
  if (K.empty()) return verdict;

  const std::uint64_t g = gcdOf(K);
  for (const auto& p : m.progressions) {
    if (p.first % std::gcd(p.step, g) == 0) {
      verdict.reversible = false;
      verdict.failure = GcdFailure{g, p};
      return verdict;
    }
  }
  return verdict;
}

CardinalVerdict decideCardinalReversible(const CardinalMultiset& c) {
  CardinalVerdict verdict;
  bool anyInf = false;
  bool anyAleph = !c.alephRuns.empty();
  for (const auto& [value, count] : c.singles) {
    if (count.isInf()) anyInf = true;
    if (!value.finite) anyAleph = true;
  }
  verdict.finiteToOne = !anyInf;
  verdict.allFinite = !anyAleph;
  if (verdict.finiteToOne) {
    verdict.reversible = true;
    return verdict;
  }
  if (!verdict.allFinite) {
    verdict.reversible = false;
    return verdict;
  }
  NatMultiset induced;
  for (const auto& [value, count] : c.singles)
    induced.singles.emplace_back(value.value, count);
  induced.progressions = c.finiteRuns;
  verdict.natVerdict = decideNatReversible(induced.normalized());
  verdict.reversible = verdict.natVerdict->reversible;
  return verdict;
}

}  // namespace ordrev
