#include "ordrev/family.hpp"

#include <algorithm>
#include <tuple>

namespace ordrev {

Ordinal ChainEntry::limitPart() const {
  if (isSingle()) return decompose(single().value).gamma;
  return progression().gamma;
}

ChainEntry singleEntry(Orientation o, const Ordinal& value, Count count) {
  ChainEntry e;
  e.orientation = o;
  e.shape = ChainSingle{value, count};
  return e;
}

ChainEntry progressionEntry(Orientation o, const Ordinal& gamma,
                            std::uint64_t first, std::uint64_t step,
                            std::uint64_t copies) {
  ChainEntry e;
  e.orientation = o;
  e.shape = ChainProgression{gamma, first, step, copies};
  return e;
}

bool entryLess(const ChainEntry& a, const ChainEntry& b) {
  auto rank = [](const ChainEntry& e) {
    return std::pair{e.orientation == Orientation::W ? 0 : 1, e.isSingle() ? 0 : 1};
  };
  if (rank(a) != rank(b)) return rank(a) < rank(b);
  if (a.isSingle()) {
    const auto& sa = a.single();
    const auto& sb = b.single();
    auto c = compare(sa.value, sb.value);
    if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
    if (sa.count.isInf() != sb.count.isInf()) return sb.count.isInf();
    if (sa.count.isFin() && sa.count.finiteValue() != sb.count.finiteValue())
      return sa.count.finiteValue() < sb.count.finiteValue();
    return false;
  }
  const auto& pa = a.progression();
  const auto& pb = b.progression();
  auto c = compare(pa.gamma, pb.gamma);
  if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
  return std::tie(pa.first, pa.step, pa.copies) <
         std::tie(pb.first, pb.step, pb.copies);
}

namespace {

void validateEntry(const ChainEntry& e) {
  if (e.isSingle()) {
    if (e.single().value.isZero())
      throw ZeroOrdinal("single chain value must be a nonzero ordinal");
    return;
  }
  const auto& p = e.progression();
  if (decompose(p.gamma).tail != 0)
    throw MalformedCnf("progression limit part must be limit or zero");
  if (p.gamma.isZero() && p.first == 0)
    throw ZeroOrdinal("progression at limit part 0 would present the chain 0");
  if (p.step == 0) throw MalformedCnf("progression step must be >= 1");
  if (p.copies == 0) throw MalformedCnf("progression copies must be >= 1");
}

}  // namespace

FamilyPresentation normalize(const FamilyPresentation& p) {
  if (p.entries.empty()) throw EmptyFamily("family presentation has no entries");
  for (const auto& e : p.entries) validateEntry(e);

  // Finite chains are their own inverses; label them W.
  auto canonicalOrientation = [](const ChainEntry& e) {
    return e.isFiniteChainEntry() ? Orientation::W : e.orientation;
  };

  std::vector<ChainEntry> merged;
  {
    std::vector<std::pair<std::pair<int, Ordinal>, Count>> singleAcc;
    auto addSingle = [&](Orientation o, const Ordinal& v, Count c) {
      std::pair<int, Ordinal> key{o == Orientation::W ? 0 : 1, v};
      for (auto& [k, count] : singleAcc) {
        if (k.first == key.first && k.second == key.second) {
          count = count + c;
          return;
        }
      }
      singleAcc.emplace_back(key, c);
    };
    std::vector<ChainProgression> progAcc;
    std::vector<Orientation> progOrient;
    auto addProgression = [&](Orientation o, const ChainProgression& pr) {
      for (std::size_t i = 0; i < progAcc.size(); ++i) {
        if (progOrient[i] == o && progAcc[i].gamma == pr.gamma &&
            progAcc[i].first == pr.first && progAcc[i].step == pr.step) {
          progAcc[i].copies += pr.copies;
          return;
        }
      }
      progAcc.push_back(pr);
      progOrient.push_back(o);
    };
    for (const auto& e : p.entries) {
      Orientation o = canonicalOrientation(e);
      if (e.isSingle())
        addSingle(o, e.single().value, e.single().count);
      else
        addProgression(o, e.progression());
    }
    for (const auto& [key, count] : singleAcc)
      merged.push_back(singleEntry(
          key.first == 0 ? Orientation::W : Orientation::WStar, key.second, count));
    for (std::size_t i = 0; i < progAcc.size(); ++i) {
      ChainEntry e;
      e.orientation = progOrient[i];
      e.shape = progAcc[i];
      merged.push_back(e);
    }
  }
  std::sort(merged.begin(), merged.end(), entryLess);
  return FamilyPresentation{std::move(merged)};
}

std::optional<Count> multiplicity(const FamilyPresentation& p,
                                  const Ordinal& value, Orientation o) {
  const bool finite = value.isFinite();
  std::optional<Count> total;
  auto accumulate = [&total](Count c) { total = total ? *total + c : c; };
  for (const auto& e : p.entries) {
    if (!finite && e.orientation != o && !e.isFiniteChainEntry()) continue;
    if (e.isSingle()) {
      if (e.single().value == value) accumulate(e.single().count);
      continue;
    }
    const auto& run = e.progression();
    auto d = decompose(value);
    if (d.gamma == run.gamma && d.tail >= run.first &&
        (d.tail - run.first) % run.step == 0)
      accumulate(Count::fin(run.copies));
  }
  return total;
}

NatMultiset tailMultiset(const FamilyPresentation& p, const Ordinal& gamma,
                         Orientation o) {
  NatMultiset out;
  for (const auto& e : p.entries) {
    const bool finiteEntry = e.isFiniteChainEntry();
    if (!finiteEntry && e.orientation != o) continue;
    if (e.isSingle()) {
      auto d = decompose(e.single().value);
      if (d.gamma == gamma && d.tail >= 1)
        out.singles.emplace_back(d.tail, e.single().count);
      continue;
    }
    const auto& run = e.progression();
    if (!(run.gamma == gamma)) continue;
    // Drop the member with tail 0, if any.
    std::uint64_t first = run.first == 0 ? run.step : run.first;
    out.progressions.push_back(NatProgression{first, run.step, run.copies});
  }
  return out.normalized();
}

FamilyStats split(const FamilyPresentation& p) {
  FamilyStats stats;
  std::vector<Ordinal> parts;
  for (const auto& e : p.entries) {
    Ordinal g = e.limitPart();
    bool dup = false;
    for (const auto& q : parts)
      if (q == g) dup = true;
    if (!dup) parts.push_back(g);
  }
  std::sort(parts.begin(), parts.end(),
            [](const Ordinal& a, const Ordinal& b) { return a < b; });
  stats.limitParts = parts;
  stats.gammaStar = parts.empty() ? Ordinal{} : parts.back();

  stats.finiteToOne = true;
  for (const auto& e : p.entries)
    if (e.isSingle() && e.single().count.isInf()) stats.finiteToOne = false;

  auto& os = stats.orientationSplit;
  for (const auto& e : p.entries) {
    if (e.isFiniteChainEntry()) {
      os.wPart.entries.push_back(e);
      os.wStarPart.entries.push_back(e);
      continue;
    }
    if (e.orientation == Orientation::W) {
      os.wPart.entries.push_back(e);
      os.hasInfiniteW = true;
    } else {
      os.wStarPart.entries.push_back(e);
      os.hasInfiniteWStar = true;
    }
  }
  return stats;
}

}  // namespace ordrev
