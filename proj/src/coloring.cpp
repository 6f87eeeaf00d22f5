#include "ordrev/coloring.hpp"

namespace ordrev {

std::uint64_t cantorPair(std::uint64_t first, std::uint64_t second) {
  const std::uint64_t s = first + second;
  return s * (s + 1) / 2 + second;
}

std::pair<std::uint64_t, std::uint64_t> cantorUnpair(std::uint64_t n) {
  std::uint64_t s = 0;
  while ((s + 1) * (s + 2) / 2 <= n) ++s;
  const std::uint64_t second = n - s * (s + 1) / 2;
  return {s - second, second};
}

Coloring partitionLimit(const Ordinal& gamma, Count lambda) {
  if (!gamma.isLimit()) throw NotLimit("partition requires a limit ordinal");
  Coloring c;
  c.gamma_ = gamma;
  if (lambda.isInf()) {
    c.scheme_ = Coloring::Scheme::Pairing;
  } else {
    c.scheme_ = Coloring::Scheme::Residue;
    c.lambda_ = lambda.finiteValue();
  }
  return c;
}

Coloring splitPrefix(const Ordinal& gamma, const Ordinal& alpha) {
  if (!gamma.isLimit()) throw NotLimit("prefix split requires a limit ordinal");
  if (alpha > gamma) throw AlphaTooBig("prefix type exceeds the host ordinal");
  Coloring c;
  c.scheme_ = Coloring::Scheme::PrefixSplit;
  c.gamma_ = gamma;
  c.alpha_ = alpha;
  auto d = decompose(alpha);
  c.alphaGamma_ = d.gamma;
  c.alphaTail_ = d.tail;
  return c;
}

Count Coloring::colorCount() const {
  switch (scheme_) {
    case Scheme::Residue:
      return Count::fin(lambda_);
    case Scheme::Pairing:
      return Count::inf();
    case Scheme::PrefixSplit:
      return Count::fin(2);
  }
  return Count::fin(1);
}

Ordinal Coloring::classTarget(std::uint64_t color) const {
  if (scheme_ == Scheme::PrefixSplit && color == kColorA) return alpha_;
  return gamma_;
}

std::uint64_t Coloring::colorOf(const Ordinal& x) const {
  auto d = decompose(x);
  switch (scheme_) {
    case Scheme::Residue:
      return d.tail % lambda_;
    case Scheme::Pairing:
      return cantorUnpair(d.tail).first;
    case Scheme::PrefixSplit: {
      // A = image of [0, alpha) under the even-tail embedding
      // beta + m  |->  beta + 2m of gamma into itself.
      if (d.tail % 2 != 0) return kColorB;
      Ordinal evenRank = add(d.gamma, Ordinal::nat(d.tail / 2));
      return evenRank < alpha_ ? kColorA : kColorB;
    }
  }
  return 0;
}

Ordinal Coloring::rank(const Ordinal& x) const {
  auto d = decompose(x);
  switch (scheme_) {
    case Scheme::Residue:
      return add(d.gamma, Ordinal::nat(d.tail / lambda_));
    case Scheme::Pairing:
      return add(d.gamma, Ordinal::nat(cantorUnpair(d.tail).second));
    case Scheme::PrefixSplit:
      break;
  }
  if (colorOf(x) == kColorA) return add(d.gamma, Ordinal::nat(d.tail / 2));
  // B ranks block-wise: blocks below alpha's limit part lose their even
  // half, the block at alpha's limit part loses its first alphaTail_ evens,
  // higher blocks are untouched.
  auto blockOrder = compare(d.gamma, alphaGamma_);
  if (blockOrder == std::strong_ordering::less)
    return add(d.gamma, Ordinal::nat((d.tail - 1) / 2));
  if (blockOrder == std::strong_ordering::greater) return x;
  if (d.tail % 2 == 1 && d.tail < 2 * alphaTail_)
    return add(d.gamma, Ordinal::nat((d.tail - 1) / 2));
  return add(d.gamma, Ordinal::nat(d.tail - alphaTail_));
}

Ordinal Coloring::unrank(std::uint64_t color, const Ordinal& y) const {
  auto d = decompose(y);
  switch (scheme_) {
    case Scheme::Residue:
      return add(d.gamma, Ordinal::nat(d.tail * lambda_ + color));
    case Scheme::Pairing:
      return add(d.gamma, Ordinal::nat(cantorPair(color, d.tail)));
    case Scheme::PrefixSplit:
      break;
  }
  if (color == kColorA) return add(d.gamma, Ordinal::nat(d.tail * 2));
  auto blockOrder = compare(d.gamma, alphaGamma_);
  if (blockOrder == std::strong_ordering::less)
    return add(d.gamma, Ordinal::nat(d.tail * 2 + 1));
  if (blockOrder == std::strong_ordering::greater) return y;
  if (d.tail < alphaTail_) return add(d.gamma, Ordinal::nat(d.tail * 2 + 1));
  return add(d.gamma, Ordinal::nat(d.tail + alphaTail_));
}

}  // namespace ordrev
