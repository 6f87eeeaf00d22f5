#include "ordrev/ordinal.hpp"

#include <sstream>

namespace ordrev {

Ordinal::Ordinal(std::vector<CnfTerm> terms, Trusted) : terms_(std::move(terms)) {}

Ordinal Ordinal::nat(std::uint64_t n) {
  if (n == 0) return Ordinal{};
  return Ordinal{{CnfTerm{Ordinal{}, n}}, Trusted{}};
}

Ordinal Ordinal::omega() {
  return Ordinal{{CnfTerm{Ordinal::nat(1), 1}}, Trusted{}};
}

Ordinal Ordinal::omegaPow(const Ordinal& exponent, std::uint64_t coefficient) {
  if (coefficient == 0) throw MalformedCnf("coefficient must be >= 1");
  return Ordinal{{CnfTerm{exponent, coefficient}}, Trusted{}};
}

bool Ordinal::isFinite() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.front().exponent.isZero();
}

bool Ordinal::isLimit() const {
  return !terms_.empty() && !terms_.back().exponent.isZero();
}

std::uint64_t Ordinal::finiteValue() const {
  if (terms_.empty()) return 0;
  return terms_.front().coefficient;
}

Ordinal makeCnf(std::vector<CnfTerm> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient == 0)
      throw MalformedCnf("coefficient must be >= 1 at term " + std::to_string(i));
    if (i > 0 && compare(terms[i - 1].exponent, terms[i].exponent) !=
                     std::strong_ordering::greater)
      throw MalformedCnf("exponents must strictly decrease at term " +
                         std::to_string(i));
  }
  return Ordinal{std::move(terms), Ordinal::Trusted{}};
}

std::strong_ordering compare(const Ordinal& a, const Ordinal& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  const std::size_t n = std::min(ta.size(), tb.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto byExp = compare(ta[i].exponent, tb[i].exponent);
    if (byExp != std::strong_ordering::equal) return byExp;
    if (ta[i].coefficient != tb[i].coefficient)
      return ta[i].coefficient <=> tb[i].coefficient;
  }
  return ta.size() <=> tb.size();
}

Ordinal add(const Ordinal& a, const Ordinal& b) {
  if (b.isZero()) return a;
  if (a.isZero()) return b;
  const Ordinal& lead = b.terms().front().exponent;
  std::vector<CnfTerm> out;
  out.reserve(a.terms().size() + b.terms().size());
  std::size_t i = 0;
  while (i < a.terms().size() &&
         compare(a.terms()[i].exponent, lead) == std::strong_ordering::greater) {
    out.push_back(a.terms()[i]);
    ++i;
  }
  if (i < a.terms().size() &&
      compare(a.terms()[i].exponent, lead) == std::strong_ordering::equal) {
    out.push_back(CnfTerm{lead, a.terms()[i].coefficient + b.terms().front().coefficient});
  } else {
    out.push_back(b.terms().front());
  }
  out.insert(out.end(), b.terms().begin() + 1, b.terms().end());
  return makeCnf(std::move(out));
}

Decomposition decompose(const Ordinal& a) {
  Decomposition d;
  if (a.isZero()) return d;
  std::vector<CnfTerm> limitTerms;
  for (const auto& t : a.terms()) {
    if (t.exponent.isZero()) {
      d.tail = t.coefficient;  // at most one exponent-0 term, always last
    } else {
      limitTerms.push_back(t);
    }
  }
  d.gamma = makeCnf(std::move(limitTerms));
  return d;
}

namespace {

// Exponents print as a bare NAT, a bare "w", or a parenthesized sum, so
// that "w^E*c" re-parses with the exponent bound tightly.
void printExponent(std::ostringstream& os, const Ordinal& e) {
  if (e.isFinite()) {
    os << e.finiteValue();
    return;
  }
  if (e == Ordinal::omega()) {
    os << "w";
    return;
  }
  os << "(" << toText(e) << ")";
}

}  // namespace

std::string toText(const Ordinal& a) {
  if (a.isZero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : a.terms()) {
    if (!first) os << " + ";
    first = false;
    if (t.exponent.isZero()) {
      os << t.coefficient;
      continue;
    }
    os << "w";
    if (!(t.exponent == Ordinal::nat(1))) {
      os << "^";
      printExponent(os, t.exponent);
    }
    if (t.coefficient != 1) os << "*" << t.coefficient;
  }
  return os.str();
}

}  // namespace ordrev
