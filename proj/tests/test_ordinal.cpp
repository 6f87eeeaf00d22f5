#include "ordrev/ordinal.hpp"

#include <doctest.h>

#include <array>
#include <random>
#include <vector>

#include "helpers.hpp"

using namespace ordrev;
using namespace ordrev::testing;

namespace {

// Independent comparison oracle for ordinals with finite exponents <= 3:
// w^3*a + w^2*b + w*c + d compares as the tuple (a, b, c, d).
std::array<std::uint64_t, 4> tupleOf(const Ordinal& o) {
  std::array<std::uint64_t, 4> t{0, 0, 0, 0};
  for (const auto& term : o.terms()) {
    REQUIRE(term.exponent.isFinite());
    std::uint64_t e = term.exponent.finiteValue();
    REQUIRE(e <= 3);
    t[3 - e] = term.coefficient;
  }
  return t;
}

std::strong_ordering oracleCompare(const Ordinal& a, const Ordinal& b) {
  return tupleOf(a) <=> tupleOf(b);
}

// Random CNF with finite exponents <= maxExp and coefficients <= 9.
Ordinal randomCnf(std::mt19937_64& rng, std::uint64_t maxExp = 3) {
  std::uniform_int_distribution<std::uint64_t> coeff(1, 9);
  std::vector<CnfTerm> terms;
  for (std::uint64_t e = maxExp + 1; e-- > 0;) {
    if (rng() % 2 == 0) continue;
    terms.push_back(CnfTerm{Ordinal::nat(e), coeff(rng)});
  }
  return makeCnf(std::move(terms));
}

}  // namespace

TEST_CASE("makeCnf builds and validates normal forms") {
  CHECK(makeCnf({}).isZero());
  CHECK(makeCnf({}) == Ordinal::nat(0));

  Ordinal wPlus4 = makeCnf({{nat(1), 1}, {nat(0), 4}});
  CHECK(wPlus4 == wPlus(4));

  CHECK_THROWS_AS(makeCnf({{nat(0), 3}, {nat(1), 1}}), MalformedCnf);
  CHECK_THROWS_AS(makeCnf({{nat(1), 0}}), MalformedCnf);
  CHECK_THROWS_AS(makeCnf({{nat(1), 2}, {nat(1), 1}}), MalformedCnf);
}

TEST_CASE("compare basics") {
  CHECK(compare(w(), w()) == std::strong_ordering::equal);
  CHECK(compare(wPlus(4), wPlus(6)) == std::strong_ordering::less);
  Ordinal w5plus3 = add(wTimes(5), nat(3));
  CHECK(compare(wPow(2), w5plus3) == std::strong_ordering::greater);
  CHECK(oracleCompare(wPow(2), w5plus3) == std::strong_ordering::greater);
  CHECK(nat(0) < nat(1));
  CHECK(nat(7) < w());
}

TEST_CASE("compare agrees with the tuple oracle and is a total order") {
  std::mt19937_64 rng(20240811);
  std::vector<Ordinal> pool;
  for (int i = 0; i < 200; ++i) pool.push_back(randomCnf(rng));
  for (const auto& a : pool) {
    for (const auto& b : pool) {
      auto lhs = compare(a, b);
      CHECK(lhs == oracleCompare(a, b));
      // antisymmetry
      auto rhs = compare(b, a);
      if (lhs == std::strong_ordering::less)
        CHECK(rhs == std::strong_ordering::greater);
      if (lhs == std::strong_ordering::equal)
        CHECK(rhs == std::strong_ordering::equal);
    }
  }
  // transitivity on random triples
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int i = 0; i < 2000; ++i) {
    const Ordinal &a = pool[pick(rng)], &b = pool[pick(rng)], &c = pool[pick(rng)];
    if (a <= b && b <= c) CHECK(a <= c);
  }
}

TEST_CASE("addition basics") {
  CHECK(add(Ordinal{}, w()) == w());
  CHECK(add(w(), Ordinal{}) == w());
  CHECK(add(w(), nat(4)) == wPlus(4));
  CHECK(add(nat(3), w()) == w());  // finite absorbed by limit
  CHECK(add(nat(3), nat(4)) == nat(7));
  CHECK(add(wPlus(3), wPlus(4)) == add(wTimes(2), nat(4)));
  CHECK(add(wPow(2), w()) == makeCnf({{nat(2), 1}, {nat(1), 1}}));
}

TEST_CASE("addition properties") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 3000; ++i) {
    Ordinal a = randomCnf(rng), b = randomCnf(rng), c = randomCnf(rng);
    CHECK(add(add(a, b), c) == add(a, add(b, c)));
    CHECK(add(a, Ordinal{}) == a);
    CHECK(add(Ordinal{}, a) == a);
    if (b < c) CHECK(add(a, b) < add(a, c));  // right monotonicity
  }
}

TEST_CASE("decompose splits into limit part and finite tail") {
  auto d = decompose(add(wPow(2), add(w(), nat(3))));
  CHECK(d.gamma == add(wPow(2), w()));
  CHECK(d.tail == 3);

  d = decompose(nat(5));
  CHECK(d.gamma.isZero());
  CHECK(d.tail == 5);

  d = decompose(w());
  CHECK(d.gamma == w());
  CHECK(d.tail == 0);

  d = decompose(Ordinal{});
  CHECK(d.gamma.isZero());
  CHECK(d.tail == 0);
}

TEST_CASE("decompose round trip and limit detection") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 3000; ++i) {
    Ordinal a = randomCnf(rng);
    auto d = decompose(a);
    CHECK(add(d.gamma, Ordinal::nat(d.tail)) == a);
    for (const auto& t : d.gamma.terms()) CHECK(!t.exponent.isZero());
    CHECK(a.isLimit() == (d.tail == 0 && !d.gamma.isZero()));
  }
}

TEST_CASE("text form round-trips through structure") {
  CHECK(toText(Ordinal{}) == "0");
  CHECK(toText(nat(4)) == "4");
  CHECK(toText(w()) == "w");
  CHECK(toText(wPlus(4)) == "w + 4");
  CHECK(toText(add(wPow(2, 3), add(wTimes(2), nat(5)))) == "w^2*3 + w*2 + 5");
  CHECK(toText(Ordinal::omegaPow(w())) == "w^w");
  CHECK(toText(Ordinal::omegaPow(wPlus(1), 2)) == "w^(w + 1)*2");
}
