#include <doctest.h>

#include "hallverdict/catalog.hpp"

using namespace hallverdict;
using arith::Natural;
using catalog::hall_sporadic;
using catalog::hall_symmetric;
using catalog::structure_order;
using groups::SporadicName;

namespace {

PrimeSet fin(std::initializer_list<int> xs) {
  std::vector<Natural> v;
  for (int x : xs) v.emplace_back(x);
  return PrimeSet::finite(std::move(v));
}

}  // namespace

TEST_CASE("structure string orders") {
  CHECK(structure_order("2^4:Alt(6)") == 5760);
  CHECK(structure_order("Sym(4)wrSym(2)") == 1152);
  CHECK(structure_order("3^2:Q8.2") == 144);
  CHECK(structure_order("Alt(6).2") == 720);
  CHECK(structure_order("2^4:(3xAlt(4)):2") == 1152);
  CHECK(structure_order("L3(4):2_2") == 40320);
  CHECK(structure_order("M22") == 443520);
  CHECK(structure_order("2^6:3.Sym(6)") == 138240);
  CHECK(structure_order("2xAlt(4)") == 24);
  CHECK(structure_order("2^3:7:3") == 168);
  CHECK(structure_order("2^11:(2^6:3.Sym(6))") == 283115520);
  CHECK(structure_order("Sym(3)xSym(4)") == 144);
  CHECK(structure_order("Sym(10)") == 3628800);
  CHECK(structure_order("2wr4") == 64);  // regular wreath over a cyclic top
  CHECK_THROWS_AS(structure_order("Alt(5)o2"), InvalidInputError);
  CHECK_THROWS_AS(structure_order("Frob(20)"), InvalidInputError);
}

TEST_CASE("hall_symmetric table rows") {
  auto row = hall_symmetric(7, fin({2, 3}));
  REQUIRE(row.has_value());
  CHECK(row->structure == "Sym(3)xSym(4)");
  CHECK(row->group.to_string() == "Sym(7)");

  row = hall_symmetric(8, fin({2, 3}));
  REQUIRE(row.has_value());
  CHECK(row->structure == "Sym(4)wrSym(2)");

  row = hall_symmetric(11, fin({2, 3, 5, 7}));
  REQUIRE(row.has_value());
  CHECK(row->structure == "Sym(10)");

  row = hall_symmetric(5, fin({2, 3}));
  REQUIRE(row.has_value());
  CHECK(row->structure == "Sym(4)");

  row = hall_symmetric(7, fin({2, 3, 5}));
  REQUIRE(row.has_value());
  CHECK(row->structure == "Sym(6)");

  CHECK_FALSE(hall_symmetric(9, fin({2, 3})).has_value());
  CHECK_FALSE(hall_symmetric(8, fin({2, 3, 5})).has_value());
  CHECK_FALSE(hall_symmetric(10, fin({2, 3, 5, 7})).has_value());
}

TEST_CASE("hall_symmetric hypothesis checks") {
  CHECK_THROWS_AS(hall_symmetric(7, fin({2, 3, 5, 7})), HypothesisViolatedError);
  CHECK_THROWS_AS(hall_symmetric(6, fin({5, 7})), HypothesisViolatedError);
  CHECK_THROWS_AS(hall_symmetric(4, fin({2, 3})), HypothesisViolatedError);
}

TEST_CASE("hall_sporadic rows") {
  auto rows = hall_sporadic(SporadicName::M23, fin({2, 3, 5, 7, 11}));
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].structure == "M22");

  rows = hall_sporadic(SporadicName::J1, fin({2, 7}));
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].structure == "2^3:7");

  CHECK(hall_sporadic(SporadicName::M12, fin({2, 3})).empty());

  // The two printed duplicates for M23 / {2,3,5} are both returned.
  rows = hall_sporadic(SporadicName::M23, fin({2, 3, 5}));
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].structure == "2^4:Alt(6)");
  CHECK(rows[1].structure == "2^4:(3xAlt(5)):2");

  CHECK_THROWS_AS(hall_sporadic(SporadicName::M11, fin({3, 5})),
                  HypothesisViolatedError);
  CHECK_THROWS_AS(hall_sporadic(SporadicName::M11, fin({2, 3, 5, 11})),
                  HypothesisViolatedError);
  CHECK_THROWS_AS(hall_sporadic(SporadicName::M11, fin({2, 5})),
                  HypothesisViolatedError);
  CHECK(hall_sporadic(SporadicName::Tits, fin({2, 3})).empty());
}

TEST_CASE("every sporadic row is a genuine Hall order") {
  for (const auto& row : catalog::sporadic_hall_table()) {
    Natural h = structure_order(row.structure);
    Natural g = groups::order(groups::Sporadic{row.group.name});
    REQUIRE(g % h == 0);
    Natural index = g / h;
    for (const auto& p : row.pi_intersection) CHECK(index % p != 0);
    // and the subgroup order only uses primes from the row's set
    Natural m = h;
    for (const auto& p : row.pi_intersection)
      while (m % p == 0) m /= p;
    CHECK(m == 1);
  }
}

TEST_CASE("symmetric rows are genuine Hall orders") {
  struct Row {
    std::uint32_t n;
    std::initializer_list<int> pi;
  };
  for (const auto& r : {Row{5, {2, 3}}, Row{7, {2, 3}}, Row{7, {2, 3, 5}},
                        Row{8, {2, 3}}, Row{11, {2, 3, 5, 7}},
                        Row{13, {2, 3, 5, 7, 11}}}) {
    auto rec = hall_symmetric(r.n, fin(r.pi));
    REQUIRE(rec.has_value());
    Natural h = structure_order(rec->structure);
    Natural g = 1;
    for (std::uint32_t i = 2; i <= r.n; ++i) g *= i;
    REQUIRE(g % h == 0);
    Natural index = g / h;
    for (int p : r.pi) CHECK(index % p != 0);
  }
}
