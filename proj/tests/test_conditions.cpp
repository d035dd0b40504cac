#include <doctest.h>

#include "hallverdict/conditions.hpp"

using namespace hallverdict;
using arith::Natural;
using conditions::cond_I;
using conditions::cond_II;
using conditions::cond_III;
using conditions::cond_IV;
using conditions::cond_V;
using conditions::cond_VI;
using conditions::cond_VII;
using groups::Alternating;
using groups::Lie;
using groups::LieFamily;
using groups::make_realization;
using groups::Sporadic;
using groups::SporadicName;

namespace {

PrimeSet fin(std::initializer_list<int> xs) {
  std::vector<Natural> v;
  for (int x : xs) v.emplace_back(x);
  return PrimeSet::finite(std::move(v));
}

}  // namespace

TEST_CASE("Condition I") {
  CHECK(cond_I(Alternating{5}, fin({3, 7})).satisfied);
  CHECK_FALSE(cond_I(Lie{LieFamily::A, 1, Natural(7)}, fin({2, 3})).satisfied);
  CHECK(cond_I(Lie{LieFamily::TwB2, 2, Natural(8)}, fin({2, 3})).satisfied);
  CHECK(cond_I(Alternating{5}, fin({})).satisfied);
}

TEST_CASE("Condition II") {
  auto m11 = cond_II(Sporadic{SporadicName::M11}, fin({5, 11}));
  CHECK(m11.satisfied);
  CHECK(m11.label() == "II(1)");
  auto ly = cond_II(Sporadic{SporadicName::Ly}, fin({11, 67}));
  CHECK(ly.satisfied);
  CHECK(ly.label() == "II(9)");
  CHECK_FALSE(cond_II(Sporadic{SporadicName::M11}, fin({2, 3, 5})).satisfied);
  CHECK_FALSE(cond_II(Alternating{5}, fin({5})).satisfied);
  // 17 items, 24 (group, set) pairs in total.
  std::size_t pairs = 0;
  for (const auto& item : conditions::cond_ii_table()) pairs += item.sets.size();
  CHECK(conditions::cond_ii_table().size() == 17);
  CHECK(pairs == 24);
}

TEST_CASE("Condition III") {
  auto sat = cond_III(make_realization(LieFamily::A, 2, Natural(11)), fin({5, 11}));
  CHECK(sat.satisfied);
  auto weyl = cond_III(make_realization(LieFamily::A, 2, Natural(11)), fin({2, 11}));
  CHECK_FALSE(weyl.satisfied);
  CHECK(weyl.fail_reason.find("Weyl") != std::string::npos);
  CHECK(cond_III(make_realization(LieFamily::A, 2, Natural(5)), fin({5})).satisfied);
  CHECK_FALSE(
      cond_III(make_realization(LieFamily::A, 2, Natural(11)), fin({5, 7}))
          .satisfied);  // p not in pi
}

TEST_CASE("Condition III readings differ exactly when p divides the Weyl order") {
  // PSL2(8) with pi = {2,7}: tau = {7} lies in pi(q-1) but p = 2 divides
  // |W(A1)| = 2. The literal reading fails, the p-exempt variant passes.
  auto real = make_realization(LieFamily::A, 1, Natural(8));
  auto literal = cond_III(real, fin({2, 7}));
  CHECK_FALSE(literal.satisfied);
  bool flagged = false;
  for (const auto& f : literal.flags)
    flagged |= f.find("differs") != std::string::npos;
  CHECK(flagged);
  conditions::ConditionOptions exempt;
  exempt.weyl_excludes_p = true;
  CHECK(cond_III(real, fin({2, 7}), exempt).satisfied);
}

TEST_CASE("Condition IV") {
  auto iv1 = cond_IV(make_realization(LieFamily::A, 2, Natural(2)), fin({3, 7}));
  CHECK(iv1.satisfied);
  CHECK(iv1.label() == "IV(1)");
  CHECK(iv1.bindings.at("r") == "3");
  CHECK(iv1.bindings.at("a") == "2");
  CHECK(iv1.bindings.at("b") == "3");

  CHECK_FALSE(
      cond_IV(make_realization(LieFamily::A, 2, Natural(2)), fin({2, 3})).satisfied);

  auto iv8 = cond_IV(make_realization(LieFamily::TwD, 6, Natural(3)), fin({7, 13}));
  CHECK(iv8.satisfied);
  CHECK(iv8.label() == "IV(8)");
  CHECK(iv8.bindings.at("a") == "6");
  CHECK(iv8.bindings.at("b") == "3");
}

TEST_CASE("Condition IV bindings replay") {
  // Re-derive every quantity in the IV(1) witness from scratch.
  auto t = cond_IV(make_realization(LieFamily::A, 2, Natural(2)), fin({3, 7}));
  REQUIRE(t.satisfied);
  Natural q(2), r(3);
  CHECK(arith::mult_order(q, r) == Natural(t.bindings.at("a")));
  CHECK(arith::mult_order(q, 7) == Natural(t.bindings.at("b")));
  CHECK(arith::r_part(arith::pow_nat(q, 2) - 1, r) == r);
  CHECK(Natural(3) / (r - 1) == Natural(3) / r);
}

TEST_CASE("Condition V") {
  auto v14 = cond_V(make_realization(LieFamily::G2, 2, Natural(31)), fin({3, 5}));
  CHECK(v14.satisfied);
  CHECK(v14.label() == "V(14)");
  CHECK_FALSE(
      cond_V(make_realization(LieFamily::G2, 2, Natural(31)), fin({3, 5, 7}))
          .satisfied);
  CHECK_FALSE(
      cond_V(make_realization(LieFamily::TriD4, 4, Natural(2)), fin({3, 7}))
          .satisfied);
}

TEST_CASE("Condition V strictness table of truth") {
  using conditions::clauses::v;
  const Natural r5(5);
  // (1) A: n < cs, strict.
  CHECK(v(1, LieFamily::A, 9, r5, 2, {Natural(5)}));
  CHECK_FALSE(v(1, LieFamily::A, 10, r5, 2, {Natural(5)}));
  // (2) 2A with c = 0 mod 4: n < cs, strict.
  CHECK(v(2, LieFamily::TwA, 19, r5, 4, {Natural(5)}));
  CHECK_FALSE(v(2, LieFamily::TwA, 20, r5, 4, {Natural(5)}));
  CHECK_FALSE(v(2, LieFamily::TwA, 5, r5, 2, {Natural(5)}));  // parity
  // (3) 2A with c = 2 mod 4: 2n < cs, strict.
  CHECK(v(3, LieFamily::TwA, 4, r5, 2, {Natural(5)}));
  CHECK_FALSE(v(3, LieFamily::TwA, 5, r5, 2, {Natural(5)}));
  // (4) 2A with c odd: n < 2cs, strict.
  CHECK(v(4, LieFamily::TwA, 9, r5, 1, {Natural(5)}));
  CHECK_FALSE(v(4, LieFamily::TwA, 10, r5, 1, {Natural(5)}));
  // (5) B/C/2D with c odd: 2n < cs, strict.
  CHECK(v(5, LieFamily::B, 7, r5, 3, {Natural(5)}));
  CHECK_FALSE(v(5, LieFamily::B, 8, r5, 3, {Natural(5)}));
  CHECK(v(5, LieFamily::TwD, 7, r5, 3, {Natural(5)}));
  CHECK_FALSE(v(5, LieFamily::D, 7, r5, 3, {Natural(5)}));  // family
  // (6) B/C/D with c even: n < cs, strict.
  CHECK(v(6, LieFamily::D, 9, r5, 2, {Natural(5)}));
  CHECK_FALSE(v(6, LieFamily::D, 10, r5, 2, {Natural(5)}));
  CHECK_FALSE(v(6, LieFamily::TwD, 9, r5, 2, {Natural(5)}));  // family
  // (7) D with c even: 2n <= cs, NON-strict.
  CHECK(v(7, LieFamily::D, 5, r5, 2, {Natural(5)}));   // 10 <= 10
  CHECK_FALSE(v(7, LieFamily::D, 6, r5, 2, {Natural(5)}));
  // (8) 2D with c odd: n <= cs, NON-strict.
  CHECK(v(8, LieFamily::TwD, 5, r5, 1, {Natural(5)}));  // 5 <= 5
  CHECK_FALSE(v(8, LieFamily::TwD, 6, r5, 1, {Natural(5)}));
  // (10)-(13), (15): exceptional exclusion lists.
  CHECK_FALSE(v(10, LieFamily::E6, 6, Natural(3), 1, {Natural(5)}));
  CHECK(v(10, LieFamily::E6, 6, Natural(3), 1, {Natural(7)}));
  CHECK(v(10, LieFamily::E6, 6, Natural(3), 2, {Natural(5)}));
  CHECK_FALSE(v(11, LieFamily::TwE6, 6, Natural(3), 2, {Natural(13)}));
  CHECK(v(11, LieFamily::TwE6, 6, Natural(3), 1, {Natural(13)}));
  CHECK_FALSE(v(12, LieFamily::E7, 7, Natural(5), 2, {Natural(7)}));
  CHECK(v(12, LieFamily::E7, 7, Natural(5), 3, {Natural(7)}));
  CHECK_FALSE(v(13, LieFamily::E8, 8, Natural(5), 1, {Natural(31)}));
  CHECK(v(13, LieFamily::E8, 8, Natural(7), 1, {Natural(31)}));
  CHECK_FALSE(v(15, LieFamily::F4, 4, Natural(3), 1, {Natural(13)}));
  CHECK(v(15, LieFamily::F4, 4, Natural(3), 1, {Natural(7)}));
}

TEST_CASE("Condition VI") {
  auto sz128 =
      cond_VI(make_realization(LieFamily::TwB2, 2, Natural(128)), fin({5, 29}));
  CHECK(sz128.satisfied);
  CHECK(sz128.label() == "VI(1)");
  CHECK(sz128.bindings.at("containing_value") == "145");

  CHECK_FALSE(
      cond_VI(make_realization(LieFamily::TwB2, 2, Natural(8)), fin({5, 13}))
          .satisfied);

  auto sz2048 =
      cond_VI(make_realization(LieFamily::TwB2, 2, Natural(2048)), fin({23, 89}));
  CHECK(sz2048.satisfied);
  CHECK(sz2048.bindings.at("containing_value") == "2047");

  // 2G2(27): the sets strip 2, so {2,13} is not contained although 2.13 | q-1.
  CHECK_FALSE(
      cond_VI(make_realization(LieFamily::TwG2, 2, Natural(27)), fin({2, 13}))
          .satisfied);
  CHECK(cond_VI(make_realization(LieFamily::TwG2, 2, Natural(27)), fin({13}))
            .satisfied);
  CHECK(cond_VI(make_realization(LieFamily::TwG2, 2, Natural(27)), fin({19}))
            .satisfied);
  CHECK_FALSE(
      cond_VI(make_realization(LieFamily::A, 1, Natural(8)), fin({7})).satisfied);
}

TEST_CASE("Condition VII") {
  auto a29 = cond_VII(make_realization(LieFamily::A, 1, Natural(29)), fin({2, 7}));
  CHECK(a29.satisfied);
  CHECK(a29.label() == "VII(1)");
  CHECK(a29.bindings.at("epsilon") == "+1");

  auto a11 = cond_VII(make_realization(LieFamily::A, 1, Natural(11)), fin({2, 5}));
  CHECK_FALSE(a11.satisfied);
  CHECK(a11.bindings.at("epsilon") == "-1");

  auto a19 = cond_VII(make_realization(LieFamily::A, 1, Natural(19)), fin({2, 5}));
  CHECK(a19.satisfied);
  CHECK(a19.bindings.at("phi") == "{5}");

  CHECK_FALSE(
      cond_VII(make_realization(LieFamily::A, 1, Natural(29)), fin({2, 3, 7}))
          .satisfied);  // 3 in pi
}

TEST_CASE("Condition VII clause thresholds") {
  using conditions::clauses::vii;
  // (1) A/2A: s > n for tau, t > n+1 for Fermat members.
  CHECK(vii(1, LieFamily::A, 4, {Natural(7)}, {}));           // 7 > 4, no Fermat
  CHECK_FALSE(vii(1, LieFamily::A, 7, {Natural(7)}, {}));     // 7 > 7 fails
  CHECK(vii(1, LieFamily::A, 3, {Natural(5)}, {Natural(5)}));       // 5 > 3+1
  CHECK_FALSE(vii(1, LieFamily::A, 4, {Natural(5)}, {Natural(5)})); // 5 > 4+1 fails
  // (2) B: s > 2n+1.
  CHECK(vii(2, LieFamily::B, 2, {Natural(7)}, {}));           // 7 > 5
  CHECK_FALSE(vii(2, LieFamily::B, 3, {Natural(7)}, {}));     // 7 > 7 fails
  // (3) C: s > n and Fermat t > 2n+1.
  CHECK(vii(3, LieFamily::C, 3, {Natural(7)}, {}));
  CHECK(vii(3, LieFamily::C, 3, {Natural(17)}, {Natural(17)}));       // 17 > 7
  CHECK_FALSE(vii(3, LieFamily::C, 8, {Natural(17)}, {Natural(17)})); // 17 = 2n+1
  // (4) D/2D: s > 2n.
  CHECK(vii(4, LieFamily::TwD, 5, {Natural(11)}, {}));        // 11 > 10
  CHECK_FALSE(vii(4, LieFamily::D, 6, {Natural(11)}, {}));    // 11 > 12 fails
  // (5)-(10): exclusion lists.
  CHECK_FALSE(vii(5, LieFamily::G2, 2, {Natural(7)}, {}));
  CHECK(vii(5, LieFamily::TwG2, 2, {Natural(13)}, {}));
  CHECK_FALSE(vii(9, LieFamily::E8, 8, {Natural(13)}, {}));
  CHECK(vii(9, LieFamily::E8, 8, {Natural(17)}, {}));
  CHECK_FALSE(vii(10, LieFamily::TriD4, 4, {Natural(7)}, {}));
}

TEST_CASE("satisfies_any") {
  using conditions::satisfies_any;
  // Alt(5) with {2,5}: every condition fails on both realizations.
  auto alt5 = satisfies_any(Alternating{5}, fin({2, 5}));
  CHECK_FALSE(alt5.satisfied);
  CHECK(alt5.witness == -1);

  // PSL2(7) with {3,7}: Condition IV(1) fires on the A2(2) realization.
  auto psl27 = satisfies_any(Lie{LieFamily::A, 1, Natural(7)}, fin({3, 7}));
  CHECK(psl27.satisfied);
  REQUIRE(psl27.witness_trace() != nullptr);
  CHECK(psl27.witness_trace()->label() == "IV(1)");
  REQUIRE(psl27.witness_trace()->realization.has_value());
  CHECK(psl27.witness_trace()->realization->to_string() == "A(2,2)");

  // M23 with {11,23}: Condition II(4).
  auto m23 = satisfies_any(Sporadic{SporadicName::M23}, fin({11, 23}));
  CHECK(m23.satisfied);
  CHECK(m23.witness_trace()->label() == "II(4)");

  // The Tits group is never pushed through Conditions III-VII.
  auto tits = satisfies_any(Sporadic{SporadicName::Tits}, fin({2, 5}));
  CHECK_FALSE(tits.satisfied);
  REQUIRE_FALSE(tits.notes.empty());
  for (const auto& t : tits.traces) {
    CHECK(t.condition != "III");
    CHECK(t.condition != "IV");
  }
}

TEST_CASE("satisfies_any is canonicalization-invariant") {
  std::vector<std::pair<groups::SimpleGroupId, groups::SimpleGroupId>> pairs = {
      {Lie{LieFamily::A, 1, Natural(4)}, Alternating{5}},
      {Lie{LieFamily::A, 2, Natural(2)}, Lie{LieFamily::A, 1, Natural(7)}},
      {Lie{LieFamily::TwA, 3, Natural(2)}, Lie{LieFamily::B, 2, Natural(3)}},
      {Lie{LieFamily::C, 2, Natural(3)}, Lie{LieFamily::B, 2, Natural(3)}},
  };
  std::vector<PrimeSet> pis = {fin({2, 3}), fin({3, 7}), fin({2, 3, 5}),
                               fin({5, 7}), fin({3, 5}), fin({2})};
  for (const auto& [a, b] : pairs)
    for (const auto& pi : pis)
      CHECK(conditions::satisfies_any(a, pi).satisfied ==
            conditions::satisfies_any(b, pi).satisfied);
}
