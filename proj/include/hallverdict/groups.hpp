#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hallverdict/arith.hpp"
#include "hallverdict/prime_set.hpp"

namespace hallverdict::groups {

using arith::Natural;

// Families of finite simple groups of Lie type. Twisted families carry the
// ambient (untwisted) root-system rank.
enum class LieFamily : std::uint8_t {
  A,
  TwA,   // 2A
  B,
  C,
  D,
  TwD,   // 2D
  E6,
  TwE6,  // 2E6
  E7,
  E8,
  F4,
  G2,
  TwG2,  // 2G2
  TriD4, // 3D4
  TwB2,  // 2B2
  TwF4,  // 2F4
};

const char* family_name(LieFamily f);
bool family_is_twisted(LieFamily f);

enum class SporadicName : std::uint8_t {
  M11, M12, M22, M23, M24,
  J1, J2, J3, J4,
  Co1, Co2, Co3,
  Fi22, Fi23, Fi24prime,
  HS, McL, He, Ru, Suz, ON, HN, Ly, Th,
  B, M,
  Tits,
};

const char* sporadic_name(SporadicName s);
std::optional<SporadicName> sporadic_from_name(const std::string& name);

struct Cyclic {
  Natural p;
};
struct Alternating {
  std::uint32_t n = 0;
};
struct Sporadic {
  SporadicName name;
};
struct Lie {
  LieFamily family;
  std::uint32_t rank = 0;  // ambient root-system rank
  Natural q;
};

using SimpleGroupId = std::variant<Cyclic, Alternating, Sporadic, Lie>;

// One Lie-type presentation of a simple group: family, ambient rank, field
// size q = p^k of characteristic p.
struct LieRealization {
  LieFamily family;
  std::uint32_t rank = 0;
  Natural q;
  Natural p;
  std::uint32_t field_exponent = 1;

  std::string to_string() const;
};

bool operator==(const SimpleGroupId& a, const SimpleGroupId& b);
bool id_less(const SimpleGroupId& a, const SimpleGroupId& b);

// Checks that the parameters denote a finite simple group; returns the id
// unchanged or throws NotSimpleError naming the violated rule.
SimpleGroupId validate(const SimpleGroupId& id);

// Maps each group to a single representative across the exceptional
// isomorphisms (Alt5 ~ A1(4) ~ A1(5), Alt6 ~ A1(9), Alt8 ~ A3(2),
// A2(2) ~ A1(7), 2A3(2) ~ B2(3) ~ C2(3), B_n(2^k) ~ C_n(2^k)).
SimpleGroupId canonicalize(const SimpleGroupId& id);

// Exact group order.
Natural order(const SimpleGroupId& id);

// Sorted set of primes dividing the order. May throw CapExceededError for
// Lie parameters whose order pieces resist factorization.
std::vector<Natural> prime_spectrum(const SimpleGroupId& id);

// True iff the prime x divides the group order; never factorizes.
bool divides_order(const SimpleGroupId& id, const Natural& x);

// Sorted pi /\ pi(S). Finite pi needs only divisibility tests; cofinite pi
// requires the full spectrum (and can hit the factorization cap).
std::vector<Natural> spectrum_intersection(const SimpleGroupId& id,
                                           const PrimeSet& pi);

// All Lie-type presentations of the (canonicalized) group, ordered by
// ascending field size. Alternating/sporadic groups without a Lie alias give
// an empty list.
std::vector<LieRealization> lie_realizations(const SimpleGroupId& id);

// Order of the Weyl group of the ambient root system. Twisted families use
// the untwisted ambient system (2A_n -> A_n, 2D_n -> D_n, ...).
Natural weyl_order(const LieRealization& real);

LieRealization make_realization(LieFamily family, std::uint32_t rank,
                                const Natural& q);

// Textual descriptor grammar: Alt(n), Spor(NAME), Cyc(p), Lie(FAM,rank,q)
// plus the aliases PSL(n,q), PSU(n,q), PSp(2n,q), Sz(q), Ree(q).
SimpleGroupId parse_group(const std::string& text);
std::string format_group(const SimpleGroupId& id);

// Embedded order data for the 26 sporadic groups and the Tits group.
const arith::Factorization& sporadic_order_factorization(SporadicName s);

// All canonical simple group ids with order <= bound (used by the oracle to
// identify composition factors). Sorted by order, then id.
std::vector<SimpleGroupId> simple_ids_with_order_at_most(std::uint64_t bound);

}  // namespace hallverdict::groups
