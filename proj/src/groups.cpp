#include "hallverdict/groups.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

namespace hallverdict::groups {

namespace {

using arith::Factorization;
using arith::pow_nat;
using arith::PrimePower;

constexpr std::uint32_t kMaxAlternatingDegree = 1'000'000;
constexpr std::uint32_t kMaxLieRank = 2000;

struct SporadicInfo {
  SporadicName id;
  const char* name;
  // order = prod p^e
  std::vector<std::pair<std::uint32_t, std::uint32_t>> order_factors;
};

const std::vector<SporadicInfo>& sporadic_table() {
  static const std::vector<SporadicInfo> table = {
      {SporadicName::M11, "M11", {{2, 4}, {3, 2}, {5, 1}, {11, 1}}},
      {SporadicName::M12, "M12", {{2, 6}, {3, 3}, {5, 1}, {11, 1}}},
      {SporadicName::M22, "M22", {{2, 7}, {3, 2}, {5, 1}, {7, 1}, {11, 1}}},
      {SporadicName::M23, "M23", {{2, 7}, {3, 2}, {5, 1}, {7, 1}, {11, 1}, {23, 1}}},
      {SporadicName::M24, "M24", {{2, 10}, {3, 3}, {5, 1}, {7, 1}, {11, 1}, {23, 1}}},
      {SporadicName::J1, "J1", {{2, 3}, {3, 1}, {5, 1}, {7, 1}, {11, 1}, {19, 1}}},
      {SporadicName::J2, "J2", {{2, 7}, {3, 3}, {5, 2}, {7, 1}}},
      {SporadicName::J3, "J3", {{2, 7}, {3, 5}, {5, 1}, {17, 1}, {19, 1}}},
      {SporadicName::J4, "J4",
       {{2, 21}, {3, 3}, {5, 1}, {7, 1}, {11, 3}, {23, 1}, {29, 1}, {31, 1}, {37, 1}, {43, 1}}},
      {SporadicName::Co1, "Co1",
       {{2, 21}, {3, 9}, {5, 4}, {7, 2}, {11, 1}, {13, 1}, {23, 1}}},
      {SporadicName::Co2, "Co2", {{2, 18}, {3, 6}, {5, 3}, {7, 1}, {11, 1}, {23, 1}}},
      {SporadicName::Co3, "Co3", {{2, 10}, {3, 7}, {5, 3}, {7, 1}, {11, 1}, {23, 1}}},
      {SporadicName::Fi22, "Fi22", {{2, 17}, {3, 9}, {5, 2}, {7, 1}, {11, 1}, {13, 1}}},
      {SporadicName::Fi23, "Fi23",
       {{2, 18}, {3, 13}, {5, 2}, {7, 1}, {11, 1}, {13, 1}, {17, 1}, {23, 1}}},
      {SporadicName::Fi24prime, "Fi24'",
       {{2, 21}, {3, 16}, {5, 2}, {7, 3}, {11, 1}, {13, 1}, {17, 1}, {23, 1}, {29, 1}}},
      {SporadicName::HS, "HS", {{2, 9}, {3, 2}, {5, 3}, {7, 1}, {11, 1}}},
      {SporadicName::McL, "McL", {{2, 7}, {3, 6}, {5, 3}, {7, 1}, {11, 1}}},
      {SporadicName::He, "He", {{2, 10}, {3, 3}, {5, 2}, {7, 3}, {17, 1}}},
      {SporadicName::Ru, "Ru", {{2, 14}, {3, 3}, {5, 3}, {7, 1}, {13, 1}, {29, 1}}},
      {SporadicName::Suz, "Suz", {{2, 13}, {3, 7}, {5, 2}, {7, 1}, {11, 1}, {13, 1}}},
      {SporadicName::ON, "ON", {{2, 9}, {3, 4}, {5, 1}, {7, 3}, {11, 1}, {19, 1}, {31, 1}}},
      {SporadicName::HN, "HN", {{2, 14}, {3, 6}, {5, 6}, {7, 1}, {11, 1}, {19, 1}}},
      {SporadicName::Ly, "Ly",
       {{2, 8}, {3, 7}, {5, 6}, {7, 1}, {11, 1}, {31, 1}, {37, 1}, {67, 1}}},
      {SporadicName::Th, "Th",
       {{2, 15}, {3, 10}, {5, 3}, {7, 2}, {13, 1}, {19, 1}, {31, 1}}},
      {SporadicName::B, "B",
       {{2, 41}, {3, 13}, {5, 6}, {7, 2}, {11, 1}, {13, 1}, {17, 1}, {19, 1}, {23, 1}, {31, 1}, {47, 1}}},
      {SporadicName::M, "M",
       {{2, 46}, {3, 20}, {5, 9}, {7, 6}, {11, 2}, {13, 3}, {17, 1}, {19, 1}, {23, 1}, {29, 1}, {31, 1}, {41, 1}, {47, 1}, {59, 1}, {71, 1}}},
      {SporadicName::Tits, "2F4(2)'", {{2, 11}, {3, 3}, {5, 2}, {13, 1}}},
  };
  return table;
}

const SporadicInfo& sporadic_info(SporadicName s) {
  for (const auto& row : sporadic_table())
    if (row.id == s) return row;
  throw InvalidInputError("unknown sporadic group");
}

struct FamilyInfo {
  LieFamily f;
  const char* name;
  bool twisted;
};

const std::array<FamilyInfo, 16>& family_table() {
  static const std::array<FamilyInfo, 16> table = {{
      {LieFamily::A, "A", false},
      {LieFamily::TwA, "2A", true},
      {LieFamily::B, "B", false},
      {LieFamily::C, "C", false},
      {LieFamily::D, "D", false},
      {LieFamily::TwD, "2D", true},
      {LieFamily::E6, "E6", false},
      {LieFamily::TwE6, "2E6", true},
      {LieFamily::E7, "E7", false},
      {LieFamily::E8, "E8", false},
      {LieFamily::F4, "F4", false},
      {LieFamily::G2, "G2", false},
      {LieFamily::TwG2, "2G2", true},
      {LieFamily::TriD4, "3D4", true},
      {LieFamily::TwB2, "2B2", true},
      {LieFamily::TwF4, "2F4", true},
  }};
  return table;
}

// Fixed ambient rank for the exceptional families, 0 for A/2A/B/C/D/2D.
std::uint32_t fixed_rank(LieFamily f) {
  switch (f) {
    case LieFamily::E6:
    case LieFamily::TwE6: return 6;
    case LieFamily::E7: return 7;
    case LieFamily::E8: return 8;
    case LieFamily::F4:
    case LieFamily::TwF4: return 4;
    case LieFamily::G2:
    case LieFamily::TwG2: return 2;
    case LieFamily::TriD4: return 4;
    case LieFamily::TwB2: return 2;
    default: return 0;
  }
}

// Conventional relative (twisted) rank also accepted by the parser.
std::uint32_t relative_rank(LieFamily f) {
  switch (f) {
    case LieFamily::TwE6: return 4;
    case LieFamily::TwG2: return 1;
    case LieFamily::TriD4: return 2;
    case LieFamily::TwB2: return 1;
    case LieFamily::TwF4: return 2;
    default: return fixed_rank(f);
  }
}

struct PrimePowerQ {
  Natural p;
  std::uint32_t k;
};

PrimePowerQ decompose_prime_power(const Natural& q) {
  if (q < 2) throw NotSimpleError("field size must be a prime power >= 2");
  Factorization fz = arith::prime_factorization(q);
  if (fz.factors.size() != 1)
    throw NotSimpleError("field size " + q.str() + " is not a prime power");
  return {fz.factors[0].prime, fz.factors[0].exponent};
}

// Multiplicative structure of a Lie-type order: q_power * prod(pieces) / divisor.
struct OrderShape {
  Natural q_power;
  std::vector<Natural> pieces;
  Natural divisor;
};

OrderShape order_shape(const Lie& lie) {
  const Natural& q = lie.q;
  const std::uint64_t n = lie.rank;
  OrderShape s;
  s.divisor = 1;
  using arith::pow_nat;
  auto qi = [&](std::uint64_t i) { return pow_nat(q, i); };
  switch (lie.family) {
    case LieFamily::A: {
      s.q_power = qi(n * (n + 1) / 2);
      for (std::uint64_t i = 2; i <= n + 1; ++i) s.pieces.push_back(qi(i) - 1);
      s.divisor = gcd(Natural(n + 1), q - 1);
      break;
    }
    case LieFamily::TwA: {
      s.q_power = qi(n * (n + 1) / 2);
      for (std::uint64_t i = 2; i <= n + 1; ++i)
        s.pieces.push_back(i % 2 == 0 ? qi(i) - 1 : qi(i) + 1);
      s.divisor = gcd(Natural(n + 1), q + 1);
      break;
    }
    case LieFamily::B:
    case LieFamily::C: {
      s.q_power = qi(n * n);
      for (std::uint64_t i = 1; i <= n; ++i) s.pieces.push_back(qi(2 * i) - 1);
      s.divisor = gcd(Natural(2), q - 1);
      break;
    }
    case LieFamily::D: {
      s.q_power = qi(n * (n - 1));
      s.pieces.push_back(qi(n) - 1);
      for (std::uint64_t i = 1; i + 1 <= n; ++i) s.pieces.push_back(qi(2 * i) - 1);
      s.divisor = gcd(Natural(4), qi(n) - 1);
      break;
    }
    case LieFamily::TwD: {
      s.q_power = qi(n * (n - 1));
      s.pieces.push_back(qi(n) + 1);
      for (std::uint64_t i = 1; i + 1 <= n; ++i) s.pieces.push_back(qi(2 * i) - 1);
      s.divisor = gcd(Natural(4), qi(n) + 1);
      break;
    }
    case LieFamily::E6: {
      s.q_power = qi(36);
      for (std::uint64_t i : {2, 5, 6, 8, 9, 12}) s.pieces.push_back(qi(i) - 1);
      s.divisor = gcd(Natural(3), q - 1);
      break;
    }
    case LieFamily::TwE6: {
      s.q_power = qi(36);
      for (std::uint64_t i : {2, 6, 8, 12}) s.pieces.push_back(qi(i) - 1);
      s.pieces.push_back(qi(5) + 1);
      s.pieces.push_back(qi(9) + 1);
      s.divisor = gcd(Natural(3), q + 1);
      break;
    }
    case LieFamily::E7: {
      s.q_power = qi(63);
      for (std::uint64_t i : {2, 6, 8, 10, 12, 14, 18}) s.pieces.push_back(qi(i) - 1);
      s.divisor = gcd(Natural(2), q - 1);
      break;
    }
    case LieFamily::E8: {
      s.q_power = qi(120);
      for (std::uint64_t i : {2, 8, 12, 14, 18, 20, 24, 30})
        s.pieces.push_back(qi(i) - 1);
      break;
    }
    case LieFamily::F4: {
      s.q_power = qi(24);
      for (std::uint64_t i : {2, 6, 8, 12}) s.pieces.push_back(qi(i) - 1);
      break;
    }
    case LieFamily::G2: {
      s.q_power = qi(6);
      s.pieces.push_back(qi(2) - 1);
      s.pieces.push_back(qi(6) - 1);
      break;
    }
    case LieFamily::TwB2: {
      s.q_power = qi(2);
      s.pieces.push_back(qi(2) + 1);
      s.pieces.push_back(q - 1);
      break;
    }
    case LieFamily::TwG2: {
      s.q_power = qi(3);
      s.pieces.push_back(qi(3) + 1);
      s.pieces.push_back(q - 1);
      break;
    }
    case LieFamily::TwF4: {
      s.q_power = qi(12);
      s.pieces.push_back(qi(6) + 1);
      s.pieces.push_back(qi(4) - 1);
      s.pieces.push_back(qi(3) + 1);
      s.pieces.push_back(q - 1);
      break;
    }
    case LieFamily::TriD4: {
      s.q_power = qi(12);
      s.pieces.push_back(qi(8) + qi(4) + 1);
      s.pieces.push_back(qi(6) - 1);
      s.pieces.push_back(qi(2) - 1);
      break;
    }
  }
  return s;
}

Natural factorial(std::uint64_t n) {
  Natural f = 1;
  for (std::uint64_t i = 2; i <= n; ++i) f *= i;
  return f;
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t n) {
  std::vector<bool> sieve(n + 1, true);
  std::vector<std::uint32_t> out;
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (!sieve[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= n; j += i) sieve[j] = false;
  }
  return out;
}

}  // namespace

const char* family_name(LieFamily f) {
  return family_table()[static_cast<std::size_t>(f)].name;
}

bool family_is_twisted(LieFamily f) {
  return family_table()[static_cast<std::size_t>(f)].twisted;
}

const char* sporadic_name(SporadicName s) { return sporadic_info(s).name; }

std::optional<SporadicName> sporadic_from_name(const std::string& name) {
  for (const auto& row : sporadic_table())
    if (name == row.name) return row.id;
  // Aliases used in the source tables.
  if (name == "M(23)") return SporadicName::Fi23;
  if (name == "M(24)'") return SporadicName::Fi24prime;
  if (name == "F24'") return SporadicName::Fi24prime;
  if (name == "Tits") return SporadicName::Tits;
  if (name == "O'N") return SporadicName::ON;
  return std::nullopt;
}

std::string LieRealization::to_string() const {
  std::ostringstream os;
  os << family_name(family) << "(" << rank << "," << q.str() << ")";
  return os.str();
}

bool operator==(const SimpleGroupId& a, const SimpleGroupId& b) {
  return !id_less(a, b) && !id_less(b, a);
}

bool id_less(const SimpleGroupId& a, const SimpleGroupId& b) {
  if (a.index() != b.index()) return a.index() < b.index();
  if (const auto* ca = std::get_if<Cyclic>(&a))
    return ca->p < std::get<Cyclic>(b).p;
  if (const auto* aa = std::get_if<Alternating>(&a))
    return aa->n < std::get<Alternating>(b).n;
  if (const auto* sa = std::get_if<Sporadic>(&a))
    return sa->name < std::get<Sporadic>(b).name;
  const auto& la = std::get<Lie>(a);
  const auto& lb = std::get<Lie>(b);
  if (la.family != lb.family) return la.family < lb.family;
  if (la.rank != lb.rank) return la.rank < lb.rank;
  return la.q < lb.q;
}

SimpleGroupId validate(const SimpleGroupId& id) {
  if (const auto* c = std::get_if<Cyclic>(&id)) {
    if (!arith::is_prime(c->p))
      throw NotSimpleError("Cyc(" + c->p.str() +
                           "): cyclic simple groups have prime order");
    return id;
  }
  if (const auto* a = std::get_if<Alternating>(&id)) {
    if (a->n < 5)
      throw NotSimpleError("Alt(" + std::to_string(a->n) +
                           "): alternating groups are simple only for n >= 5");
    if (a->n > kMaxAlternatingDegree)
      throw InvalidInputError("Alt degree too large");
    return id;
  }
  if (std::holds_alternative<Sporadic>(id)) return id;

  const auto& lie = std::get<Lie>(id);
  if (lie.rank > kMaxLieRank) throw InvalidInputError("Lie rank too large");
  PrimePowerQ pk = decompose_prime_power(lie.q);
  const Natural& q = lie.q;
  auto reject = [&](const std::string& why) -> SimpleGroupId {
    throw NotSimpleError(std::string("Lie(") + family_name(lie.family) + "," +
                         std::to_string(lie.rank) + "," + q.str() + "): " + why);
  };
  switch (lie.family) {
    case LieFamily::A:
      if (lie.rank < 1) return reject("rank must be >= 1");
      if (lie.rank == 1 && (q == 2 || q == 3))
        return reject("PSL2(" + q.str() + ") is solvable");
      break;
    case LieFamily::TwA:
      if (lie.rank < 2)
        return reject("rank must be >= 2 (PSU2 = PSL2, enter as Lie(A,1,q))");
      if (lie.rank == 2 && q == 2) return reject("PSU3(2) is solvable");
      break;
    case LieFamily::B:
    case LieFamily::C:
      if (lie.rank < 2) return reject("rank must be >= 2 (B1 = C1 = A1)");
      if (lie.rank == 2 && q == 2)
        return reject("Sp4(2) is not simple (isomorphic to Sym(6))");
      break;
    case LieFamily::D:
    case LieFamily::TwD:
      if (lie.rank < 4)
        return reject("rank must be >= 4 (enter low-rank D under its classical alias)");
      break;
    case LieFamily::G2:
      if (q == 2) return reject("G2(2) is not simple (derived subgroup PSU3(3))");
      break;
    case LieFamily::TwB2:
      if (pk.p != 2 || pk.k % 2 == 0 || pk.k < 3)
        return reject("2B2 requires q = 2^(2m+1) with m >= 1");
      break;
    case LieFamily::TwG2:
      if (pk.p != 3 || pk.k % 2 == 0 || pk.k < 3)
        return reject("2G2 requires q = 3^(2m+1) with m >= 1");
      break;
    case LieFamily::TwF4:
      if (pk.p != 2 || pk.k % 2 == 0 || pk.k < 3)
        return reject(
            "2F4 requires q = 2^(2m+1) with m >= 1 "
            "(the Tits group 2F4(2)' is Spor(Tits))");
      break;
    case LieFamily::E6:
    case LieFamily::TwE6:
    case LieFamily::E7:
    case LieFamily::E8:
    case LieFamily::F4:
    case LieFamily::TriD4:
      break;
  }
  std::uint32_t fr = fixed_rank(lie.family);
  if (fr != 0 && lie.rank != fr)
    throw NotSimpleError(std::string("Lie(") + family_name(lie.family) +
                         "): rank is fixed at " + std::to_string(fr));
  return id;
}

SimpleGroupId canonicalize(const SimpleGroupId& id) {
  SimpleGroupId v = validate(id);
  const auto* lie = std::get_if<Lie>(&v);
  if (!lie) return v;
  const Natural& q = lie->q;
  if (lie->family == LieFamily::A) {
    if (lie->rank == 1 && (q == 4 || q == 5)) return Alternating{5};
    if (lie->rank == 1 && q == 9) return Alternating{6};
    if (lie->rank == 3 && q == 2) return Alternating{8};
    if (lie->rank == 2 && q == 2) return Lie{LieFamily::A, 1, Natural(7)};
  }
  if (lie->family == LieFamily::TwA && lie->rank == 3 && q == 2)
    return Lie{LieFamily::B, 2, Natural(3)};
  if (lie->family == LieFamily::B && q % 2 == 0)
    return Lie{LieFamily::C, lie->rank, q};
  if (lie->family == LieFamily::C && lie->rank == 2 && q % 2 == 1)
    return Lie{LieFamily::B, 2, q};  // B2(q) ~ C2(q) for every q
  return v;
}

Natural order(const SimpleGroupId& id) {
  if (const auto* c = std::get_if<Cyclic>(&id)) return c->p;
  if (const auto* a = std::get_if<Alternating>(&id)) {
    if (a->n > 100000)
      throw CapExceededError("order of Alt(" + std::to_string(a->n) +
                             ") not computed (degree cap)");
    return factorial(a->n) / 2;
  }
  if (const auto* s = std::get_if<Sporadic>(&id))
    return sporadic_order_factorization(s->name).value();
  const auto& lie = std::get<Lie>(id);
  OrderShape shape = order_shape(lie);
  Natural result = shape.q_power;
  for (const auto& piece : shape.pieces) result *= piece;
  return result / shape.divisor;
}

std::vector<Natural> prime_spectrum(const SimpleGroupId& id) {
  if (const auto* c = std::get_if<Cyclic>(&id)) return {c->p};
  if (const auto* a = std::get_if<Alternating>(&id)) {
    std::vector<Natural> out;
    for (std::uint32_t p : primes_up_to(a->n)) out.emplace_back(p);
    return out;
  }
  if (const auto* s = std::get_if<Sporadic>(&id))
    return sporadic_order_factorization(s->name).primes();
  const auto& lie = std::get<Lie>(id);
  OrderShape shape = order_shape(lie);
  std::vector<Natural> primes = {decompose_prime_power(lie.q).p};
  for (const auto& piece : shape.pieces)
    for (const auto& x : arith::prime_divisors(piece)) primes.push_back(x);
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  // Dividing by the diagonal gcd never cancels a prime entirely, but the
  // filter is cheap and makes the postcondition self-evident.
  Natural full = order(id);
  std::vector<Natural> out;
  for (const auto& x : primes)
    if (full % x == 0) out.push_back(x);
  return out;
}

bool divides_order(const SimpleGroupId& id, const Natural& x) {
  if (const auto* c = std::get_if<Cyclic>(&id)) return x == c->p;
  if (const auto* a = std::get_if<Alternating>(&id)) return x <= a->n;
  if (const auto* s = std::get_if<Sporadic>(&id))
    return sporadic_order_factorization(s->name).has_prime(x);
  const auto& lie = std::get<Lie>(id);
  PrimePowerQ pk = decompose_prime_power(lie.q);
  if (x == pk.p) return true;
  OrderShape shape = order_shape(lie);
  std::uint64_t v_pieces = 0;
  for (const auto& piece : shape.pieces) v_pieces += arith::r_valuation(piece, x);
  return v_pieces > arith::r_valuation(shape.divisor, x);
}

std::vector<Natural> spectrum_intersection(const SimpleGroupId& id,
                                           const PrimeSet& pi) {
  if (pi.is_finite()) {
    std::vector<Natural> out;
    for (const auto& x : pi.listed())
      if (divides_order(id, x)) out.push_back(x);
    return out;
  }
  return pi.intersect(prime_spectrum(id));
}

LieRealization make_realization(LieFamily family, std::uint32_t rank,
                                const Natural& q) {
  PrimePowerQ pk = decompose_prime_power(q);
  return LieRealization{family, rank, q, pk.p, pk.k};
}

std::vector<LieRealization> lie_realizations(const SimpleGroupId& id) {
  SimpleGroupId canon = canonicalize(id);
  std::vector<LieRealization> out;
  auto add = [&](LieFamily f, std::uint32_t rank, const Natural& q) {
    out.push_back(make_realization(f, rank, q));
  };
  if (const auto* a = std::get_if<Alternating>(&canon)) {
    if (a->n == 5) {
      add(LieFamily::A, 1, Natural(4));
      add(LieFamily::A, 1, Natural(5));
    } else if (a->n == 6) {
      add(LieFamily::A, 1, Natural(9));
    } else if (a->n == 8) {
      add(LieFamily::A, 3, Natural(2));
    }
  } else if (const auto* lie = std::get_if<Lie>(&canon)) {
    add(lie->family, lie->rank, lie->q);
    if (lie->family == LieFamily::A && lie->rank == 1 && lie->q == 7)
      add(LieFamily::A, 2, Natural(2));
    if (lie->family == LieFamily::B && lie->rank == 2) {
      add(LieFamily::C, 2, lie->q);  // B2(q) ~ C2(q)
      if (lie->q == 3) add(LieFamily::TwA, 3, Natural(2));
    }
    if (lie->family == LieFamily::C && lie->q % 2 == 0)
      add(LieFamily::B, lie->rank, lie->q);  // B_n(2^k) ~ C_n(2^k)
  }
  std::sort(out.begin(), out.end(),
            [](const LieRealization& a, const LieRealization& b) {
              if (a.q != b.q) return a.q < b.q;
              if (a.family != b.family) return a.family < b.family;
              return a.rank < b.rank;
            });
  return out;
}

Natural weyl_order(const LieRealization& real) {
  const std::uint64_t n = real.rank;
  switch (real.family) {
    case LieFamily::A:
    case LieFamily::TwA:
      return factorial(n + 1);
    case LieFamily::B:
    case LieFamily::C:
    case LieFamily::TwB2:
      return pow_nat(Natural(2), n) * factorial(n);
    case LieFamily::D:
    case LieFamily::TwD:
    case LieFamily::TriD4:
      return pow_nat(Natural(2), n - 1) * factorial(n);
    case LieFamily::E6:
    case LieFamily::TwE6:
      return Natural(51840);
    case LieFamily::E7:
      return Natural(2903040);
    case LieFamily::E8:
      return Natural(696729600);
    case LieFamily::F4:
    case LieFamily::TwF4:
      return Natural(1152);
    case LieFamily::G2:
    case LieFamily::TwG2:
      return Natural(12);
  }
  throw InvalidInputError("weyl_order: unknown family");
}

const arith::Factorization& sporadic_order_factorization(SporadicName s) {
  static std::map<SporadicName, Factorization> cache = [] {
    std::map<SporadicName, Factorization> m;
    for (const auto& row : sporadic_table()) {
      Factorization fz;
      for (auto [p, e] : row.order_factors) fz.factors.push_back({Natural(p), e});
      m.emplace(row.id, std::move(fz));
    }
    return m;
  }();
  return cache.at(s);
}

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_args(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

std::uint32_t parse_rank(const std::string& s) {
  Natural n = arith::parse_natural(s);
  if (n > kMaxLieRank) throw InvalidInputError("rank too large: " + s);
  return n.convert_to<std::uint32_t>();
}

SimpleGroupId parse_lie(const std::vector<std::string>& args) {
  if (args.size() != 3)
    throw InvalidInputError("Lie descriptor needs (family,rank,q)");
  LieFamily fam;
  bool found = false;
  for (const auto& row : family_table())
    if (args[0] == row.name) {
      fam = row.f;
      found = true;
    }
  if (!found) throw InvalidInputError("unknown Lie family: " + args[0]);
  std::uint32_t rank = parse_rank(args[1]);
  Natural q = arith::parse_natural(args[2]);
  std::uint32_t fr = fixed_rank(fam);
  if (fr != 0 && (rank == fr || rank == relative_rank(fam)))
    rank = fr;  // accept the relative rank, store the ambient one
  return Lie{fam, rank, q};
}

}  // namespace

SimpleGroupId parse_group(const std::string& text) {
  std::string s = trim(text);
  auto open = s.find('(');
  auto close = s.rfind(')');
  if (open == std::string::npos || close == std::string::npos || close < open ||
      close + 1 != s.size())
    throw InvalidInputError("cannot parse group descriptor: '" + text + "'");
  std::string head = trim(s.substr(0, open));
  std::string body = s.substr(open + 1, close - open - 1);

  if (head == "Alt") {
    Natural n = arith::parse_natural(trim(body));
    if (n > kMaxAlternatingDegree) throw InvalidInputError("Alt degree too large");
    return validate(Alternating{n.convert_to<std::uint32_t>()});
  }
  if (head == "Cyc") return validate(Cyclic{arith::parse_natural(trim(body))});
  if (head == "Spor") {
    auto name = sporadic_from_name(trim(body));
    if (!name) throw InvalidInputError("unknown sporadic name: " + body);
    return Sporadic{*name};
  }
  if (head == "Lie") return validate(parse_lie(split_args(body)));

  auto args = split_args(body);
  if (head == "PSL") {
    if (args.size() != 2) throw InvalidInputError("PSL needs (n,q)");
    std::uint32_t n = parse_rank(args[0]);
    if (n < 2) throw InvalidInputError("PSL needs n >= 2");
    return validate(Lie{LieFamily::A, n - 1, arith::parse_natural(args[1])});
  }
  if (head == "PSU") {
    if (args.size() != 2) throw InvalidInputError("PSU needs (n,q)");
    std::uint32_t n = parse_rank(args[0]);
    if (n < 2) throw InvalidInputError("PSU needs n >= 2");
    if (n == 2) return validate(Lie{LieFamily::A, 1, arith::parse_natural(args[1])});
    return validate(Lie{LieFamily::TwA, n - 1, arith::parse_natural(args[1])});
  }
  if (head == "PSp") {
    if (args.size() != 2) throw InvalidInputError("PSp needs (2n,q)");
    std::uint32_t n = parse_rank(args[0]);
    if (n < 4 || n % 2 != 0) throw InvalidInputError("PSp needs even degree >= 4");
    return validate(Lie{LieFamily::C, n / 2, arith::parse_natural(args[1])});
  }
  if (head == "Sz") {
    if (args.size() != 1) throw InvalidInputError("Sz needs (q)");
    return validate(Lie{LieFamily::TwB2, 2, arith::parse_natural(args[0])});
  }
  if (head == "Ree") {
    if (args.size() != 1) throw InvalidInputError("Ree needs (q)");
    return validate(Lie{LieFamily::TwG2, 2, arith::parse_natural(args[0])});
  }
  throw InvalidInputError("unknown group descriptor: '" + text + "'");
}

std::string format_group(const SimpleGroupId& id) {
  std::ostringstream os;
  if (const auto* c = std::get_if<Cyclic>(&id)) {
    os << "Cyc(" << c->p.str() << ")";
  } else if (const auto* a = std::get_if<Alternating>(&id)) {
    os << "Alt(" << a->n << ")";
  } else if (const auto* s = std::get_if<Sporadic>(&id)) {
    os << "Spor(" << (s->name == SporadicName::Tits ? "Tits" : sporadic_name(s->name))
       << ")";
  } else {
    const auto& lie = std::get<Lie>(id);
    os << "Lie(" << family_name(lie.family) << "," << lie.rank << ","
       << lie.q.str() << ")";
  }
  return os.str();
}

std::vector<SimpleGroupId> simple_ids_with_order_at_most(std::uint64_t bound) {
  std::vector<SimpleGroupId> out;
  auto try_add = [&](SimpleGroupId id) {
    try {
      SimpleGroupId canon = canonicalize(id);
      if (!(canon == id)) return;  // only canonical representatives
      if (order(canon) <= bound) out.push_back(canon);
    } catch (const NotSimpleError&) {
    }
  };
  for (std::uint32_t n = 5;; ++n) {
    if (factorial(n) / 2 > bound) break;
    try_add(Alternating{n});
  }
  for (const auto& row : sporadic_table())
    try_add(Sporadic{row.id});
  // Lie families: q(q^2-1)/2 is the least order for fixed q, so q is bounded.
  for (std::uint64_t qv = 2;; ++qv) {
    Natural q(qv);
    if (Natural(qv) * (Natural(qv) * qv - 1) / 2 > bound) break;
    try {
      decompose_prime_power(q);
    } catch (const NotSimpleError&) {
      continue;
    }
    static const std::vector<std::pair<LieFamily, std::uint32_t>> starts = {
        {LieFamily::A, 1},   {LieFamily::TwA, 2}, {LieFamily::B, 2},
        {LieFamily::C, 2},   {LieFamily::D, 4},   {LieFamily::TwD, 4},
        {LieFamily::E6, 6},  {LieFamily::TwE6, 6}, {LieFamily::E7, 7},
        {LieFamily::E8, 8},  {LieFamily::F4, 4},  {LieFamily::G2, 2},
        {LieFamily::TwG2, 2}, {LieFamily::TriD4, 4}, {LieFamily::TwB2, 2},
        {LieFamily::TwF4, 4}};
    for (auto [fam, start] : starts) {
      std::uint32_t max_rank = fixed_rank(fam) ? start : kMaxLieRank;
      for (std::uint32_t r = start; r <= max_rank; ++r) {
        Lie lie{fam, r, q};
        try {
          validate(lie);
        } catch (const NotSimpleError&) {
          continue;
        }
        if (order(lie) > bound) break;
        try_add(lie);
      }
    }
  }
  std::sort(out.begin(), out.end(), id_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace hallverdict::groups
