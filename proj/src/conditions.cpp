#include "hallverdict/conditions.hpp"

#include <algorithm>
#include <sstream>

namespace hallverdict::conditions {

namespace {

using arith::e_star;
using arith::mult_order;
using arith::pow_nat;
using arith::r_part;
using groups::Lie;
using groups::Sporadic;

std::string set_str(const std::vector<Natural>& xs) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) os << ",";
    os << xs[i].str();
  }
  os << "}";
  return os.str();
}

bool contains(const std::vector<Natural>& xs, const Natural& x) {
  return std::find(xs.begin(), xs.end(), x) != xs.end();
}

SimpleGroupId realization_id(const LieRealization& real) {
  return Lie{real.family, real.rank, real.q};
}

std::vector<Natural> intersection_of(const LieRealization& real,
                                     const PrimeSet& pi) {
  return groups::spectrum_intersection(realization_id(real), pi);
}

// The paper's n for the classical families: A_{n-1}/2A_{n-1} have rank n-1,
// the B/C/D/2D families use the rank itself.
std::uint32_t paper_n(const LieRealization& real) {
  switch (real.family) {
    case LieFamily::A:
    case LieFamily::TwA:
      return real.rank + 1;
    default:
      return real.rank;
  }
}

ConditionTrace start_trace(const char* condition,
                           const std::optional<LieRealization>& real) {
  ConditionTrace t;
  t.condition = condition;
  t.realization = real;
  return t;
}

ConditionTrace fail(ConditionTrace t, const std::string& reason) {
  t.satisfied = false;
  t.fail_reason = reason;
  return t;
}

}  // namespace

std::string ConditionTrace::label() const {
  return subcase.empty() ? condition : condition + "(" + subcase + ")";
}

ConditionTrace cond_I(const SimpleGroupId& S, const PrimeSet& pi) {
  ConditionTrace t = start_trace("I", std::nullopt);
  std::vector<Natural> inter = groups::spectrum_intersection(S, pi);
  t.bindings["pi_cap_piS"] = set_str(inter);
  if (inter.size() <= 1) {
    t.satisfied = true;
    return t;
  }
  return fail(std::move(t), "|pi cap pi(S)| = " + std::to_string(inter.size()) +
                                " exceeds 1");
}

const std::vector<CondIIItem>& cond_ii_table() {
  using S = groups::SporadicName;
  static const std::vector<CondIIItem> table = {
      {1, S::M11, {{5, 11}}},
      {2, S::M12, {{5, 11}}},
      {3, S::M22, {{5, 11}}},
      {4, S::M23, {{5, 11}, {11, 23}}},
      {5, S::M24, {{5, 11}, {11, 23}}},
      {6, S::J1, {{3, 5}, {3, 7}, {3, 19}, {5, 11}}},
      {7, S::J4, {{5, 7}, {5, 11}, {5, 31}, {7, 29}, {7, 43}}},
      {8, S::ON, {{5, 11}, {5, 31}}},
      {9, S::Ly, {{11, 67}}},
      {10, S::Ru, {{7, 29}}},
      {11, S::Co1, {{11, 23}}},
      {12, S::Co2, {{11, 23}}},
      {13, S::Co3, {{11, 23}}},
      {14, S::Fi23, {{11, 23}}},
      {15, S::Fi24prime, {{11, 23}}},
      {16, S::B, {{11, 23}, {23, 47}}},
      {17, S::M, {{23, 47}, {29, 59}}},
  };
  return table;
}

ConditionTrace cond_II(const SimpleGroupId& S, const PrimeSet& pi) {
  ConditionTrace t = start_trace("II", std::nullopt);
  const auto* spor = std::get_if<Sporadic>(&S);
  if (!spor) return fail(std::move(t), "S is not sporadic");
  std::vector<Natural> inter = groups::spectrum_intersection(S, pi);
  t.bindings["pi_cap_piS"] = set_str(inter);
  for (const auto& item : cond_ii_table()) {
    if (item.group != spor->name) continue;
    for (const auto& set : item.sets) {
      std::vector<Natural> wanted(set.begin(), set.end());
      if (inter == wanted) {
        t.satisfied = true;
        t.subcase = std::to_string(item.item);
        return t;
      }
    }
  }
  return fail(std::move(t), "pi cap pi(S) = " + set_str(inter) +
                                " is not among the listed sets");
}

ConditionTrace cond_III(const LieRealization& real, const PrimeSet& pi,
                        const ConditionOptions& opts) {
  ConditionTrace t = start_trace("III", real);
  const Natural& p = real.p;
  t.bindings["p"] = p.str();
  if (!pi.contains(p)) return fail(std::move(t), "characteristic p not in pi");
  std::vector<Natural> inter = intersection_of(real, pi);
  std::vector<Natural> tau;
  for (const auto& x : inter)
    if (x != p) tau.push_back(x);
  t.bindings["pi_cap_piS"] = set_str(inter);
  t.bindings["tau"] = set_str(tau);
  for (const auto& s : tau)
    if ((real.q - 1) % s != 0)
      return fail(std::move(t),
                  "tau not contained in pi(q-1): " + s.str() + " fails");
  Natural w = groups::weyl_order(real);
  t.bindings["weyl_order"] = w.str();
  if (groups::family_is_twisted(real.family))
    t.flags.push_back(
        "twisted family: Weyl order taken from the ambient untwisted root "
        "system");
  // Literal reading quantifies over all of pi (restricted to pi(S), where the
  // Weyl primes live); the variant exempts p.
  std::optional<Natural> literal_violator, exempt_violator;
  for (const auto& x : inter) {
    if (w % x == 0) {
      if (!literal_violator) literal_violator = x;
      if (x != p && !exempt_violator) exempt_violator = x;
    }
  }
  if (literal_violator.has_value() != exempt_violator.has_value())
    t.flags.push_back(
        "verdict differs between the literal Weyl test and the p-exempt "
        "variant");
  const auto& violator = opts.weyl_excludes_p ? exempt_violator : literal_violator;
  if (violator)
    return fail(std::move(t),
                violator->str() + " divides the Weyl group order " + w.str());
  t.satisfied = true;
  return t;
}

namespace clauses {

namespace {

bool all_orders_equal(const std::vector<std::pair<Natural, Natural>>& tau_orders,
                      const Natural& b) {
  for (const auto& [s, e] : tau_orders)
    if (e != b) return false;
  return true;
}

bool all_orders_in(const std::vector<std::pair<Natural, Natural>>& tau_orders,
                   const Natural& a, const Natural& b) {
  for (const auto& [s, e] : tau_orders)
    if (e != a && e != b) return false;
  return true;
}

}  // namespace

bool iv(int k, LieFamily fam, std::uint32_t n, const Natural& q,
        const Natural& r, const Natural& a, const Natural& b,
        const std::vector<std::pair<Natural, Natural>>& tau_orders) {
  const Natural nn = n;
  auto fermat_part_is_r = [&] {
    return r_part(pow_nat(q, (r - 1).convert_to<std::uint64_t>()) - 1, r) == r;
  };
  auto floors_equal = [&] { return nn / (r - 1) == nn / r; };
  auto floors_off_by_one = [&] { return nn / (r - 1) == nn / r + 1; };
  auto n_is_minus_one_mod_r = [&] { return (nn + 1) % r == 0; };
  switch (k) {
    case 1:
      return fam == LieFamily::A && a == r - 1 && b == r && fermat_part_is_r() &&
             floors_equal() && all_orders_equal(tau_orders, b);
    case 2:
      return fam == LieFamily::A && a == r - 1 && b == r && fermat_part_is_r() &&
             floors_off_by_one() && n_is_minus_one_mod_r() &&
             all_orders_equal(tau_orders, b);
    case 3:
      return fam == LieFamily::TwA && r % 4 == 1 && a == r - 1 && b == 2 * r &&
             fermat_part_is_r() && floors_equal() &&
             all_orders_equal(tau_orders, b);
    case 4:
      return fam == LieFamily::TwA && r % 4 == 3 && a == (r - 1) / 2 &&
             b == 2 * r && fermat_part_is_r() && floors_equal() &&
             all_orders_equal(tau_orders, b);
    case 5:
      return fam == LieFamily::TwA && r % 4 == 1 && a == r - 1 && b == 2 * r &&
             fermat_part_is_r() && floors_off_by_one() &&
             n_is_minus_one_mod_r() && all_orders_equal(tau_orders, b);
    case 6:
      return fam == LieFamily::TwA && r % 4 == 3 && a == (r - 1) / 2 &&
             b == 2 * r && fermat_part_is_r() && floors_off_by_one() &&
             n_is_minus_one_mod_r() && all_orders_equal(tau_orders, b);
    case 7:
      return fam == LieFamily::TwD && a % 2 == 1 && nn == b && b == 2 * a &&
             all_orders_in(tau_orders, a, b);
    case 8:
      return fam == LieFamily::TwD && b % 2 == 1 && nn == a && a == 2 * b &&
             all_orders_in(tau_orders, a, b);
    default:
      return false;
  }
}

bool v(int k, LieFamily fam, std::uint32_t n, const Natural& r,
       const Natural& c, const std::vector<Natural>& tau) {
  const Natural nn = n;
  auto forall_tau = [&](auto&& pred) {
    return std::all_of(tau.begin(), tau.end(), pred);
  };
  auto excludes = [&](std::initializer_list<int> xs) {
    for (int x : xs)
      if (contains(tau, Natural(x))) return false;
    return true;
  };
  switch (k) {
    case 1:
      return fam == LieFamily::A &&
             forall_tau([&](const Natural& s) { return nn < c * s; });
    case 2:
      return fam == LieFamily::TwA && c % 4 == 0 &&
             forall_tau([&](const Natural& s) { return nn < c * s; });
    case 3:
      return fam == LieFamily::TwA && c % 4 == 2 &&
             forall_tau([&](const Natural& s) { return 2 * nn < c * s; });
    case 4:
      return fam == LieFamily::TwA && c % 2 == 1 &&
             forall_tau([&](const Natural& s) { return nn < 2 * c * s; });
    case 5:
      return (fam == LieFamily::B || fam == LieFamily::C ||
              fam == LieFamily::TwD) &&
             c % 2 == 1 &&
             forall_tau([&](const Natural& s) { return 2 * nn < c * s; });
    case 6:
      return (fam == LieFamily::B || fam == LieFamily::C ||
              fam == LieFamily::D) &&
             c % 2 == 0 &&
             forall_tau([&](const Natural& s) { return nn < c * s; });
    case 7:
      return fam == LieFamily::D && c % 2 == 0 &&
             forall_tau([&](const Natural& s) { return 2 * nn <= c * s; });
    case 8:
      return fam == LieFamily::TwD && c % 2 == 1 &&
             forall_tau([&](const Natural& s) { return nn <= c * s; });
    case 9:
      return fam == LieFamily::TriD4;
    case 10:
      return fam == LieFamily::E6 && (!(r == 3 && c == 1) || excludes({5, 13}));
    case 11:
      return fam == LieFamily::TwE6 && (!(r == 3 && c == 2) || excludes({5, 13}));
    case 12:
      return fam == LieFamily::E7 &&
             (!(r == 3 && (c == 1 || c == 2)) || excludes({5, 7, 13})) &&
             (!(r == 5 && (c == 1 || c == 2)) || excludes({7}));
    case 13:
      return fam == LieFamily::E8 &&
             (!(r == 3 && (c == 1 || c == 2)) || excludes({5, 7, 13})) &&
             (!(r == 5 && (c == 1 || c == 2)) || excludes({7, 31}));
    case 14:
      return fam == LieFamily::G2;
    case 15:
      return fam == LieFamily::F4 && (!(r == 3 && c == 1) || excludes({13}));
    default:
      return false;
  }
}

bool vii(int k, LieFamily fam, std::uint32_t n, const std::vector<Natural>& tau,
         const std::vector<Natural>& fermat_tau) {
  const Natural nn = n;
  auto tau_gt = [&](const Natural& bound) {
    return std::all_of(tau.begin(), tau.end(),
                       [&](const Natural& s) { return s > bound; });
  };
  auto fermat_gt = [&](const Natural& bound) {
    return std::all_of(fermat_tau.begin(), fermat_tau.end(),
                       [&](const Natural& t) { return t > bound; });
  };
  auto excludes = [&](std::initializer_list<int> xs) {
    for (int x : xs)
      if (contains(tau, Natural(x))) return false;
    return true;
  };
  switch (k) {
    case 1:
      return (fam == LieFamily::A || fam == LieFamily::TwA) && tau_gt(nn) &&
             fermat_gt(nn + 1);
    case 2:
      return fam == LieFamily::B && tau_gt(2 * nn + 1);
    case 3:
      return fam == LieFamily::C && tau_gt(nn) && fermat_gt(2 * nn + 1);
    case 4:
      return (fam == LieFamily::D || fam == LieFamily::TwD) && tau_gt(2 * nn);
    case 5:
      return (fam == LieFamily::G2 || fam == LieFamily::TwG2) && excludes({7});
    case 6:
      return fam == LieFamily::F4 && excludes({5, 7});
    case 7:
      return (fam == LieFamily::E6 || fam == LieFamily::TwE6) &&
             excludes({5, 7});
    case 8:
      return fam == LieFamily::E7 && excludes({5, 7, 11});
    case 9:
      return fam == LieFamily::E8 && excludes({5, 7, 11, 13});
    case 10:
      return fam == LieFamily::TriD4 && excludes({7});
    default:
      return false;
  }
}

}  // namespace clauses

ConditionTrace cond_IV(const LieRealization& real, const PrimeSet& pi) {
  ConditionTrace t = start_trace("IV", real);
  if (pi.contains(2)) return fail(std::move(t), "2 in pi");
  if (pi.contains(real.p))
    return fail(std::move(t), "characteristic p in pi");
  std::vector<Natural> inter = intersection_of(real, pi);
  t.bindings["pi_cap_piS"] = set_str(inter);
  if (inter.size() < 2)
    return fail(std::move(t), "|pi cap pi(S)| < 2");
  const Natural r = inter.front();
  std::vector<Natural> tau(inter.begin() + 1, inter.end());
  const Natural a = mult_order(real.q, r);
  std::vector<std::pair<Natural, Natural>> tau_orders;
  for (const auto& s : tau) tau_orders.emplace_back(s, mult_order(real.q, s));
  t.bindings["r"] = r.str();
  t.bindings["tau"] = set_str(tau);
  t.bindings["a"] = a.str();
  for (const auto& [s, e] : tau_orders)
    t.bindings["e(q," + s.str() + ")"] = e.str();
  bool has_witness_t = false;
  for (const auto& [s, e] : tau_orders) has_witness_t |= (e != a);
  if (!has_witness_t)
    return fail(std::move(t), "no t in tau with e(q,t) != a");
  std::uint32_t n = paper_n(real);
  for (int k = 1; k <= 8; ++k) {
    for (const auto& [cand_t, b] : tau_orders) {
      if (b == a) continue;
      if (clauses::iv(k, real.family, n, real.q, r, a, b, tau_orders)) {
        t.satisfied = true;
        t.subcase = std::to_string(k);
        t.bindings["t"] = cand_t.str();
        t.bindings["b"] = b.str();
        return t;
      }
    }
  }
  return fail(std::move(t), "no subcase (1)-(8) holds");
}

ConditionTrace cond_V(const LieRealization& real, const PrimeSet& pi) {
  ConditionTrace t = start_trace("V", real);
  if (pi.contains(2)) return fail(std::move(t), "2 in pi");
  if (pi.contains(real.p))
    return fail(std::move(t), "characteristic p in pi");
  std::vector<Natural> inter = intersection_of(real, pi);
  t.bindings["pi_cap_piS"] = set_str(inter);
  if (inter.size() < 2)
    return fail(std::move(t), "|pi cap pi(S)| < 2");
  const Natural r = inter.front();
  std::vector<Natural> tau(inter.begin() + 1, inter.end());
  const Natural c = mult_order(real.q, r);
  t.bindings["r"] = r.str();
  t.bindings["tau"] = set_str(tau);
  t.bindings["c"] = c.str();
  for (const auto& s : tau) {
    Natural e = mult_order(real.q, s);
    t.bindings["e(q," + s.str() + ")"] = e.str();
    if (e != c)
      return fail(std::move(t),
                  "e(q," + s.str() + ") = " + e.str() + " differs from c");
  }
  std::uint32_t n = paper_n(real);
  for (int k = 1; k <= 15; ++k) {
    if (clauses::v(k, real.family, n, r, c, tau)) {
      t.satisfied = true;
      t.subcase = std::to_string(k);
      return t;
    }
  }
  return fail(std::move(t), "no subcase (1)-(15) holds");
}

ConditionTrace cond_VI(const LieRealization& real, const PrimeSet& pi) {
  ConditionTrace t = start_trace("VI", real);
  const LieFamily fam = real.family;
  if (fam != LieFamily::TwB2 && fam != LieFamily::TwG2 && fam != LieFamily::TwF4)
    return fail(std::move(t), "family is not 2B2, 2G2 or 2F4");
  std::vector<Natural> inter = intersection_of(real, pi);
  t.bindings["pi_cap_piS"] = set_str(inter);
  // q = p^(2m+1); the half-power p^(m+1) enters every listed polynomial.
  const Natural& q = real.q;
  const std::uint32_t m = (real.field_exponent - 1) / 2;
  const Natural h = pow_nat(real.p, m + 1);
  std::vector<Natural> values;
  bool strip_two = false;
  const char* subcase = "";
  if (fam == LieFamily::TwB2) {
    subcase = "1";
    values = {q - 1, q + h + 1, q - h + 1};
  } else if (fam == LieFamily::TwG2) {
    subcase = "2";
    strip_two = true;
    values = {q - 1, q + h + 1, q - h + 1};
  } else {
    subcase = "3";
    const Natural q2 = q * q;
    const Natural u = pow_nat(Natural(2), 3 * m + 2);
    values = {q2 + 1,         q2 - 1,         q + h + 1,         q - h + 1,
              q2 + u - h - 1, q2 - u + h - 1, q2 + u + q + h - 1,
              q2 - u + q - h - 1};
  }
  for (const auto& value : values) {
    std::vector<Natural> set = arith::prime_divisors(value);
    if (strip_two)
      set.erase(std::remove(set.begin(), set.end(), Natural(2)), set.end());
    bool ok = std::all_of(inter.begin(), inter.end(),
                          [&](const Natural& x) { return contains(set, x); });
    if (ok) {
      t.satisfied = true;
      t.subcase = subcase;
      t.bindings["containing_value"] = value.str();
      t.bindings["containing_set"] = set_str(set);
      return t;
    }
  }
  return fail(std::move(t),
              "pi cap pi(S) is contained in none of the listed prime sets");
}

ConditionTrace cond_VII(const LieRealization& real, const PrimeSet& pi) {
  ConditionTrace t = start_trace("VII", real);
  if (!pi.contains(2)) return fail(std::move(t), "2 not in pi");
  if (pi.contains(3)) return fail(std::move(t), "3 in pi");
  if (pi.contains(real.p))
    return fail(std::move(t), "characteristic p in pi");
  const Natural& q = real.q;
  if (q % 2 == 0)
    throw InvalidInputError(
        "cond_VII: q must be odd when 2 in pi and p not in pi");
  const int eps = arith::epsilon_of(q);
  Natural q_minus_eps = q;
  if (eps == 1)
    q_minus_eps -= 1;
  else
    q_minus_eps += 1;
  t.bindings["epsilon"] = eps == 1 ? "+1" : "-1";
  std::vector<Natural> inter = intersection_of(real, pi);
  t.bindings["pi_cap_piS"] = set_str(inter);
  std::vector<Natural> tau;
  for (const auto& x : inter)
    if (x != 2) tau.push_back(x);
  t.bindings["tau"] = set_str(tau);
  for (const auto& s : tau)
    if (q_minus_eps % s != 0)
      return fail(std::move(t), "tau not contained in pi(q-epsilon): " +
                                    s.str() + " fails");
  std::vector<Natural> fermat_tau;
  for (const auto& s : tau)
    if (arith::fermat_prime_test(s)) fermat_tau.push_back(s);
  t.bindings["phi"] = set_str(fermat_tau);
  std::uint32_t n = paper_n(real);
  for (int k = 1; k <= 10; ++k) {
    if (clauses::vii(k, real.family, n, tau, fermat_tau)) {
      t.satisfied = true;
      t.subcase = std::to_string(k);
      return t;
    }
  }
  return fail(std::move(t), "no subcase (1)-(10) holds");
}

SatisfiesResult satisfies_any(const SimpleGroupId& S, const PrimeSet& pi,
                              const ConditionOptions& opts) {
  SatisfiesResult result;
  SimpleGroupId canon = groups::canonicalize(S);
  auto push = [&](ConditionTrace trace) {
    result.traces.push_back(std::move(trace));
    if (result.traces.back().satisfied && !result.satisfied) {
      result.satisfied = true;
      result.witness = static_cast<int>(result.traces.size()) - 1;
    }
    return result.satisfied;
  };
  if (push(cond_I(canon, pi))) return result;
  if (const auto* spor = std::get_if<Sporadic>(&canon)) {
    if (push(cond_II(canon, pi))) return result;
    if (spor->name == groups::SporadicName::Tits)
      result.notes.push_back(
          "Conditions III-VII are not applied to the Tits group under a "
          "2F4(2) reading");
  }
  for (const auto& real : groups::lie_realizations(canon)) {
    if (push(cond_III(real, pi, opts))) return result;
    if (push(cond_IV(real, pi))) return result;
    if (push(cond_V(real, pi))) return result;
    if (push(cond_VI(real, pi))) return result;
    if (push(cond_VII(real, pi))) return result;
  }
  return result;
}

}  // namespace hallverdict::conditions
