#include "hallverdict/arith.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace hallverdict::arith {

namespace {

using boost::multiprecision::gcd;
using boost::multiprecision::powm;

constexpr std::uint64_t kTrialLimit = 1'000'000;

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> sieve(kTrialLimit + 1, true);
    std::vector<std::uint32_t> out;
    for (std::uint64_t i = 2; i <= kTrialLimit; ++i) {
      if (!sieve[i]) continue;
      out.push_back(static_cast<std::uint32_t>(i));
      for (std::uint64_t j = i * i; j <= kTrialLimit; j += i) sieve[j] = false;
    }
    return out;
  }();
  return primes;
}

bool miller_rabin_witness(const Natural& n, const Natural& a) {
  // n odd, n > 3. Returns true when a proves n composite.
  Natural d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  Natural x = powm(a % n, d, n);
  if (x == 0 || x == 1 || x == n - 1) return false;
  for (unsigned i = 1; i < s; ++i) {
    x = (x * x) % n;
    if (x == n - 1) return false;
  }
  return true;
}

// Pollard-Brent cycle finding on composite odd n (not a prime power check
// needed: recursion handles repeated factors). Returns 0 when the budget of
// f-evaluations runs out.
Natural pollard_brent(const Natural& n, std::uint64_t budget) {
  for (Natural c = 1; budget > 0; ++c) {
    Natural y = 2, g = 1, q = 1, x, ys;
    std::uint64_t r = 1;
    const std::uint64_t batch = 128;
    while (g == 1 && budget > 0) {
      x = y;
      for (std::uint64_t i = 0; i < r && budget > 0; ++i, --budget)
        y = (y * y + c) % n;
      std::uint64_t k = 0;
      while (k < r && g == 1 && budget > 0) {
        ys = y;
        std::uint64_t steps = std::min({batch, r - k, budget});
        for (std::uint64_t i = 0; i < steps; ++i) {
          y = (y * y + c) % n;
          Natural diff = x > y ? x - y : y - x;
          if (diff != 0) q = (q * diff) % n;
        }
        budget -= steps;
        k += steps;
        g = gcd(q, n);
      }
      r *= 2;
    }
    if (g == n) {
      // Batch gcd collapsed; replay stepwise from the saved iterate.
      g = 1;
      while (g == 1) {
        ys = (ys * ys + c) % n;
        Natural diff = x > ys ? x - ys : ys - x;
        g = gcd(diff, n);
      }
    }
    if (g != 1 && g != n) return g;
  }
  return 0;
}

void factor_into(const Natural& n, const FactorizationLimits& limits,
                 std::vector<std::pair<Natural, std::uint32_t>>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.emplace_back(n, 1);
    return;
  }
  if (msb(n) + 1 > limits.cofactor_bit_cap)
    throw CapExceededError("factorization: composite cofactor of " +
                           std::to_string(msb(n) + 1) +
                           " bits exceeds the configured cap of " +
                           std::to_string(limits.cofactor_bit_cap) + " bits");
  Natural d = pollard_brent(n, limits.rho_budget);
  if (d == 0)
    throw CapExceededError(
        "factorization: budget exhausted on a composite cofactor");
  factor_into(d, limits, out);
  factor_into(n / d, limits, out);
}

}  // namespace

Natural Factorization::value() const {
  Natural v = 1;
  for (const auto& f : factors) v *= pow_nat(f.prime, f.exponent);
  return v;
}

bool Factorization::has_prime(const Natural& p) const {
  for (const auto& f : factors)
    if (f.prime == p) return true;
  return false;
}

std::vector<Natural> Factorization::primes() const {
  std::vector<Natural> out;
  out.reserve(factors.size());
  for (const auto& f : factors) out.push_back(f.prime);
  return out;
}

bool is_prime(const Natural& n) {
  if (n < 2) return false;
  for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  if (n < 41 * 41) return true;
  // Deterministic for n < 2^64 with this base set.
  static const std::array<int, 12> bases = {2,  3,  5,  7,  11, 13,
                                            17, 19, 23, 29, 31, 37};
  for (int a : bases)
    if (miller_rabin_witness(n, Natural(a))) return false;
  if (n >> 64 == 0) return true;
  // Above 2^64: extra fixed strong-pseudoprime rounds; probabilistic.
  Natural a = 41;
  for (int round = 0; round < 24; ++round) {
    if (miller_rabin_witness(n, a)) return false;
    a = a * a + round + 1;
  }
  return true;
}

Factorization prime_factorization(const Natural& n,
                                  const FactorizationLimits& limits) {
  if (n < 1) throw InvalidInputError("prime_factorization: n must be >= 1");
  std::vector<std::pair<Natural, std::uint32_t>> found;
  Natural m = n;
  bool m_known_prime = false;
  bool primality_checked = false;  // since m last shrank
  for (std::uint32_t p : small_primes()) {
    if (m == 1) break;
    if (Natural(p) * p > m) {
      m_known_prime = true;
      break;
    }
    if (m % p == 0) {
      std::uint32_t e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      found.emplace_back(Natural(p), e);
      primality_checked = false;
    } else if (p > 4096 && !primality_checked) {
      // One primality test per cofactor saves scanning the whole sieve
      // when the remainder is a large prime.
      primality_checked = true;
      if (is_prime(m)) {
        m_known_prime = true;
        break;
      }
    }
  }
  if (m > 1) {
    if (m_known_prime)
      found.emplace_back(m, 1);
    else
      factor_into(m, limits, found);
  }

  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  Factorization fz;
  for (const auto& [prime, exp] : found) {
    if (!fz.factors.empty() && fz.factors.back().prime == prime)
      fz.factors.back().exponent += exp;
    else
      fz.factors.push_back({prime, exp});
  }
  return fz;
}

std::vector<Natural> prime_divisors(const Natural& n,
                                    const FactorizationLimits& limits) {
  return prime_factorization(n, limits).primes();
}

Natural r_part(const Natural& n, const Natural& r) {
  if (n < 1) throw InvalidInputError("r_part: n must be >= 1");
  Natural m = n, part = 1;
  while (m % r == 0) {
    m /= r;
    part *= r;
  }
  return part;
}

std::uint32_t r_valuation(const Natural& n, const Natural& r) {
  if (n < 1) throw InvalidInputError("r_valuation: n must be >= 1");
  Natural m = n;
  std::uint32_t v = 0;
  while (m % r == 0) {
    m /= r;
    ++v;
  }
  return v;
}

Natural mult_order(const Natural& q, const Natural& r) {
  if (q < 2) throw InvalidInputError("mult_order: q must be >= 2");
  if (r == 2 || !is_prime(r))
    throw InvalidInputError("mult_order: r must be an odd prime");
  if (q % r == 0) throw InvalidInputError("mult_order: r divides q");
  // e divides r-1; strip prime factors of r-1 while q^(e/f) stays 1 mod r.
  Natural e = r - 1;
  Factorization fz = prime_factorization(r - 1);
  for (const auto& f : fz.factors) {
    for (std::uint32_t i = 0; i < f.exponent; ++i) {
      Natural candidate = e / f.prime;
      if (candidate * f.prime != e) break;
      if (powm(q % r, candidate, r) == 1)
        e = candidate;
      else
        break;
    }
  }
  return e;
}

Natural e_star(const Natural& e) {
  if (e < 1) throw InvalidInputError("e_star: e must be >= 1");
  if (e % 2 == 1) return 2 * e;
  if (e % 4 == 0) return e;
  return e / 2;
}

int epsilon_of(const Natural& q) {
  if (q % 2 == 0) throw InvalidInputError("epsilon_of: q must be odd");
  return q % 4 == 1 ? +1 : -1;
}

Natural factorial_r_part(const Natural& n, const Natural& r) {
  if (!is_prime(r)) throw InvalidInputError("factorial_r_part: r must be prime");
  Natural alpha = 0;
  Natural power = r;
  while (power <= n) {
    alpha += n / power;
    power *= r;
  }
  if (alpha > 0xffffffffu)
    throw CapExceededError("factorial_r_part: exponent too large");
  return pow_nat(r, alpha.convert_to<std::uint64_t>());
}

Natural prod_r_part(const Natural& q, const Natural& n, const Natural& r,
                    bool signed_product) {
  if (q < 2) throw InvalidInputError("prod_r_part: q must be >= 2");
  if (n < 1) throw InvalidInputError("prod_r_part: n must be >= 1");
  if (r == 2 || !is_prime(r))
    throw InvalidInputError("prod_r_part: r must be an odd prime");
  if (q % r == 0) throw InvalidInputError("prod_r_part: r divides q");
  Natural e = mult_order(q, r);
  Natural period = signed_product ? e_star(e) : e;
  Natural count = n / period;
  if (count == 0) return 1;
  if (count > 0xffffffffu)
    throw CapExceededError("prod_r_part: n/e too large");
  Natural qe = pow_nat(q, period.convert_to<std::uint64_t>());
  // q^e - 1, or q^e* - (-1)^e* in the signed case.
  Natural base_value = qe;
  if (!signed_product || period % 2 == 0)
    base_value -= 1;
  else
    base_value += 1;
  Natural part = r_part(base_value, r);
  return pow_nat(part, count.convert_to<std::uint64_t>()) *
         factorial_r_part(count, r);
}

bool fermat_prime_test(const Natural& t) {
  if (!is_prime(t)) return false;
  Natural m = t - 1;
  while (m % 2 == 0) m /= 2;
  return m == 1;
}

Natural pow_nat(const Natural& base, std::uint64_t exp) {
  Natural result = 1, b = base;
  while (exp) {
    if (exp & 1) result *= b;
    b *= b;
    exp >>= 1;
  }
  return result;
}

Natural parse_natural(const std::string& text) {
  if (text.empty()) throw InvalidInputError("empty number");
  for (char c : text)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw InvalidInputError("not a natural number: '" + text + "'");
  return Natural(text);
}

}  // namespace hallverdict::arith
