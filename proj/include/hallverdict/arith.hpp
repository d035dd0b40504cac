#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hallverdict/errors.hpp"

namespace hallverdict::arith {

// Exact arbitrary-precision integer. All quantities in this library are
// nonnegative; arithmetic never wraps.
using Natural = boost::multiprecision::cpp_int;

struct PrimePower {
  Natural prime;
  std::uint32_t exponent = 1;

  friend bool operator==(const PrimePower& a, const PrimePower& b) {
    return a.prime == b.prime && a.exponent == b.exponent;
  }
};

// Prime factorization, sorted ascending by prime, exponents >= 1.
struct Factorization {
  std::vector<PrimePower> factors;

  Natural value() const;
  bool has_prime(const Natural& p) const;
  std::vector<Natural> primes() const;
};

struct FactorizationLimits {
  // Residual cofactors above this bit length are not attacked at all.
  unsigned cofactor_bit_cap = 128;
  // Pollard-Brent iterations spent per composite cofactor before giving up.
  std::uint64_t rho_budget = 4'000'000;
};

// Primality test: deterministic Miller-Rabin below 2^64, strong-pseudoprime
// rounds (fixed bases, probabilistic) above.
bool is_prime(const Natural& n);

// Exact factorization of n >= 1. Trial division up to 10^6, then Pollard-Brent
// within the budget. Throws CapExceededError when a composite cofactor
// survives the budget or exceeds the bit cap.
Factorization prime_factorization(const Natural& n,
                                  const FactorizationLimits& limits = {});

// Sorted list of the distinct primes dividing n (n >= 1).
std::vector<Natural> prime_divisors(const Natural& n,
                                    const FactorizationLimits& limits = {});

// Largest power of the prime r dividing n:  (n)_r.
Natural r_part(const Natural& n, const Natural& r);

// Exponent of r in n, i.e. log_r of r_part.
std::uint32_t r_valuation(const Natural& n, const Natural& r);

// Multiplicative order e(q,r) of q modulo the odd prime r, r not dividing q.
Natural mult_order(const Natural& q, const Natural& r);

// The parity-adjusted order map: 2e / e / e/2 according to e mod 4.
Natural e_star(const Natural& e);

// Sign epsilon with q = epsilon (mod 4) for odd q; +1 or -1.
int epsilon_of(const Natural& q);

// (n!)_r via the Legendre sum; n! itself is never formed.
Natural factorial_r_part(const Natural& n, const Natural& r);

// r-part of prod_{i=1..n} (q^i - 1)          when signed_product = false,
// r-part of prod_{i=1..n} (q^i - (-1)^i)     when signed_product = true,
// computed by the closed forms, never by the literal product. r odd prime,
// r not dividing q.
Natural prod_r_part(const Natural& q, const Natural& n, const Natural& r,
                    bool signed_product);

// True iff t is prime and t - 1 is a power of two.
bool fermat_prime_test(const Natural& t);

Natural pow_nat(const Natural& base, std::uint64_t exp);

// Convenience: parse a base-10 natural, rejecting junk.
Natural parse_natural(const std::string& text);

}  // namespace hallverdict::arith
