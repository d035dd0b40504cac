#pragma once

#include <string>
#include <vector>

#include "hallverdict/arith.hpp"

namespace hallverdict {

using arith::Natural;

// A finite or cofinite decidable set of primes. Cofinite sets list the
// excluded primes; membership and intersection with finite sets stay cheap,
// and no operation ever enumerates a cofinite set.
class PrimeSet {
 public:
  static PrimeSet finite(std::vector<Natural> primes);
  static PrimeSet cofinite(std::vector<Natural> excluded);
  static PrimeSet all() { return cofinite({}); }
  static PrimeSet empty() { return finite({}); }

  bool is_finite() const { return finite_; }
  bool contains(const Natural& p) const;

  // The stored list: members when finite, excluded primes when cofinite.
  const std::vector<Natural>& listed() const { return listed_; }

  // Sorted intersection with a finite, sorted prime list.
  std::vector<Natural> intersect(const std::vector<Natural>& primes) const;

  // "2,3,5" for finite sets (empty string for the empty set),
  // "excluded:7,11" for cofinite sets ("excluded:" excludes nothing).
  std::string to_string() const;

  // Accepts the two to_string forms.
  static PrimeSet parse(const std::string& text);

  friend bool operator==(const PrimeSet& a, const PrimeSet& b) {
    return a.finite_ == b.finite_ && a.listed_ == b.listed_;
  }

 private:
  PrimeSet(bool finite, std::vector<Natural> listed);

  bool finite_ = true;
  std::vector<Natural> listed_;  // sorted, distinct, all prime
};

}  // namespace hallverdict
