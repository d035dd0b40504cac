#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hallverdict/groups.hpp"
#include "hallverdict/prime_set.hpp"

namespace hallverdict::catalog {

using arith::Natural;
using groups::SporadicName;

// The group a Hall record belongs to: a symmetric group of some degree or a
// sporadic group.
struct HallGroupRef {
  enum class Kind { Symmetric, SporadicGroup } kind;
  std::uint32_t degree = 0;       // Symmetric
  SporadicName name = SporadicName::M11;  // SporadicGroup

  std::string to_string() const;
};

struct HallRecord {
  HallGroupRef group;
  std::vector<Natural> pi_intersection;  // sorted
  std::string structure;                 // fixed ASCII grammar, see below
  std::string conjugacy_note;            // optional
};

// Structure strings use ':' for split extensions, '.' for non-split or
// unspecified ones, 'x' for direct products, 'wr' for wreath products and
// 'o' for central products. Atoms: plain integers (cyclic), p^k (elementary
// abelian), Alt(n), Sym(n), Q8, L3(4), M22, and ATLAS-decorated involution
// classes like 2_2. This computes the order implied by a structure string.
Natural structure_order(const std::string& structure);

// Table row lookup for Hall subgroups of Sym(n). Preconditions (the lemma's
// hypotheses): n >= 5, |pi cap pi(n!)| > 1 and pi(n!) not contained in pi;
// otherwise HypothesisViolatedError.
std::optional<HallRecord> hall_symmetric(std::uint32_t n, const PrimeSet& pi);

// All table rows for a sporadic group matching pi cap pi(G). Preconditions:
// 2 in pi, pi(G) not contained in pi, |pi cap pi(G)| > 1.
std::vector<HallRecord> hall_sporadic(SporadicName g, const PrimeSet& pi);

// The embedded sporadic Hall-subgroup table (every printed row).
const std::vector<HallRecord>& sporadic_hall_table();

}  // namespace hallverdict::catalog
