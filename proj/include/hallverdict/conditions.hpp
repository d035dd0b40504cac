#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hallverdict/groups.hpp"
#include "hallverdict/prime_set.hpp"

namespace hallverdict::conditions {

using arith::Natural;
using groups::LieFamily;
using groups::LieRealization;
using groups::SimpleGroupId;

struct ConditionOptions {
  // Condition III as printed checks every prime of pi against the Weyl order,
  // including the characteristic. Setting this switches to the variant that
  // exempts p; verdicts that differ between the readings are flagged either
  // way.
  bool weyl_excludes_p = false;
};

struct ConditionTrace {
  std::string condition;  // "I".."VII"
  std::string subcase;    // "" or "1".."15"
  std::optional<LieRealization> realization;
  std::map<std::string, std::string> bindings;
  bool satisfied = false;
  std::string fail_reason;  // first violated clause when not satisfied
  std::vector<std::string> flags;

  std::string label() const;  // "I", "IV(1)", ...
};

ConditionTrace cond_I(const SimpleGroupId& S, const PrimeSet& pi);
ConditionTrace cond_II(const SimpleGroupId& S, const PrimeSet& pi);
ConditionTrace cond_III(const LieRealization& real, const PrimeSet& pi,
                        const ConditionOptions& opts = {});
ConditionTrace cond_IV(const LieRealization& real, const PrimeSet& pi);
ConditionTrace cond_V(const LieRealization& real, const PrimeSet& pi);
ConditionTrace cond_VI(const LieRealization& real, const PrimeSet& pi);
ConditionTrace cond_VII(const LieRealization& real, const PrimeSet& pi);

struct SatisfiesResult {
  bool satisfied = false;
  int witness = -1;  // index into traces of the satisfied one
  std::vector<ConditionTrace> traces;
  std::vector<std::string> notes;

  const ConditionTrace* witness_trace() const {
    return witness >= 0 ? &traces[witness] : nullptr;
  }
};

// Disjunction of Conditions I-VII over all Lie realizations of S, evaluated
// in the order I, II, then III..VII per realization (realizations by
// ascending field size). Short-circuits on the first satisfied condition and
// reports every trace attempted.
SatisfiesResult satisfies_any(const SimpleGroupId& S, const PrimeSet& pi,
                              const ConditionOptions& opts = {});

// The individually testable subcase clauses. n is the paper's n: rank+1 for
// A/2A families, the rank itself for B/C/D/2D.
namespace clauses {

bool iv(int k, LieFamily fam, std::uint32_t n, const Natural& q,
        const Natural& r, const Natural& a, const Natural& b,
        const std::vector<std::pair<Natural, Natural>>& tau_orders);

bool v(int k, LieFamily fam, std::uint32_t n, const Natural& r,
       const Natural& c, const std::vector<Natural>& tau);

bool vii(int k, LieFamily fam, std::uint32_t n, const std::vector<Natural>& tau,
         const std::vector<Natural>& fermat_tau);

}  // namespace clauses

// The Condition II data: items (1)-(17), each a sporadic group with its
// admissible intersections.
struct CondIIItem {
  int item;
  groups::SporadicName group;
  std::vector<std::vector<std::uint32_t>> sets;
};
const std::vector<CondIIItem>& cond_ii_table();

}  // namespace hallverdict::conditions
