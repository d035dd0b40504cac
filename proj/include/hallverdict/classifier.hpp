#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hallverdict/conditions.hpp"
#include "hallverdict/groups.hpp"
#include "hallverdict/prime_set.hpp"

namespace hallverdict::classifier {

using conditions::ConditionOptions;
using conditions::ConditionTrace;
using groups::SimpleGroupId;

enum class SimpleRule { AllPiGroups, SolvableOnly, Custom };

const char* rule_name(SimpleRule rule);

// A complete class X, determined by pi(X) and a membership rule for
// nonabelian simple groups. Custom rules must only accept groups whose
// spectrum lies in pi; that is checked per query.
struct ClassSpec {
  PrimeSet pi;
  SimpleRule rule = SimpleRule::AllPiGroups;
  std::function<bool(const SimpleGroupId&)> custom;

  static ClassSpec all_pi_groups(PrimeSet pi) {
    return {std::move(pi), SimpleRule::AllPiGroups, nullptr};
  }
  static ClassSpec solvable_pi_groups(PrimeSet pi) {
    return {std::move(pi), SimpleRule::SolvableOnly, nullptr};
  }
  static ClassSpec custom_class(PrimeSet pi,
                                std::function<bool(const SimpleGroupId&)> f) {
    return {std::move(pi), SimpleRule::Custom, std::move(f)};
  }
};

enum class FactorStatus { InClass, ConditionMet, Failed };

const char* status_name(FactorStatus status);

struct FactorVerdict {
  SimpleGroupId factor;         // as given
  SimpleGroupId canonical;      // canonical representative
  FactorStatus status = FactorStatus::Failed;
  int witness = -1;             // index into traces when ConditionMet
  std::vector<ConditionTrace> traces;
  std::vector<std::string> notes;

  const ConditionTrace* witness_trace() const {
    return witness >= 0 ? &traces[witness] : nullptr;
  }
};

struct Verdict {
  bool answer = false;
  std::vector<FactorVerdict> per_factor;
};

// True iff pi(S) is contained in pi; order divisibility only.
bool is_pi_group(const SimpleGroupId& S, const PrimeSet& pi);

// Membership of the simple group S in the class X. Throws
// InconsistentClassError when a custom rule accepts S despite
// pi(S) not contained in pi(X).
bool in_class_simple(const SimpleGroupId& S, const ClassSpec& X);

// D_pi membership of a simple group: pi-group, or satisfies one of the
// Conditions I-VII.
Verdict dpi_simple(const SimpleGroupId& S, const PrimeSet& pi,
                   const ConditionOptions& opts = {});

// D_X membership of a simple group: in X, or (pi(S) not in pi and D_pi).
Verdict dx_simple(const SimpleGroupId& S, const ClassSpec& X,
                  const ConditionOptions& opts = {});

// Same truth value computed without going through dpi_simple; exists so the
// two code paths can be checked against each other.
bool dx_simple_direct(const SimpleGroupId& S, const ClassSpec& X,
                      const ConditionOptions& opts = {});

// D_X for an arbitrary group presented by its composition factor multiset:
// the verdict is the conjunction over factors. Every factor is evaluated even
// after the first failure so traces are complete.
Verdict dx_group(const std::vector<SimpleGroupId>& factors, const ClassSpec& X,
                 const ConditionOptions& opts = {});

// D_pi as the alias dx_group(factors, G_pi).
Verdict dpi_group(const std::vector<SimpleGroupId>& factors, const PrimeSet& pi,
                  const ConditionOptions& opts = {});

}  // namespace hallverdict::classifier
