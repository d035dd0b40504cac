#include "hallverdict/classifier.hpp"

namespace hallverdict::classifier {

namespace {

using groups::Cyclic;

bool spectrum_contained(const SimpleGroupId& S, const PrimeSet& pi) {
  if (pi.is_finite()) {
    // pi(S) in pi iff the order is a product of powers of pi's members.
    Natural m = groups::order(S);
    for (const auto& p : pi.listed())
      while (m % p == 0) m /= p;
    return m == 1;
  }
  // Cofinite: no excluded prime may divide the order.
  for (const auto& p : pi.listed())
    if (groups::divides_order(S, p)) return false;
  return true;
}

}  // namespace

const char* rule_name(SimpleRule rule) {
  switch (rule) {
    case SimpleRule::AllPiGroups: return "gpi";
    case SimpleRule::SolvableOnly: return "spi";
    case SimpleRule::Custom: return "custom";
  }
  return "?";
}

const char* status_name(FactorStatus status) {
  switch (status) {
    case FactorStatus::InClass: return "in_class";
    case FactorStatus::ConditionMet: return "condition_met";
    case FactorStatus::Failed: return "failed";
  }
  return "?";
}

bool is_pi_group(const SimpleGroupId& S, const PrimeSet& pi) {
  return spectrum_contained(S, pi);
}

bool in_class_simple(const SimpleGroupId& S, const ClassSpec& X) {
  if (const auto* c = std::get_if<Cyclic>(&S)) return X.pi.contains(c->p);
  switch (X.rule) {
    case SimpleRule::AllPiGroups:
      return is_pi_group(S, X.pi);
    case SimpleRule::SolvableOnly:
      return false;
    case SimpleRule::Custom: {
      if (!X.custom) throw InvalidInputError("custom class without a rule");
      bool accepted = X.custom(S);
      if (accepted && !is_pi_group(S, X.pi))
        throw InconsistentClassError(
            "custom rule accepts " + groups::format_group(S) +
            " although pi(S) is not contained in pi(X)");
      return accepted;
    }
  }
  return false;
}

Verdict dpi_simple(const SimpleGroupId& S, const PrimeSet& pi,
                   const ConditionOptions& opts) {
  return dx_simple(S, ClassSpec::all_pi_groups(pi), opts);
}

Verdict dx_simple(const SimpleGroupId& S, const ClassSpec& X,
                  const ConditionOptions& opts) {
  Verdict v;
  FactorVerdict fv;
  fv.factor = S;
  fv.canonical = groups::canonicalize(S);
  if (in_class_simple(fv.canonical, X)) {
    fv.status = FactorStatus::InClass;
    v.answer = true;
    v.per_factor.push_back(std::move(fv));
    return v;
  }
  // Theorem shape: S in D_X iff S in X, or pi(S) not in pi and S in D_pi.
  // Inside the second branch the pi-group disjunct of D_pi is vacuous.
  bool spectrum_leaves_pi = !is_pi_group(fv.canonical, X.pi);
  bool dpi = false;
  if (spectrum_leaves_pi) {
    auto sat = conditions::satisfies_any(fv.canonical, X.pi, opts);
    fv.traces = std::move(sat.traces);
    fv.notes = std::move(sat.notes);
    fv.witness = sat.witness;
    dpi = sat.satisfied;
  }
  if (spectrum_leaves_pi && dpi) {
    fv.status = FactorStatus::ConditionMet;
    v.answer = true;
  } else {
    fv.status = FactorStatus::Failed;
    v.answer = false;
  }
  v.per_factor.push_back(std::move(fv));
  return v;
}

bool dx_simple_direct(const SimpleGroupId& S, const ClassSpec& X,
                      const ConditionOptions& opts) {
  SimpleGroupId canon = groups::canonicalize(S);
  bool pi_group = is_pi_group(canon, X.pi);
  bool dpi = pi_group || conditions::satisfies_any(canon, X.pi, opts).satisfied;
  return in_class_simple(canon, X) || (!pi_group && dpi);
}

Verdict dx_group(const std::vector<SimpleGroupId>& factors, const ClassSpec& X,
                 const ConditionOptions& opts) {
  Verdict v;
  v.answer = true;
  for (const auto& factor : factors) {
    Verdict single = dx_simple(factor, X, opts);
    v.answer = v.answer && single.answer;
    v.per_factor.push_back(std::move(single.per_factor.front()));
  }
  return v;
}

Verdict dpi_group(const std::vector<SimpleGroupId>& factors, const PrimeSet& pi,
                  const ConditionOptions& opts) {
  return dx_group(factors, ClassSpec::all_pi_groups(pi), opts);
}

}  // namespace hallverdict::classifier
