#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include "hallverdict/groups.hpp"
#include "hallverdict/prime_set.hpp"

namespace hallverdict::oracle {

using ElementIndex = std::uint32_t;

// A permutation of the points 1..N, stored 0-based.
class Permutation {
 public:
  explicit Permutation(std::vector<std::uint16_t> images);
  static Permutation identity(std::uint32_t degree);

  // Parses disjoint cycle notation on points 1..N, e.g. "(1 2 3)(4 5)".
  // "()" is the identity. The result acts on 1..degree.
  static Permutation parse_cycles(const std::string& text,
                                  std::uint32_t degree);

  std::uint32_t degree() const { return static_cast<std::uint32_t>(images_.size()); }
  std::uint16_t apply(std::uint16_t x) const { return images_[x]; }
  const std::vector<std::uint16_t>& images() const { return images_; }

  Permutation then(const Permutation& g) const;  // apply *this, then g
  Permutation inverse() const;
  Permutation padded(std::uint32_t degree) const;
  std::uint64_t order() const;
  bool is_identity() const;

  std::string to_cycles() const;  // 1-based disjoint cycles

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.images_ == b.images_;
  }
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.images_ < b.images_;
  }

 private:
  std::vector<std::uint16_t> images_;
};

struct OracleLimits {
  std::uint64_t max_order = 20000;
  std::uint64_t max_subgroups = 1000000;
  std::uint32_t max_input_degree = 128;
  // Coset actions built internally (quotients) may need more points.
  std::uint32_t max_internal_degree = 1024;
};

// A finite permutation group with its full element list. Elements are kept in
// a canonical order (sorted by image vector), so indices are deterministic.
class PermGroup {
 public:
  static PermGroup generate(std::vector<Permutation> gens,
                            const OracleLimits& limits = {});

  std::uint32_t degree() const { return degree_; }
  std::uint64_t order() const { return elements_.size(); }
  const OracleLimits& limits() const { return limits_; }

  const Permutation& element(ElementIndex i) const { return elements_[i]; }
  ElementIndex identity() const { return identity_; }
  ElementIndex inverse(ElementIndex i) const { return inverse_[i]; }
  std::uint64_t element_order(ElementIndex i) const { return element_order_[i]; }
  const std::vector<ElementIndex>& generator_indices() const {
    return generator_indices_;
  }

  ElementIndex mul(ElementIndex a, ElementIndex b) const;  // a, then b
  ElementIndex conj(ElementIndex x, ElementIndex c) const;  // c^-1 x c
  ElementIndex index_of(const Permutation& p) const;

  // Cached right-multiplication column: column(g)[a] = mul(a, g).
  const std::vector<ElementIndex>& column(ElementIndex g) const;

  // Subgroup generated by the given element indices (identity if empty),
  // returned as a sorted index list. When bail_above is nonzero the closure
  // aborts and returns empty once it exceeds that many elements.
  std::vector<ElementIndex> closure(const std::vector<ElementIndex>& gens,
                                    std::uint64_t bail_above = 0) const;

  std::vector<ElementIndex> conjugate_subgroup(
      const std::vector<ElementIndex>& sub, ElementIndex c) const;

  bool is_subgroup_normal(const std::vector<ElementIndex>& sub) const;
  std::vector<ElementIndex> center() const;
  std::vector<ElementIndex> conjugacy_class(ElementIndex x) const;
  std::vector<ElementIndex> normal_closure_of_class(ElementIndex x) const;

  // The subgroup, regarded as a group in its own right (same points).
  PermGroup subgroup_group(const std::vector<ElementIndex>& sub) const;

  // Action on the right cosets of a normal subgroup.
  PermGroup quotient(const std::vector<ElementIndex>& normal_sub) const;

 private:
  PermGroup() = default;

  std::uint32_t degree_ = 0;
  std::vector<Permutation> elements_;
  std::vector<ElementIndex> inverse_;
  std::vector<std::uint64_t> element_order_;
  std::vector<ElementIndex> generator_indices_;
  ElementIndex identity_ = 0;
  OracleLimits limits_;
  std::unordered_map<std::uint64_t, std::vector<ElementIndex>> index_by_hash_;
  mutable std::unordered_map<ElementIndex, std::vector<ElementIndex>> right_cols_;
  mutable std::unordered_map<ElementIndex, std::vector<ElementIndex>> left_cols_;

  const std::vector<ElementIndex>& left_column(ElementIndex g) const;
};

struct SubgroupRecord {
  std::vector<ElementIndex> elements;  // sorted
  std::uint64_t order = 0;
  bool is_pi_group = true;
  std::int32_t class_id = -1;  // conjugacy class id within the listing
};

// Every subgroup H <= G with pi(|H|) in pi, found by closure-join saturation
// from the cyclic subgroups of pi-elements. Deterministic order; class ids
// number the conjugacy classes in order of first appearance.
std::vector<SubgroupRecord> pi_subgroups(const PermGroup& G, const PrimeSet& pi);

struct MaximalClass {
  std::uint64_t order = 0;
  std::vector<std::vector<ElementIndex>> members;
};

// Conjugacy classes of the inclusion-maximal pi-subgroups, sorted by
// descending order then by least member.
std::vector<MaximalClass> pi_maximal_classes(const PermGroup& G,
                                             const PrimeSet& pi);

bool is_dpi(const PermGroup& G, const PrimeSet& pi);
bool hall_exists(const PermGroup& G, const PrimeSet& pi);

// pi-part of |G|.
std::uint64_t pi_part_of_order(const PermGroup& G, const PrimeSet& pi);

// Composition factor multiset (sorted canonically). Nonabelian factors are
// identified by order lookup; the order collision {Alt(8), PSL3(4)} is broken
// by the maximal element order.
std::vector<groups::SimpleGroupId> composition_factors(const PermGroup& G);

// Same multiset, but the normal subgroup picked at every step is randomized;
// used to exercise Jordan-Hoelder invariance.
std::vector<groups::SimpleGroupId> composition_factors_randomized(
    const PermGroup& G, std::uint64_t seed);

// Line-oriented generator files: one permutation per line in disjoint cycle
// notation, '#' comments, degree inferred from the largest point.
std::vector<Permutation> parse_generators(std::istream& in,
                                          const OracleLimits& limits = {});
std::vector<Permutation> load_generators(const std::string& path,
                                         const OracleLimits& limits = {});

}  // namespace hallverdict::oracle
