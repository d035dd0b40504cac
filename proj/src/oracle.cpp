#include "hallverdict/oracle.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

namespace hallverdict::oracle {

namespace {

std::uint64_t hash_images(const std::vector<std::uint16_t>& v) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (std::uint16_t x : v) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

std::uint64_t hash_indices(const std::vector<ElementIndex>& v) {
  std::uint64_t h = 1469598103934665603ull;
  for (ElementIndex x : v) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 1099511628211ull;
  }
  return h;
}

std::vector<std::pair<std::uint64_t, std::uint32_t>> factor_u64(
    std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, std::uint32_t>> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    std::uint32_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool pi_smooth(std::uint64_t n, const PrimeSet& pi) {
  for (auto [p, e] : factor_u64(n))
    if (!pi.contains(Natural(p))) return false;
  return true;
}

}  // namespace

// ---------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<std::uint16_t> images)
    : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::uint16_t x : images_) {
    if (x >= images_.size() || seen[x])
      throw InvalidInputError("permutation images are not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::uint32_t degree) {
  std::vector<std::uint16_t> img(degree);
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

Permutation Permutation::parse_cycles(const std::string& text,
                                      std::uint32_t degree) {
  std::vector<std::uint16_t> img(degree);
  std::iota(img.begin(), img.end(), 0);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(')
      throw InvalidInputError("cycle notation: expected '(' in '" + text + "'");
    ++i;
    std::vector<std::uint32_t> cycle;
    for (;;) {
      skip_ws();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      std::uint32_t point = 0;
      bool any = false;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        point = point * 10 + (text[i] - '0');
        ++i;
        any = true;
      }
      if (!any)
        throw InvalidInputError("cycle notation: expected a point in '" + text + "'");
      if (point == 0 || point > degree)
        throw InvalidInputError("cycle notation: point out of range");
      cycle.push_back(point - 1);
      skip_ws();
      if (i < text.size() && text[i] == ',') ++i;
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      std::uint32_t from = cycle[k];
      std::uint32_t to = cycle[(k + 1) % cycle.size()];
      if (img[from] != from)
        throw InvalidInputError("cycle notation: cycles are not disjoint");
      img[from] = static_cast<std::uint16_t>(to);
    }
    skip_ws();
  }
  return Permutation(std::move(img));
}

Permutation Permutation::then(const Permutation& g) const {
  std::vector<std::uint16_t> img(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) img[x] = g.images_[images_[x]];
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<std::uint16_t> img(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x)
    img[images_[x]] = static_cast<std::uint16_t>(x);
  return Permutation(std::move(img));
}

Permutation Permutation::padded(std::uint32_t degree) const {
  if (degree < images_.size())
    throw InvalidInputError("cannot shrink a permutation");
  std::vector<std::uint16_t> img(degree);
  std::iota(img.begin(), img.end(), 0);
  std::copy(images_.begin(), images_.end(), img.begin());
  return Permutation(std::move(img));
}

std::uint64_t Permutation::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::uint64_t ord = 1;
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x]) continue;
    std::uint64_t len = 0;
    std::size_t y = x;
    while (!seen[y]) {
      seen[y] = true;
      y = images_[y];
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

std::string Permutation::to_cycles() const {
  std::vector<bool> seen(images_.size(), false);
  std::ostringstream os;
  bool any = false;
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x] || images_[x] == x) {
      seen[x] = true;
      continue;
    }
    os << "(" << x + 1;
    seen[x] = true;
    std::size_t y = images_[x];
    while (y != x) {
      os << " " << y + 1;
      seen[y] = true;
      y = images_[y];
    }
    os << ")";
    any = true;
  }
  return any ? os.str() : "()";
}

// ------------------------------------------------------------------ PermGroup

PermGroup PermGroup::generate(std::vector<Permutation> gens,
                              const OracleLimits& limits) {
  if (gens.empty()) throw InvalidInputError("no generators");
  std::uint32_t degree = 0;
  for (const auto& g : gens) degree = std::max(degree, g.degree());
  if (degree > limits.max_internal_degree)
    throw CapExceededError("degree " + std::to_string(degree) +
                           " exceeds the internal cap");
  for (auto& g : gens) g = g.padded(degree);

  // Breadth-first closure from the identity.
  std::vector<Permutation> elements;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> by_hash;
  auto find = [&](const Permutation& p) -> std::int64_t {
    auto it = by_hash.find(hash_images(p.images()));
    if (it == by_hash.end()) return -1;
    for (std::size_t i : it->second)
      if (elements[i] == p) return static_cast<std::int64_t>(i);
    return -1;
  };
  auto insert = [&](Permutation p) -> bool {
    if (find(p) >= 0) return false;
    by_hash[hash_images(p.images())].push_back(elements.size());
    elements.push_back(std::move(p));
    return true;
  };
  insert(Permutation::identity(degree));
  std::deque<std::size_t> frontier = {0};
  while (!frontier.empty()) {
    std::size_t i = frontier.front();
    frontier.pop_front();
    for (const auto& g : gens) {
      Permutation next = elements[i].then(g);
      if (find(next) < 0) {
        if (elements.size() >= limits.max_order)
          throw CapExceededError("group order exceeds the cap of " +
                                 std::to_string(limits.max_order));
        frontier.push_back(elements.size());
        insert(std::move(next));
      }
    }
  }

  PermGroup G;
  G.degree_ = degree;
  G.limits_ = limits;
  G.elements_ = std::move(elements);
  std::sort(G.elements_.begin(), G.elements_.end());
  for (std::size_t i = 0; i < G.elements_.size(); ++i)
    G.index_by_hash_[hash_images(G.elements_[i].images())].push_back(
        static_cast<ElementIndex>(i));
  G.identity_ = G.index_of(Permutation::identity(degree));
  G.inverse_.resize(G.elements_.size());
  G.element_order_.resize(G.elements_.size());
  for (std::size_t i = 0; i < G.elements_.size(); ++i) {
    G.inverse_[i] = G.index_of(G.elements_[i].inverse());
    G.element_order_[i] = G.elements_[i].order();
  }
  for (const auto& g : gens)
    G.generator_indices_.push_back(G.index_of(g));
  std::sort(G.generator_indices_.begin(), G.generator_indices_.end());
  G.generator_indices_.erase(
      std::unique(G.generator_indices_.begin(), G.generator_indices_.end()),
      G.generator_indices_.end());
  return G;
}

ElementIndex PermGroup::index_of(const Permutation& p) const {
  auto it = index_by_hash_.find(hash_images(p.images()));
  if (it != index_by_hash_.end())
    for (ElementIndex i : it->second)
      if (elements_[i] == p) return i;
  throw InvalidInputError("permutation is not an element of the group");
}

ElementIndex PermGroup::mul(ElementIndex a, ElementIndex b) const {
  auto it = right_cols_.find(b);
  if (it != right_cols_.end()) return it->second[a];
  return index_of(elements_[a].then(elements_[b]));
}

const std::vector<ElementIndex>& PermGroup::column(ElementIndex g) const {
  auto it = right_cols_.find(g);
  if (it != right_cols_.end()) return it->second;
  std::vector<ElementIndex> col(elements_.size());
  for (std::size_t a = 0; a < elements_.size(); ++a)
    col[a] = index_of(elements_[a].then(elements_[g]));
  return right_cols_.emplace(g, std::move(col)).first->second;
}

const std::vector<ElementIndex>& PermGroup::left_column(ElementIndex g) const {
  auto it = left_cols_.find(g);
  if (it != left_cols_.end()) return it->second;
  std::vector<ElementIndex> col(elements_.size());
  for (std::size_t a = 0; a < elements_.size(); ++a)
    col[a] = index_of(elements_[g].then(elements_[a]));
  return left_cols_.emplace(g, std::move(col)).first->second;
}

ElementIndex PermGroup::conj(ElementIndex x, ElementIndex c) const {
  const auto& lc = left_column(inverse_[c]);
  const auto& rc = column(c);
  return rc[lc[x]];
}

std::vector<ElementIndex> PermGroup::closure(
    const std::vector<ElementIndex>& gens, std::uint64_t bail_above) const {
  std::vector<ElementIndex> members = {identity_};
  std::vector<bool> in_set(elements_.size(), false);
  in_set[identity_] = true;
  std::vector<const std::vector<ElementIndex>*> cols;
  cols.reserve(gens.size());
  for (ElementIndex g : gens) cols.push_back(&column(g));
  std::size_t head = 0;
  while (head < members.size()) {
    ElementIndex x = members[head++];
    for (const auto* col : cols) {
      ElementIndex y = (*col)[x];
      if (!in_set[y]) {
        if (bail_above && members.size() >= bail_above) return {};
        in_set[y] = true;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<ElementIndex> PermGroup::conjugate_subgroup(
    const std::vector<ElementIndex>& sub, ElementIndex c) const {
  const auto& lc = left_column(inverse_[c]);
  const auto& rc = column(c);
  std::vector<ElementIndex> out;
  out.reserve(sub.size());
  for (ElementIndex x : sub) out.push_back(rc[lc[x]]);
  std::sort(out.begin(), out.end());
  return out;
}

bool PermGroup::is_subgroup_normal(const std::vector<ElementIndex>& sub) const {
  for (ElementIndex g : generator_indices_) {
    std::vector<ElementIndex> image = conjugate_subgroup(sub, g);
    if (image != sub) return false;
  }
  return true;
}

std::vector<ElementIndex> PermGroup::center() const {
  std::vector<ElementIndex> out;
  for (ElementIndex x = 0; x < elements_.size(); ++x) {
    bool central = true;
    for (ElementIndex g : generator_indices_)
      if (mul(x, g) != mul(g, x)) {
        central = false;
        break;
      }
    if (central) out.push_back(x);
  }
  return out;
}

std::vector<ElementIndex> PermGroup::conjugacy_class(ElementIndex x) const {
  std::vector<ElementIndex> orbit = {x};
  std::vector<bool> seen(elements_.size(), false);
  seen[x] = true;
  std::size_t head = 0;
  while (head < orbit.size()) {
    ElementIndex y = orbit[head++];
    for (ElementIndex g : generator_indices_) {
      ElementIndex z = conj(y, g);
      if (!seen[z]) {
        seen[z] = true;
        orbit.push_back(z);
      }
    }
  }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

std::vector<ElementIndex> PermGroup::normal_closure_of_class(
    ElementIndex x) const {
  // Grow a small generating set instead of feeding the whole class to the
  // closure (which would build one multiplication column per class member).
  std::vector<ElementIndex> gens = {x};
  std::vector<ElementIndex> sub = closure(gens);
  for (bool stable = false; !stable;) {
    stable = true;
    for (ElementIndex k : gens) {
      for (ElementIndex g : generator_indices_) {
        ElementIndex y = conj(k, g);
        if (!std::binary_search(sub.begin(), sub.end(), y)) {
          gens.push_back(y);
          sub = closure(gens);
          stable = false;
        }
      }
      if (!stable) break;
    }
  }
  return sub;
}

PermGroup PermGroup::subgroup_group(
    const std::vector<ElementIndex>& sub) const {
  // Pick a small generating set greedily, then rebuild.
  std::vector<ElementIndex> gens;
  std::vector<ElementIndex> closed = {identity_};
  for (ElementIndex x : sub) {
    if (std::binary_search(closed.begin(), closed.end(), x)) continue;
    gens.push_back(x);
    closed = closure(gens);
    if (closed.size() == sub.size()) break;
  }
  std::vector<Permutation> perms;
  if (gens.empty()) gens.push_back(identity_);
  perms.reserve(gens.size());
  for (ElementIndex g : gens) perms.push_back(elements_[g]);
  return PermGroup::generate(std::move(perms), limits_);
}

PermGroup PermGroup::quotient(const std::vector<ElementIndex>& normal_sub) const {
  if (!is_subgroup_normal(normal_sub))
    throw InvalidInputError("quotient: subgroup is not normal");
  const std::uint64_t index = order() / normal_sub.size();
  if (index > limits_.max_internal_degree)
    throw CapExceededError("quotient degree " + std::to_string(index) +
                           " exceeds the internal cap");
  // Right cosets Ng, labelled in order of their least element.
  std::vector<std::int32_t> coset_of(elements_.size(), -1);
  std::vector<ElementIndex> reps;
  for (ElementIndex g = 0; g < elements_.size(); ++g) {
    if (coset_of[g] >= 0) continue;
    std::int32_t id = static_cast<std::int32_t>(reps.size());
    reps.push_back(g);
    for (ElementIndex n : normal_sub) coset_of[mul(n, g)] = id;
  }
  std::vector<Permutation> gens;
  for (ElementIndex g : generator_indices_) {
    std::vector<std::uint16_t> img(reps.size());
    for (std::size_t c = 0; c < reps.size(); ++c)
      img[c] = static_cast<std::uint16_t>(coset_of[mul(reps[c], g)]);
    gens.emplace_back(std::move(img));
  }
  return PermGroup::generate(std::move(gens), limits_);
}

// ------------------------------------------------------------- pi-subgroups

namespace {

struct SubgroupPool {
  const PermGroup& G;
  std::uint64_t budget;
  // key -> id (dedup); subgroups stored with generator hints and class ids
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> by_hash;
  std::vector<std::vector<ElementIndex>> sets;
  std::vector<std::vector<ElementIndex>> gens;
  std::vector<std::int32_t> class_of;
  std::int32_t next_class = 0;

  explicit SubgroupPool(const PermGroup& g, std::uint64_t max_subgroups)
      : G(g), budget(max_subgroups) {}

  std::int64_t find(const std::vector<ElementIndex>& set) const {
    auto it = by_hash.find(hash_indices(set));
    if (it == by_hash.end()) return -1;
    for (std::size_t i : it->second)
      if (sets[i] == set) return static_cast<std::int64_t>(i);
    return -1;
  }

  // Adds the subgroup and its whole conjugation orbit as one class.
  // Returns the id of the representative, or -1 if already present.
  std::int64_t add_class(std::vector<ElementIndex> set,
                         std::vector<ElementIndex> generators) {
    if (find(set) >= 0) return -1;
    std::int32_t cls = next_class++;
    std::size_t rep = add_one(set, generators, cls);
    std::vector<std::size_t> orbit = {rep};
    std::size_t head = 0;
    while (head < orbit.size()) {
      const std::vector<ElementIndex> current = sets[orbit[head++]];
      for (ElementIndex g : G.generator_indices()) {
        std::vector<ElementIndex> image = G.conjugate_subgroup(current, g);
        if (find(image) < 0) {
          std::vector<ElementIndex> image_gens;
          // Conjugates of generators generate the conjugate.
          image_gens.reserve(generators.size());
          for (ElementIndex x : generators) image_gens.push_back(G.conj(x, g));
          orbit.push_back(add_one(std::move(image), std::move(image_gens), cls));
        }
      }
    }
    return static_cast<std::int64_t>(rep);
  }

  std::size_t add_one(std::vector<ElementIndex> set,
                      std::vector<ElementIndex> generators, std::int32_t cls) {
    if (sets.size() >= budget)
      throw CapExceededError("pi-subgroup count exceeds the cap");
    by_hash[hash_indices(set)].push_back(sets.size());
    sets.push_back(std::move(set));
    gens.push_back(std::move(generators));
    class_of.push_back(cls);
    return sets.size() - 1;
  }
};

}  // namespace

std::uint64_t pi_part_of_order(const PermGroup& G, const PrimeSet& pi) {
  std::uint64_t part = 1;
  for (auto [p, e] : factor_u64(G.order()))
    if (pi.contains(Natural(p)))
      for (std::uint32_t i = 0; i < e; ++i) part *= p;
  return part;
}

std::vector<SubgroupRecord> pi_subgroups(const PermGroup& G,
                                         const PrimeSet& pi) {
  const std::uint64_t bound = pi_part_of_order(G, pi);
  SubgroupPool pool(G, G.limits().max_subgroups);

  // Trivial subgroup, then one cyclic subgroup per pi-element (dedicated
  // generator recorded per distinct cyclic subgroup).
  pool.add_class({G.identity()}, {});
  std::vector<ElementIndex> cyclic_gens;
  {
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> seen_sets;
    std::vector<std::vector<ElementIndex>> cyc_sets;
    for (ElementIndex x = 0; x < G.order(); ++x) {
      if (x == G.identity() || !pi_smooth(G.element_order(x), pi)) continue;
      // Powers of x, collected without building a multiplication column.
      std::vector<ElementIndex> cyc = {G.identity()};
      for (ElementIndex cur = x; cur != G.identity();
           cur = G.index_of(G.element(cur).then(G.element(x))))
        cyc.push_back(cur);
      std::sort(cyc.begin(), cyc.end());
      std::uint64_t h = hash_indices(cyc);
      bool fresh = true;
      for (std::size_t i : seen_sets[h])
        if (cyc_sets[i] == cyc) {
          fresh = false;
          break;
        }
      if (!fresh) continue;
      seen_sets[h].push_back(cyc_sets.size());
      cyc_sets.push_back(cyc);
      cyclic_gens.push_back(x);
      pool.add_class(std::move(cyc), {x});
    }
  }

  // Worklist of class representatives; join each with every cyclic generator.
  std::deque<std::size_t> work;
  {
    std::vector<bool> pushed_class(pool.next_class, false);
    for (std::size_t i = 0; i < pool.sets.size(); ++i) {
      std::int32_t c = pool.class_of[i];
      if (!pushed_class[c]) {
        pushed_class[c] = true;
        work.push_back(i);
      }
    }
  }
  while (!work.empty()) {
    std::size_t h = work.front();
    work.pop_front();
    const std::vector<ElementIndex> base = pool.sets[h];
    const std::vector<ElementIndex> base_gens = pool.gens[h];
    for (ElementIndex g : cyclic_gens) {
      if (std::binary_search(base.begin(), base.end(), g)) continue;
      std::vector<ElementIndex> joined_gens = base_gens;
      joined_gens.push_back(g);
      std::vector<ElementIndex> K = G.closure(joined_gens, bound + 1);
      if (K.empty() || K.size() > bound) continue;  // blew the pi-part bound
      if (!pi_smooth(K.size(), pi)) continue;
      std::int64_t rep = pool.add_class(std::move(K), std::move(joined_gens));
      if (rep >= 0) work.push_back(static_cast<std::size_t>(rep));
    }
  }

  // Deterministic listing: sort by (order, elements); remap class ids by
  // first appearance.
  std::vector<std::size_t> perm(pool.sets.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (pool.sets[a].size() != pool.sets[b].size())
      return pool.sets[a].size() < pool.sets[b].size();
    return pool.sets[a] < pool.sets[b];
  });
  std::vector<std::int32_t> remap(pool.next_class, -1);
  std::int32_t next_id = 0;
  std::vector<SubgroupRecord> out;
  out.reserve(perm.size());
  for (std::size_t i : perm) {
    std::int32_t& mapped = remap[pool.class_of[i]];
    if (mapped < 0) mapped = next_id++;
    SubgroupRecord rec;
    rec.elements = pool.sets[i];
    rec.order = rec.elements.size();
    rec.is_pi_group = true;
    rec.class_id = mapped;
    out.push_back(std::move(rec));
  }
  return out;
}

namespace {

std::vector<ElementIndex> whole_group(const PermGroup& G) {
  std::vector<ElementIndex> all(G.order());
  std::iota(all.begin(), all.end(), 0);
  return all;
}

}  // namespace

std::vector<MaximalClass> pi_maximal_classes(const PermGroup& G,
                                             const PrimeSet& pi) {
  if (pi_smooth(G.order(), pi)) {
    // G itself is a pi-group: it is the unique pi-maximal subgroup.
    MaximalClass cls;
    cls.order = G.order();
    cls.members.push_back(whole_group(G));
    return {cls};
  }
  std::vector<SubgroupRecord> subs = pi_subgroups(G, pi);
  std::vector<bool> maximal(subs.size(), true);
  // subs is sorted by ascending order; scan supergroups from the top.
  std::vector<bool> mask(G.order(), false);
  for (std::size_t k = subs.size(); k-- > 0;) {
    const auto& big = subs[k];
    bool any_smaller = false;
    for (std::size_t h = 0; h < k; ++h)
      if (subs[h].order < big.order && big.order % subs[h].order == 0)
        any_smaller = true;
    if (!any_smaller) continue;
    for (ElementIndex x : big.elements) mask[x] = true;
    for (std::size_t h = 0; h < k; ++h) {
      if (!maximal[h] || subs[h].order >= big.order ||
          big.order % subs[h].order != 0)
        continue;
      bool inside = true;
      for (ElementIndex x : subs[h].elements)
        if (!mask[x]) {
          inside = false;
          break;
        }
      if (inside) maximal[h] = false;
    }
    for (ElementIndex x : big.elements) mask[x] = false;
  }
  std::map<std::int32_t, MaximalClass> classes;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (!maximal[i]) continue;
    auto& cls = classes[subs[i].class_id];
    cls.order = subs[i].order;
    cls.members.push_back(subs[i].elements);
  }
  std::vector<MaximalClass> out;
  for (auto& [id, cls] : classes) out.push_back(std::move(cls));
  std::sort(out.begin(), out.end(), [](const MaximalClass& a, const MaximalClass& b) {
    if (a.order != b.order) return a.order > b.order;
    return a.members.front() < b.members.front();
  });
  return out;
}

bool is_dpi(const PermGroup& G, const PrimeSet& pi) {
  return pi_maximal_classes(G, pi).size() == 1;
}

bool hall_exists(const PermGroup& G, const PrimeSet& pi) {
  const std::uint64_t bound = pi_part_of_order(G, pi);
  if (pi_smooth(G.order(), pi)) return true;
  std::vector<SubgroupRecord> subs = pi_subgroups(G, pi);
  for (const auto& rec : subs)
    if (rec.order == bound) return true;
  return false;
}

// --------------------------------------------------------- composition series

namespace {

groups::SimpleGroupId identify_simple(const PermGroup& F) {
  const std::uint64_t n = F.order();
  auto fz = factor_u64(n);
  if (fz.size() == 1 && fz[0].second == 1)
    return groups::Cyclic{Natural(n)};
  std::vector<groups::SimpleGroupId> candidates;
  for (const auto& id : groups::simple_ids_with_order_at_most(n))
    if (groups::order(id) == n) candidates.push_back(id);
  if (candidates.empty())
    throw UnrecognizedSimpleGroupError(
        "no simple group of order " + std::to_string(n) + " is known here");
  if (candidates.size() == 1) return candidates.front();
  // Order collision: {Alt(8), PSL3(4)}, told apart by element orders
  // (Alt(8) has elements of order 15, PSL3(4) tops out at 7).
  std::uint64_t max_elt_order = 1;
  for (ElementIndex i = 0; i < F.order(); ++i)
    max_elt_order = std::max(max_elt_order, F.element_order(i));
  for (const auto& id : candidates) {
    bool is_alt8 = std::holds_alternative<groups::Alternating>(id);
    if ((max_elt_order == 15) == is_alt8) return id;
  }
  throw UnrecognizedSimpleGroupError("ambiguous simple group of order " +
                                     std::to_string(n));
}

// Normal closures of single conjugacy classes; every minimal normal subgroup
// appears among them.
std::vector<std::vector<ElementIndex>> class_closures(const PermGroup& G) {
  std::vector<std::vector<ElementIndex>> out;
  std::vector<bool> covered(G.order(), false);
  for (ElementIndex x = 0; x < G.order(); ++x) {
    if (x == G.identity() || covered[x]) continue;
    for (ElementIndex y : G.conjugacy_class(x)) covered[y] = true;
    out.push_back(G.normal_closure_of_class(x));
  }
  return out;
}

void factors_recursive(const PermGroup& G,
                       std::vector<groups::SimpleGroupId>& out,
                       std::mt19937_64* rng) {
  if (G.order() == 1) return;
  std::vector<std::vector<ElementIndex>> closures = class_closures(G);
  std::vector<std::vector<ElementIndex>> proper;
  for (auto& c : closures)
    if (c.size() < G.order()) proper.push_back(std::move(c));
  if (proper.empty()) {
    out.push_back(identify_simple(G));
    return;
  }
  const std::vector<ElementIndex>* pick = nullptr;
  if (rng) {
    pick = &proper[(*rng)() % proper.size()];
  } else {
    // The least-order closure is a minimal normal subgroup.
    pick = &proper.front();
    for (const auto& c : proper)
      if (c.size() < pick->size() || (c.size() == pick->size() && c < *pick))
        pick = &c;
  }
  PermGroup N = G.subgroup_group(*pick);
  PermGroup Q = G.quotient(*pick);
  factors_recursive(N, out, rng);
  factors_recursive(Q, out, rng);
}

}  // namespace

std::vector<groups::SimpleGroupId> composition_factors(const PermGroup& G) {
  std::vector<groups::SimpleGroupId> out;
  factors_recursive(G, out, nullptr);
  std::sort(out.begin(), out.end(), groups::id_less);
  return out;
}

std::vector<groups::SimpleGroupId> composition_factors_randomized(
    const PermGroup& G, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<groups::SimpleGroupId> out;
  factors_recursive(G, out, &rng);
  std::sort(out.begin(), out.end(), groups::id_less);
  return out;
}

// ----------------------------------------------------------------- file input

std::vector<Permutation> parse_generators(std::istream& in,
                                          const OracleLimits& limits) {
  std::vector<std::string> lines;
  std::uint32_t degree = 0;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    auto e = line.find_last_not_of(" \t\r");
    line = line.substr(b, e - b + 1);
    lines.push_back(line);
    std::uint32_t point = 0;
    for (char c : line) {
      if (std::isdigit(static_cast<unsigned char>(c))) {
        point = point * 10 + (c - '0');
        degree = std::max(degree, point);
      } else {
        point = 0;
      }
    }
  }
  if (lines.empty()) throw InvalidInputError("generator file has no permutations");
  if (degree == 0) degree = 1;
  if (degree > limits.max_input_degree)
    throw InvalidInputError("generator degree " + std::to_string(degree) +
                            " exceeds the input cap of " +
                            std::to_string(limits.max_input_degree));
  std::vector<Permutation> gens;
  gens.reserve(lines.size());
  for (const auto& l : lines) gens.push_back(Permutation::parse_cycles(l, degree));
  return gens;
}

std::vector<Permutation> load_generators(const std::string& path,
                                         const OracleLimits& limits) {
  std::ifstream in(path);
  if (!in) throw InvalidInputError("cannot open generator file: " + path);
  return parse_generators(in, limits);
}

}  // namespace hallverdict::oracle
