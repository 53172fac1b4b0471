#pragma once

// Finite groups as dense multiplication tables, with subgroups,
// homomorphisms, direct and semidirect products, sections and minimal
// generating sets.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "surfep/error.hpp"

namespace surfep {

using Elem = std::uint32_t;
using Table = std::vector<std::vector<Elem>>;

// Construction-time checks. Groups up to `full_check_limit` elements get
// exhaustive associativity (and homomorphism) checks; larger ones get
// `sample_factor * order^2` random triples (pairs for homomorphisms).
struct ValidationOptions {
  std::size_t full_check_limit = 512;
  std::size_t sample_factor = 10;
  std::uint64_t seed = 0x5eed;
};

class FiniteGroup {
 public:
  FiniteGroup();  // trivial group

  static FiniteGroup from_table(const Table& mul, std::optional<Elem> identity_hint = {},
                                const ValidationOptions& opts = {});
  // Closure of the given permutations (one-line image notation) under
  // composition. Element 0 is the identity permutation; the rest are
  // numbered in order of first discovery. (p*q)(i) = q(p(i)), i.e. p first.
  static FiniteGroup from_permutations(const std::vector<std::vector<Elem>>& gens);

  std::size_t order() const noexcept { return d_->order; }
  Elem identity() const noexcept { return d_->identity; }
  Elem mul(Elem a, Elem b) const { return d_->mul[std::size_t(a) * d_->order + b]; }
  Elem inv(Elem a) const { return d_->inv[a]; }
  Elem pow(Elem a, std::int64_t e) const;
  // [a,b] = a^-1 b^-1 a b
  Elem comm(Elem a, Elem b) const;
  // a^c = c^-1 a c
  Elem conj(Elem a, Elem c) const;
  std::size_t element_order(Elem a) const;
  bool is_abelian() const;
  bool contains(std::int64_t a) const noexcept { return a >= 0 && std::size_t(a) < order(); }

  Table table() const;
  const std::vector<std::string>& labels() const noexcept { return d_->labels; }
  FiniteGroup with_labels(std::vector<std::string> labels) const;
  std::string label(Elem a) const;

  // Structural equality: same order, identity and table.
  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b);

 private:
  struct Data {
    std::size_t order = 1;
    Elem identity = 0;
    std::vector<Elem> mul{0};
    std::vector<Elem> inv{0};
    std::vector<std::string> labels;
  };
  explicit FiniteGroup(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

class SubgroupHandle {
 public:
  // Members must be sorted, contain the identity and be closed; checked.
  SubgroupHandle(FiniteGroup parent, std::vector<Elem> members);

  static SubgroupHandle whole(const FiniteGroup& g);
  static SubgroupHandle trivial(const FiniteGroup& g);

  const FiniteGroup& parent() const noexcept { return parent_; }
  const std::vector<Elem>& members() const noexcept { return members_; }
  std::size_t order() const noexcept { return members_.size(); }
  bool contains(Elem a) const;
  bool is_trivial() const noexcept { return members_.size() == 1; }
  bool is_whole() const noexcept { return members_.size() == parent_.order(); }
  bool is_normal() const;
  bool is_subset_of(const SubgroupHandle& other) const;

  friend bool operator==(const SubgroupHandle& a, const SubgroupHandle& b) {
    return a.members_ == b.members_ && a.parent_ == b.parent_;
  }

 private:
  FiniteGroup parent_;
  std::vector<Elem> members_;
};

class GroupHom {
 public:
  GroupHom(FiniteGroup domain, FiniteGroup codomain, std::vector<Elem> map,
           const ValidationOptions& opts = {});

  static GroupHom identity(const FiniteGroup& g);

  const FiniteGroup& domain() const noexcept { return domain_; }
  const FiniteGroup& codomain() const noexcept { return codomain_; }
  const std::vector<Elem>& map() const noexcept { return map_; }
  Elem operator()(Elem a) const { return map_[a]; }

 private:
  FiniteGroup domain_;
  FiniteGroup codomain_;
  std::vector<Elem> map_;
};

// outer ∘ inner: apply `inner` first.
GroupHom compose(const GroupHom& outer, const GroupHom& inner);

// Left action of H on K by automorphisms: perms[h][k] = h . k
class ActionSpec {
 public:
  ActionSpec(FiniteGroup acting, FiniteGroup acted, std::vector<std::vector<Elem>> perms);

  static ActionSpec trivial(const FiniteGroup& acting, const FiniteGroup& acted);

  const FiniteGroup& acting() const noexcept { return acting_; }
  const FiniteGroup& acted() const noexcept { return acted_; }
  const std::vector<std::vector<Elem>>& perms() const noexcept { return perms_; }
  Elem apply(Elem h, Elem k) const { return perms_[h][k]; }

 private:
  FiniteGroup acting_;
  FiniteGroup acted_;
  std::vector<std::vector<Elem>> perms_;
};

struct DirectProduct {
  FiniteGroup group;
  GroupHom proj1;
  GroupHom proj2;
  std::size_t right_order;
  // (a,b) lives at index a*|G2| + b
  Elem pair(Elem a, Elem b) const { return Elem(a * right_order + b); }
};

DirectProduct direct_product(const FiniteGroup& g1, const FiniteGroup& g2);

struct SemidirectProduct {
  FiniteGroup group;
  GroupHom alpha;    // A -> H, (k,h) |-> h
  GroupHom gamma;    // H -> A, h |-> (1,h)
  GroupHom embed_k;  // K -> A, k |-> (k,1)
  std::size_t h_order;
  // (k,h) lives at index k*|H| + h
  Elem pair(Elem k, Elem h) const { return Elem(k * h_order + h); }
  Elem k_part(Elem a) const { return Elem(a / h_order); }
  Elem h_part(Elem a) const { return Elem(a % h_order); }
};

// (k,h)(k',h') = (k . h(k'), hh')
SemidirectProduct semidirect_product(const FiniteGroup& k, const FiniteGroup& h,
                                     const ActionSpec& action);

SubgroupHandle subgroup_closure(const FiniteGroup& g, std::span<const Elem> seeds);
SubgroupHandle kernel(const GroupHom& hom);
SubgroupHandle image(const GroupHom& hom);

// Lexicographically first section of a surjection (gamma(0), gamma(1), ...).
GroupHom find_section(const GroupHom& alpha);

struct GeneratorCount {
  std::size_t count = 0;
  std::vector<Elem> witness;  // ascending; closes to the subgroup
};

GeneratorCount minimal_generator_count(const SubgroupHandle& s);

// A subgroup re-indexed as a group in its own right, with the inclusion map.
// Member i of the handle becomes element i.
struct InducedGroup {
  FiniteGroup group;
  GroupHom inclusion;
};

InducedGroup induced_group(const SubgroupHandle& s);

// Small groups used throughout the tests and the instance generator.
namespace catalog {
FiniteGroup trivial();
FiniteGroup cyclic(std::size_t n);
FiniteGroup klein_four();
FiniteGroup symmetric3();
FiniteGroup dihedral(std::size_t n);  // order 2n
FiniteGroup quaternion8();
// Names: "C1".."Cn", "V4", "S3", "D4", "Q8".
FiniteGroup by_name(const std::string& name);
std::vector<std::string> names();  // the nine-group test catalog
}  // namespace catalog

// All automorphisms of G as permutations of its indices, identity first,
// then ascending lexicographically. Brute force; meant for |G| <= 8.
std::vector<std::vector<Elem>> automorphisms(const FiniteGroup& g);

}  // namespace surfep
