#pragma once

// Finite permutation groups held by full element enumeration.
//
// Every group that appears in a computation is a Subgroup of one top-level
// PermGroup, addressed by element indices of that top group. This keeps
// subgroup chains, fusion of classes and conjugation actions in a single
// index space.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace charcorr {

using Elem = std::uint32_t;

/// A permutation of {0, ..., degree-1}, acting on the right:
/// x^(gh) = (x^g)^h.
class Perm {
 public:
  Perm() = default;
  /// Throws InputError unless `images` is a bijection.
  explicit Perm(std::vector<std::uint32_t> images);
  static Perm identity(std::size_t degree);
  /// Builds a permutation from disjoint cycles.
  static Perm from_cycles(std::size_t degree, const std::vector<std::vector<std::uint32_t>>& cycles);

  std::size_t degree() const { return images_.size(); }
  std::uint32_t operator[](std::size_t i) const { return images_[i]; }
  const std::vector<std::uint32_t>& images() const { return images_; }

  /// this * o: first this, then o.
  Perm operator*(const Perm& o) const;
  Perm inverse() const;
  bool is_identity() const;
  std::string cycle_string() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

/// name/degree/generators as stored in a group-description file.
struct GroupDescription {
  std::string name;
  std::size_t degree = 0;
  std::vector<std::vector<std::uint32_t>> generators;
};

GroupDescription parse_group_description(std::istream& in);
GroupDescription read_group_file(const std::string& path);
void write_group_description(std::ostream& out, const GroupDescription& desc);

inline constexpr std::size_t kDefaultEnumerationCap = 20000;

/// A fully enumerated permutation group. Element 0 is the identity; the
/// remaining elements are ordered breadth-first from the generators, each
/// BFS layer sorted by image sequence.
class PermGroup {
 public:
  PermGroup(std::string name, std::size_t degree, std::vector<Perm> generators,
            std::size_t cap = kDefaultEnumerationCap);

  const std::string& name() const { return name_; }
  std::size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return generators_; }
  std::size_t order() const { return elements_.size(); }
  const Perm& element(Elem i) const { return elements_[i]; }
  const std::vector<Perm>& elements() const { return elements_; }

  /// Index of a permutation, or order() if it is not in the group.
  Elem index_of(const Perm& p) const;

  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const { return inverse_[a]; }
  /// a^b = b^-1 a b
  Elem conj(Elem a, Elem b) const { return mul(inv(b), mul(a, b)); }
  Elem commutator(Elem a, Elem b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }
  Elem power(Elem a, long k) const;
  std::uint32_t element_order(Elem a) const { return orders_[a]; }
  std::uint64_t exponent() const;

  GroupDescription description() const;

 private:
  std::string name_;
  std::size_t degree_;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;
  std::unordered_map<Perm, Elem, PermHash> index_;
  std::vector<Elem> table_;  // full multiplication table when small enough
  std::vector<Elem> inverse_;
  std::vector<std::uint32_t> orders_;
};

using GroupPtr = std::shared_ptr<const PermGroup>;

GroupPtr load_group(const GroupDescription& desc, std::size_t cap = kDefaultEnumerationCap);

/// A subgroup of a top-level PermGroup. Members are kept sorted by parent
/// index, which is the subgroup's canonical element order.
class Subgroup {
 public:
  /// `members` must be closed under multiplication; sorted internally.
  Subgroup(GroupPtr parent, std::vector<Elem> members);

  static Subgroup whole(GroupPtr parent);
  static Subgroup trivial(GroupPtr parent);
  /// Closure of `gens` inside the parent.
  static Subgroup generated_by(GroupPtr parent, std::span<const Elem> gens);

  const PermGroup& parent() const { return *parent_; }
  const GroupPtr& parent_ptr() const { return parent_; }
  const std::vector<Elem>& elements() const { return members_; }
  std::size_t order() const { return members_.size(); }
  bool contains(Elem e) const { return mask_[e] != 0; }
  /// Greedy generating set: first member not in the closure of earlier picks.
  const std::vector<Elem>& generators() const { return gens_; }

  bool is_subgroup_of(const Subgroup& o) const;
  std::string describe() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }

 private:
  GroupPtr parent_;
  std::vector<Elem> members_;
  std::vector<char> mask_;
  std::vector<Elem> gens_;
};

/// Conjugacy classes of a subgroup. Class 0 is the identity; classes are
/// sorted by (element order, size, smallest member).
class ConjClasses {
 public:
  explicit ConjClasses(Subgroup group);

  const Subgroup& group() const { return group_; }
  std::size_t count() const { return reps_.size(); }
  Elem rep(std::size_t k) const { return reps_[k]; }
  std::size_t size(std::size_t k) const { return members_[k].size(); }
  const std::vector<Elem>& members(std::size_t k) const { return members_[k]; }
  std::uint32_t rep_order(std::size_t k) const { return group_.parent().element_order(reps_[k]); }
  /// Class index of a parent element, or count() when not in the group.
  std::size_t class_of(Elem e) const { return class_of_[e]; }
  /// Class of the inverses of class k.
  std::size_t inverse_class(std::size_t k) const { return inverse_class_[k]; }
  /// Class of rep(k)^j.
  std::size_t power_class(std::size_t k, long j) const;
  std::vector<std::size_t> sizes() const;

 private:
  Subgroup group_;
  std::vector<Elem> reps_;
  std::vector<std::vector<Elem>> members_;
  std::vector<std::size_t> class_of_;
  std::vector<std::size_t> inverse_class_;
};

using ClassesPtr = std::shared_ptr<const ConjClasses>;

ClassesPtr conjugacy_classes(const Subgroup& g);

// --- subgroup computations; all arguments share one parent ------------------

/// p-part of n.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);
bool is_p_power(std::uint64_t n, std::uint64_t p);

Subgroup sylow(const Subgroup& g, unsigned p);
Subgroup normalizer(const Subgroup& g, const Subgroup& h);
Subgroup centralizer(const Subgroup& g, Elem x);
/// C_G(H): elements of G commuting with every element of H.
Subgroup centralizer(const Subgroup& g, const Subgroup& h);
Subgroup derived_subgroup(const Subgroup& g);
/// G = G0 > G1 > ... ending at the first repeat (trivial iff solvable).
std::vector<Subgroup> derived_series(const Subgroup& g);
bool is_solvable(const Subgroup& g);
/// Every chief factor is a p-group or a p'-group.
bool is_p_solvable(const Subgroup& g, unsigned p);
/// Closure of all elements of order coprime to p.
Subgroup o_p_residual(const Subgroup& g, unsigned p);
Subgroup intersection(const Subgroup& a, const Subgroup& b);
/// The set AB; throws InputError if it is not a subgroup.
Subgroup product_subgroup(const Subgroup& a, const Subgroup& b);
Subgroup conjugate(const Subgroup& h, Elem g);
bool is_normal(const Subgroup& g, const Subgroup& n);
/// Smallest normal subgroup of g containing `gens`.
Subgroup normal_closure(const Subgroup& g, std::span<const Elem> gens);
/// All normal subgroups, sorted by (order, members).
std::vector<Subgroup> normal_subgroups(const Subgroup& g);
/// |C_{K/N}(P)|: cosets kN with (kN)^x = kN for every x in P.
/// Requires N normal in K and P normalizing both.
std::size_t fixed_points_on_cosets(const Subgroup& p, const Subgroup& k, const Subgroup& n);

}  // namespace charcorr
