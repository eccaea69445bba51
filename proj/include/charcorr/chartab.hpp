#pragma once

// Exact character tables (Dixon-Schneider) and class-function algebra.

#include <cstdint>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "charcorr/exact.hpp"
#include "charcorr/perm_group.hpp"

namespace charcorr {

/// A Cyc-valued function on the conjugacy classes of a fixed group.
class ClassFunction {
 public:
  ClassFunction(ClassesPtr classes, std::vector<Cyc> values);
  static ClassFunction trivial(ClassesPtr classes);
  static ClassFunction regular(ClassesPtr classes);

  const ClassesPtr& classes_ptr() const { return classes_; }
  const ConjClasses& classes() const { return *classes_; }
  const Subgroup& group() const { return classes_->group(); }
  const std::vector<Cyc>& values() const { return values_; }
  const Cyc& operator[](std::size_t k) const { return values_[k]; }
  std::size_t size() const { return values_.size(); }
  const Cyc& degree() const { return values_[0]; }

  bool same_group(const ClassFunction& o) const;

  ClassFunction& operator+=(const ClassFunction& o);
  ClassFunction& operator-=(const ClassFunction& o);
  /// Pointwise product.
  ClassFunction& operator*=(const ClassFunction& o);
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  friend ClassFunction operator*(ClassFunction a, const ClassFunction& b) { return a *= b; }
  ClassFunction scaled(const Rat& r) const;

  /// Valuewise Galois action zeta -> zeta^k.
  ClassFunction galois(long k) const;
  ClassFunction conj() const { return galois(-1); }

  friend bool operator==(const ClassFunction& a, const ClassFunction& b);

 private:
  ClassesPtr classes_;
  std::vector<Cyc> values_;
};

/// Irr(G): row 0 is the trivial character, then rows by degree and by
/// value sequence.
struct CharacterTable {
  ClassesPtr classes;
  std::vector<ClassFunction> irr;
  std::vector<long> degrees;
  std::uint64_t prime = 0;  // modulus of the modular phase

  const Subgroup& group() const { return classes->group(); }
  std::size_t size() const { return irr.size(); }
  const ClassFunction& operator[](std::size_t i) const { return irr[i]; }
  /// Row index of an irreducible character given by its values.
  std::optional<std::size_t> find(const ClassFunction& f) const;
  std::vector<std::size_t> linear() const;
};

using TablePtr = std::shared_ptr<const CharacterTable>;

TablePtr character_table(ClassesPtr classes);
inline TablePtr character_table(const Subgroup& g) { return character_table(conjugacy_classes(g)); }

/// Class map from a subgroup's classes to a containing group's classes.
struct FusionMap {
  ClassesPtr sub;
  ClassesPtr parent;
  std::vector<std::size_t> map;
};

FusionMap fusion(ClassesPtr sub, ClassesPtr parent);

/// (1/|G|) sum |C| a conj(b).
Cyc inner_product(const ClassFunction& a, const ClassFunction& b);

ClassFunction restrict_to(const ClassFunction& chi, const FusionMap& f);
ClassFunction induce(const ClassFunction& theta, const FusionMap& f);

struct Constituent {
  std::size_t index;
  long multiplicity;
  friend bool operator==(const Constituent&, const Constituent&) = default;
};

/// Inner products with every row of the table.
std::vector<Cyc> decompose(const ClassFunction& f, const CharacterTable& t);
/// Nonzero multiplicities of a character; throws InputError when f is not a
/// nonnegative integer combination of irreducibles.
std::vector<Constituent> constituents(const ClassFunction& f, const CharacterTable& t);

/// Indices of irreducible constituents of `f` (a character of the group of
/// `table`) that lie over theta, an irreducible of the normal subgroup
/// described by `normal_table`.
std::vector<std::size_t> constituents_over(const ClassFunction& f, const CharacterTable& table,
                                           const FusionMap& normal_fusion, const ClassFunction& theta);

bool lies_over(const ClassFunction& chi, const FusionMap& normal_fusion, const ClassFunction& theta);

/// theta^g for theta a class function of N and g normalizing N:
/// theta^g(x) = theta(g x g^-1).
ClassFunction conjugate_character(const ClassFunction& theta, Elem g);
bool is_invariant(const ClassFunction& theta, const Subgroup& under);

struct OrbitStabilizer {
  std::vector<ClassFunction> orbit;
  Subgroup stabilizer;
};

/// Orbit of theta (a class function of a normal subgroup of g) under
/// conjugation, and its inertia group g_theta. Throws InputError when the
/// group of theta is not normal in g.
OrbitStabilizer orbit_and_stabilizer(const Subgroup& g, const ClassFunction& theta);
Subgroup inertia_subgroup(const Subgroup& g, const ClassFunction& theta);

std::vector<std::size_t> p_prime_irreducibles(const CharacterTable& t, unsigned p);

/// Thread-safe memo of classes, tables and fusion maps keyed by subgroup.
class TableCache {
 public:
  ClassesPtr classes(const Subgroup& g);
  TablePtr table(const Subgroup& g);
  FusionMap fusion(const Subgroup& sub, const Subgroup& parent);

 private:
  using Key = std::pair<const PermGroup*, std::vector<Elem>>;
  static Key key(const Subgroup& g) { return {&g.parent(), g.elements()}; }

  std::mutex mu_;
  std::map<Key, std::shared_future<ClassesPtr>> classes_;
  std::map<Key, std::shared_future<TablePtr>> tables_;
};

}  // namespace charcorr
