#include "charcorr/chartab.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "charcorr/detail/fq_linalg.hpp"
#include "charcorr/errors.hpp"

namespace charcorr {

// --- ClassFunction -------------------------------------------------------------

ClassFunction::ClassFunction(ClassesPtr classes, std::vector<Cyc> values)
    : classes_(std::move(classes)), values_(std::move(values)) {
  if (values_.size() != classes_->count())
    throw InputError("class function length does not match class count");
}

ClassFunction ClassFunction::trivial(ClassesPtr classes) {
  const auto r = classes->count();
  return {std::move(classes), std::vector<Cyc>(r, Cyc(1))};
}

ClassFunction ClassFunction::regular(ClassesPtr classes) {
  std::vector<Cyc> v(classes->count(), Cyc(0));
  v[0] = Cyc(static_cast<long>(classes->group().order()));
  return {std::move(classes), std::move(v)};
}

bool ClassFunction::same_group(const ClassFunction& o) const {
  return classes_ == o.classes_ || classes_->group() == o.classes_->group();
}

namespace {
void require_same(const ClassFunction& a, const ClassFunction& b) {
  if (!a.same_group(b)) throw InputError("class functions belong to different groups");
}
}  // namespace

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
  require_same(*this, o);
  for (std::size_t k = 0; k < values_.size(); ++k) values_[k] += o.values_[k];
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& o) {
  require_same(*this, o);
  for (std::size_t k = 0; k < values_.size(); ++k) values_[k] -= o.values_[k];
  return *this;
}

ClassFunction& ClassFunction::operator*=(const ClassFunction& o) {
  require_same(*this, o);
  for (std::size_t k = 0; k < values_.size(); ++k) values_[k] *= o.values_[k];
  return *this;
}

ClassFunction ClassFunction::scaled(const Rat& r) const {
  ClassFunction out = *this;
  for (auto& v : out.values_) v = v.scaled(r);
  return out;
}

ClassFunction ClassFunction::galois(long k) const {
  ClassFunction out = *this;
  for (auto& v : out.values_) v = v.galois(k);
  return out;
}

bool operator==(const ClassFunction& a, const ClassFunction& b) {
  return a.same_group(b) && a.values_ == b.values_;
}

// --- CharacterTable --------------------------------------------------------------

std::optional<std::size_t> CharacterTable::find(const ClassFunction& f) const {
  for (std::size_t i = 0; i < irr.size(); ++i)
    if (irr[i] == f) return i;
  return std::nullopt;
}

std::vector<std::size_t> CharacterTable::linear() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < degrees.size(); ++i)
    if (degrees[i] == 1) out.push_back(i);
  return out;
}

namespace {

using detail::FqMat;
using detail::FqVec;

// (M_j)[k][l] = #{x in C_j : x^-1 g_l in C_k}, reduced mod q.
FqMat class_matrix(const ConjClasses& cls, std::size_t j, const Fq& f) {
  const PermGroup& par = cls.group().parent();
  const std::size_t r = cls.count();
  std::vector<std::vector<std::uint64_t>> counts(r, std::vector<std::uint64_t>(r, 0));
  for (std::size_t l = 0; l < r; ++l) {
    const Elem gl = cls.rep(l);
    for (Elem x : cls.members(j)) ++counts[cls.class_of(par.mul(par.inv(x), gl))][l];
  }
  FqMat m(r, FqVec(r));
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t l = 0; l < r; ++l) m[k][l] = counts[k][l] % f.modulus();
  return m;
}

struct Space {
  FqMat basis;  // rref rows
  std::vector<std::size_t> pivots;
};

// Splits `w` into eigenspaces of m (acting on column vectors).
std::vector<Space> split(const Space& w, const FqMat& m, const Fq& f) {
  const std::size_t d = w.basis.size();
  const std::size_t r = m.size();
  std::vector<FqVec> images(d, FqVec(r, 0));
  for (std::size_t t = 0; t < d; ++t)
    for (std::size_t k = 0; k < r; ++k) {
      std::uint64_t acc = 0;
      for (std::size_t l = 0; l < r; ++l)
        if (m[k][l] != 0 && w.basis[t][l] != 0) acc = f.add(acc, f.mul(m[k][l], w.basis[t][l]));
      images[t][k] = acc;
    }
  // restricted matrix in coordinates given by the pivot columns
  FqMat a(d, FqVec(d));
  for (std::size_t s = 0; s < d; ++s)
    for (std::size_t t = 0; t < d; ++t) a[s][t] = images[t][w.pivots[s]];

  const FqVec cp = detail::charpoly(f, a);
  std::vector<std::uint64_t> roots;
  for (std::uint64_t x = 0; x < f.modulus(); ++x)
    if (detail::poly_eval(f, cp, x) == 0) roots.push_back(x);
  if (roots.size() == 1) return {w};

  std::vector<Space> out;
  std::size_t total = 0;
  for (auto lambda : roots) {
    FqMat shifted = a;
    for (std::size_t s = 0; s < d; ++s) shifted[s][s] = f.sub(shifted[s][s], lambda);
    const FqMat null = detail::nullspace(f, shifted);
    Space piece;
    for (const auto& c : null) {
      FqVec v(r, 0);
      for (std::size_t t = 0; t < d; ++t)
        if (c[t] != 0)
          for (std::size_t k = 0; k < r; ++k) v[k] = f.add(v[k], f.mul(c[t], w.basis[t][k]));
      piece.basis.push_back(std::move(v));
    }
    piece.pivots = detail::rref(f, piece.basis);
    total += piece.basis.size();
    out.push_back(std::move(piece));
  }
  if (total != d)
    throw std::logic_error("character table: class matrix not diagonalizable over F_" +
                           std::to_string(f.modulus()));
  return out;
}

// Lexicographic comparison of already-reduced Cyc values.
int compare_reduced(const Cyc& a, const Cyc& b) {
  if (a.conductor() != b.conductor()) return a.conductor() < b.conductor() ? -1 : 1;
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    const int c = cmp(a.coeffs()[i], b.coeffs()[i]);
    if (c != 0) return c;
  }
  return 0;
}

}  // namespace

TablePtr character_table(ClassesPtr classes) {
  const ConjClasses& cls = *classes;
  const Subgroup& g = cls.group();
  const PermGroup& par = g.parent();
  const std::size_t r = cls.count();
  const std::uint64_t order = g.order();
  std::uint64_t exponent = 1;
  for (std::size_t k = 0; k < r; ++k) exponent = lcm_u64(exponent, cls.rep_order(k));
  const std::uint64_t q = dixon_prime(exponent, order);
  const Fq f(q);

  // common eigenspaces of the class matrices, split in class order
  Space start;
  start.basis.assign(r, FqVec(r, 0));
  for (std::size_t i = 0; i < r; ++i) start.basis[i][i] = 1;
  start.pivots.resize(r);
  std::iota(start.pivots.begin(), start.pivots.end(), 0);
  std::vector<Space> spaces{start};
  for (std::size_t j = 1; j < r; ++j) {
    if (std::all_of(spaces.begin(), spaces.end(), [](const Space& s) { return s.basis.size() == 1; }))
      break;
    const FqMat m = class_matrix(cls, j, f);
    std::vector<Space> next;
    for (const auto& s : spaces) {
      if (s.basis.size() == 1) {
        next.push_back(s);
        continue;
      }
      auto parts = split(s, m, f);
      for (auto& p : parts) next.push_back(std::move(p));
    }
    spaces = std::move(next);
  }
  if (spaces.size() != r)
    throw std::logic_error("character table: eigenspace splitting did not reach dimension one");

  // power maps for the value lift
  std::vector<std::vector<std::size_t>> powers(r);
  for (std::size_t k = 0; k < r; ++k) {
    const auto m = cls.rep_order(k);
    for (std::uint32_t j = 0; j < m; ++j) powers[k].push_back(cls.power_class(k, j));
  }

  struct Row {
    long degree;
    std::vector<Cyc> values;
  };
  std::vector<Row> rows;
  for (const auto& s : spaces) {
    FqVec w = s.basis[0];
    if (w[0] == 0) throw std::logic_error("character table: eigenvector vanishes at identity");
    const auto norm = f.inv(w[0]);
    for (auto& x : w) x = f.mul(x, norm);
    std::uint64_t sum = 0;
    for (std::size_t k = 0; k < r; ++k)
      sum = f.add(sum, f.mul(f.mul(w[k], w[cls.inverse_class(k)]), f.inv(cls.size(k) % q)));
    const auto d2 = f.mul(order % q, f.inv(sum));
    long degree = 0;
    for (std::uint64_t d = 1; d * d <= order; ++d)
      if (f.mul(d, d) == d2) {
        degree = static_cast<long>(d);
        break;
      }
    if (degree == 0) throw std::logic_error("character table: no admissible degree");
    FqVec eta(r);
    for (std::size_t k = 0; k < r; ++k)
      eta[k] = f.mul(f.mul(static_cast<std::uint64_t>(degree), w[k]), f.inv(cls.size(k) % q));

    Row row{degree, {}};
    for (std::size_t k = 0; k < r; ++k) {
      const std::uint32_t m = cls.rep_order(k);
      const auto omega = f.root_of_unity(m);
      const auto omega_inv = f.inv(omega);
      const auto m_inv = f.inv(m % q);
      std::vector<long> mult(m);
      for (std::uint32_t t = 0; t < m; ++t) {
        std::uint64_t acc = 0;
        const auto step = f.pow(omega_inv, t);  // omega^-t
        std::uint64_t z = 1;                     // omega^-jt
        for (std::uint32_t j = 0; j < m; ++j) {
          acc = f.add(acc, f.mul(eta[powers[k][j]], z));
          z = f.mul(z, step);
        }
        acc = f.mul(acc, m_inv);
        if (acc > static_cast<std::uint64_t>(degree))
          throw std::logic_error("character table: eigenvalue multiplicity out of range");
        mult[t] = static_cast<long>(acc);
      }
      row.values.push_back(Cyc::from_powers(m, mult).reduced());
    }
    rows.push_back(std::move(row));
  }

  auto is_trivial = [](const Row& row) {
    return std::all_of(row.values.begin(), row.values.end(), [](const Cyc& v) { return v == Cyc(1); });
  };
  std::sort(rows.begin(), rows.end(), [&](const Row& a, const Row& b) {
    const bool ta = is_trivial(a), tb = is_trivial(b);
    if (ta != tb) return ta;
    if (a.degree != b.degree) return a.degree < b.degree;
    for (std::size_t k = 0; k < a.values.size(); ++k) {
      const int c = compare_reduced(a.values[k], b.values[k]);
      if (c != 0) return c < 0;
    }
    return false;
  });

  auto table = std::make_shared<CharacterTable>();
  table->classes = classes;
  table->prime = q;
  std::uint64_t sum_sq = 0;
  for (auto& row : rows) {
    sum_sq += static_cast<std::uint64_t>(row.degree * row.degree);
    table->degrees.push_back(row.degree);
    table->irr.emplace_back(classes, std::move(row.values));
  }
  if (sum_sq != order) throw std::logic_error("character table: sum of squared degrees != |G|");
  (void)par;
  return table;
}

// --- class-function operations ----------------------------------------------------

FusionMap fusion(ClassesPtr sub, ClassesPtr parent) {
  if (!sub->group().is_subgroup_of(parent->group()))
    throw InputError("fusion: not a subgroup of the given group");
  FusionMap out{sub, parent, {}};
  for (std::size_t c = 0; c < sub->count(); ++c) out.map.push_back(parent->class_of(sub->rep(c)));
  return out;
}

Cyc inner_product(const ClassFunction& a, const ClassFunction& b) {
  require_same(a, b);
  const auto& cls = a.classes();
  Cyc acc(0);
  for (std::size_t k = 0; k < cls.count(); ++k) {
    if (a[k].is_zero() || b[k].is_zero()) continue;
    acc += (a[k] * b[k].conj()).scaled(Rat(static_cast<long>(cls.size(k))));
  }
  return acc.scaled(make_rat(1, static_cast<long>(cls.group().order())));
}

namespace {
void require_fusion_parent(const ClassFunction& chi, const FusionMap& f) {
  if (chi.classes_ptr() != f.parent && !(chi.group() == f.parent->group()))
    throw InputError("restriction: character does not live on the fusion's parent group");
}
void require_fusion_sub(const ClassFunction& theta, const FusionMap& f) {
  if (theta.classes_ptr() != f.sub && !(theta.group() == f.sub->group()))
    throw InputError("induction: character does not live on the fusion's subgroup");
}
}  // namespace

ClassFunction restrict_to(const ClassFunction& chi, const FusionMap& f) {
  require_fusion_parent(chi, f);
  std::vector<Cyc> v;
  v.reserve(f.map.size());
  for (auto k : f.map) v.push_back(chi[k]);
  return {f.sub, std::move(v)};
}

ClassFunction induce(const ClassFunction& theta, const FusionMap& f) {
  require_fusion_sub(theta, f);
  const auto& pc = *f.parent;
  const auto& sc = *f.sub;
  std::vector<Cyc> sums(pc.count(), Cyc(0));
  for (std::size_t c = 0; c < sc.count(); ++c)
    sums[f.map[c]] += theta[c].scaled(Rat(static_cast<long>(sc.size(c))));
  const long g = static_cast<long>(pc.group().order());
  const long h = static_cast<long>(sc.group().order());
  for (std::size_t k = 0; k < pc.count(); ++k)
    sums[k] = sums[k].scaled(make_rat(g, static_cast<long>(pc.size(k)) * h));
  return {f.parent, std::move(sums)};
}

std::vector<Cyc> decompose(const ClassFunction& f, const CharacterTable& t) {
  std::vector<Cyc> out;
  out.reserve(t.size());
  for (const auto& chi : t.irr) out.push_back(inner_product(f, chi));
  return out;
}

std::vector<Constituent> constituents(const ClassFunction& f, const CharacterTable& t) {
  std::vector<Constituent> out;
  const auto coeffs = decompose(f, t);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const auto r = coeffs[i].as_rational();
    if (!r || r->get_den() != 1 || sgn(*r) < 0)
      throw InputError("not a character: multiplicity of irreducible " + std::to_string(i) + " is " +
                       coeffs[i].str());
    if (sgn(*r) > 0) out.push_back({i, r->get_num().get_si()});
  }
  return out;
}

bool lies_over(const ClassFunction& chi, const FusionMap& normal_fusion, const ClassFunction& theta) {
  return !inner_product(restrict_to(chi, normal_fusion), theta).is_zero();
}

std::vector<std::size_t> constituents_over(const ClassFunction& f, const CharacterTable& table,
                                           const FusionMap& normal_fusion, const ClassFunction& theta) {
  std::vector<std::size_t> out;
  for (const auto& c : constituents(f, table))
    if (lies_over(table[c.index], normal_fusion, theta)) out.push_back(c.index);
  return out;
}

ClassFunction conjugate_character(const ClassFunction& theta, Elem g) {
  const auto& cls = theta.classes();
  const PermGroup& par = cls.group().parent();
  const Elem g_inv = par.inv(g);
  std::vector<Cyc> v;
  v.reserve(cls.count());
  for (std::size_t k = 0; k < cls.count(); ++k) {
    const auto c = cls.class_of(par.conj(cls.rep(k), g_inv));
    if (c == cls.count()) throw InputError("conjugate_character: element does not normalize the group");
    v.push_back(theta[c]);
  }
  return {theta.classes_ptr(), std::move(v)};
}

bool is_invariant(const ClassFunction& theta, const Subgroup& under) {
  return std::all_of(under.generators().begin(), under.generators().end(),
                     [&](Elem s) { return conjugate_character(theta, s) == theta; });
}

OrbitStabilizer orbit_and_stabilizer(const Subgroup& g, const ClassFunction& theta) {
  if (!is_normal(g, theta.group())) throw InputError("orbit_and_stabilizer: subgroup is not normal");
  std::vector<ClassFunction> orbit{theta};
  for (std::size_t i = 0; i < orbit.size(); ++i)
    for (Elem s : g.generators()) {
      auto c = conjugate_character(orbit[i], s);
      if (std::find(orbit.begin(), orbit.end(), c) == orbit.end()) orbit.push_back(std::move(c));
    }
  std::vector<Elem> stab;
  for (Elem x : g.elements())
    if (conjugate_character(theta, x) == theta) stab.push_back(x);
  Subgroup s(g.parent_ptr(), std::move(stab));
  if (s.order() * orbit.size() != g.order()) throw std::logic_error("orbit-stabilizer count mismatch");
  return {std::move(orbit), std::move(s)};
}

Subgroup inertia_subgroup(const Subgroup& g, const ClassFunction& theta) {
  return orbit_and_stabilizer(g, theta).stabilizer;
}

std::vector<std::size_t> p_prime_irreducibles(const CharacterTable& t, unsigned p) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < t.degrees.size(); ++i)
    if (t.degrees[i] % static_cast<long>(p) != 0) out.push_back(i);
  return out;
}

// --- TableCache -------------------------------------------------------------------

ClassesPtr TableCache::classes(const Subgroup& g) {
  std::promise<ClassesPtr> promise;
  std::shared_future<ClassesPtr> fut;
  bool compute = false;
  {
    std::lock_guard lock(mu_);
    auto k = key(g);
    auto it = classes_.find(k);
    if (it == classes_.end()) {
      fut = promise.get_future().share();
      classes_.emplace(std::move(k), fut);
      compute = true;
    } else {
      fut = it->second;
    }
  }
  if (compute) {
    try {
      promise.set_value(conjugacy_classes(g));
    } catch (...) {
      promise.set_exception(std::current_exception());
    }
  }
  return fut.get();
}

TablePtr TableCache::table(const Subgroup& g) {
  std::promise<TablePtr> promise;
  std::shared_future<TablePtr> fut;
  bool compute = false;
  {
    std::lock_guard lock(mu_);
    auto k = key(g);
    auto it = tables_.find(k);
    if (it == tables_.end()) {
      fut = promise.get_future().share();
      tables_.emplace(std::move(k), fut);
      compute = true;
    } else {
      fut = it->second;
    }
  }
  if (compute) {
    try {
      promise.set_value(character_table(classes(g)));
    } catch (...) {
      promise.set_exception(std::current_exception());
    }
  }
  return fut.get();
}

FusionMap TableCache::fusion(const Subgroup& sub, const Subgroup& parent) {
  return charcorr::fusion(classes(sub), classes(parent));
}

}  // namespace charcorr
