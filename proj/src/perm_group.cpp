#include "charcorr/perm_group.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "charcorr/errors.hpp"
#include "charcorr/exact.hpp"

namespace charcorr {

// --- Perm ------------------------------------------------------------------

Perm::Perm(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (auto x : images_) {
    if (x >= images_.size() || seen[x])
      throw InputError("malformed permutation: images are not a bijection on {0.." +
                       std::to_string(images_.size() == 0 ? 0 : images_.size() - 1) + "}");
    seen[x] = 1;
  }
}

Perm Perm::identity(std::size_t degree) {
  std::vector<std::uint32_t> im(degree);
  std::iota(im.begin(), im.end(), 0U);
  return Perm(std::move(im));
}

Perm Perm::from_cycles(std::size_t degree, const std::vector<std::vector<std::uint32_t>>& cycles) {
  std::vector<std::uint32_t> im(degree);
  std::iota(im.begin(), im.end(), 0U);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= degree) throw InputError("cycle point out of range");
      im[c[i]] = c[(i + 1) % c.size()];
    }
  }
  return Perm(std::move(im));
}

Perm Perm::operator*(const Perm& o) const {
  std::vector<std::uint32_t> im(images_.size());
  for (std::size_t i = 0; i < im.size(); ++i) im[i] = o.images_[images_[i]];
  Perm out;
  out.images_ = std::move(im);
  return out;
}

Perm Perm::inverse() const {
  std::vector<std::uint32_t> im(images_.size());
  for (std::size_t i = 0; i < im.size(); ++i) im[images_[i]] = static_cast<std::uint32_t>(i);
  Perm out;
  out.images_ = std::move(im);
  return out;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::string Perm::cycle_string() const {
  std::string out;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out += '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) out += ',';
      out += std::to_string(j);
      first = false;
      j = images_[j];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (auto x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return h;
}

// --- group files -------------------------------------------------------------

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

GroupDescription parse_group_description(std::istream& in) {
  GroupDescription desc;
  bool have_degree = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos)
      throw InputError("group file line " + std::to_string(lineno) + ": expected 'key: value'");
    const std::string key = trim(line.substr(0, colon));
    const std::string value = trim(line.substr(colon + 1));
    if (key == "name") {
      desc.name = value;
    } else if (key == "degree") {
      std::istringstream ss(value);
      if (!(ss >> desc.degree))
        throw InputError("group file line " + std::to_string(lineno) + ": bad degree");
      have_degree = true;
    } else if (key == "generator") {
      std::istringstream ss(value);
      std::vector<std::uint32_t> im;
      long x = 0;
      while (ss >> x) {
        if (x < 0) throw InputError("group file line " + std::to_string(lineno) + ": negative image");
        im.push_back(static_cast<std::uint32_t>(x));
      }
      if (!ss.eof())
        throw InputError("group file line " + std::to_string(lineno) + ": bad generator images");
      desc.generators.push_back(std::move(im));
    } else {
      throw InputError("group file line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  if (!have_degree) throw InputError("group file: missing degree");
  for (const auto& g : desc.generators)
    if (g.size() != desc.degree)
      throw InputError("group file: generator length does not match degree");
  return desc;
}

GroupDescription read_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open group file '" + path + "'");
  return parse_group_description(in);
}

void write_group_description(std::ostream& out, const GroupDescription& desc) {
  out << "name: " << desc.name << '\n';
  out << "degree: " << desc.degree << '\n';
  for (const auto& g : desc.generators) {
    out << "generator:";
    for (auto x : g) out << ' ' << x;
    out << '\n';
  }
}

// --- PermGroup ---------------------------------------------------------------

namespace {
constexpr std::size_t kTableLimit = 2048;
}

PermGroup::PermGroup(std::string name, std::size_t degree, std::vector<Perm> generators,
                     std::size_t cap)
    : name_(std::move(name)), degree_(degree), generators_(std::move(generators)) {
  if (cap < 1) throw InputError("enumeration cap must be at least 1");
  for (const auto& g : generators_)
    if (g.degree() != degree_) throw InputError("generator degree mismatch");

  const auto too_large = [&] {
    return InputError("group '" + name_ + "' is too large: order exceeds enumeration cap " +
                      std::to_string(cap));
  };
  elements_.push_back(Perm::identity(degree_));
  index_.emplace(elements_[0], 0);
  std::vector<Elem> layer{0};
  while (!layer.empty()) {
    std::vector<Perm> next;
    std::unordered_map<Perm, char, PermHash> pending;
    for (Elem x : layer) {
      for (const auto& g : generators_) {
        Perm y = elements_[x] * g;
        if (index_.count(y) || pending.count(y)) continue;
        pending.emplace(y, 0);
        next.push_back(std::move(y));
        if (elements_.size() + next.size() > cap) throw too_large();
      }
    }
    std::sort(next.begin(), next.end());
    layer.clear();
    for (auto& p : next) {
      const auto idx = static_cast<Elem>(elements_.size());
      index_.emplace(p, idx);
      elements_.push_back(std::move(p));
      layer.push_back(idx);
    }
  }

  const std::size_t n = elements_.size();
  if (n <= kTableLimit) {
    table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        table_[a * n + b] = index_.at(elements_[a] * elements_[b]);
  }
  inverse_.resize(n);
  orders_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    inverse_[a] = index_.at(elements_[a].inverse());
    std::uint64_t ord = 1;
    std::vector<char> seen(degree_, 0);
    for (std::size_t i = 0; i < degree_; ++i) {
      if (seen[i]) continue;
      std::uint64_t len = 0;
      for (std::size_t j = i; !seen[j]; j = elements_[a][j]) {
        seen[j] = 1;
        ++len;
      }
      ord = lcm_u64(ord, len);
    }
    orders_[a] = static_cast<std::uint32_t>(ord);
  }
}

Elem PermGroup::index_of(const Perm& p) const {
  auto it = index_.find(p);
  return it == index_.end() ? static_cast<Elem>(order()) : it->second;
}

Elem PermGroup::mul(Elem a, Elem b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * order() + b];
  return index_.at(elements_[a] * elements_[b]);
}

Elem PermGroup::power(Elem a, long k) const {
  const long ord = orders_[a];
  long e = k % ord;
  if (e < 0) e += ord;
  Elem result = 0;
  Elem base = a;
  while (e != 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::uint64_t PermGroup::exponent() const {
  std::uint64_t e = 1;
  for (auto o : orders_) e = lcm_u64(e, o);
  return e;
}

GroupDescription PermGroup::description() const {
  GroupDescription d;
  d.name = name_;
  d.degree = degree_;
  for (const auto& g : generators_) d.generators.push_back(g.images());
  return d;
}

GroupPtr load_group(const GroupDescription& desc, std::size_t cap) {
  std::vector<Perm> gens;
  gens.reserve(desc.generators.size());
  for (const auto& g : desc.generators) {
    if (g.size() != desc.degree) throw InputError("generator length does not match degree");
    gens.emplace_back(g);
  }
  return std::make_shared<const PermGroup>(desc.name, desc.degree, std::move(gens), cap);
}

// --- Subgroup ----------------------------------------------------------------

namespace {

// Closure of gens inside parent, as an unsorted member list; `mask` is
// filled with the membership.
std::vector<Elem> closure(const PermGroup& parent, std::span<const Elem> gens,
                          std::vector<char>& mask) {
  mask.assign(parent.order(), 0);
  std::vector<Elem> out{0};
  mask[0] = 1;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (Elem g : gens) {
      const Elem y = parent.mul(out[i], g);
      if (!mask[y]) {
        mask[y] = 1;
        out.push_back(y);
      }
    }
  }
  return out;
}

// Greedy generating set of the closure of `candidates`, scanned in order.
std::vector<Elem> greedy_generators(const PermGroup& parent, std::span<const Elem> candidates,
                                    std::vector<char>& mask, std::vector<Elem>& members) {
  std::vector<Elem> gens;
  mask.assign(parent.order(), 0);
  mask[0] = 1;
  members = {0};
  for (Elem c : candidates) {
    if (mask[c]) continue;
    gens.push_back(c);
    members = closure(parent, gens, mask);
  }
  return gens;
}

}  // namespace

Subgroup::Subgroup(GroupPtr parent, std::vector<Elem> members)
    : parent_(std::move(parent)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (members_.empty() || members_.front() != 0)
    throw std::logic_error("subgroup must contain the identity");
  std::vector<Elem> closed;
  gens_ = greedy_generators(*parent_, members_, mask_, closed);
  if (closed.size() != members_.size()) throw std::logic_error("subgroup member set is not closed");
}

Subgroup Subgroup::whole(GroupPtr parent) {
  std::vector<Elem> all(parent->order());
  std::iota(all.begin(), all.end(), 0U);
  return Subgroup(std::move(parent), std::move(all));
}

Subgroup Subgroup::trivial(GroupPtr parent) { return Subgroup(std::move(parent), {0}); }

Subgroup Subgroup::generated_by(GroupPtr parent, std::span<const Elem> gens) {
  std::vector<char> mask;
  auto members = closure(*parent, gens, mask);
  return Subgroup(std::move(parent), std::move(members));
}

bool Subgroup::is_subgroup_of(const Subgroup& o) const {
  if (parent_ != o.parent_) return false;
  return std::all_of(members_.begin(), members_.end(), [&](Elem e) { return o.contains(e); });
}

std::string Subgroup::describe() const {
  std::ostringstream ss;
  ss << "subgroup of order " << order() << " generated by";
  for (Elem g : gens_) ss << ' ' << parent_->element(g).cycle_string();
  return ss.str();
}

// --- ConjClasses ---------------------------------------------------------------

ConjClasses::ConjClasses(Subgroup group) : group_(std::move(group)) {
  const PermGroup& par = group_.parent();
  std::vector<char> seen(par.order(), 0);
  std::vector<std::vector<Elem>> classes;
  for (Elem x : group_.elements()) {
    if (seen[x]) continue;
    std::vector<Elem> orbit{x};
    seen[x] = 1;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (Elem g : group_.generators()) {
        const Elem y = par.conj(orbit[i], g);
        if (!seen[y]) {
          seen[y] = 1;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    classes.push_back(std::move(orbit));
  }
  std::sort(classes.begin(), classes.end(), [&](const auto& a, const auto& b) {
    const auto oa = par.element_order(a.front());
    const auto ob = par.element_order(b.front());
    if (oa != ob) return oa < ob;
    if (a.size() != b.size()) return a.size() < b.size();
    return a.front() < b.front();
  });
  members_ = std::move(classes);
  class_of_.assign(par.order(), members_.size());
  for (std::size_t k = 0; k < members_.size(); ++k) {
    reps_.push_back(members_[k].front());
    for (Elem e : members_[k]) class_of_[e] = k;
  }
  inverse_class_.resize(members_.size());
  for (std::size_t k = 0; k < members_.size(); ++k) inverse_class_[k] = class_of_[par.inv(reps_[k])];
}

std::size_t ConjClasses::power_class(std::size_t k, long j) const {
  return class_of_[group_.parent().power(reps_[k], j)];
}

std::vector<std::size_t> ConjClasses::sizes() const {
  std::vector<std::size_t> out;
  for (const auto& m : members_) out.push_back(m.size());
  return out;
}

ClassesPtr conjugacy_classes(const Subgroup& g) { return std::make_shared<const ConjClasses>(g); }

// --- subgroup computations -------------------------------------------------------

namespace {

void require_same_parent(const Subgroup& a, const Subgroup& b) {
  if (a.parent_ptr() != b.parent_ptr()) throw InputError("subgroups live in different parents");
}

Subgroup closure_of_set(const GroupPtr& parent, std::span<const Elem> candidates) {
  std::vector<char> mask;
  std::vector<Elem> members;
  greedy_generators(*parent, candidates, mask, members);
  return Subgroup(parent, std::move(members));
}

template <typename Pred>
Subgroup filter(const Subgroup& g, Pred pred) {
  std::vector<Elem> out;
  for (Elem x : g.elements())
    if (pred(x)) out.push_back(x);
  return Subgroup(g.parent_ptr(), std::move(out));
}

bool normalizes(const PermGroup& par, Elem x, const Subgroup& h) {
  return std::all_of(h.generators().begin(), h.generators().end(),
                     [&](Elem s) { return h.contains(par.conj(s, x)); });
}

}  // namespace

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t out = 1;
  while (n % p == 0) {
    n /= p;
    out *= p;
  }
  return out;
}

bool is_p_power(std::uint64_t n, std::uint64_t p) { return p_part(n, p) == n; }

Subgroup sylow(const Subgroup& g, unsigned p) {
  if (!is_prime(p)) throw InputError("sylow: " + std::to_string(p) + " is not prime");
  const PermGroup& par = g.parent();
  const auto target = p_part(g.order(), p);
  Subgroup q = Subgroup::trivial(g.parent_ptr());
  while (q.order() < target) {
    bool grown = false;
    for (Elem x : g.elements()) {
      if (q.contains(x) || !is_p_power(par.element_order(x), p)) continue;
      if (!normalizes(par, x, q)) continue;
      std::vector<Elem> gens = q.generators();
      gens.push_back(x);
      q = Subgroup::generated_by(g.parent_ptr(), gens);
      grown = true;
      break;
    }
    if (!grown) throw std::logic_error("sylow: greedy growth stalled");
  }
  return q;
}

Subgroup normalizer(const Subgroup& g, const Subgroup& h) {
  require_same_parent(g, h);
  const PermGroup& par = g.parent();
  return filter(g, [&](Elem x) { return normalizes(par, x, h); });
}

Subgroup centralizer(const Subgroup& g, Elem x) {
  const PermGroup& par = g.parent();
  return filter(g, [&](Elem y) { return par.mul(x, y) == par.mul(y, x); });
}

Subgroup centralizer(const Subgroup& g, const Subgroup& h) {
  require_same_parent(g, h);
  const PermGroup& par = g.parent();
  return filter(g, [&](Elem y) {
    return std::all_of(h.generators().begin(), h.generators().end(),
                       [&](Elem s) { return par.mul(s, y) == par.mul(y, s); });
  });
}

Subgroup normal_closure(const Subgroup& g, std::span<const Elem> gens) {
  const PermGroup& par = g.parent();
  Subgroup n = Subgroup::generated_by(g.parent_ptr(), gens);
  for (;;) {
    std::vector<Elem> extra;
    for (Elem s : n.generators())
      for (Elem t : g.generators()) {
        const Elem c = par.conj(s, t);
        if (!n.contains(c)) extra.push_back(c);
      }
    if (extra.empty()) return n;
    std::vector<Elem> all = n.generators();
    all.insert(all.end(), extra.begin(), extra.end());
    n = Subgroup::generated_by(g.parent_ptr(), all);
  }
}

Subgroup derived_subgroup(const Subgroup& g) {
  const PermGroup& par = g.parent();
  std::vector<Elem> comms;
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) comms.push_back(par.commutator(gens[i], gens[j]));
  return normal_closure(g, comms);
}

std::vector<Subgroup> derived_series(const Subgroup& g) {
  std::vector<Subgroup> out{g};
  for (;;) {
    Subgroup next = derived_subgroup(out.back());
    if (next == out.back()) return out;
    out.push_back(std::move(next));
  }
}

bool is_solvable(const Subgroup& g) { return derived_series(g).back().order() == 1; }

Subgroup o_p_residual(const Subgroup& g, unsigned p) {
  const PermGroup& par = g.parent();
  std::vector<Elem> cands;
  for (Elem x : g.elements())
    if (par.element_order(x) % p != 0) cands.push_back(x);
  return closure_of_set(g.parent_ptr(), cands);
}

bool is_p_solvable(const Subgroup& g, unsigned p) {
  const PermGroup& par = g.parent();
  Subgroup cur = g;
  while (cur.order() > 1) {
    // O^{p'}: generated by p-elements; O^p: generated by p'-elements
    std::vector<Elem> p_elems;
    for (Elem x : cur.elements())
      if (is_p_power(par.element_order(x), p)) p_elems.push_back(x);
    Subgroup a = closure_of_set(cur.parent_ptr(), p_elems);
    Subgroup b = o_p_residual(a, p);
    if (b == cur) return false;
    cur = std::move(b);
  }
  return true;
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  require_same_parent(a, b);
  return filter(a, [&](Elem x) { return b.contains(x); });
}

Subgroup product_subgroup(const Subgroup& a, const Subgroup& b) {
  require_same_parent(a, b);
  const PermGroup& par = a.parent();
  std::vector<char> mask(par.order(), 0);
  std::vector<Elem> set;
  for (Elem x : a.elements())
    for (Elem y : b.elements()) {
      const Elem z = par.mul(x, y);
      if (!mask[z]) {
        mask[z] = 1;
        set.push_back(z);
      }
    }
  std::vector<Elem> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  Subgroup joined = Subgroup::generated_by(a.parent_ptr(), gens);
  if (joined.order() != set.size())
    throw InputError("product of subgroups (orders " + std::to_string(a.order()) + ", " +
                     std::to_string(b.order()) + ") is not a subgroup");
  return joined;
}

Subgroup conjugate(const Subgroup& h, Elem g) {
  const PermGroup& par = h.parent();
  std::vector<Elem> out;
  out.reserve(h.order());
  for (Elem x : h.elements()) out.push_back(par.conj(x, g));
  return Subgroup(h.parent_ptr(), std::move(out));
}

bool is_normal(const Subgroup& g, const Subgroup& n) {
  require_same_parent(g, n);
  if (!n.is_subgroup_of(g)) return false;
  const PermGroup& par = g.parent();
  return std::all_of(g.generators().begin(), g.generators().end(),
                     [&](Elem t) { return normalizes(par, t, n); });
}

std::vector<Subgroup> normal_subgroups(const Subgroup& g) {
  const auto classes = conjugacy_classes(g);
  std::vector<Subgroup> found{Subgroup::trivial(g.parent_ptr())};
  std::set<std::vector<Elem>> seen{found[0].elements()};
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t k = 1; k < classes->count(); ++k) {
      if (found[i].contains(classes->rep(k))) continue;
      std::vector<Elem> gens = found[i].generators();
      gens.push_back(classes->rep(k));
      Subgroup m = normal_closure(g, gens);
      if (seen.insert(m.elements()).second) found.push_back(std::move(m));
    }
  }
  std::sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return found;
}

std::size_t fixed_points_on_cosets(const Subgroup& p, const Subgroup& k, const Subgroup& n) {
  require_same_parent(p, k);
  require_same_parent(k, n);
  if (!is_normal(k, n)) throw InputError("fixed_points_on_cosets: N is not normal in K");
  const PermGroup& par = k.parent();
  for (Elem x : p.generators())
    if (!normalizes(par, x, k) || !normalizes(par, x, n))
      throw InputError("fixed_points_on_cosets: P does not normalize K and N");
  std::vector<char> covered(par.order(), 0);
  std::size_t count = 0;
  for (Elem r : k.elements()) {
    if (covered[r]) continue;
    for (Elem m : n.elements()) covered[par.mul(r, m)] = 1;
    const bool fixed = std::all_of(p.generators().begin(), p.generators().end(),
                                   [&](Elem x) { return n.contains(par.commutator(r, x)); });
    if (fixed) ++count;
  }
  return count;
}

}  // namespace charcorr
