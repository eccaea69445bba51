#include "charcorr/mckay.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <set>
#include <sstream>
#include <thread>

#include "charcorr/errors.hpp"

namespace charcorr {

namespace {

std::string values_str(const ClassFunction& f) {
  std::string out = "(";
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (k) out += ", ";
    out += f[k].str();
  }
  return out + ")";
}

std::string constituents_str(const std::vector<Constituent>& cons, const CharacterTable& t) {
  std::ostringstream ss;
  for (std::size_t i = 0; i < cons.size(); ++i) {
    if (i) ss << " + ";
    ss << cons[i].multiplicity << "*X" << cons[i].index << "[deg " << t.degrees[cons[i].index] << "]";
  }
  return cons.empty() ? "0" : ss.str();
}

std::string instance_str(const McKayInstance& inst) {
  std::ostringstream ss;
  ss << "group " << inst.group.parent().name() << " of order " << inst.group.order() << ", p = " << inst.p
     << ", |P| = " << inst.sylow.order() << ", |N_G(P)| = " << inst.normalizer.order();
  return ss.str();
}

std::string step_str(const DescentStep& s) {
  std::ostringstream ss;
  ss << "|G_i| = " << s.group.order() << ", |K| = " << s.k.order() << ", |L| = " << s.l.order()
     << ", |H| = " << s.h.order() << ", |K_theta| = " << s.k_theta.order() << ", chi = X" << s.chi
     << ", theta = X" << s.theta << ", eta = X" << s.eta << ", fixed points = " << s.fixed_points
     << ", invariant constituents = " << s.invariant_constituents;
  return ss.str();
}

std::string trace_str(const std::vector<DescentStep>& steps) {
  std::string out;
  for (std::size_t i = 0; i < steps.size(); ++i) out += "step " + std::to_string(i) + ": " + step_str(steps[i]) + "\n";
  return out;
}

unsigned prime_of_p_group(const Subgroup& p) {
  const auto n = p.order();
  for (unsigned q = 2; q <= n; ++q)
    if (n % q == 0) {
      if (!is_p_power(n, q)) throw InputError("subgroup of order " + std::to_string(n) + " is not a p-group");
      return q;
    }
  return 0;
}

std::uint64_t subgroup_exponent(const Subgroup& g) {
  std::uint64_t e = 1;
  for (Elem x : g.elements()) e = lcm_u64(e, g.parent().element_order(x));
  return e;
}

// Closure of {a, b} inside the parent, abandoned once it exceeds `limit`.
std::optional<std::vector<Elem>> bounded_closure(const PermGroup& par, Elem a, Elem b, std::size_t limit) {
  std::vector<char> seen(par.order(), 0);
  std::vector<Elem> out{0};
  seen[0] = 1;
  const Elem gens[2] = {a, b};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (Elem s : gens) {
      const Elem y = par.mul(out[i], s);
      if (seen[y]) continue;
      seen[y] = 1;
      out.push_back(y);
      if (out.size() > limit) return std::nullopt;
    }
  return out;
}

}  // namespace

std::string McKayInstance::descent_refusal() const {
  if (!solvable) return "solvability hypothesis fails";
  if (!self_normalizing) return "self-normalizing hypothesis fails";
  if (!parity) return "parity hypothesis fails (p odd and |G| even)";
  return {};
}

McKayInstance check_hypotheses(const Subgroup& g, unsigned p, std::shared_ptr<TableCache> cache) {
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  return check_hypotheses(g, p, sylow(g, p), std::move(cache));
}

McKayInstance check_hypotheses(const Subgroup& g, unsigned p, const Subgroup& sylow_p,
                               std::shared_ptr<TableCache> cache) {
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  if (!sylow_p.is_subgroup_of(g) || sylow_p.order() != p_part(g.order(), p))
    throw InputError("not a Sylow " + std::to_string(p) + "-subgroup");
  McKayInstance inst{g, p, sylow_p, normalizer(g, sylow_p), false, false, false, false, nullptr};
  inst.solvable = is_solvable(g);
  inst.p_solvable = inst.solvable || is_p_solvable(g, p);
  inst.self_normalizing = inst.normalizer == inst.sylow;
  inst.parity = p == 2 || g.order() % 2 == 1;
  inst.cache = cache ? std::move(cache) : std::make_shared<TableCache>();
  return inst;
}

std::size_t navarro_star(const McKayInstance& inst, std::size_t chi) {
  if (!inst.p_solvable) throw HypothesisError("p-solvability hypothesis fails");
  if (!inst.self_normalizing) throw HypothesisError("self-normalizing hypothesis fails");
  const auto& t = inst.table();
  if (chi >= t.size()) throw InputError("character index out of range");
  if (t.degrees[chi] % static_cast<long>(inst.p) == 0)
    throw HypothesisError("character degree is divisible by p");
  const auto& tp = inst.sylow_table();
  const auto fus = inst.cache->fusion(inst.sylow, inst.group);
  const auto cons = constituents(restrict_to(t[chi], fus), tp);
  std::optional<std::size_t> lin;
  bool ok = true;
  for (const auto& c : cons) {
    if (tp.degrees[c.index] == 1) {
      if (lin || c.multiplicity != 1) ok = false;
      lin = c.index;
    } else if (tp.degrees[c.index] % static_cast<long>(inst.p) != 0) {
      ok = false;
    }
  }
  if (!ok || !lin) {
    std::ostringstream f;
    f << instance_str(inst) << "\nchi = X" << chi << " " << values_str(t[chi]) << "\nchi_P = "
      << constituents_str(cons, tp) << "\n";
    throw TheoremViolation("restriction to P is not one linear character plus p-divisible degrees", f.str());
  }
  return *lin;
}

DescentResult isaacs_descent(const McKayInstance& inst, std::size_t chi) {
  if (!inst.descent_applicable()) throw HypothesisError(inst.descent_refusal());
  const auto& t0 = inst.table();
  if (chi >= t0.size()) throw InputError("character index out of range");
  if (t0.degrees[chi] % static_cast<long>(inst.p) == 0)
    throw HypothesisError("character degree is divisible by p");

  TableCache& cache = *inst.cache;
  const Subgroup& P = inst.sylow;
  const long p = inst.p;
  DescentResult out;
  Subgroup cur = inst.group;
  std::size_t cur_chi = chi;

  auto fail = [&](const std::string& what, const std::string& extra) {
    std::ostringstream f;
    f << instance_str(inst) << "\nstarting chi = X" << chi << "\n"
      << trace_str(out.steps) << "at |G_i| = " << cur.order() << ", chi = X" << cur_chi << "\n" << extra;
    throw TheoremViolation("descent: " + what, f.str());
  };

  while (!(cur == P)) {
    DescentStep s{cur, o_p_residual(cur, inst.p), Subgroup::trivial(cur.parent_ptr()),
                  Subgroup::trivial(cur.parent_ptr()), Subgroup::trivial(cur.parent_ptr())};
    s.chi = cur_chi;
    s.l = derived_subgroup(s.k);
    if (!(s.l.order() < s.k.order() && s.k.order() < cur.order())) fail("L < K < G fails", "");
    if (!(product_subgroup(s.k, P) == cur)) fail("G != KP", "");
    if ((s.k.order() / s.l.order()) % p == 0) fail("|K/L| is divisible by p", "");
    s.h = product_subgroup(P, s.l);
    if (!(intersection(s.k, s.h) == s.l)) fail("K cap H != L", "");
    if (!(s.h.order() < cur.order())) fail("no progress", "");

    const auto& tg = *cache.table(cur);
    const auto& tl = *cache.table(s.l);
    const auto& th = *cache.table(s.h);
    const auto& chi_i = tg[cur_chi];

    // theta: the unique P-invariant constituent of chi_L
    const auto chi_l = constituents(restrict_to(chi_i, cache.fusion(s.l, cur)), tl);
    std::vector<std::size_t> inv;
    for (const auto& c : chi_l)
      if (is_invariant(tl[c.index], P)) inv.push_back(c.index);
    if (inv.size() != 1)
      fail("chi_L has " + std::to_string(inv.size()) + " P-invariant constituents",
           "chi_L = " + constituents_str(chi_l, tl) + "\n");
    s.theta = inv[0];
    const auto& theta = tl[s.theta];

    // coprime action of P on K_theta / L
    const auto g_theta = inertia_subgroup(cur, theta);
    s.k_theta = intersection(s.k, g_theta);
    s.fixed_points = fixed_points_on_cosets(P, s.k_theta, s.l);
    if (s.fixed_points != 1)
      fail("P has " + std::to_string(s.fixed_points) + " fixed points on K_theta/L", "");
    s.invariant_constituents = check_glauberman_unique(P, s.k_theta, s.l, theta, cache);

    // eta: the unique constituent of chi_H over theta
    const auto chi_h = restrict_to(chi_i, cache.fusion(s.h, cur));
    const auto cons_h = constituents(chi_h, th);
    const auto fus_lh = cache.fusion(s.l, s.h);
    std::vector<Constituent> over;
    for (const auto& c : cons_h)
      if (lies_over(th[c.index], fus_lh, theta)) over.push_back(c);
    if (over.size() != 1 || over[0].multiplicity != 1)
      fail("chi_H does not have exactly one constituent over theta, with multiplicity 1",
           "chi_H = " + constituents_str(cons_h, th) + "\ntheta = X" + std::to_string(s.theta) + "\n");
    s.eta = over[0].index;
    if (th.degrees[s.eta] % p == 0) fail("eta has degree divisible by p", "");

    cur_chi = s.eta;
    cur = s.h;
    out.steps.push_back(std::move(s));
  }
  if (inst.sylow_table().degrees[cur_chi] != 1) fail("final character is not linear", "");
  out.xi = cur_chi;
  return out;
}

ExtensionWitness check_extension(const McKayInstance& inst, const Subgroup& n, std::size_t chi,
                                 std::size_t theta) {
  if (!inst.p_solvable) throw HypothesisError("p-solvability hypothesis fails");
  if (!inst.self_normalizing) throw HypothesisError("self-normalizing hypothesis fails");
  if (!is_normal(inst.group, n)) throw InputError("check_extension: subgroup is not normal");
  TableCache& cache = *inst.cache;
  const auto& tg = inst.table();
  const auto& tn = *cache.table(n);
  if (chi >= tg.size() || theta >= tn.size()) throw InputError("character index out of range");
  if (tg.degrees[chi] % static_cast<long>(inst.p) == 0)
    throw HypothesisError("character degree is divisible by p");
  const auto& th = tn[theta];
  if (!is_invariant(th, inst.sylow)) throw InputError("check_extension: theta is not P-invariant");
  if (!lies_over(tg[chi], cache.fusion(n, inst.group), th))
    throw InputError("check_extension: theta does not lie under chi");

  ExtensionWitness w{inertia_subgroup(inst.group, th)};
  const auto& tt = *cache.table(w.inertia);
  const auto fus = cache.fusion(n, w.inertia);
  for (std::size_t i = 0; i < tt.size(); ++i) {
    if (tt.degrees[i] != tn.degrees[theta]) continue;
    if (restrict_to(tt[i], fus) == th) {
      w.witness = i;
      return w;
    }
  }
  std::ostringstream f;
  f << instance_str(inst) << "\n|N| = " << n.order() << ", |G_theta| = " << w.inertia.order() << ", chi = X" << chi
    << ", theta = X" << theta << " " << values_str(th) << "\n";
  throw TheoremViolation("theta does not extend to its inertia group", f.str());
}

std::size_t check_glauberman_unique(const Subgroup& p_group, const Subgroup& k, const Subgroup& n,
                                    const ClassFunction& theta, TableCache& cache) {
  if (!(theta.group() == n)) throw InputError("check_glauberman_unique: theta is not a character of N");
  const unsigned p = prime_of_p_group(p_group);
  if (p != 0 && (k.order() / n.order()) % p == 0)
    throw InputError("check_glauberman_unique: |K:N| is divisible by p");
  const auto fixed = fixed_points_on_cosets(p_group, k, n);  // validates normality
  if (!is_invariant(theta, p_group)) throw InputError("check_glauberman_unique: theta is not P-invariant");
  const auto& tk = *cache.table(k);
  const auto induced = induce(theta, cache.fusion(n, k));
  std::size_t count = 0;
  for (const auto& c : constituents(induced, tk))
    if (is_invariant(tk[c.index], p_group)) ++count;
  if (count == 0 || (fixed == 1 && count != 1)) {
    std::ostringstream f;
    f << "|P| = " << p_group.order() << ", |K| = " << k.order() << ", |N| = " << n.order()
      << ", fixed points = " << fixed << ", invariant constituents = " << count << ", theta = " << values_str(theta)
      << "\n";
    throw TheoremViolation("P-invariant constituents of theta^K: count " + std::to_string(count), f.str());
  }
  return count;
}

McKayCount mckay_count(const McKayInstance& inst) {
  McKayCount c;
  c.group_count = p_prime_irreducibles(inst.table(), inst.p).size();
  c.normalizer_count = p_prime_irreducibles(*inst.cache->table(inst.normalizer), inst.p).size();
  return c;
}

CorrespondenceReport verify_main(const McKayInstance& inst, unsigned threads) {
  if (!inst.descent_applicable()) throw HypothesisError(inst.descent_refusal());
  const auto& t = inst.table();
  const auto& tp = inst.sylow_table();

  CorrespondenceReport r;
  r.name = inst.group.parent().name();
  r.order = inst.group.order();
  r.p = inst.p;
  r.sylow_order = inst.sylow.order();
  r.normalizer_order = inst.normalizer.order();
  r.solvable = inst.solvable;
  r.self_normalizing = inst.self_normalizing;
  r.parity = inst.parity;

  const auto chis = p_prime_irreducibles(t, inst.p);
  r.records.resize(chis.size());
  auto work = [&](std::size_t i) {
    CharacterRecord rec;
    rec.chi = chis[i];
    rec.degree = t.degrees[rec.chi];
    try {
      rec.star = navarro_star(inst, rec.chi);
    } catch (const TheoremViolation& e) {
      rec.failure += std::string("star: ") + e.what() + "\n" + e.forensics();
    }
    try {
      auto d = isaacs_descent(inst, rec.chi);
      rec.descent = d.xi;
      rec.trace = std::move(d.steps);
    } catch (const TheoremViolation& e) {
      rec.failure += std::string("descent: ") + e.what() + "\n" + e.forensics();
    }
    rec.coincide = rec.star && rec.descent && *rec.star == *rec.descent;
    r.records[i] = std::move(rec);
  };

  const unsigned n_workers = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(chis.size())));
  if (n_workers <= 1) {
    for (std::size_t i = 0; i < chis.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::future<void>> pool;
    for (unsigned w = 0; w < n_workers; ++w)
      pool.push_back(std::async(std::launch::async, [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < chis.size();) work(i);
      }));
    for (auto& f : pool) f.get();
  }

  const auto lin = tp.linear();
  r.linear_count = lin.size();
  const std::set<std::size_t> lin_set(lin.begin(), lin.end());
  auto bijective = [&](auto field) {
    std::set<std::size_t> image;
    for (const auto& rec : r.records) {
      const auto& v = rec.*field;
      if (!v) return false;
      image.insert(*v);
    }
    return image.size() == r.records.size() && image == lin_set;
  };
  r.star_bijective = bijective(&CharacterRecord::star);
  r.descent_bijective = bijective(&CharacterRecord::descent);
  r.count = mckay_count(inst);
  r.verdict = r.star_bijective && r.descent_bijective && r.count.equal() &&
              std::all_of(r.records.begin(), r.records.end(), [](const auto& x) { return x.coincide; });
  return r;
}

// --- lemma checks -----------------------------------------------------------------

void CheckTally::merge(const CheckTally& o) {
  cases += o.cases;
  failures += o.failures;
  notes.insert(notes.end(), o.notes.begin(), o.notes.end());
}

CheckTally check_restriction_bijection(const Subgroup& g, const Subgroup& k, const Subgroup& h, TableCache& cache) {
  if (!is_normal(g, k)) throw InputError("check_restriction_bijection: K is not normal");
  if (!h.is_subgroup_of(g) || !(product_subgroup(k, h) == g))
    throw InputError("check_restriction_bijection: G != KH");
  const auto n = intersection(k, h);
  const auto& tg = *cache.table(g);
  const auto& tk = *cache.table(k);
  const auto& th = *cache.table(h);
  const auto& tn = *cache.table(n);
  const auto fus_nk = cache.fusion(n, k);
  const auto fus_kg = cache.fusion(k, g);
  const auto fus_hg = cache.fusion(h, g);
  const auto fus_nh = cache.fusion(n, h);

  CheckTally tally;
  for (std::size_t i = 0; i < tk.size(); ++i) {
    const auto& phi = tk[i];
    if (!is_invariant(phi, g)) continue;
    const auto phi_n = restrict_to(phi, fus_nk);
    const auto theta = tn.find(phi_n);
    if (!theta) continue;
    ++tally.cases;
    std::set<std::size_t> target;
    for (std::size_t j = 0; j < th.size(); ++j)
      if (lies_over(th[j], fus_nh, tn[*theta])) target.insert(j);
    std::set<std::size_t> image;
    std::size_t source = 0;
    bool ok = true;
    for (std::size_t c = 0; c < tg.size(); ++c) {
      if (!lies_over(tg[c], fus_kg, phi)) continue;
      ++source;
      const auto res = th.find(restrict_to(tg[c], fus_hg));
      if (!res || !target.count(*res)) ok = false;
      else image.insert(*res);
    }
    if (!ok || image.size() != source || image != target) {
      ++tally.failures;
      tally.notes.push_back("restriction Irr(G|phi) -> Irr(H|theta) not bijective for |G| = " +
                            std::to_string(g.order()) + ", |K| = " + std::to_string(k.order()) + ", |H| = " +
                            std::to_string(h.order()) + ", phi = X" + std::to_string(i));
    }
  }
  return tally;
}

CheckTally check_invariant_constituents(const McKayInstance& inst, const Subgroup& n) {
  if (!is_normal(inst.group, n)) throw InputError("check_invariant_constituents: subgroup is not normal");
  TableCache& cache = *inst.cache;
  const auto& tg = inst.table();
  const auto& tn = *cache.table(n);
  const auto fus = cache.fusion(n, inst.group);
  CheckTally tally;
  for (std::size_t c = 0; c < tg.size(); ++c) {
    ++tally.cases;
    std::vector<std::size_t> inv;
    for (const auto& con : constituents(restrict_to(tg[c], fus), tn))
      if (is_invariant(tn[con.index], inst.sylow)) inv.push_back(con.index);
    const bool p_prime = tg.degrees[c] % static_cast<long>(inst.p) != 0;
    std::string problem;
    if (p_prime && inv.empty()) problem = "no P-invariant constituent";
    if (p_prime && inst.self_normalizing && inv.size() > 1) problem = "several P-invariant constituents";
    if (!inv.empty() && problem.empty()) {
      // orbit of the first one under N_G(P)
      std::vector<ClassFunction> orbit{tn[inv[0]]};
      for (std::size_t i = 0; i < orbit.size(); ++i)
        for (Elem s : inst.normalizer.generators()) {
          auto x = conjugate_character(orbit[i], s);
          if (std::find(orbit.begin(), orbit.end(), x) == orbit.end()) orbit.push_back(std::move(x));
        }
      for (auto j : inv)
        if (std::find(orbit.begin(), orbit.end(), tn[j]) == orbit.end()) problem = "not N_G(P)-conjugate";
    }
    if (!problem.empty()) {
      ++tally.failures;
      tally.notes.push_back(problem + ": " + instance_str(inst) + ", |N| = " + std::to_string(n.order()) +
                            ", chi = X" + std::to_string(c));
    }
  }
  return tally;
}

CheckTally check_complement_normalizer(const Subgroup& g, const Subgroup& k, const Subgroup& h) {
  if (!is_normal(g, k)) throw InputError("check_complement_normalizer: K is not normal");
  if (intersection(k, h).order() != 1 || k.order() * h.order() != g.order() || !h.is_subgroup_of(g))
    throw InputError("check_complement_normalizer: H is not a complement of K");
  CheckTally tally;
  tally.cases = 1;
  const bool self_norm = normalizer(g, h) == h;
  const bool trivial_centralizer = centralizer(k, h).order() == 1;
  if (self_norm != trivial_centralizer) {
    tally.failures = 1;
    tally.notes.push_back("N_G(H) = H is " + std::string(self_norm ? "true" : "false") + " but C_K(H) = 1 is " +
                          (trivial_centralizer ? "true" : "false") + " for |G| = " + std::to_string(g.order()) +
                          ", |K| = " + std::to_string(k.order()));
  }
  return tally;
}

std::vector<Subgroup> find_complements(const Subgroup& g, const Subgroup& k) {
  const PermGroup& par = g.parent();
  const std::size_t target = g.order() / k.order();
  std::set<std::vector<Elem>> found;
  auto consider = [&](const std::vector<Elem>& members) {
    if (members.size() != target) return;
    for (Elem x : members)
      if (x != 0 && k.contains(x)) return;
    auto sorted = members;
    std::sort(sorted.begin(), sorted.end());
    found.insert(std::move(sorted));
  };
  for (unsigned q = 2; q <= target; ++q)
    if (is_prime(q) && target % q == 0 && is_p_power(target, q) && p_part(g.order(), q) == target)
      consider(sylow(g, q).elements());
  const auto cls = conjugacy_classes(g);
  for (std::size_t c = 0; c < cls->count(); ++c) {
    const Elem a = cls->rep(c);
    if (target % par.element_order(a) != 0 || (a != 0 && k.contains(a))) continue;
    for (Elem b : g.elements()) {
      if (target % par.element_order(b) != 0 || (b != 0 && k.contains(b))) continue;
      if (auto m = bounded_closure(par, a, b, target)) consider(*m);
    }
  }
  // every complement is conjugate to one through a class representative
  std::set<std::vector<Elem>> all;
  for (const auto& m : found)
    for (Elem x : g.elements()) {
      std::vector<Elem> c;
      c.reserve(m.size());
      for (Elem y : m) c.push_back(par.conj(y, x));
      std::sort(c.begin(), c.end());
      all.insert(std::move(c));
    }
  std::vector<Subgroup> out;
  for (const auto& m : all) out.emplace_back(g.parent_ptr(), m);
  return out;
}

CheckTally check_frattini_identity(const Subgroup& g, const Subgroup& p) {
  const auto np = normalizer(g, p);
  CheckTally tally;
  for (const auto& m : normal_subgroups(g)) {
    ++tally.cases;
    if (!(normalizer(g, product_subgroup(p, m)) == product_subgroup(np, m))) {
      ++tally.failures;
      tally.notes.push_back("N_G(PM) != N_G(P)M for |G| = " + std::to_string(g.order()) +
                            ", |M| = " + std::to_string(m.order()));
    }
  }
  return tally;
}

CheckTally check_galois_equivariance(const McKayInstance& inst) {
  const auto& t = inst.table();
  const auto& tp = inst.sylow_table();
  const auto chis = p_prime_irreducibles(t, inst.p);
  std::vector<std::optional<std::size_t>> star(t.size());
  for (auto c : chis) star[c] = navarro_star(inst, c);
  const auto e = subgroup_exponent(inst.group);
  CheckTally tally;
  for (std::uint64_t k = 1; k <= e; ++k) {
    if (gcd_u64(k, e) != 1) continue;
    for (auto c : chis) {
      ++tally.cases;
      const auto conj_chi = t.find(t[c].galois(static_cast<long>(k)));
      const auto conj_star = tp.find(tp[*star[c]].galois(static_cast<long>(k)));
      if (!conj_chi || !conj_star || !star[*conj_chi] || *star[*conj_chi] != *conj_star) {
        ++tally.failures;
        tally.notes.push_back("star map not equivariant under z -> z^" + std::to_string(k) + " at chi = X" +
                              std::to_string(c));
      }
    }
  }
  return tally;
}

}  // namespace charcorr
