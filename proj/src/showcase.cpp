#include "charcorr/showcase.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "charcorr/errors.hpp"
#include "charcorr/mckay.hpp"

namespace charcorr {

namespace {

int mod(long x, long q) { return static_cast<int>(((x % q) + q) % q); }

std::array<int, 2> apply(const Mat2& m, int a, int b, int q) {
  return {mod(a * m[0][0] + b * m[1][0], q), mod(a * m[0][1] + b * m[1][1], q)};
}

int det(const Mat2& m, int q) { return mod(m[0][0] * m[1][1] - m[0][1] * m[1][0], q); }

void require(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error("order-648 construction: " + what);
}

// (a, b, c) -> a + 3b + 9c
std::uint32_t heis_index(int a, int b, int c) { return static_cast<std::uint32_t>(a + 3 * b + 9 * c); }

std::array<int, 3> heis_mul(int a, int b, int c, int a2, int b2, int c2) {
  return {mod(a + a2, 3), mod(b + b2, 3), mod(c + c2 + 2 * (a * b2 - a2 * b), 3)};
}

}  // namespace

GroupDescription cyclic_affine_group(std::string name, unsigned n, unsigned m) {
  GroupDescription d{std::move(name), n, {}};
  std::vector<std::uint32_t> shift(n), scale(n);
  for (unsigned x = 0; x < n; ++x) {
    shift[x] = (x + 1) % n;
    scale[x] = (x * m) % n;
  }
  d.generators.push_back(shift);
  if (m % n != 1) d.generators.push_back(scale);
  return d;
}

GroupDescription plane_group(std::string name, unsigned q, const std::vector<Mat2>& mats, bool linear_only) {
  const int qi = static_cast<int>(q);
  GroupDescription d{std::move(name), linear_only ? q * q - 1 : q * q, {}};
  // linear-only groups drop the zero vector: point a + q b - 1
  const std::uint32_t shift = linear_only ? 1 : 0;
  if (!linear_only)
    for (auto [ta, tb] : {std::pair{1, 0}, {0, 1}}) {
      std::vector<std::uint32_t> img(q * q);
      for (int b = 0; b < qi; ++b)
        for (int a = 0; a < qi; ++a) img[a + qi * b] = mod(a + ta, qi) + qi * mod(b + tb, qi);
      d.generators.push_back(img);
    }
  for (const auto& m : mats) {
    std::vector<std::uint32_t> img(d.degree);
    for (int b = 0; b < qi; ++b)
      for (int a = 0; a < qi; ++a) {
        if (linear_only && a == 0 && b == 0) continue;
        const auto v = apply(m, a, b, qi);
        img[a + qi * b - shift] = v[0] + qi * v[1] - shift;
      }
    d.generators.push_back(img);
  }
  return d;
}

GroupDescription heisenberg_group(std::string name, const std::vector<Mat2>& mats) {
  GroupDescription d{std::move(name), 27, {}};
  for (auto [ta, tb] : {std::pair{1, 0}, {0, 1}}) {
    std::vector<std::uint32_t> img(27);
    for (int c = 0; c < 3; ++c)
      for (int b = 0; b < 3; ++b)
        for (int a = 0; a < 3; ++a) {
          const auto r = heis_mul(a, b, c, ta, tb, 0);
          img[heis_index(a, b, c)] = heis_index(r[0], r[1], r[2]);
        }
    d.generators.push_back(img);
  }
  for (const auto& m : mats) {
    std::vector<std::uint32_t> img(27);
    const int dm = det(m, 3);
    for (int c = 0; c < 3; ++c)
      for (int b = 0; b < 3; ++b)
        for (int a = 0; a < 3; ++a) {
          const auto v = apply(m, a, b, 3);
          img[heis_index(a, b, c)] = heis_index(v[0], v[1], mod(dm * c, 3));
        }
    d.generators.push_back(img);
  }
  return d;
}

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries{
      {"s3", 2, true, "C3 x| C2, smallest nontrivial instance"},
      {"s4", 2, true, "one descent step through A4 and V4"},
      {"d8", 2, true, "G = P"},
      {"c7", 7, true, "G = P, odd order"},
      {"f21", 3, true, "C7 x| C3, odd order"},
      {"d10", 2, true, "C5 x| C2"},
      {"c13_c3", 3, true, "C13 x| C3, odd order"},
      {"c5c5_c3", 3, true, "(C5 x C5) x| C3, fixed-point-free action"},
      {"c3c3_q8", 2, true, "(C3 x C3) x| Q8, fixed-point-free action"},
      {"gl23", 2, true, "GL(2,3), one descent step through SL(2,3) and Q8"},
      {"heis27_sd16", 2, true, "3^{1+2} x| SD16, two descent steps"},
      {"heis27_gl23", 2, true, "3^{1+2} x| GL(2,3), three descent steps"},
      {"sl23", 3, false, "Sylow 3-subgroup has normalizer of order 6"},
      {"f21", 7, false, "normal Sylow 7-subgroup"},
      {"remark648", 2, false, "3^{1+2} x| SL(2,3), N_G(P) = L x H of order 72"},
  };
  return entries;
}

GroupDescription builtin_group(const std::string& file) {
  if (file == "s3") return {"S3", 3, {{1, 2, 0}, {1, 0, 2}}};
  if (file == "s4") return {"S4", 4, {{1, 0, 2, 3}, {1, 2, 3, 0}}};
  if (file == "d8") return {"D8", 4, {{1, 2, 3, 0}, {2, 1, 0, 3}}};
  if (file == "c7") return cyclic_affine_group("C7", 7, 1);
  if (file == "f21") return cyclic_affine_group("F21", 7, 2);
  if (file == "d10") return cyclic_affine_group("D10", 5, 4);
  if (file == "c13_c3") return cyclic_affine_group("C13:C3", 13, 3);
  if (file == "c5c5_c3") return plane_group("(C5xC5):C3", 5, {{{{0, 4}, {1, 4}}}});
  if (file == "c3c3_q8") return plane_group("(C3xC3):Q8", 3, mats::q8);
  if (file == "sl23") return plane_group("SL(2,3)", 3, mats::sl23, true);
  if (file == "gl23") return plane_group("GL(2,3)", 3, mats::gl23, true);
  if (file == "heis27_sd16") return heisenberg_group("3^(1+2):SD16", mats::sd16);
  if (file == "heis27_gl23") return heisenberg_group("3^(1+2):GL(2,3)", mats::gl23);
  if (file == "remark648") return heisenberg_group("3^(1+2):SL(2,3)", mats::sl23);
  throw InputError("unknown builtin group '" + file + "'");
}

std::vector<std::string> builtin_names() {
  return {"s3", "s4", "d8", "c7", "f21", "d10", "c13_c3", "c5c5_c3", "c3c3_q8", "sl23", "gl23",
          "heis27_sd16", "heis27_gl23", "remark648"};
}

// --- the order-648 group ------------------------------------------------------------

RemarkData build_remark_group(std::size_t cap) {
  auto parent = load_group(builtin_group("remark648"), cap);
  const auto& par = *parent;
  auto g = Subgroup::whole(parent);
  const std::vector<Elem> translations{par.index_of(par.generators()[0]), par.index_of(par.generators()[1])};
  auto k = Subgroup::generated_by(parent, translations);
  auto l = centralizer(k, k);
  std::vector<Elem> stab;
  for (Elem x : g.elements())
    if (par.element(x)[0] == 0) stab.push_back(x);
  Subgroup h(parent, std::move(stab));
  auto p = sylow(h, 2);
  auto n = normalizer(g, p);
  RemarkData d{parent, g, k, l, h, p, n, std::make_shared<TableCache>(), 1, 0};

  require(d.g.order() == 648, "|G| = 648");
  require(d.k.order() == 27, "|K| = 27");
  require(d.l.order() == 3, "|L| = 3");
  require(d.h.order() == 24, "|H| = 24");
  require(d.p.order() == 8, "|P| = 8");
  require(d.n.order() == 72, "|N_G(P)| = 72");
  require(is_normal(d.g, d.k), "K normal");
  require(derived_subgroup(d.k) == d.l, "K' = Z(K)");
  for (Elem x : d.k.elements()) require(x == 0 || par.element_order(x) == 3, "K has exponent 3");
  require(intersection(d.l, d.h).order() == 1 && centralizer(d.h, d.l) == d.h && product_subgroup(d.l, d.h) == d.n,
          "N = L x H");
  for (Elem x : d.p.elements()) {
    if (x == 0) continue;
    const std::vector<Elem> gen{x};
    require(fixed_points_on_cosets(Subgroup::generated_by(d.parent, gen), d.k, d.l) == 1,
            "P acts fixed-point-freely on K/L");
  }

  const auto& tl = *d.cache->table(d.l);
  const auto& tk = *d.cache->table(d.k);
  const auto fus = d.cache->fusion(d.l, d.k);
  std::vector<std::size_t> over;
  for (std::size_t i = 0; i < tk.size(); ++i)
    if (lies_over(tk[i], fus, tl[d.theta])) over.push_back(i);
  require(over.size() == 1, "a single irreducible of K over theta");
  d.phi = over[0];
  return d;
}

std::optional<long> ramification_index(const RemarkData& d, std::size_t theta) {
  const auto& tl = *d.cache->table(d.l);
  const auto& tk = *d.cache->table(d.k);
  const auto fus = d.cache->fusion(d.l, d.k);
  const auto cons = constituents(induce(tl[theta], fus), tk);
  if (cons.size() != 1) return std::nullopt;
  const long e = cons[0].multiplicity;
  if (!(restrict_to(tk[cons[0].index], fus) == tl[theta].scaled(e))) return std::nullopt;
  return e;
}

long verify_fully_ramified(const RemarkData& d, std::size_t theta) {
  const auto e = ramification_index(d, theta);
  const long index = static_cast<long>(d.k.order() / d.l.order());
  if (!e || *e * *e != index)
    throw TheoremViolation("theta is not fully ramified with respect to K/L",
                           "theta = X" + std::to_string(theta) + ", |K:L| = " + std::to_string(index) + "\n");
  return *e;
}

std::vector<PsiCandidate> recover_psi(const RemarkData& d) {
  TableCache& cache = *d.cache;
  const auto& par = *d.parent;
  const auto& tg = *cache.table(d.g);
  const auto& tk = *cache.table(d.k);
  const auto& tl = *cache.table(d.l);
  const auto& th = *cache.table(d.h);
  const auto& tn = *cache.table(d.n);
  const auto fus_kg = cache.fusion(d.k, d.g);
  const auto fus_ln = cache.fusion(d.l, d.n);
  const auto fus_ng = cache.fusion(d.n, d.g);

  // N = L x H: class of N -> class of H of the H-component
  std::vector<std::size_t> to_h(tn.classes->count());
  for (std::size_t c = 0; c < to_h.size(); ++c) {
    const Elem x = tn.classes->rep(c);
    bool found = false;
    for (Elem l : d.l.elements()) {
      const Elem h = par.mul(par.inv(l), x);
      if (d.h.contains(h)) {
        to_h[c] = th.classes->class_of(h);
        found = true;
        break;
      }
    }
    require(found, "N = L x H decomposition");
  }

  std::vector<std::size_t> chis, xis;
  for (std::size_t c = 0; c < tg.size(); ++c)
    if (tg.degrees[c] % 2 == 1 && lies_over(tg[c], fus_kg, tk[d.phi])) chis.push_back(c);
  for (std::size_t x = 0; x < tn.size(); ++x)
    if (tn.degrees[x] % 2 == 1 && lies_over(tn[x], fus_ln, tl[d.theta])) xis.push_back(x);
  std::vector<ClassFunction> chi_n;
  for (auto c : chis) chi_n.push_back(restrict_to(tg[c], fus_ng));

  const Cyc sqrt_m3 = Cyc(1) + Cyc::root_of_unity(3, 1).scaled(2);
  std::vector<PsiCandidate> out;
  for (std::size_t a = 0; a < th.size(); ++a) {
    if (th.degrees[a] != 1) continue;
    for (std::size_t b = 0; b < th.size(); ++b) {
      if (th.degrees[b] != 2) continue;
      PsiCandidate cand;
      cand.alpha = a;
      cand.beta = b;
      const auto psi = th[a] + th[b];
      cand.values = psi.values();
      std::vector<Cyc> inflated;
      for (auto hc : to_h) inflated.push_back(psi[hc]);
      const ClassFunction psi_n(tn.classes, std::move(inflated));

      std::map<std::size_t, int> hits_xi;
      bool each_chi_once = true;
      for (std::size_t i = 0; i < chis.size(); ++i) {
        int hits = 0;
        for (auto x : xis)
          if (chi_n[i] == psi_n * tn[x]) {
            ++hits;
            ++hits_xi[x];
            cand.pairs.emplace_back(chis[i], x);
          }
        each_chi_once = each_chi_once && hits == 1;
      }
      cand.viable = each_chi_once && chis.size() == xis.size() && hits_xi.size() == xis.size() &&
                    std::all_of(hits_xi.begin(), hits_xi.end(), [](const auto& kv) { return kv.second == 1; });

      bool match = psi[0] == Cyc(3);
      for (std::size_t c = 1; c < th.classes->count(); ++c) {
        const auto ord = th.classes->rep_order(c);
        if (ord == 2) match = match && psi[c] == Cyc(-1);
        if (ord == 4) match = match && psi[c] == Cyc(1);
        if (ord == 3) match = match && (psi[c] == sqrt_m3 || psi[c] == -sqrt_m3);
        match = match && !(psi[c] == Cyc(3));  // faithful
      }
      cand.matches_values = match;
      out.push_back(std::move(cand));
    }
  }
  return out;
}

std::vector<PairInner> verify_non_constituent(const RemarkData& d, const PsiCandidate& psi) {
  TableCache& cache = *d.cache;
  const auto& tg = *cache.table(d.g);
  const auto& tn = *cache.table(d.n);
  const auto fus = cache.fusion(d.n, d.g);
  std::vector<PairInner> out;
  for (auto [c, x] : psi.pairs) {
    PairInner pi{c, x, tg.degrees[c], tn.degrees[x], 0};
    const auto ip = inner_product(restrict_to(tg[c], fus), tn[x]).as_rational();
    if (!ip) throw std::logic_error("inner product of characters is not rational");
    pi.inner = *ip;
    if (pi.xi_degree == 1 && pi.inner != 0)
      throw TheoremViolation("linear xi is a constituent of chi_N",
                             "chi = X" + std::to_string(c) + ", xi = X" + std::to_string(x) + ", <chi_N, xi> = " +
                                 to_string(pi.inner) + "\n");
    out.push_back(pi);
  }
  return out;
}

RemarkReport run_remark(std::size_t cap) {
  const auto d = build_remark_group(cap);
  RemarkReport r;
  r.order = d.g.order();
  r.k_order = d.k.order();
  r.l_order = d.l.order();
  r.h_order = d.h.order();
  r.p_order = d.p.order();
  r.n_order = d.n.order();
  r.extraspecial = true;  // asserted by the construction
  r.self_normalizing = d.n == d.p;

  const auto& tl = *d.cache->table(d.l);
  r.e = verify_fully_ramified(d, d.theta);
  const auto conj = tl.find(tl[d.theta].conj());
  if (!conj) throw std::logic_error("conjugate of an irreducible is missing from the table");
  r.e_conjugate = verify_fully_ramified(d, *conj);
  r.phi_degree = d.cache->table(d.k)->degrees[d.phi];
  r.invariant_constituents = check_glauberman_unique(d.p, d.k, d.l, tl[d.theta], *d.cache);

  const auto& th = *d.cache->table(d.h);
  for (std::size_t c = 0; c < th.classes->count(); ++c) {
    r.h_class_orders.push_back(th.classes->rep_order(c));
    r.h_class_sizes.push_back(th.classes->size(c));
  }
  r.candidates = recover_psi(d);
  for (std::size_t i = 0; i < r.candidates.size(); ++i)
    if (r.candidates[i].viable && r.candidates[i].matches_values) {
      r.chosen = i;
      break;
    }
  if (r.chosen) r.pairs = verify_non_constituent(d, r.candidates[*r.chosen]);
  r.verdict = r.order == 648 && r.n_order == 72 && !r.self_normalizing && r.e == 3 && r.e_conjugate == 3 &&
              r.phi_degree == 3 && r.invariant_constituents == 1 && r.chosen.has_value();
  return r;
}

}  // namespace charcorr
