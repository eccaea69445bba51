// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Usage: acceptance [path-to-charcorr-cli]

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <sstream>

#include "charcorr/errors.hpp"
#include "charcorr/mckay.hpp"
#include "charcorr/report.hpp"
#include "charcorr/showcase.hpp"

using namespace charcorr;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;
  void fail(const std::string& why) {
    ok = false;
    notes.push_back(why);
  }
  void expect(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
};

int failures = 0;

void report(int n, const std::string& title, const Outcome& o, const std::string& detail) {
  std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << n << ". " << title << " -- " << detail << '\n';
  for (const auto& s : o.notes) std::cout << "       " << s << '\n';
  if (!o.ok) ++failures;
}

struct Loaded {
  CorpusEntry entry;
  McKayInstance inst;
};

std::vector<Loaded> load_corpus() {
  std::vector<Loaded> out;
  std::map<std::string, GroupPtr> groups;
  for (const auto& e : corpus()) {
    auto& g = groups[e.file];
    if (!g) g = load_group(read_group_file(std::string(CHARCORR_CORPUS_DIR) + "/" + e.file));
    out.push_back({e, check_hypotheses(Subgroup::whole(g), e.p)});
  }
  return out;
}

std::string label(const Loaded& l) { return l.entry.file + "/" + std::to_string(l.entry.p); }

// --- 1 ----------------------------------------------------------------------------

void criterion_tables() {
  Outcome o;
  const std::vector<std::pair<std::string, std::vector<long>>> cases{
      {"s4", {1, 1, 2, 3, 3}}, {"d8", {1, 1, 1, 1, 2}}, {"sl23", {1, 1, 1, 2, 2, 2, 3}}, {"f21", {1, 1, 1, 3, 3}}};
  double worst = 0;
  for (const auto& [file, degrees] : cases) {
    const auto t0 = Clock::now();
    const auto g = Subgroup::whole(load_group(read_group_file(std::string(CHARCORR_CORPUS_DIR) + "/" + file)));
    const auto t = character_table(g);
    const auto& cc = *t->classes;
    const long order = static_cast<long>(g.order());
    auto d = t->degrees;
    std::sort(d.begin(), d.end());
    o.expect(d == degrees, file + ": degrees differ");
    long sum = 0;
    for (auto x : t->degrees) sum += x * x;
    o.expect(sum == order, file + ": sum of squared degrees != |G|");
    for (std::size_t i = 0; i < t->size(); ++i)
      for (std::size_t j = 0; j < t->size(); ++j) {
        Cyc s;
        for (std::size_t k = 0; k < cc.count(); ++k)
          s += (*t)[i][k] * (*t)[j][k].conj() * Cyc(static_cast<long>(cc.size(k)));
        o.expect(s == Cyc(i == j ? order : 0), file + ": row orthogonality fails");
      }
    for (std::size_t k = 0; k < cc.count(); ++k)
      for (std::size_t l = 0; l < cc.count(); ++l) {
        Cyc s;
        for (std::size_t i = 0; i < t->size(); ++i) s += (*t)[i][k] * (*t)[i][l].conj();
        const long c = k == l ? order / static_cast<long>(cc.size(k)) : 0;
        o.expect(s == Cyc(c), file + ": column orthogonality fails");
      }
    const double dt = seconds_since(t0);
    worst = std::max(worst, dt);
    o.expect(dt < 5.0, file + ": slower than 5 s");
  }
  std::ostringstream d;
  d << "S4, D8, SL(2,3), F21 exact orthogonality and degrees; slowest " << worst << " s (limit 5 s)";
  report(1, "character tables", o, d.str());
}

// --- 2 ----------------------------------------------------------------------------

void criterion_star(const std::vector<Loaded>& all) {
  Outcome o;
  std::size_t instances = 0, chars = 0;
  for (const auto& l : all) {
    const auto& inst = l.inst;
    if (!(inst.solvable && inst.self_normalizing)) continue;
    ++instances;
    const auto& t = inst.table();
    const auto& tp = inst.sylow_table();
    const auto fus = inst.cache->fusion(inst.sylow, inst.group);
    std::vector<int> hit(tp.size(), 0);
    for (auto c : p_prime_irreducibles(t, inst.p)) {
      ++chars;
      std::size_t linear = 0, lin_index = 0;
      for (const auto& con : constituents(restrict_to(t[c], fus), tp)) {
        if (tp.degrees[con.index] == 1) {
          linear += static_cast<std::size_t>(con.multiplicity);
          lin_index = con.index;
        } else {
          o.expect(tp.degrees[con.index] % inst.p == 0, label(l) + ": constituent of p'-degree in Delta");
        }
      }
      o.expect(linear == 1, label(l) + " X" + std::to_string(c) + ": linear constituents != 1");
      try {
        o.expect(navarro_star(inst, c) == lin_index, label(l) + ": star map disagrees with decomposition");
      } catch (const std::exception& e) {
        o.fail(label(l) + ": " + e.what());
      }
      ++hit[lin_index];
    }
    for (auto lin : tp.linear()) o.expect(hit[lin] == 1, label(l) + ": star map not a bijection onto Lin(P)");
  }
  report(2, "star map", o,
         std::to_string(instances) + " instances, " + std::to_string(chars) + " characters, zero failures required");
}

// --- 3 ----------------------------------------------------------------------------

void criterion_main(const std::vector<Loaded>& all) {
  Outcome o;
  std::size_t positive = 0;
  double worst = 0;
  bool have_s4 = false, have_f21 = false;
  for (const auto& l : all) {
    if (!l.entry.positive) continue;
    const auto& inst = l.inst;
    o.expect(inst.descent_applicable(), label(l) + ": listed positive but hypotheses fail");
    if (!inst.descent_applicable()) continue;
    ++positive;
    have_s4 = have_s4 || (l.entry.file == "s4" && l.entry.p == 2);
    have_f21 = have_f21 || (l.entry.file == "f21" && l.entry.p == 3);
    const auto t0 = Clock::now();
    try {
      const auto r = verify_main(inst);
      o.expect(r.verdict, label(l) + ": verdict false");
      o.expect(r.records.size() == p_prime_irreducibles(inst.table(), inst.p).size(), label(l) + ": records missing");
      for (const auto& rec : r.records) {
        o.expect(rec.coincide && rec.star && rec.descent && *rec.star == *rec.descent,
                 label(l) + " X" + std::to_string(rec.chi) + ": maps differ " + rec.failure);
        for (const auto& st : rec.trace)
          o.expect(st.fixed_points == 1 && st.invariant_constituents == 1, label(l) + ": step uniqueness");
      }
    } catch (const std::exception& e) {
      o.fail(label(l) + ": " + e.what());
    }
    const double dt = seconds_since(t0);
    worst = std::max(worst, dt);
    o.expect(dt < 10.0, label(l) + ": slower than 10 s");
  }
  o.expect(positive >= 6, "fewer than 6 positive instances");
  o.expect(have_s4 && have_f21, "S4/2 or F21/3 missing");
  std::ostringstream d;
  d << positive << " positive instances, descent = star on every p'-character; slowest " << worst
    << " s (limit 10 s)";
  report(3, "main coincidence", o, d.str());
}

// --- 4 ----------------------------------------------------------------------------

void criterion_counts(const std::vector<Loaded>& all) {
  Outcome o;
  std::size_t negative = 0;
  for (const auto& l : all) {
    const auto& inst = l.inst;
    const auto c = mckay_count(inst);
    const auto g = p_prime_irreducibles(inst.table(), inst.p).size();
    const auto n = p_prime_irreducibles(*inst.cache->table(inst.normalizer), inst.p).size();
    o.expect(c.group_count == g && c.normalizer_count == n, label(l) + ": count mismatch with tables");
    o.expect(g == n, label(l) + ": " + std::to_string(g) + " != " + std::to_string(n));
    if (!inst.self_normalizing) ++negative;
  }
  report(4, "McKay counts", o,
         std::to_string(all.size()) + " instances, " + std::to_string(negative) + " with N_G(P) > P");
}

// --- 5 ----------------------------------------------------------------------------

void criterion_extension(const std::vector<Loaded>& all) {
  Outcome o;
  std::size_t cases = 0, skipped = 0;
  for (const auto& l : all) {
    const auto& inst = l.inst;
    if (!inst.star_applicable()) {
      ++skipped;
      continue;
    }
    const auto& t = inst.table();
    for (const auto& n : normal_subgroups(inst.group)) {
      const auto& tn = *inst.cache->table(n);
      const auto fus = inst.cache->fusion(n, inst.group);
      for (auto c : p_prime_irreducibles(t, inst.p))
        for (const auto& con : constituents(restrict_to(t[c], fus), tn)) {
          const auto th = con.index;
          if (!is_invariant(tn[th], inst.sylow)) continue;
          ++cases;
          try {
            const auto w = check_extension(inst, n, c, th);
            const auto& tw = *inst.cache->table(w.inertia);
            o.expect(restrict_to(tw[w.witness], inst.cache->fusion(n, w.inertia)) == tn[th],
                     label(l) + ": witness does not restrict to theta");
          } catch (const std::exception& e) {
            o.fail(label(l) + ": " + e.what());
          }
        }
    }
  }
  report(5, "extension witnesses", o,
         std::to_string(cases) + " (N, chi, theta) cases; " + std::to_string(skipped) +
             " instances outside the p-solvable self-normalizing precondition skipped");
}

// --- 6 ----------------------------------------------------------------------------

void criterion_lemmas(const std::vector<Loaded>& all) {
  Outcome o;
  CheckTally restriction, conjugacy, glauberman, complement;
  for (const auto& l : all) {
    const auto& inst = l.inst;
    const auto& g = inst.group;
    for (const auto& n : normal_subgroups(g)) {
      for (const auto& h : {inst.sylow, inst.normalizer})
        if (product_subgroup(n, h) == g) restriction.merge(check_restriction_bijection(g, n, h, *inst.cache));
      conjugacy.merge(check_invariant_constituents(inst, n));
      for (const auto& h : find_complements(g, n)) complement.merge(check_complement_normalizer(g, n, h));
    }
    // coprime sections K/L met by the descent
    if (inst.descent_applicable())
      for (auto c : p_prime_irreducibles(inst.table(), inst.p))
        for (const auto& st : isaacs_descent(inst, c).steps) {
          ++glauberman.cases;
          if (st.fixed_points == 1 && st.invariant_constituents != 1) {
            ++glauberman.failures;
            glauberman.notes.push_back(label(l) + ": Glauberman count != 1");
          }
        }
  }
  {
    const auto d = build_remark_group();
    const auto& tl = *d.cache->table(d.l);
    for (std::size_t th = 1; th < tl.size(); ++th) {
      ++glauberman.cases;
      if (check_glauberman_unique(d.p, d.k, d.l, tl[th], *d.cache) != 1) {
        ++glauberman.failures;
        glauberman.notes.push_back("order-648: Glauberman count != 1");
      }
    }
  }
  for (const auto* t : {&restriction, &conjugacy, &glauberman, &complement}) {
    o.expect(t->cases > 0, "a lemma check ran no cases");
    for (const auto& s : t->notes) o.fail(s);
    o.expect(t->ok(), "lemma check failures");
  }
  std::ostringstream d;
  d << "restriction bijection " << restriction.cases << ", invariant-constituent conjugacy " << conjugacy.cases
    << ", Glauberman count " << glauberman.cases << ", complement normalizer " << complement.cases << " cases";
  report(6, "lemma checks", o, d.str());
}

// --- 7 ----------------------------------------------------------------------------

void criterion_remark() {
  Outcome o;
  const auto t0 = Clock::now();
  try {
    const auto r = run_remark();
    o.expect(r.order == 648 && r.n_order == 72 && r.k_order == 27 && r.l_order == 3, "orders");
    o.expect(r.extraspecial, "K not extraspecial");
    o.expect(r.e == 3 && r.e_conjugate == 3, "ramification index != 3");
    o.expect(r.chosen.has_value(), "no viable psi matches the stated values");
    if (r.chosen) {
      const auto& psi = r.candidates[*r.chosen];
      const Cyc s = Cyc(1) + Cyc::root_of_unity(3, 1).scaled(2);
      bool faithful = true;
      for (std::size_t k = 0; k < psi.values.size(); ++k) {
        const auto ord = r.h_class_orders[k];
        const auto& v = psi.values[k];
        if (ord == 1) o.expect(v == Cyc(3), "psi(1) != 3");
        if (ord == 2) o.expect(v == Cyc(-1), "psi != -1 on order 2");
        if (ord == 4) o.expect(v == Cyc(1), "psi != 1 on order 4");
        if (ord == 3) o.expect(v == s || v == -s, "psi != +-(1+2*z3) on order 3");
        if (ord != 1 && v == Cyc(3)) faithful = false;
      }
      o.expect(faithful, "psi not faithful");
      o.expect(psi.viable, "psi not viable");
    }
    for (const auto& pi : r.pairs)
      if (pi.xi_degree == 1) o.expect(pi.inner == 0, "linear xi is a constituent");
    o.expect(r.verdict, "verdict false");
  } catch (const std::exception& e) {
    o.fail(e.what());
  }
  const double dt = seconds_since(t0);
  o.expect(dt < 120.0, "slower than 2 min");
  std::ostringstream d;
  d << "order 648, e = 3, psi values, non-constituent pairs; " << dt << " s (limit 120 s)";
  report(7, "order-648 example", o, d.str());
}

// --- 8 ----------------------------------------------------------------------------

void criterion_galois(const std::vector<Loaded>& all) {
  Outcome o;
  CheckTally t;
  for (const auto& l : all)
    if (l.entry.positive) t.merge(check_galois_equivariance(l.inst));
  for (const auto& s : t.notes) o.fail(s);
  o.expect(t.ok() && t.cases > 0, "Galois equivariance failures");
  report(8, "Galois equivariance", o, std::to_string(t.cases) + " (chi, sigma) cases");
}

// --- 9 ----------------------------------------------------------------------------

std::string run_capture(const std::string& cmd, int& status) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  status = pclose(pipe);
  return out;
}

void criterion_determinism(const std::string& cli) {
  Outcome o;
  std::string detail;
  if (cli.empty()) {
    std::vector<std::string> runs;
    for (unsigned threads : {1U, 1U, 4U}) {
      std::vector<InstanceOutcome> outs;
      for (const auto& l : load_corpus())
        outs.push_back(l.inst.descent_applicable()
                           ? InstanceOutcome{l.entry.file, verify_main(l.inst, threads), {}}
                           : refused_outcome(l.entry.file, l.inst));
      runs.push_back(render_outcomes(outs, Format::structured));
    }
    o.expect(runs[0] == runs[1], "two serial runs differ");
    o.expect(runs[0] == runs[2], "serial and parallel runs differ");
    detail = "library rendering, 2 serial runs + 4 threads";
  } else {
    const std::string base = "\"" + cli + "\" verify --all --format structured --corpus \"" CHARCORR_CORPUS_DIR "\"";
    int s1 = 0, s2 = 0, s3 = 0;
    const auto a = run_capture(base, s1);
    const auto b = run_capture(base, s2);
    const auto c = run_capture(base + " --threads 4", s3);
    o.expect(s1 == 0 && s2 == 0 && s3 == 0, "verify --all exited nonzero");
    o.expect(!a.empty(), "empty output");
    o.expect(a == b, "two serial runs differ");
    o.expect(a == c, "serial and parallel runs differ");
    detail = "verify --all --format structured: 2 serial runs + --threads 4, " + std::to_string(a.size()) +
             " bytes identical";
  }
  report(9, "determinism", o, detail);
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  try {
    const auto all = load_corpus();
    criterion_tables();
    criterion_star(all);
    criterion_main(all);
    criterion_counts(all);
    criterion_extension(all);
    criterion_lemmas(all);
    criterion_remark();
    criterion_galois(all);
    criterion_determinism(cli);
  } catch (const std::exception& e) {
    std::cout << "[FAIL] acceptance run aborted: " << e.what() << '\n';
    return 1;
  }
  std::cout << (failures == 0 ? "all 9 criteria passed\n" : std::to_string(failures) + " criteria failed\n");
  return failures == 0 ? 0 : 1;
}
