#include "charcorr/report.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <json.hpp>
#include <sstream>

#include "charcorr/errors.hpp"

namespace charcorr {

namespace {

using nlohmann::json;

std::string yes(bool b) { return b ? "yes" : "no"; }

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// "1a", "2a", "2b", ... in class order
std::vector<std::string> class_labels(const ConjClasses& cc) {
  std::vector<std::string> out;
  std::map<std::uint32_t, int> seen;
  for (std::size_t k = 0; k < cc.count(); ++k) {
    const auto o = cc.rep_order(k);
    const int i = seen[o]++;
    std::string suffix;
    for (int n = i;; n = n / 26 - 1) {
      suffix.insert(suffix.begin(), static_cast<char>('a' + n % 26));
      if (n < 26) break;
    }
    out.push_back(std::to_string(o) + suffix);
  }
  return out;
}

std::string group_name(const Subgroup& g) {
  return g.order() == g.parent().order() ? g.parent().name() : g.describe();
}

json optional_index(const std::optional<std::size_t>& x) { return x ? json(*x) : json(nullptr); }

std::string trace_summary(const CharacterRecord& r, std::size_t sylow_order) {
  std::string s;
  for (const auto& st : r.trace) s += std::to_string(st.group.order()) + ">";
  return s + std::to_string(sylow_order);
}

json outcome_json(const InstanceOutcome& o) {
  const auto& r = o.report;
  json j;
  j["label"] = o.label;
  j["name"] = r.name;
  j["order"] = r.order;
  j["p"] = r.p;
  j["sylow_order"] = r.sylow_order;
  j["normalizer_order"] = r.normalizer_order;
  j["flags"] = {{"solvable", r.solvable}, {"self_normalizing", r.self_normalizing}, {"parity", r.parity}};
  j["counts"] = {{"group", r.count.group_count},
                 {"normalizer", r.count.normalizer_count},
                 {"linear", r.linear_count},
                 {"equal", r.count.equal()}};
  j["refusal"] = o.refusal;
  json recs = json::array();
  for (const auto& rec : r.records) {
    json steps = json::array();
    for (const auto& st : rec.trace)
      steps.push_back({{"order", st.group.order()},
                       {"k", st.k.order()},
                       {"l", st.l.order()},
                       {"h", st.h.order()},
                       {"k_theta", st.k_theta.order()},
                       {"theta", st.theta},
                       {"eta", st.eta},
                       {"fixed_points", st.fixed_points},
                       {"invariant_constituents", st.invariant_constituents}});
    recs.push_back({{"chi", rec.chi},
                    {"degree", rec.degree},
                    {"star", optional_index(rec.star)},
                    {"descent", optional_index(rec.descent)},
                    {"coincide", rec.coincide},
                    {"failure", rec.failure},
                    {"trace", steps}});
  }
  j["records"] = recs;
  j["star_bijective"] = r.star_bijective;
  j["descent_bijective"] = r.descent_bijective;
  j["verdict"] = r.verdict;
  return j;
}

void outcome_text(std::ostream& out, const InstanceOutcome& o) {
  const auto& r = o.report;
  out << "== " << o.label << " (" << r.name << ")  p = " << r.p << '\n';
  out << "|G| = " << r.order << "  |P| = " << r.sylow_order << "  |N_G(P)| = " << r.normalizer_order << '\n';
  out << "solvable " << yes(r.solvable) << "  self-normalizing " << yes(r.self_normalizing) << "  parity "
      << yes(r.parity) << '\n';
  if (!o.refusal.empty()) {
    out << "refused: " << o.refusal << '\n';
  } else {
    out << std::left << std::setw(6) << "chi" << std::setw(8) << "degree" << std::setw(6) << "star" << std::setw(9)
        << "descent" << std::setw(20) << "trace" << "match\n";
    for (const auto& rec : r.records) {
      out << std::setw(6) << rec.chi << std::setw(8) << rec.degree << std::setw(6)
          << (rec.star ? std::to_string(*rec.star) : "-") << std::setw(9)
          << (rec.descent ? std::to_string(*rec.descent) : "-") << std::setw(20)
          << trace_summary(rec, r.sylow_order) << yes(rec.coincide) << '\n';
      if (!rec.failure.empty()) out << rec.failure << (rec.failure.back() == '\n' ? "" : "\n");
    }
    out << std::right;
    out << "star bijective " << yes(r.star_bijective) << "  descent bijective " << yes(r.descent_bijective) << '\n';
  }
  out << "counts: Irr_p'(G) " << r.count.group_count << "  Irr_p'(N_G(P)) " << r.count.normalizer_count
      << "  Lin(P) " << r.linear_count << "  equal " << yes(r.count.equal()) << '\n';
  if (o.refusal.empty()) out << "verdict " << (r.verdict ? "PASS" : "FAIL") << '\n';
  out << '\n';
}

}  // namespace

Format parse_format(const std::string& s) {
  if (s == "text") return Format::text;
  if (s == "structured") return Format::structured;
  throw InputError("unknown format '" + s + "' (expected text or structured)");
}

std::string render_table(const CharacterTable& t, Format f) {
  const auto& cc = *t.classes;
  const auto labels = class_labels(cc);
  if (f == Format::structured) {
    json classes = json::array();
    for (std::size_t k = 0; k < cc.count(); ++k)
      classes.push_back({{"label", labels[k]},
                         {"order", cc.rep_order(k)},
                         {"size", cc.size(k)},
                         {"rep", cc.group().parent().element(cc.rep(k)).cycle_string()}});
    json chars = json::array();
    for (std::size_t i = 0; i < t.size(); ++i) {
      json vals = json::array();
      for (const auto& v : t[i].values()) vals.push_back(v.str());
      chars.push_back({{"index", i}, {"degree", t.degrees[i]}, {"values", vals}});
    }
    return dump({{"group", group_name(t.group())},
                 {"order", t.group().order()},
                 {"classes", classes},
                 {"characters", chars}});
  }
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"class"});
  rows.push_back({"size"});
  for (std::size_t k = 0; k < cc.count(); ++k) {
    rows[0].push_back(labels[k]);
    rows[1].push_back(std::to_string(cc.size(k)));
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    rows.push_back({"X." + std::to_string(i)});
    for (const auto& v : t[i].values()) rows.back().push_back(v.str());
  }
  std::vector<std::size_t> width(cc.count() + 1, 0);
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream out;
  out << group_name(t.group()) << "  order " << t.group().order() << "  classes " << cc.count() << '\n';
  for (const auto& row : rows) {
    out << std::left << std::setw(static_cast<int>(width[0])) << row[0] << std::right;
    for (std::size_t c = 1; c < row.size(); ++c) out << "  " << std::setw(static_cast<int>(width[c])) << row[c];
    out << '\n';
  }
  return out.str();
}

InstanceOutcome refused_outcome(std::string label, const McKayInstance& inst) {
  InstanceOutcome o;
  o.label = std::move(label);
  o.refusal = inst.descent_refusal();
  auto& r = o.report;
  r.name = inst.group.parent().name();
  r.order = inst.group.order();
  r.p = inst.p;
  r.sylow_order = inst.sylow.order();
  r.normalizer_order = inst.normalizer.order();
  r.solvable = inst.solvable;
  r.self_normalizing = inst.self_normalizing;
  r.parity = inst.parity;
  r.count = mckay_count(inst);
  r.linear_count = inst.sylow_table().linear().size();
  return o;
}

bool outcomes_ok(const std::vector<InstanceOutcome>& outs) {
  return std::all_of(outs.begin(), outs.end(), [](const InstanceOutcome& o) {
    return o.report.count.equal() && (!o.refusal.empty() || o.report.verdict);
  });
}

std::string render_outcomes(const std::vector<InstanceOutcome>& outs, Format f) {
  if (f == Format::structured) {
    json arr = json::array();
    for (const auto& o : outs) arr.push_back(outcome_json(o));
    return dump({{"instances", arr}, {"ok", outcomes_ok(outs)}});
  }
  std::ostringstream out;
  for (const auto& o : outs) outcome_text(out, o);
  out << "summary\n";
  for (const auto& o : outs) {
    const auto& r = o.report;
    out << "  " << std::left << std::setw(14) << o.label << std::right << " p = " << std::setw(2) << r.p << "  ";
    if (o.refusal.empty())
      out << (r.verdict ? "PASS" : "FAIL") << "  " << r.records.size() << " pairs";
    else
      out << "REFUSED (" << o.refusal << ")";
    out << "  counts " << r.count.group_count << "/" << r.count.normalizer_count << '\n';
  }
  out << (outcomes_ok(outs) ? "all checks passed\n" : "FAILURES\n");
  return out.str();
}

std::string render_remark(const RemarkReport& r, Format f) {
  if (f == Format::structured) {
    json cands = json::array();
    for (const auto& c : r.candidates) {
      json vals = json::array();
      for (const auto& v : c.values) vals.push_back(v.str());
      json pairs = json::array();
      for (auto [chi, xi] : c.pairs) pairs.push_back({chi, xi});
      cands.push_back({{"alpha", c.alpha},
                       {"beta", c.beta},
                       {"values", vals},
                       {"viable", c.viable},
                       {"matches_values", c.matches_values},
                       {"pairs", pairs}});
    }
    json pairs = json::array();
    for (const auto& pi : r.pairs)
      pairs.push_back({{"chi", pi.chi},
                       {"xi", pi.xi},
                       {"chi_degree", pi.chi_degree},
                       {"xi_degree", pi.xi_degree},
                       {"inner", to_string(pi.inner)}});
    json classes = json::array();
    for (std::size_t c = 0; c < r.h_class_orders.size(); ++c)
      classes.push_back({{"order", r.h_class_orders[c]}, {"size", r.h_class_sizes[c]}});
    return dump({{"orders",
                  {{"G", r.order}, {"K", r.k_order}, {"L", r.l_order}, {"H", r.h_order}, {"P", r.p_order},
                   {"N", r.n_order}}},
                 {"extraspecial", r.extraspecial},
                 {"self_normalizing", r.self_normalizing},
                 {"e", r.e},
                 {"e_conjugate", r.e_conjugate},
                 {"phi_degree", r.phi_degree},
                 {"invariant_constituents", r.invariant_constituents},
                 {"h_classes", classes},
                 {"candidates", cands},
                 {"chosen", optional_index(r.chosen)},
                 {"pairs", pairs},
                 {"verdict", r.verdict}});
  }
  std::ostringstream out;
  out << "order-648 group: extraspecial 3^(1+2) x| SL(2,3)\n";
  out << "|G| = " << r.order << "  |K| = " << r.k_order << "  |L| = " << r.l_order << "  |H| = " << r.h_order
      << "  |P| = " << r.p_order << "  |N_G(P)| = " << r.n_order << '\n';
  out << "K extraspecial " << yes(r.extraspecial) << "  self-normalizing " << yes(r.self_normalizing) << '\n';
  out << "fully ramified: e = " << r.e << " (conjugate theta: " << r.e_conjugate << ")  phi(1) = " << r.phi_degree
      << '\n';
  out << "P-invariant constituents of theta^K: " << r.invariant_constituents << '\n';
  out << "H classes (order/size):";
  for (std::size_t c = 0; c < r.h_class_orders.size(); ++c)
    out << ' ' << r.h_class_orders[c] << '/' << r.h_class_sizes[c];
  out << '\n';
  out << "psi candidates (alpha + beta):\n";
  for (std::size_t i = 0; i < r.candidates.size(); ++i) {
    const auto& c = r.candidates[i];
    out << "  " << i << ": X" << c.alpha << " + X" << c.beta << "  viable " << yes(c.viable) << "  matches "
        << yes(c.matches_values) << "  values";
    for (const auto& v : c.values) out << ' ' << v.str();
    out << '\n';
  }
  if (r.chosen) {
    const auto& c = r.candidates[*r.chosen];
    out << "psi = candidate " << *r.chosen << '\n';
    for (std::size_t k = 0; k < c.values.size(); ++k)
      out << "  psi on order-" << r.h_class_orders[k] << " class: " << c.values[k].str() << '\n';
  } else {
    out << "psi: no viable candidate matches\n";
  }
  out << "pairs (chi, xi, chi(1), xi(1), <chi_N, xi>):\n";
  for (const auto& pi : r.pairs)
    out << "  X" << pi.chi << "  X" << pi.xi << "  " << pi.chi_degree << "  " << pi.xi_degree << "  "
        << to_string(pi.inner) << '\n';
  out << "verdict " << (r.verdict ? "PASS" : "FAIL") << '\n';
  return out.str();
}

}  // namespace charcorr
