// charcorr: character tables, Sylow character correspondences and the
// order-648 example from the command line.
//
// Exit status: 0 all checks pass, 1 a theorem check failed, 2 input or
// hypothesis error.

#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "charcorr/errors.hpp"
#include "charcorr/mckay.hpp"
#include "charcorr/report.hpp"
#include "charcorr/showcase.hpp"

using namespace charcorr;

namespace {

struct RunConfig {
  std::string group;
  unsigned p = 0;
  std::string format = "text";
  std::string out;
  std::size_t cap = kDefaultEnumerationCap;
  unsigned threads = 1;
  bool all = false;
  std::string corpus_dir = CHARCORR_CORPUS_DIR;
  bool verbose = false;
};

class Timer {
 public:
  Timer(bool on, std::string what) : on_(on), what_(std::move(what)), start_(std::chrono::steady_clock::now()) {}
  ~Timer() {
    if (!on_) return;
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start_;
    std::cerr << what_ << ": " << dt.count() << " s\n";
  }

 private:
  bool on_;
  std::string what_;
  std::chrono::steady_clock::time_point start_;
};

GroupDescription resolve_group(const std::string& spec) {
  if (std::filesystem::is_regular_file(spec)) return read_group_file(spec);
  const auto names = builtin_names();
  if (std::find(names.begin(), names.end(), spec) != names.end()) return builtin_group(spec);
  throw InputError("cannot open group file '" + spec + "'");
}

GroupDescription corpus_group(const RunConfig& cfg, const std::string& file) {
  const auto path = std::filesystem::path(cfg.corpus_dir) / file;
  if (std::filesystem::is_regular_file(path)) return read_group_file(path.string());
  return builtin_group(file);
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw InputError("cannot write '" + cfg.out + "'");
  f << text;
}

int cmd_table(const RunConfig& cfg) {
  const auto fmt = parse_format(cfg.format);
  Timer t(cfg.verbose, "table");
  const auto g = load_group(resolve_group(cfg.group), cfg.cap);
  emit(cfg, render_table(*character_table(Subgroup::whole(g)), fmt));
  return 0;
}

InstanceOutcome run_instance(const RunConfig& cfg, const std::string& label, const GroupDescription& desc,
                             unsigned p) {
  Timer t(cfg.verbose, label + " p=" + std::to_string(p));
  const auto g = load_group(desc, cfg.cap);
  const auto inst = check_hypotheses(Subgroup::whole(g), p);
  if (!inst.descent_applicable()) return refused_outcome(label, inst);
  return {label, verify_main(inst, cfg.threads), {}};
}

int cmd_verify(const RunConfig& cfg) {
  const auto fmt = parse_format(cfg.format);
  std::vector<InstanceOutcome> outs;
  if (cfg.all) {
    for (const auto& e : corpus()) outs.push_back(run_instance(cfg, e.file, corpus_group(cfg, e.file), e.p));
  } else {
    if (cfg.group.empty() || cfg.p == 0) throw InputError("verify needs --group and -p, or --all");
    const auto desc = resolve_group(cfg.group);
    auto o = run_instance(cfg, desc.name, desc, cfg.p);
    if (!o.refusal.empty()) throw HypothesisError(o.refusal);
    outs.push_back(std::move(o));
  }
  emit(cfg, render_outcomes(outs, fmt));
  return outcomes_ok(outs) ? 0 : 1;
}

int cmd_remark(const RunConfig& cfg) {
  const auto fmt = parse_format(cfg.format);
  Timer t(cfg.verbose, "remark648");
  const auto r = run_remark(cfg.cap);
  emit(cfg, render_remark(r, fmt));
  return r.verdict ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Exact character tables and Sylow character correspondences"};
  app.require_subcommand(1);
  auto common = [&cfg](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
    sub->add_option("--out", cfg.out, "write the report to this file");
    sub->add_option("--cap", cfg.cap, "enumeration cap")->check(CLI::PositiveNumber);
    sub->add_flag("-v,--verbose", cfg.verbose, "timings on stderr");
  };

  auto* table = app.add_subcommand("table", "print a character table");
  table->add_option("--group", cfg.group, "group file or builtin name")->required();
  common(table);

  auto* verify = app.add_subcommand("verify", "check that the star map and the descent agree");
  verify->add_option("--group", cfg.group, "group file or builtin name");
  verify->add_option("-p,--prime", cfg.p, "prime");
  verify->add_flag("--all", cfg.all, "run every corpus instance");
  verify->add_option("--corpus", cfg.corpus_dir, "corpus directory for --all");
  verify->add_option("--threads", cfg.threads, "worker threads per instance")->check(CLI::PositiveNumber);
  common(verify);

  auto* remark = app.add_subcommand("remark648", "verify the order-648 example");
  common(remark);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*table) return cmd_table(cfg);
    if (*verify) return cmd_verify(cfg);
    return cmd_remark(cfg);
  } catch (const TheoremViolation& e) {
    std::cerr << "theorem check failed: " << e.what() << '\n' << e.forensics();
    return 1;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const HypothesisError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal check failed: " << e.what() << '\n';
    return 1;
  }
}
