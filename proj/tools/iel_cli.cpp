#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "iel/classical.hpp"
#include "iel/hilbert.hpp"
#include "iel/kripke.hpp"
#include "iel/prover.hpp"
#include "iel/search.hpp"
#include "iel/suite.hpp"
#include "iel/syntax.hpp"
#include "iel/translate.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUnknown = 2;
constexpr int kUsage = 64;
constexpr int kDataError = 65;

struct Exit {
  int code;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "iel: cannot read " << path << "\n";
    throw Exit{kUsage};
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

iel::Formula parse_arg(const std::string& text) {
  try {
    return iel::parse(text);
  } catch (const iel::ParseError& err) {
    std::cerr << "iel: " << err.what() << "\n  " << text << "\n  " << std::string(err.offset(), ' ') << "^\n";
    throw Exit{kDataError};
  }
}

iel::Logic logic_arg(const std::string& text) {
  try {
    return iel::parse_logic(text);
  } catch (const std::invalid_argument& err) {
    std::cerr << "iel: " << err.what() << "\n";
    throw Exit{kUsage};
  }
}

// A model file, or one of the built-in names M1..M4.
iel::KripkeModel load_model(const std::string& path) {
  if (!std::filesystem::exists(path) && path.size() == 2 && path[0] == 'M') {
    try {
      return iel::builtin_model(path);
    } catch (const std::exception&) {
    }
  }
  const std::string text = read_file(path);
  try {
    iel::LoadedModel loaded = iel::parse_model(text);
    for (const std::string& w : loaded.warnings) std::cerr << "warning: " << w << "\n";
    return loaded.model;
  } catch (const iel::ModelError& err) {
    std::cerr << "iel: " << path << ": " << err.what() << "\n";
    throw Exit{kDataError};
  }
}

void print_violations(const iel::ValidationReport& report) {
  for (const iel::Violation& v : report.violations) {
    std::cout << "violation " << v.condition << ":";
    for (int w : v.witnesses) std::cout << ' ' << w;
    std::cout << "\n";
  }
}

void print_countermodel(const iel::Countermodel& cm, bool dot) {
  std::cout << iel::render_model(cm.model);
  std::cout << "# refuted at world " << cm.world << "\n";
  if (dot) std::cout << iel::model_to_dot(cm.model);
}

int cmd_parse(const std::string& text) {
  const iel::Formula f = parse_arg(text);
  std::cout << iel::render(f) << "\n";
  return kOk;
}

int cmd_decide(const std::string& logic_name, const std::string& text, std::optional<std::size_t> max_worlds,
               std::optional<long> budget_ms, bool dot) {
  const iel::Logic logic = logic_arg(logic_name);
  const iel::Formula f = parse_arg(text);
  iel::SearchConfig cfg;
  if (budget_ms) cfg.time_budget = std::chrono::milliseconds(*budget_ms);
  const iel::Verdict v = iel::decide(logic, f, cfg);
  std::cout << iel::to_string(v.kind) << " in " << iel::to_string(logic) << "\n";
  int code = kUnknown;
  if (v.valid()) {
    std::cout << "# " << v.certificate.labels << " labels, " << v.certificate.root_candidates
              << " refuting roots closed in " << v.certificate.elimination_rounds << " rounds\n";
    for (const std::string& line : v.certificate.trace) std::cout << "# " << line << "\n";
    code = kOk;
  } else if (v.invalid()) {
    print_countermodel(*v.countermodel, dot);
    code = kFail;
  } else {
    std::cout << "# " << v.reason << "\n";
  }
  if (max_worlds) {
    cfg.max_worlds = *max_worlds;
    const auto found = iel::find_countermodel(logic, f, cfg);
    std::cout << "# brute force up to " << *max_worlds << " worlds: "
              << (found ? "countermodel with " + std::to_string(found->model.size()) + " worlds" : "none") << "\n";
    if (found && v.valid()) {
      std::cerr << "iel: prover and brute-force search disagree\n";
      return kUnknown;
    }
  }
  return code;
}

int cmd_countermodel(const std::string& logic_name, const std::string& text, std::size_t max_worlds, bool dot) {
  const iel::Logic logic = logic_arg(logic_name);
  const iel::Formula f = parse_arg(text);
  iel::SearchConfig cfg;
  cfg.max_worlds = max_worlds;
  const auto found = iel::find_countermodel(logic, f, cfg);
  if (!found) {
    std::cout << "no countermodel with at most " << max_worlds << " worlds\n";
    return kUnknown;
  }
  print_countermodel(*found, dot);
  return kFail;
}

int cmd_modelcheck(const std::string& path, const std::string& text, std::optional<int> world) {
  const iel::KripkeModel m = load_model(path);
  const iel::Formula f = parse_arg(text);
  const iel::ValidationReport report = iel::validate(m);
  if (!report.ok()) std::cerr << "warning: model fails the " << iel::to_string(m.logic) << " frame conditions\n";
  try {
    if (world) {
      const bool value = iel::forces(m, *world, f);
      std::cout << (value ? "true" : "false") << "\n";
      return value ? kOk : kFail;
    }
  } catch (const iel::ModelError& err) {
    std::cerr << "iel: " << err.what() << "\n";
    return kUsage;
  }
  const iel::WorldSet truth = iel::truth_set(m, f);
  for (std::size_t i = 0; i < m.size(); ++i)
    std::cout << m.ids[i] << ": " << ((truth & iel::bit(i)) ? "true" : "false") << "\n";
  return truth == m.all() ? kOk : kFail;
}

int cmd_validate(const std::string& path) {
  const std::string text = std::filesystem::exists(path) ? read_file(path) : std::string();
  if (text.find("variant:") != std::string::npos) {
    try {
      const iel::ClassicalModel m = iel::parse_classical_model(text);
      const iel::ValidationReport report = iel::validate(m);
      print_violations(report);
      std::cout << (report.ok() ? "ok" : "invalid") << " as " << iel::to_string(m.variant) << "\n";
      return report.ok() ? kOk : kFail;
    } catch (const iel::ModelError& err) {
      std::cerr << "iel: " << path << ": " << err.what() << "\n";
      return kDataError;
    }
  }
  const iel::KripkeModel m = load_model(path);
  const iel::ValidationReport report = iel::validate(m);
  print_violations(report);
  std::cout << (report.ok() ? "ok" : "invalid") << " as " << iel::to_string(m.logic) << "\n";
  return report.ok() ? kOk : kFail;
}

int cmd_translate(const std::string& target, const std::string& text) {
  const iel::Formula f = parse_arg(text);
  try {
    if (target == "s4v") {
      std::cout << iel::render(iel::godel_translate(f)) << "\n";
    } else if (target == "glivenko") {
      std::cout << iel::render(iel::glivenko_translate(f)) << "\n";
    } else {
      std::cout << iel::render(iel::kolmogorov_translate(f)) << "\n";
    }
  } catch (const iel::LanguageError& err) {
    std::cerr << "iel: " << err.what() << "\n";
    return kDataError;
  }
  return kOk;
}

int cmd_checkproof(const std::string& path) {
  iel::HilbertProof proof;
  try {
    proof = iel::parse_proof(read_file(path));
  } catch (const iel::ProofFormatError& err) {
    std::cerr << "iel: " << path << ": " << err.what() << "\n";
    return kDataError;
  }
  const iel::CheckResult r = iel::check_proof(proof);
  if (r.ok()) {
    std::cout << "ok: " << iel::render(proof.goal) << " in " << iel::to_string(proof.logic) << " ("
              << proof.lines.size() << " lines)\n";
    return kOk;
  }
  std::cout << "error at line " << r.error->line << ": " << r.error->reason << "\n";
  return kFail;
}

int cmd_suite(const std::string& report_path) {
  const iel::SuiteReport report = iel::run_paper_suite();
  std::cout << iel::render_suite_table(report);
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) {
      std::cerr << "iel: cannot write " << report_path << "\n";
      return kUsage;
    }
    out << iel::render_suite_tsv(report);
  }
  return report.ok() ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Intuitionistic epistemic logic toolkit (Int_K, IEL-, IEL)"};
  app.require_subcommand(1);

  std::string formula;
  std::string logic = "iel";
  std::string path;
  std::string target;
  std::string report;
  std::size_t max_worlds = 4;
  std::optional<std::size_t> cross_check;
  std::optional<long> budget;
  std::optional<int> world;
  bool dot = false;
  const std::vector<std::string> logics{"iel", "iel-", "intk"};

  auto* parse_cmd = app.add_subcommand("parse", "Parse and pretty-print a formula");
  parse_cmd->add_option("formula", formula)->required();

  auto* decide_cmd = app.add_subcommand("decide", "Decide validity with the tableau prover");
  decide_cmd->add_option("--logic", logic)->check(CLI::IsMember(logics, CLI::ignore_case));
  decide_cmd->add_option("--max-worlds", cross_check, "Also run the brute-force search up to N worlds");
  decide_cmd->add_option("--time-budget", budget, "Milliseconds before giving up");
  decide_cmd->add_flag("--dot", dot, "Emit the countermodel as a DOT graph");
  decide_cmd->add_option("formula", formula)->required();

  auto* cm_cmd = app.add_subcommand("countermodel", "Brute-force countermodel search");
  cm_cmd->add_option("--logic", logic)->check(CLI::IsMember(logics, CLI::ignore_case));
  cm_cmd->add_option("--max-worlds", max_worlds)->check(CLI::Range(1, 8));
  cm_cmd->add_flag("--dot", dot, "Emit the countermodel as a DOT graph");
  cm_cmd->add_option("formula", formula)->required();

  auto* mc_cmd = app.add_subcommand("modelcheck", "Evaluate a formula in a model file (or M1..M4)");
  mc_cmd->add_option("model", path)->required();
  mc_cmd->add_option("formula", formula)->required();
  mc_cmd->add_option("--world", world);

  auto* val_cmd = app.add_subcommand("validate", "Check the frame conditions of a model file");
  val_cmd->add_option("model", path)->required();

  auto* tr_cmd = app.add_subcommand("translate", "Translate a formula");
  tr_cmd->add_option("--target", target)
      ->required()
      ->check(CLI::IsMember({"s4v", "glivenko", "kolmogorov"}, CLI::ignore_case));
  tr_cmd->add_option("formula", formula)->required();

  auto* proof_cmd = app.add_subcommand("checkproof", "Check a Hilbert proof file");
  proof_cmd->add_option("proof", path)->required();

  auto* suite_cmd = app.add_subcommand("paper-suite", "Run the bundled reproduction suite");
  suite_cmd->add_option("--report", report, "Write a TSV report to PATH");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*parse_cmd) return cmd_parse(formula);
    if (*decide_cmd) return cmd_decide(logic, formula, cross_check, budget, dot);
    if (*cm_cmd) return cmd_countermodel(logic, formula, max_worlds, dot);
    if (*mc_cmd) return cmd_modelcheck(path, formula, world);
    if (*val_cmd) return cmd_validate(path);
    if (*tr_cmd) return cmd_translate(target, formula);
    if (*proof_cmd) return cmd_checkproof(path);
    if (*suite_cmd) return cmd_suite(report);
  } catch (const Exit& e) {
    return e.code;
  } catch (const iel::LanguageError& e) {
    std::cerr << "iel: " << e.what() << "\n";
    return kDataError;
  }
  return kUsage;
}
