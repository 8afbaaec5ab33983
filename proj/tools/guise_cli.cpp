// Command-line front end: loads a model file and runs closure, world,
// evaluation, audit, lattice and satisfiability queries against it.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "guise/audit.hpp"
#include "guise/closure.hpp"
#include "guise/document.hpp"
#include "guise/error.hpp"
#include "guise/formula.hpp"
#include "guise/lattice.hpp"
#include "guise/model.hpp"
#include "guise/report.hpp"
#include "guise/sat.hpp"
#include "guise/worlds.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitAuditFailed = 3;

guise::GuiseModel load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw guise::ValidationError("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  guise::ModelDocument doc = guise::parse_model(buf.str());
  if (doc.name.empty()) doc.name = std::filesystem::path(path).stem().string();
  return guise::validate_model(doc);
}

// A guise name, or a written set such as "{a c}".
std::pair<std::string, guise::MarkSet> resolve_bundle(const std::string& arg, const guise::GuiseModel& model) {
  if (const guise::Guise* g = model.find_guise(arg)) return {g->name, g->marks};
  std::string body = arg;
  if (body.empty() || body.front() != '{' || body.back() != '}') {
    throw guise::ValidationError("unknown guise '" + arg + "'");
  }
  body = body.substr(1, body.size() - 2);
  for (char& c : body) {
    if (c == ',') c = ' ';
  }
  std::istringstream words(body);
  std::vector<std::string> names;
  for (std::string w; words >> w;) names.push_back(w);
  const guise::MarkSet s = guise::normalize_proposition(names, model.universe());
  return {model.universe().format(s), s};
}

std::vector<guise::Axiom> parse_axioms(const std::string& list) {
  std::vector<guise::Axiom> out;
  std::istringstream in(list);
  for (std::string item; std::getline(in, item, ',');) {
    const auto a = guise::axiom_from(item);
    if (!a) throw guise::ValidationError("unknown axiom '" + item + "'");
    out.push_back(*a);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Guise model workbench: closures, worlds, intention, audits"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json = false;
  bool timing = false;
  bool expect_true = false;
  std::size_t bound = 12;
  std::size_t guard = guise::kDefaultEnumerationGuard;
  app.add_flag("--json", json, "Emit the JSON report");
  app.add_flag("--timing", timing, "Include evaluation timings");
  app.add_flag("--expect-true", expect_true, "Exit 1 if any evaluated formula is false");
  app.add_option("--bound", bound, "Mark limit for all-subsets proposition domains")->capture_default_str();
  app.add_option("--guard", guard, "Mark limit for exhaustive enumeration")->capture_default_str();

  std::string file;
  auto* closure_cmd = app.add_subcommand("closure", "Closure of a guise or set");
  std::vector<std::string> closure_args;
  closure_cmd->add_option("file", file)->required();
  closure_cmd->add_option("-g,--guise", closure_args, "Guise name or {set}; repeatable")->required();

  auto* worlds_cmd = app.add_subcommand("worlds", "Closed sets and selected worlds");
  std::vector<std::string> announcements;
  worlds_cmd->add_option("file", file)->required();
  worlds_cmd->add_option("--announce", announcements, "Announce a {set} first; repeatable");

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate formulas");
  std::vector<std::string> formulas;
  bool run_queries = false;
  eval_cmd->add_option("file", file)->required();
  eval_cmd->add_option("-e,--expr", formulas, "Formula; repeatable");
  eval_cmd->add_flag("--queries", run_queries, "Evaluate the model's named queries");

  auto* audit_cmd = app.add_subcommand("audit", "Audit axiom schemata");
  std::string axiom_list;
  audit_cmd->add_option("file", file)->required();
  audit_cmd->add_option("--axioms", axiom_list, "Comma-separated axiom ids (default: all)");

  auto* lattice_cmd = app.add_subcommand("lattice", "Lattice of closed sets");
  bool dot = false;
  bool galois = false;
  lattice_cmd->add_option("file", file)->required();
  lattice_cmd->add_flag("--dot", dot, "Print the Hasse diagram as DOT");
  lattice_cmd->add_flag("--galois", galois, "Also check R against the Galois reading");

  auto* sat_cmd = app.add_subcommand("sat", "Search for a bundle satisfying a formula in one free guise");
  std::string sat_formula;
  sat_cmd->add_option("file", file)->required();
  sat_cmd->add_option("-e,--expr", sat_formula)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    guise::GuiseModel model = load(file);
    guise::Report report{model.name(), {}};
    int status = kExitOk;

    if (*closure_cmd) {
      for (const std::string& arg : closure_args) {
        const auto [label, marks] = resolve_bundle(arg, model);
        report.results.emplace_back(guise::ClosureEntry{label, marks, guise::closure(marks, model.theory())});
      }
    } else if (*worlds_cmd) {
      for (const std::string& a : announcements) model = guise::announce(model, resolve_bundle(a, model).second);
      report.results.emplace_back(
          guise::WorldsEntry{guise::enumerate_closed_sets(model, guard), guise::select_worlds(model, guard)});
    } else if (*eval_cmd) {
      std::vector<std::pair<std::string, std::string>> todo;
      if (run_queries) {
        for (const guise::Query& q : model.queries()) todo.emplace_back(q.name, q.text);
      }
      for (const std::string& f : formulas) todo.emplace_back("", f);
      for (const auto& [name, text] : todo) {
        const guise::Formula f = guise::parse_formula(text, model);
        guise::EvalResult r = guise::eval_formula(f, model, text);
        if (expect_true && !r.verdict) status = kExitFalse;
        report.results.emplace_back(guise::EvalEntry{name, std::move(r)});
      }
    } else if (*audit_cmd) {
      const guise::AuditBounds bounds{bound, guard, 16};
      const std::vector<guise::Axiom> axioms =
          axiom_list.empty() ? guise::standard_axioms() : parse_axioms(axiom_list);
      for (guise::Axiom a : axioms) {
        guise::AuditReport r = guise::audit_axiom(model, a, bounds);
        if (r.verdict == guise::Verdict::Fail) status = kExitAuditFailed;
        report.results.emplace_back(std::move(r));
      }
    } else if (*lattice_cmd) {
      guise::ConceptLattice lattice = guise::build_lattice(model, guard);
      if (dot) {
        std::cout << guise::export_dot(lattice, model.universe());
        return kExitOk;
      }
      std::optional<guise::GaloisReport> g;
      if (galois) g = guise::galois_check(model, guise::GuiseDomain::Declared, bound);
      report.results.emplace_back(guise::LatticeEntry{std::move(lattice), std::move(g)});
    } else if (*sat_cmd) {
      const guise::Formula f = guise::parse_formula(sat_formula, model, {.allow_free_guise_vars = true});
      report.results.emplace_back(guise::SatEntry{sat_formula, guise::sat_search(f, model, guard)});
    }

    const guise::RenderOptions options{json ? guise::ReportFormat::Json : guise::ReportFormat::Text, timing};
    std::cout << guise::render_report(report, model, options);
    return status;
  } catch (const guise::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
}
