#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "guise/audit.hpp"
#include "guise/closure.hpp"
#include "guise/formula.hpp"
#include "guise/lattice.hpp"
#include "guise/sat.hpp"
#include "guise/worlds.hpp"

namespace guise {

struct ClosureEntry {
  std::string label;  // guise name or written set
  MarkSet input;
  ClosureResult result;
};

struct WorldsEntry {
  std::vector<MarkSet> closed_sets;
  WorldSet selected;
};

struct EvalEntry {
  std::string name;  // query name, empty for ad-hoc formulas
  EvalResult result;
};

struct SatEntry {
  std::string formula;
  SatResult result;
};

struct LatticeEntry {
  ConceptLattice lattice;
  std::optional<GaloisReport> galois;
};

using ReportEntry = std::variant<ClosureEntry, WorldsEntry, EvalEntry, AuditReport, SatEntry, LatticeEntry>;

struct Report {
  std::string model;
  std::vector<ReportEntry> results;
};

enum class ReportFormat { Text, Json };

struct RenderOptions {
  ReportFormat format = ReportFormat::Text;
  bool timing = false;  // include wall-clock timings (breaks byte-determinism)
};

/// Renders results in input order. JSON output follows the
/// {"model": ..., "results": [...]} schema with sets as arrays of mark names
/// in declaration order; for fixed input it is byte-identical across runs
/// unless timings are requested.
std::string render_report(const Report& report, const GuiseModel& model, const RenderOptions& options = {});

}  // namespace guise
