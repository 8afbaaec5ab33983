#include "guise/report.hpp"

#include <json.hpp>
#include <sstream>

namespace guise {

namespace {

using Json = nlohmann::ordered_json;

struct JsonWriter {
  const GuiseModel& model;
  bool timing;

  Json set(MarkSet s) const { return Json(model.universe().names_of(s)); }

  std::string rule_text(std::size_t i) const {
    const HornRule& r = model.theory().rules()[i];
    std::string out;
    for (const std::string& n : model.universe().names_of(r.body)) out += n + " ";
    return out + "-> " + (r.head ? model.universe().name(*r.head) : std::string("false"));
  }

  Json value(const BoundValue& v) const {
    switch (v.kind) {
      case BoundValue::Kind::Guise: return Json{{"guise", v.label}, {"marks", set(v.marks)}};
      case BoundValue::Kind::Proposition: return set(v.marks);
      case BoundValue::Kind::Template: {
        Json j{{"template", v.index}, {"marks", set(v.marks)}};
        if (!v.label.empty()) j["tag"] = v.label;
        return j;
      }
      case BoundValue::Kind::Mark: return model.universe().name(v.mark);
      case BoundValue::Kind::World: return Json{{"world", v.index}, {"marks", set(v.marks)}};
    }
    return nullptr;
  }

  Json operator()(const ClosureEntry& e) const {
    Json fired = Json::array();
    for (std::size_t i : e.result.fired) fired.push_back({{"rule", i}, {"text", rule_text(i)}});
    return {{"kind", "closure"},       {"label", e.label},
            {"input", set(e.input)},   {"closure", set(e.result.closed_set)},
            {"inconsistent", e.result.inconsistent}, {"fired", fired}};
  }

  Json operator()(const WorldsEntry& e) const {
    Json closed = Json::array();
    for (MarkSet s : e.closed_sets) closed.push_back(set(s));
    Json worlds = Json::array();
    for (MarkSet s : e.selected.worlds) worlds.push_back(set(s));
    Json announced = Json::array();
    for (MarkSet s : model.announcements()) announced.push_back(set(s));
    return {{"kind", "worlds"},
            {"policy", keyword(e.selected.policy_used)},
            {"closed_sets", closed},
            {"announcements", announced},
            {"worlds", worlds},
            {"warnings", e.selected.warnings}};
  }

  Json operator()(const EvalEntry& e) const {
    Json trace = Json::array();
    for (const TraceEntry& t : e.result.trace) {
      Json j{{"atom", t.atom}, {"value", t.value}};
      if (t.witness) j["witness"] = set(*t.witness);
      if (!t.note.empty()) j["note"] = t.note;
      trace.push_back(std::move(j));
    }
    Json j{{"kind", "eval"}};
    if (!e.name.empty()) j["name"] = e.name;
    j["formula"] = e.result.formula;
    j["verdict"] = e.result.verdict;
    j["trace"] = trace;
    j["trace_truncated"] = e.result.trace_truncated;
    if (timing) j["elapsed_us"] = e.result.elapsed.count();
    return j;
  }

  Json operator()(const AuditReport& r) const {
    Json cex = Json::array();
    for (const Binding& b : r.counterexamples) {
      Json j = Json::object();
      for (const auto& [var, v] : b.vars) j[var] = value(v);
      if (!b.detail.empty()) j["detail"] = b.detail;
      cex.push_back(std::move(j));
    }
    Json j{{"kind", "audit"},         {"axiom", axiom_name(r.axiom)},
           {"verdict", verdict_name(r.verdict)}, {"instances_checked", r.instances_checked},
           {"violations", r.violations}, {"counterexamples", cex}};
    if (!r.note.empty()) j["note"] = r.note;
    return j;
  }

  Json operator()(const SatEntry& e) const {
    Json j{{"kind", "sat"},
           {"formula", e.formula},
           {"variable", e.result.variable},
           {"satisfiable", e.result.witness.has_value()}};
    j["witness"] = e.result.witness ? set(*e.result.witness) : Json(nullptr);
    j["candidates_checked"] = e.result.candidates_checked;
    return j;
  }

  Json operator()(const LatticeEntry& e) const {
    Json elements = Json::array();
    for (MarkSet s : e.lattice.elements()) elements.push_back(set(s));
    Json edges = Json::array();
    for (const auto& [lo, hi] : e.lattice.hasse_edges()) edges.push_back({lo, hi});
    Json j{{"kind", "lattice"},
           {"elements", elements},
           {"top", e.lattice.top()},
           {"bottom", e.lattice.bottom()},
           {"edges", edges}};
    if (e.galois) {
      Json mismatches = Json::array();
      for (const GaloisMismatch& m : e.galois->mismatches) {
        mismatches.push_back(
            {{"g", set(m.g)}, {"h", set(m.h)}, {"relation", m.relation}, {"intersection", m.intersection}});
      }
      j["galois"] = {{"pairs_checked", e.galois->pairs_checked},
                     {"holds", e.galois->ok()},
                     {"mismatches", mismatches}};
    }
    return j;
  }
};

struct TextWriter {
  const GuiseModel& model;
  bool timing;
  std::ostringstream& out;

  std::string set(MarkSet s) const { return model.universe().format(s); }

  void operator()(const ClosureEntry& e) const {
    out << "closure " << e.label << " = " << set(e.result.closed_set);
    if (e.result.inconsistent) out << "  (inconsistent)";
    out << "\n";
    for (std::size_t i : e.result.fired) out << "  fired rule " << i + 1 << "\n";
  }

  void operator()(const WorldsEntry& e) const {
    out << "closed sets (" << e.closed_sets.size() << "):";
    for (MarkSet s : e.closed_sets) out << " " << set(s);
    out << "\nworlds [" << keyword(e.selected.policy_used) << "] (" << e.selected.worlds.size() << "):";
    for (MarkSet s : e.selected.worlds) out << " " << set(s);
    out << "\n";
    for (MarkSet s : model.announcements()) out << "  announced " << set(s) << "\n";
    for (const std::string& w : e.selected.warnings) out << "  warning: " << w << "\n";
  }

  void operator()(const EvalEntry& e) const {
    if (!e.name.empty()) out << e.name << ": ";
    out << e.result.formula << " => " << (e.result.verdict ? "true" : "false");
    if (timing) out << "  (" << e.result.elapsed.count() << " us)";
    out << "\n";
    for (const TraceEntry& t : e.result.trace) {
      out << "  " << t.atom << " = " << (t.value ? "true" : "false");
      if (t.witness) out << "  witness " << set(*t.witness);
      if (!t.note.empty()) out << "  (" << t.note << ")";
      out << "\n";
    }
    if (e.result.trace_truncated) out << "  ... trace truncated\n";
  }

  void operator()(const AuditReport& r) const {
    out << axiom_name(r.axiom) << ": " << verdict_name(r.verdict) << "  (" << r.instances_checked
        << " instances, " << r.violations << " violations)\n";
    if (!r.note.empty()) out << "  note: " << r.note << "\n";
    for (const Binding& b : r.counterexamples) {
      out << "  counterexample:";
      for (const auto& [var, v] : b.vars) {
        out << " " << var << "=";
        if (v.kind == BoundValue::Kind::Mark) {
          out << model.universe().name(v.mark);
        } else if (v.kind == BoundValue::Kind::Guise) {
          out << v.label << set(v.marks);
        } else {
          out << set(v.marks);
          if (v.kind == BoundValue::Kind::Template && !v.label.empty()) out << "[" << v.label << "]";
        }
      }
      if (!b.detail.empty()) out << "  (" << b.detail << ")";
      out << "\n";
    }
  }

  void operator()(const SatEntry& e) const {
    out << "sat " << e.formula << ": ";
    if (e.result.witness) {
      out << e.result.variable << " = " << set(*e.result.witness);
    } else {
      out << "unsatisfiable";
    }
    out << "  (" << e.result.candidates_checked << " candidates)\n";
  }

  void operator()(const LatticeEntry& e) const {
    out << "lattice: " << e.lattice.size() << " elements, " << e.lattice.hasse_edges().size()
        << " covering edges, top " << set(e.lattice.elements()[e.lattice.top()]) << ", bottom "
        << set(e.lattice.elements()[e.lattice.bottom()]) << "\n";
    for (const auto& [lo, hi] : e.lattice.hasse_edges()) {
      out << "  " << set(e.lattice.elements()[lo]) << " < " << set(e.lattice.elements()[hi]) << "\n";
    }
    if (e.galois) {
      out << "galois: " << (e.galois->ok() ? "holds" : "fails") << " on " << e.galois->pairs_checked << " pairs\n";
      for (const GaloisMismatch& m : e.galois->mismatches) {
        out << "  mismatch g=" << set(m.g) << " h=" << set(m.h) << "\n";
      }
    }
  }
};

}  // namespace

std::string render_report(const Report& report, const GuiseModel& model, const RenderOptions& options) {
  if (options.format == ReportFormat::Json) {
    Json results = Json::array();
    const JsonWriter writer{model, options.timing};
    for (const ReportEntry& e : report.results) results.push_back(std::visit(writer, e));
    Json doc{{"model", report.model}, {"results", results}};
    return doc.dump(2) + "\n";
  }
  std::ostringstream out;
  const TextWriter writer{model, options.timing, out};
  for (const ReportEntry& e : report.results) std::visit(writer, e);
  return out.str();
}

}  // namespace guise
