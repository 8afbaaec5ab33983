#include "guise/closure.hpp"

namespace guise {

ClosureResult closure(MarkSet x, const HornTheory& theory) {
  ClosureResult out{x, false, {}};
  const auto rules = theory.rules();
  std::vector<bool> spent(rules.size(), false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < rules.size(); ++i) {
      if (spent[i] || !rules[i].body.subset_of(out.closed_set)) continue;
      spent[i] = true;
      if (rules[i].derives_falsum()) {
        out.inconsistent = true;
        out.fired.push_back(i);
      } else if (!out.closed_set.contains(*rules[i].head)) {
        out.closed_set.insert(*rules[i].head);
        out.fired.push_back(i);
        changed = true;
      }
    }
  }
  return out;
}

MarkSet close(MarkSet x, const HornTheory& theory) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const HornRule& r : theory.rules()) {
      if (r.head && !x.contains(*r.head) && r.body.subset_of(x)) {
        x.insert(*r.head);
        changed = true;
      }
    }
  }
  return x;
}

bool entails(MarkSet phi, MarkSet psi, const HornTheory& theory) {
  return psi.subset_of(close(phi, theory));
}

bool is_closed(MarkSet x, const HornTheory& theory) {
  for (const HornRule& r : theory.rules()) {
    if (r.head && r.body.subset_of(x) && !x.contains(*r.head)) return false;
  }
  return true;
}

bool is_consistent(MarkSet x, const HornTheory& theory) {
  if (!theory.has_falsum_rules()) return true;
  x = close(x, theory);
  for (const HornRule& r : theory.rules()) {
    if (r.derives_falsum() && r.body.subset_of(x)) return false;
  }
  return true;
}

std::optional<MarkSet> replay(MarkSet start, std::span<const std::size_t> fired, const HornTheory& theory) {
  const auto rules = theory.rules();
  for (std::size_t i : fired) {
    if (i >= rules.size() || !rules[i].body.subset_of(start)) return std::nullopt;
    if (rules[i].head) start.insert(*rules[i].head);
  }
  return start;
}

ClosureLawReport verify_closure_laws(const HornTheory& theory, std::span<const MarkSet> samples) {
  ClosureLawReport report;
  std::vector<MarkSet> closed;
  closed.reserve(samples.size());
  for (MarkSet x : samples) {
    const MarkSet kx = close(x, theory);
    closed.push_back(kx);
    ++report.sets_checked;
    if (!x.subset_of(kx)) report.violations.push_back({ClosureLaw::Extensivity, x, std::nullopt});
    if (close(kx, theory) != kx) report.violations.push_back({ClosureLaw::Idempotence, x, std::nullopt});
  }
  for (std::size_t i = 0; i < samples.size(); ++i) {
    for (std::size_t j = 0; j < samples.size(); ++j) {
      if (!samples[i].subset_of(samples[j])) continue;
      ++report.pairs_checked;
      if (!closed[i].subset_of(closed[j])) {
        report.violations.push_back({ClosureLaw::Monotonicity, samples[i], samples[j]});
      }
    }
  }
  return report;
}

std::string_view law_name(ClosureLaw law) {
  switch (law) {
    case ClosureLaw::Extensivity: return "extensivity";
    case ClosureLaw::Monotonicity: return "monotonicity";
    case ClosureLaw::Idempotence: return "idempotence";
  }
  return "?";
}

}  // namespace guise
