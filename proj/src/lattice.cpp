#include "guise/lattice.hpp"

#include <algorithm>
#include <unordered_set>

#include "guise/closure.hpp"
#include "guise/error.hpp"
#include "guise/intention.hpp"

namespace guise {

ConceptLattice::ConceptLattice(std::vector<MarkSet> elements, const HornTheory& theory)
    : elements_(std::move(elements)) {
  const std::size_t n = elements_.size();
  meet_.resize(n * n);
  join_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto m = index_of(elements_[a] & elements_[b]);
      const auto j = index_of(close(elements_[a] | elements_[b], theory));
      if (!m || !j) throw Error("lattice elements are not closed under meet and join");
      meet_[a * n + b] = *m;
      join_[a * n + b] = *j;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (elements_[i].subset_of(elements_[bottom_]) ) bottom_ = i;
    if (elements_[top_].subset_of(elements_[i])) top_ = i;
  }
  // Transitive reduction of strict inclusion.
  for (std::size_t lo = 0; lo < n; ++lo) {
    for (std::size_t hi = 0; hi < n; ++hi) {
      if (lo == hi || !elements_[lo].subset_of(elements_[hi])) continue;
      const bool covered = std::none_of(elements_.begin(), elements_.end(), [&](MarkSet mid) {
        return mid != elements_[lo] && mid != elements_[hi] && elements_[lo].subset_of(mid) &&
               mid.subset_of(elements_[hi]);
      });
      if (covered) edges_.emplace_back(lo, hi);
    }
  }
}

std::optional<std::size_t> ConceptLattice::index_of(MarkSet s) const {
  const auto it = std::find(elements_.begin(), elements_.end(), s);
  if (it == elements_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

ConceptLattice build_lattice(const GuiseModel& model, std::size_t guard) {
  const Universe& u = model.universe();
  if (u.size() > guard) {
    throw BoundExceeded("universe has " + std::to_string(u.size()) + " marks; lattice construction is limited to " +
                        std::to_string(guard));
  }
  std::vector<MarkSet> closed;
  const std::uint64_t limit = std::uint64_t{1} << u.size();
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    if (is_closed(MarkSet(bits), model.theory())) closed.emplace_back(bits);
  }
  std::sort(closed.begin(), closed.end(), CanonicalLess{});
  return ConceptLattice(std::move(closed), model.theory());
}

GaloisReport galois_check(const GuiseModel& model, GuiseDomain domain, std::size_t bound) {
  std::vector<MarkSet> bundles;
  if (domain == GuiseDomain::Declared) {
    for (const Guise& g : model.guises()) bundles.push_back(g.marks);
  } else {
    if (model.universe().size() > bound) {
      throw BoundExceeded("all-subsets Galois check over " + std::to_string(model.universe().size()) +
                          " marks exceeds the bound " + std::to_string(bound));
    }
    bundles = subsets_of(model.universe().all());
  }

  GaloisReport report;
  for (MarkSet g : bundles) {
    const std::vector<MarkSet> f = intention_set(g, model).propositions(bound);
    const std::unordered_set<MarkSet> image(f.begin(), f.end());
    for (MarkSet h : bundles) {
      if (h.size() > bound) throw BoundExceeded("U(h) for |h| = " + std::to_string(h.size()) + " exceeds the bound");
      const std::vector<MarkSet> u = subsets_of(h);
      const bool meets = std::any_of(u.begin(), u.end(), [&](MarkSet phi) { return image.count(phi) != 0; });
      const bool related = relates(g, h, model).holds;
      ++report.pairs_checked;
      if (meets != related) report.mismatches.push_back({g, h, related, meets});
    }
  }
  return report;
}

std::string export_dot(const ConceptLattice& lattice, const Universe& universe) {
  std::string out = "digraph concepts {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    out += "  n" + std::to_string(i) + " [label=\"" + universe.format(lattice.elements()[i]) + "\"];\n";
  }
  for (const auto& [lo, hi] : lattice.hasse_edges()) {
    out += "  n" + std::to_string(lo) + " -> n" + std::to_string(hi) + ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace guise
