#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "guise/mark_set.hpp"
#include "guise/model.hpp"
#include "guise/worlds.hpp"

namespace guise {

/// The T-closed subsets of P under inclusion. Meet is intersection, join is
/// the closure of the union. Falsum rules play no part: the lattice is the
/// one of mark-closed sets, consistent or not.
class ConceptLattice {
 public:
  ConceptLattice(std::vector<MarkSet> elements, const HornTheory& theory);

  const std::vector<MarkSet>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  std::optional<std::size_t> index_of(MarkSet s) const;

  std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a * size() + b]; }
  std::size_t join(std::size_t a, std::size_t b) const { return join_[a * size() + b]; }
  std::size_t top() const { return top_; }
  std::size_t bottom() const { return bottom_; }

  /// Covering pairs (lower, upper), ordered by lower then upper index.
  const std::vector<std::pair<std::size_t, std::size_t>>& hasse_edges() const { return edges_; }

 private:
  std::vector<MarkSet> elements_;
  std::vector<std::size_t> meet_;
  std::vector<std::size_t> join_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::size_t top_ = 0;
  std::size_t bottom_ = 0;
};

/// Builds the lattice of all T-closed sets. Throws BoundExceeded past `guard`.
ConceptLattice build_lattice(const GuiseModel& model, std::size_t guard = kDefaultEnumerationGuard);

enum class GuiseDomain { Declared, AllSubsets };

struct GaloisMismatch {
  MarkSet g;
  MarkSet h;
  bool relation = false;      // relates(g, h).holds
  bool intersection = false;  // F(g) ∩ U(h) ≠ ∅
};

struct GaloisReport {
  std::size_t pairs_checked = 0;
  std::vector<GaloisMismatch> mismatches;
  bool ok() const { return mismatches.empty(); }
};

/// Compares R(g, h) with F(g) ∩ U(h) ≠ ∅, where F(g) = J(g) is materialized
/// and U(h) is every subset of h, for all pairs in the chosen domain.
GaloisReport galois_check(const GuiseModel& model, GuiseDomain domain = GuiseDomain::Declared,
                          std::size_t bound = 12);

/// Hasse diagram in Graphviz DOT.
std::string export_dot(const ConceptLattice& lattice, const Universe& universe);

}  // namespace guise
