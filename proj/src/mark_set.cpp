#include "guise/mark_set.hpp"

namespace guise {

std::vector<MarkId> MarkSet::members() const {
  std::vector<MarkId> out;
  out.reserve(size());
  for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
    out.push_back(static_cast<MarkId>(std::countr_zero(rest)));
  }
  return out;
}

bool canonical_less(MarkSet lhs, MarkSet rhs) {
  if (lhs.size() != rhs.size()) return lhs.size() < rhs.size();
  const std::uint64_t diff = lhs.bits() ^ rhs.bits();
  if (diff == 0) return false;
  // The lowest differing mark decides: whoever holds it is smaller.
  return (lhs.bits() & (diff & (~diff + 1))) != 0;
}

bool for_each_subset(MarkSet base, const std::function<bool(MarkSet)>& visit) {
  const std::vector<MarkId> pool = base.members();
  const std::size_t n = pool.size();
  std::vector<std::size_t> pick;
  for (std::size_t k = 0; k <= n; ++k) {
    pick.resize(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      MarkSet s;
      for (std::size_t i : pick) s.insert(pool[i]);
      if (!visit(s)) return false;
      // Advance to the next k-combination in lexicographic order.
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return true;
}

std::vector<MarkSet> subsets_of(MarkSet base) {
  std::vector<MarkSet> out;
  out.reserve(std::size_t{1} << base.size());
  for_each_subset(base, [&](MarkSet s) {
    out.push_back(s);
    return true;
  });
  return out;
}

std::vector<MarkSet> nonempty_subsets_of(MarkSet base) {
  std::vector<MarkSet> out = subsets_of(base);
  out.erase(out.begin());
  return out;
}

}  // namespace guise
