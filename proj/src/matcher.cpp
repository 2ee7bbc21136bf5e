#include "mcor/matcher.hpp"

#include <algorithm>
#include <future>
#include <numeric>

namespace mcor {

namespace {

// Core DBI search. Collects witnesses only when `out` is non-null.
int dbi_search(const IndexedSequence& idx, const Pattern& p,
               std::vector<Occurrence>* out, DbiStats* stats) {
  const std::size_t m = p.size();
  const int a = p.gap.min_gap;
  const int b = p.gap.max_gap;

  std::vector<const std::vector<int>*> arrays(m);
  for (std::size_t j = 0; j < m; ++j) {
    arrays[j] = idx.positions_of(p.items[j]);
    if (!arrays[j] || arrays[j]->empty()) return 0;
  }

  if (m == 1) {
    // Every position of the single item is its own occurrence.
    if (out)
      for (int pos : *arrays[0]) out->push_back({pos});
    if (stats) stats->element_visits += static_cast<long long>(arrays[0]->size());
    return static_cast<int>(arrays[0]->size());
  }

  std::vector<std::size_t> cursor(m, 0);  // next unused element per level
  std::vector<int> occ(m, 0);
  int support = 0;

  for (int root : *arrays[0]) {
    if (stats) ++stats->element_visits;
    occ[0] = root;
    std::size_t level = 1;  // level currently searching for a child of occ[level-1]
    while (level > 0 && level < m) {
      const std::vector<int>& arr = *arrays[level];
      std::size_t c = cursor[level];
      // Consume every candidate that falls short of the minimum gap.
      while (c < arr.size() && arr[c] - occ[level - 1] - 1 < a) {
        if (stats) ++stats->element_visits;
        ++c;
      }
      cursor[level] = c;
      if (c < arr.size() && arr[c] - occ[level - 1] - 1 <= b) {
        if (stats) ++stats->element_visits;
        cursor[level] = c + 1;  // descended-into nodes stay consumed
        occ[level] = arr[c];
        ++level;
      } else {
        // Exhausted, or next candidate is beyond the maximum gap: leave it
        // unconsumed and resume the parent's child search.
        if (stats) {
          if (c < arr.size()) ++stats->element_visits;
          ++stats->backtracks;
        }
        --level;
      }
    }
    if (level == m) {
      ++support;
      if (out) out->emplace_back(occ.begin(), occ.end());
    }
  }
  return support;
}

void enumerate_occurrences(const Sequence& seq, const Pattern& p,
                           std::size_t level, Occurrence& partial,
                           std::vector<Occurrence>& out) {
  const int n = static_cast<int>(seq.size());
  if (level == p.size()) {
    out.push_back(partial);
    return;
  }
  int first = 1, last = n;
  if (level > 0) {
    first = partial.back() + 1 + p.gap.min_gap;
    last = std::min(n, partial.back() + 1 + p.gap.max_gap);
  }
  for (int pos = first; pos <= last; ++pos) {
    if (seq.items[pos - 1] != p.items[level]) continue;
    partial.push_back(pos);
    enumerate_occurrences(seq, p, level + 1, partial, out);
    partial.pop_back();
  }
}

struct NonoverlapSearch {
  const std::vector<Occurrence>& occs;
  std::size_t m;
  std::vector<std::vector<bool>> used;  // per level, per position (1-based)
  int best = 0;

  NonoverlapSearch(const std::vector<Occurrence>& occs_, int max_pos)
      : occs(occs_), m(occs_.empty() ? 0 : occs_[0].size()),
        used(m, std::vector<bool>(max_pos + 1, false)) {}

  bool compatible(const Occurrence& occ) const {
    for (std::size_t j = 0; j < m; ++j)
      if (used[j][occ[j]]) return false;
    return true;
  }

  // Upper bound on how many of occs[i..] can still be added: at each level,
  // the number of distinct unused positions among the remaining tuples.
  int bound(std::size_t i) const {
    int ub = static_cast<int>(occs.size() - i);
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<bool> seen(used[j].size(), false);
      int distinct = 0;
      for (std::size_t k = i; k < occs.size(); ++k) {
        int pos = occs[k][j];
        if (!used[j][pos] && !seen[pos]) {
          seen[pos] = true;
          ++distinct;
        }
      }
      ub = std::min(ub, distinct);
    }
    return ub;
  }

  void run(std::size_t i, int picked) {
    best = std::max(best, picked);
    if (i == occs.size()) return;
    if (picked + bound(i) <= best) return;
    if (compatible(occs[i])) {
      for (std::size_t j = 0; j < m; ++j) used[j][occs[i][j]] = true;
      run(i + 1, picked + 1);
      for (std::size_t j = 0; j < m; ++j) used[j][occs[i][j]] = false;
    }
    run(i + 1, picked);
  }
};

}  // namespace

int dbi_support(const IndexedSequence& idx, const Pattern& p, DbiStats* stats) {
  return dbi_search(idx, p, nullptr, stats);
}

std::vector<Occurrence> dbi_occurrences(const IndexedSequence& idx, const Pattern& p) {
  std::vector<Occurrence> out;
  dbi_search(idx, p, &out, nullptr);
  return out;
}

std::vector<Occurrence> oracle_all_occurrences(const Sequence& seq, const Pattern& p) {
  std::vector<Occurrence> out;
  if (p.size() == 0 || p.size() > seq.size()) return out;
  Occurrence partial;
  enumerate_occurrences(seq, p, 0, partial, out);
  return out;
}

int oracle_max_nonoverlapping(const std::vector<Occurrence>& occs) {
  if (occs.empty()) return 0;
  std::vector<Occurrence> sorted = occs;
  std::sort(sorted.begin(), sorted.end());
  int max_pos = 0;
  for (const auto& occ : sorted)
    max_pos = std::max(max_pos, *std::max_element(occ.begin(), occ.end()));
  NonoverlapSearch search(sorted, max_pos);
  search.run(0, 0);
  return search.best;
}

long long db_support(const IndexedDatabase& db, const Pattern& p, int jobs) {
  const std::size_t k = db.sequences.size();
  if (jobs <= 1 || k < 2) {
    long long total = 0;
    for (const auto& seq : db.sequences) total += dbi_support(seq, p);
    return total;
  }
  const std::size_t chunks = std::min<std::size_t>(jobs, k);
  std::vector<std::future<long long>> futures;
  futures.reserve(chunks);
  for (std::size_t c = 0; c < chunks; ++c) {
    std::size_t lo = k * c / chunks;
    std::size_t hi = k * (c + 1) / chunks;
    futures.push_back(std::async(std::launch::async, [&db, &p, lo, hi] {
      long long total = 0;
      for (std::size_t i = lo; i < hi; ++i) total += dbi_support(db.sequences[i], p);
      return total;
    }));
  }
  long long total = 0;
  for (auto& f : futures) total += f.get();
  return total;
}

}  // namespace mcor
