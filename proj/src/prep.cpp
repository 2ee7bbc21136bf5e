#include "mcor/prep.hpp"

namespace mcor {

void validate_mincf(double mincf) {
  if (!(mincf > 0.0) || mincf > 1.0)
    throw ParamError("mincf must lie in (0,1]");
}

PrepResult sdb_filt(const IndexedDatabase& db, const Pattern& p, double mincf) {
  validate_mincf(mincf);
  if (p.size() < 1) throw ParamError("prefix pattern must be nonempty");

  PrepResult result;
  result.shrunk.alphabet = db.alphabet;
  for (const auto& seq : db.sequences) {
    int support = dbi_support(seq, p);
    if (support > 0) {
      result.shrunk.sequences.push_back(seq);
      result.sup_p += support;
      ++result.kept_sequences;
      result.kept_positions_count += seq.length;
    } else {
      ++result.filtered_sequences;
      result.filtered_positions_count += seq.length;
    }
  }
  result.minsup = static_cast<double>(result.sup_p) * mincf;
  return result;
}

}  // namespace mcor
