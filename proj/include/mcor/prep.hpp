#ifndef MCOR_PREP_HPP
#define MCOR_PREP_HPP

#include "mcor/matcher.hpp"
#include "mcor/seqdb.hpp"

namespace mcor {

struct PrepResult {
  double minsup = 0.0;            // sup_p * mincf, kept real-valued
  IndexedDatabase shrunk;         // sequences with sup(p,s) > 0, input order
  long long sup_p = 0;
  long long filtered_sequences = 0;
  long long kept_sequences = 0;
  long long filtered_positions_count = 0;
  long long kept_positions_count = 0;
};

void validate_mincf(double mincf);

// SDB-Filt: drop zero-support sequences, accumulate sup(p,D), and derive
// minsup from mincf.
PrepResult sdb_filt(const IndexedDatabase& db, const Pattern& p, double mincf);

}  // namespace mcor

#endif
