#ifndef MCOR_TESTS_HELPERS_HPP
#define MCOR_TESTS_HELPERS_HPP

#include <string>
#include <vector>

#include "mcor/seqdb.hpp"

namespace mcor::testing {

// The worked single-sequence example used throughout the unit tests.
inline const std::string kRunningExample = "adbdadcdccabadcd";

inline Sequence make_sequence(const std::string& chars, std::size_t id = 0) {
  Sequence seq;
  seq.id = id;
  for (char c : chars) seq.items.emplace_back(1, c);
  return seq;
}

inline SequenceDatabase make_database(const std::vector<std::string>& rows) {
  SequenceDatabase db;
  for (const auto& row : rows) db.sequences.push_back(make_sequence(row, db.sequences.size()));
  db.alphabet = alphabet_of(db);
  return db;
}

inline Pattern make_pattern(const std::string& chars, int a, int b) {
  Pattern p;
  for (char c : chars) p.items.emplace_back(1, c);
  p.gap = {a, b};
  return p;
}

}  // namespace mcor::testing

#endif
