#ifndef MCOR_SEQDB_HPP
#define MCOR_SEQDB_HPP

#include <cstddef>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace mcor {

// Items are opaque tokens compared by byte equality; the alphabet order is
// lexicographic over token bytes.
using Item = std::string;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParamError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Number of wildcards allowed between two consecutive matched positions.
struct GapConstraint {
  int min_gap = 0;
  int max_gap = 0;

  void validate() const {
    if (min_gap < 0 || min_gap > max_gap)
      throw ParamError("gap constraint requires 0 <= a <= b");
  }

  bool operator==(const GapConstraint&) const = default;
};

struct Sequence {
  std::vector<Item> items;
  std::size_t id = 0;  // 0-based input position

  std::size_t size() const { return items.size(); }
};

struct SequenceDatabase {
  std::vector<Sequence> sequences;   // input order preserved
  std::vector<Item> alphabet;        // sorted, distinct

  std::size_t size() const { return sequences.size(); }
};

// Per-item sorted 1-based position lists for one sequence.
struct IndexedSequence {
  std::map<Item, std::vector<int>> positions;
  int length = 0;

  const std::vector<int>* positions_of(const Item& item) const {
    auto it = positions.find(item);
    return it == positions.end() ? nullptr : &it->second;
  }
};

struct IndexedDatabase {
  std::vector<IndexedSequence> sequences;
  std::vector<Item> alphabet;

  long long total_positions() const;
};

struct Pattern {
  std::vector<Item> items;
  GapConstraint gap;

  std::size_t size() const { return items.size(); }
  const Item& last() const { return items.back(); }
  Pattern extended(const Item& item) const;

  bool operator==(const Pattern&) const = default;
};

enum class Format { CharsPerLine, TokenSeparated, FastaLike };

SequenceDatabase parse_database(std::istream& in, Format format, char delimiter = ',');
SequenceDatabase parse_database(const std::string& text, Format format, char delimiter = ',');
SequenceDatabase load_database(const std::string& path, Format format, char delimiter = ',');
std::string serialize_database(const SequenceDatabase& db, Format format, char delimiter = ',');

IndexedSequence build_index(const Sequence& seq);
IndexedDatabase index_database(const SequenceDatabase& db);
std::vector<Item> alphabet_of(const SequenceDatabase& db);

// "ad" style when every token is one character, delimiter-joined otherwise.
std::string join_items(const std::vector<Item>& items, char delimiter = ',');

}  // namespace mcor

#endif
