#include "mcor/seqdb.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace mcor {

namespace {

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

bool is_blank(const std::string& line) {
  return line.find_first_not_of(" \t") == std::string::npos;
}

std::vector<Item> split_tokens(const std::string& line, char delimiter, std::size_t line_no) {
  std::vector<Item> items;
  std::string token;
  std::istringstream ss(line);
  while (std::getline(ss, token, delimiter)) {
    if (token.empty())
      throw ParseError("empty token on line " + std::to_string(line_no));
    items.push_back(token);
  }
  if (!line.empty() && line.back() == delimiter)
    throw ParseError("empty token on line " + std::to_string(line_no));
  return items;
}

}  // namespace

long long IndexedDatabase::total_positions() const {
  long long total = 0;
  for (const auto& seq : sequences) total += seq.length;
  return total;
}

Pattern Pattern::extended(const Item& item) const {
  Pattern out = *this;
  out.items.push_back(item);
  return out;
}

SequenceDatabase parse_database(std::istream& in, Format format, char delimiter) {
  if (in.fail()) throw ParseError("unreadable input stream");

  SequenceDatabase db;
  std::string line;
  std::size_t line_no = 0;
  bool in_fasta_record = false;

  while (std::getline(in, line)) {
    ++line_no;
    line = strip_cr(line);
    if (is_blank(line)) continue;

    switch (format) {
      case Format::CharsPerLine: {
        Sequence seq;
        seq.id = db.sequences.size();
        for (char c : line) seq.items.emplace_back(1, c);
        db.sequences.push_back(std::move(seq));
        break;
      }
      case Format::TokenSeparated: {
        Sequence seq;
        seq.id = db.sequences.size();
        seq.items = split_tokens(line, delimiter, line_no);
        db.sequences.push_back(std::move(seq));
        break;
      }
      case Format::FastaLike: {
        if (line[0] == '>') {
          in_fasta_record = false;
          break;
        }
        if (!in_fasta_record) {
          Sequence seq;
          seq.id = db.sequences.size();
          db.sequences.push_back(std::move(seq));
          in_fasta_record = true;
        }
        for (char c : line) db.sequences.back().items.emplace_back(1, c);
        break;
      }
    }
  }
  if (in.bad()) throw ParseError("error reading input stream");

  db.alphabet = alphabet_of(db);
  return db;
}

SequenceDatabase parse_database(const std::string& text, Format format, char delimiter) {
  std::istringstream in(text);
  return parse_database(in, format, delimiter);
}

SequenceDatabase load_database(const std::string& path, Format format, char delimiter) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  return parse_database(in, format, delimiter);
}

std::string serialize_database(const SequenceDatabase& db, Format format, char delimiter) {
  std::ostringstream out;
  for (const auto& seq : db.sequences) {
    switch (format) {
      case Format::CharsPerLine:
        for (const auto& item : seq.items) out << item;
        break;
      case Format::TokenSeparated:
        for (std::size_t i = 0; i < seq.items.size(); ++i) {
          if (i) out << delimiter;
          out << seq.items[i];
        }
        break;
      case Format::FastaLike:
        out << ">s" << seq.id << '\n';
        for (const auto& item : seq.items) out << item;
        break;
    }
    out << '\n';
  }
  return out.str();
}

IndexedSequence build_index(const Sequence& seq) {
  IndexedSequence idx;
  idx.length = static_cast<int>(seq.items.size());
  for (int pos = 0; pos < idx.length; ++pos)
    idx.positions[seq.items[pos]].push_back(pos + 1);
  return idx;
}

IndexedDatabase index_database(const SequenceDatabase& db) {
  IndexedDatabase out;
  out.alphabet = db.alphabet;
  out.sequences.reserve(db.sequences.size());
  for (const auto& seq : db.sequences) out.sequences.push_back(build_index(seq));
  return out;
}

std::vector<Item> alphabet_of(const SequenceDatabase& db) {
  std::set<Item> items;
  for (const auto& seq : db.sequences)
    items.insert(seq.items.begin(), seq.items.end());
  return {items.begin(), items.end()};
}

std::string join_items(const std::vector<Item>& items, char delimiter) {
  bool all_chars = std::all_of(items.begin(), items.end(),
                               [](const Item& t) { return t.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i && !all_chars) out += delimiter;
    out += items[i];
  }
  return out;
}

}  // namespace mcor
