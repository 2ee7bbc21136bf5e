#ifndef MCOR_RANDGEN_HPP
#define MCOR_RANDGEN_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mcor/seqdb.hpp"

namespace mcor {

// Random instance generation for the oracle-equivalence suites. Plain modulo
// draws keep transcripts identical for a fixed seed across standard libraries.
class InstanceGen {
 public:
  explicit InstanceGen(std::uint64_t seed) : rng_(seed) {}

  int below(int n) { return static_cast<int>(rng_() % static_cast<std::uint64_t>(n)); }

  std::vector<Item> alphabet(int size) {
    std::vector<Item> out;
    for (int i = 0; i < size; ++i) out.emplace_back(1, static_cast<char>('a' + i));
    return out;
  }

  Sequence sequence(const std::vector<Item>& alpha, int max_len) {
    Sequence seq;
    int len = below(max_len + 1);
    for (int i = 0; i < len; ++i)
      seq.items.push_back(alpha[below(static_cast<int>(alpha.size()))]);
    return seq;
  }

  SequenceDatabase database(const std::vector<Item>& alpha, int max_seqs, int max_len) {
    SequenceDatabase db;
    int k = 1 + below(max_seqs);
    for (int i = 0; i < k; ++i) {
      Sequence seq = sequence(alpha, max_len);
      seq.id = db.sequences.size();
      db.sequences.push_back(std::move(seq));
    }
    db.alphabet = alphabet_of(db);
    return db;
  }

  Pattern pattern(const std::vector<Item>& alpha, int max_len, int max_b) {
    Pattern p;
    int m = 1 + below(max_len);
    for (int i = 0; i < m; ++i)
      p.items.push_back(alpha[below(static_cast<int>(alpha.size()))]);
    p.gap.max_gap = below(max_b + 1);
    p.gap.min_gap = below(p.gap.max_gap + 1);
    return p;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace mcor

#endif
