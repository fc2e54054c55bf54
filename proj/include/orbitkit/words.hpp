// words.hpp -- free-group element arithmetic: parsing, free and cyclic
// reduction, roots, and the conjugacy decider.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "orbitkit/decision.hpp"

namespace orbitkit {

// Generators are written 'a'..'z', inverses 'A'..'Z', capping the rank at 26.
inline constexpr int kMaxRank = 26;

// A letter is a signed 1-based generator index: +i for the i-th generator,
// -i for its inverse.
using Letter = int;

inline Letter letter_inverse(Letter l) { return -l; }

// Total order on letters used for every deterministic output:
// a < a^-1 < b < b^-1 < ... (key 0, 1, 2, 3, ...).
inline int letter_key(Letter l) {
  int idx = l > 0 ? l : -l;
  return 2 * (idx - 1) + (l < 0 ? 1 : 0);
}

// The letter with a given key.
inline Letter letter_from_key(int key) {
  int idx = key / 2 + 1;
  return (key % 2) ? -idx : idx;
}

char letter_to_char(Letter l);
Letter letter_from_char(char c, int rank);

// A freely reduced word over a fixed-rank alphabet. The empty word is the
// identity. All mutating paths re-reduce, so the invariant always holds.
class Word {
 public:
  Word() = default;
  explicit Word(int rank) : rank_(check_rank(rank)) {}

  // Builds a word from arbitrary letters, freely reducing them.
  Word(std::vector<Letter> letters, int rank);

  // Parses 'a'..'z' / 'A'..'Z' text; "" and "1" denote the identity.
  static Word parse(const std::string& text, int rank);

  int rank() const { return rank_; }
  int size() const { return static_cast<int>(letters_.size()); }
  bool is_identity() const { return letters_.empty(); }
  const std::vector<Letter>& letters() const { return letters_; }
  Letter at(int i) const { return letters_[static_cast<size_t>(i)]; }

  std::string str() const;  // identity prints as "1"

  bool operator==(const Word& o) const {
    return rank_ == o.rank_ && letters_ == o.letters_;
  }
  bool operator!=(const Word& o) const { return !(*this == o); }

  friend Word concat(const Word& u, const Word& v);
  friend Word invert(const Word& u);

 private:
  static int check_rank(int rank);
  std::vector<Letter> letters_;
  int rank_ = 1;
};

Word concat(const Word& u, const Word& v);
Word invert(const Word& u);
Word power(const Word& u, int e);

// (length, letterwise letter_key) order; ties broken nowhere else needed.
bool word_less(const Word& a, const Word& b);

// Letterwise letter_key order on equal-length letter vectors.
bool letters_lex_less(const std::vector<Letter>& a, const std::vector<Letter>& b);

// w = c * core * c^-1 with core cyclically reduced and c as short as possible.
struct CyclicReduction {
  Word core;
  Word conjugator;
};
CyclicReduction cyclic_reduce(const Word& w);

// Least rotation of a cyclically reduced letter sequence.
std::vector<Letter> least_rotation(const std::vector<Letter>& letters);

// Canonical representative of the conjugacy class of w: least rotation of
// its cyclic core.
Word cyclic_canonical(const Word& w);

struct ConjugacyResult {
  Verdict verdict = Verdict::No;
  Word witness;  // x with x^-1 u x = v, on Yes
};

// Complete decider: Yes iff the cyclic cores are rotations of each other.
// The witness is the lexicographically-least among the shortest witnesses
// induced by rotation offsets.
ConjugacyResult conjugacy_decide(const Word& u, const Word& v);

// The unique shortest root: w = root^exponent with maximal exponent.
struct WordRoot {
  Word root;
  int exponent = 1;
};
WordRoot word_root(const Word& w);  // rejects the identity

}  // namespace orbitkit
