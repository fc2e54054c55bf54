#include "orbitkit/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace orbitkit {

char letter_to_char(Letter l) {
  int idx = l > 0 ? l : -l;
  return static_cast<char>((l > 0 ? 'a' : 'A') + idx - 1);
}

Letter letter_from_char(char c, int rank) {
  if (c >= 'a' && c <= 'z') {
    int idx = c - 'a' + 1;
    if (idx > rank)
      throw std::invalid_argument(std::string("letter '") + c +
                                  "' out of rank " + std::to_string(rank));
    return idx;
  }
  if (c >= 'A' && c <= 'Z') {
    int idx = c - 'A' + 1;
    if (idx > rank)
      throw std::invalid_argument(std::string("letter '") + c +
                                  "' out of rank " + std::to_string(rank));
    return -idx;
  }
  throw std::invalid_argument(std::string("illegal character '") + c +
                              "' in word");
}

int Word::check_rank(int rank) {
  if (rank < 1 || rank > kMaxRank)
    throw std::invalid_argument("rank must be in [1, " +
                                std::to_string(kMaxRank) + "], got " +
                                std::to_string(rank));
  return rank;
}

namespace {

std::vector<Letter> free_reduce(const std::vector<Letter>& in) {
  std::vector<Letter> out;
  out.reserve(in.size());
  for (Letter l : in) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

}  // namespace

Word::Word(std::vector<Letter> letters, int rank) : rank_(check_rank(rank)) {
  for (Letter l : letters) {
    int idx = l > 0 ? l : -l;
    if (l == 0 || idx > rank_)
      throw std::invalid_argument("letter index " + std::to_string(l) +
                                  " out of rank " + std::to_string(rank_));
  }
  letters_ = free_reduce(letters);
}

Word Word::parse(const std::string& text, int rank) {
  Word w(rank);
  if (text.empty() || text == "1") return w;
  std::vector<Letter> raw;
  raw.reserve(text.size());
  for (char c : text) raw.push_back(letter_from_char(c, rank));
  w.letters_ = free_reduce(raw);
  return w;
}

std::string Word::str() const {
  if (letters_.empty()) return "1";
  std::string s;
  s.reserve(letters_.size());
  for (Letter l : letters_) s.push_back(letter_to_char(l));
  return s;
}

Word concat(const Word& u, const Word& v) {
  if (u.rank_ != v.rank_)
    throw std::invalid_argument("rank mismatch: " + std::to_string(u.rank_) +
                                " vs " + std::to_string(v.rank_));
  Word w(u.rank_);
  w.letters_ = u.letters_;
  for (Letter l : v.letters_) {
    if (!w.letters_.empty() && w.letters_.back() == -l)
      w.letters_.pop_back();
    else
      w.letters_.push_back(l);
  }
  return w;
}

Word invert(const Word& u) {
  Word w(u.rank());
  std::vector<Letter> rev(u.letters().rbegin(), u.letters().rend());
  for (Letter& l : rev) l = -l;
  w = Word(std::move(rev), u.rank());
  return w;
}

Word power(const Word& u, int e) {
  Word base = e < 0 ? invert(u) : u;
  int n = e < 0 ? -e : e;
  Word acc(u.rank());
  for (int i = 0; i < n; ++i) acc = concat(acc, base);
  return acc;
}

bool letters_lex_less(const std::vector<Letter>& a,
                      const std::vector<Letter>& b) {
  size_t n = std::min(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    int ka = letter_key(a[i]), kb = letter_key(b[i]);
    if (ka != kb) return ka < kb;
  }
  return a.size() < b.size();
}

bool word_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return letters_lex_less(a.letters(), b.letters());
}

CyclicReduction cyclic_reduce(const Word& w) {
  const auto& ls = w.letters();
  int i = 0, j = static_cast<int>(ls.size()) - 1;
  while (i < j && ls[static_cast<size_t>(i)] == -ls[static_cast<size_t>(j)]) {
    ++i;
    --j;
  }
  CyclicReduction r;
  r.conjugator = Word(std::vector<Letter>(ls.begin(), ls.begin() + i), w.rank());
  r.core = Word(std::vector<Letter>(ls.begin() + i, ls.begin() + j + 1), w.rank());
  return r;
}

std::vector<Letter> least_rotation(const std::vector<Letter>& letters) {
  if (letters.empty()) return letters;
  size_t n = letters.size();
  std::vector<Letter> best = letters;
  std::vector<Letter> rot = letters;
  for (size_t r = 1; r < n; ++r) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (letters_lex_less(rot, best)) best = rot;
  }
  return best;
}

Word cyclic_canonical(const Word& w) {
  return Word(least_rotation(cyclic_reduce(w).core.letters()), w.rank());
}

ConjugacyResult conjugacy_decide(const Word& u, const Word& v) {
  if (u.rank() != v.rank())
    throw std::invalid_argument("rank mismatch between words");
  CyclicReduction ru = cyclic_reduce(u), rv = cyclic_reduce(v);
  ConjugacyResult res;
  if (ru.core.size() != rv.core.size()) return res;
  if (ru.core.is_identity()) {
    res.verdict = Verdict::Yes;
    res.witness = Word(u.rank());
    return res;
  }
  const auto& core_u = ru.core.letters();
  const auto& core_v = rv.core.letters();
  size_t n = core_u.size();
  Word inv_cv = invert(rv.conjugator);
  bool found = false;
  Word best;
  std::vector<Letter> rot = core_u;
  for (size_t r = 0; r < n; ++r) {
    if (r > 0) std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (rot != core_v) continue;
    // rotate_left(core_u, r) == core_v, so with p the length-r prefix of
    // core_u we have core_v = p^-1 core_u p and x = c_u p c_v^-1.
    Word prefix(std::vector<Letter>(core_u.begin(), core_u.begin() + r),
                u.rank());
    Word x = concat(concat(ru.conjugator, prefix), inv_cv);
    if (!found || word_less(x, best)) {
      best = x;
      found = true;
    }
  }
  if (found) {
    res.verdict = Verdict::Yes;
    res.witness = best;
  }
  return res;
}

WordRoot word_root(const Word& w) {
  if (w.is_identity())
    throw std::invalid_argument("word_root: identity has no well-defined root");
  CyclicReduction r = cyclic_reduce(w);
  const auto& core = r.core.letters();
  int n = static_cast<int>(core.size());
  int period = n;
  for (int p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (int i = p; i < n && ok; ++i)
      ok = core[static_cast<size_t>(i)] == core[static_cast<size_t>(i - p)];
    if (ok) {
      period = p;
      break;
    }
  }
  WordRoot out;
  Word root_core(std::vector<Letter>(core.begin(), core.begin() + period),
                 w.rank());
  out.root = concat(concat(r.conjugator, root_core), invert(r.conjugator));
  out.exponent = n / period;
  return out;
}

}  // namespace orbitkit
