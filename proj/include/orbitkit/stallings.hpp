// stallings.hpp -- finitely generated subgroups of F_n as folded core graphs:
// construction, membership, free basis, bounded element enumeration.

#pragma once

#include <array>
#include <tuple>
#include <vector>

#include "orbitkit/decision.hpp"
#include "orbitkit/words.hpp"

namespace orbitkit {

// Folded, based, core graph whose reduced closed basepoint paths spell
// exactly the elements of the subgroup. Vertices are numbered canonically
// by BFS from the basepoint (vertex 0) in letter order a < a^-1 < b < ...,
// so equal subgroups build equal graphs.
class StallingsGraph {
 public:
  static constexpr int kBase = 0;

  // Wedge of generator loops at the basepoint, folded, then cored. The
  // basepoint is kept even when it has degree one.
  static StallingsGraph from_generators(const std::vector<Word>& gens,
                                        int rank);

  int rank() const { return rank_; }
  int vertex_count() const { return static_cast<int>(out_.size()); }
  int edge_count() const;

  // Follows one letter from v: the edge labeled |l| forwards (l > 0) or
  // backwards (l < 0). Returns -1 if there is no such transition.
  int step(int v, Letter l) const;

  // Positively-labeled edges (src, dst, label), sorted.
  std::vector<std::tuple<int, int, int>> edges() const;

  bool operator==(const StallingsGraph& o) const {
    return rank_ == o.rank_ && out_ == o.out_;
  }

 private:
  StallingsGraph() = default;
  int rank_ = 1;
  // out_[v][i] = head of the edge v --(i+1)--> ., or -1
  // in_[v][i]  = tail of the edge . --(i+1)--> v, or -1
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
};

struct MembershipResult {
  Verdict verdict = Verdict::No;
  std::vector<int> path;  // vertices visited, basepoint to basepoint, on Yes
};

// Complete membership decider: Yes iff w is readable as a closed path at
// the basepoint.
MembershipResult member(const StallingsGraph& g, const Word& w);

// Free basis via the BFS spanning tree: one word per non-tree edge;
// |basis| = E - V + 1.
std::vector<Word> subgroup_basis(const StallingsGraph& g);

// All freely reduced subgroup elements of length <= max_len, ordered by
// (length, lex). Refuses max_len beyond the cap: output is exponential.
std::vector<Word> enumerate_subgroup_elements(const StallingsGraph& g,
                                              int max_len,
                                              int enum_cap = 16);

}  // namespace orbitkit
