#include "orbitkit/stallings.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace orbitkit {

namespace {

struct RawEdge {
  int src, dst, label;
  bool operator<(const RawEdge& o) const {
    return std::tie(src, dst, label) < std::tie(o.src, o.dst, o.label);
  }
  bool operator==(const RawEdge& o) const {
    return src == o.src && dst == o.dst && label == o.label;
  }
};

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] =
          parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
  }
};

std::set<RawEdge> canonical_edges(UnionFind& uf,
                                  const std::vector<RawEdge>& edges) {
  std::set<RawEdge> out;
  for (const RawEdge& e : edges)
    out.insert({uf.find(e.src), uf.find(e.dst), e.label});
  return out;
}

}  // namespace

StallingsGraph StallingsGraph::from_generators(const std::vector<Word>& gens,
                                               int rank) {
  for (const Word& g : gens)
    if (g.rank() != rank)
      throw std::invalid_argument("generator rank mismatch");

  // Wedge of loops.
  std::vector<RawEdge> edges;
  int next_vertex = 1;
  for (const Word& g : gens) {
    const auto& ls = g.letters();
    int cur = 0;
    for (size_t i = 0; i < ls.size(); ++i) {
      int nxt = (i + 1 == ls.size()) ? 0 : next_vertex++;
      Letter l = ls[i];
      if (l > 0)
        edges.push_back({cur, nxt, l});
      else
        edges.push_back({nxt, cur, -l});
      cur = nxt;
    }
  }

  // Fold: while some vertex has two outgoing (or incoming) edges with the
  // same label, identify their far endpoints.
  UnionFind uf(next_vertex);
  for (;;) {
    std::set<RawEdge> es = canonical_edges(uf, edges);
    std::map<std::pair<int, int>, int> out_seen, in_seen;
    bool merged = false;
    for (const RawEdge& e : es) {
      auto [it_o, new_o] = out_seen.try_emplace({e.src, e.label}, e.dst);
      if (!new_o && it_o->second != e.dst) {
        uf.unite(it_o->second, e.dst);
        merged = true;
        break;
      }
      auto [it_i, new_i] = in_seen.try_emplace({e.dst, e.label}, e.src);
      if (!new_i && it_i->second != e.src) {
        uf.unite(it_i->second, e.src);
        merged = true;
        break;
      }
    }
    if (!merged) break;
  }
  std::set<RawEdge> folded = canonical_edges(uf, edges);
  int base = uf.find(0);

  // Core: drop degree-1 vertices other than the basepoint.
  std::map<int, int> degree;
  for (const RawEdge& e : folded) {
    degree[e.src]++;
    degree[e.dst]++;
  }
  degree[base] += 0;
  for (;;) {
    int victim = -1;
    for (const auto& [v, d] : degree)
      if (v != base && d <= 1) {
        victim = v;
        break;
      }
    if (victim < 0) break;
    for (auto it = folded.begin(); it != folded.end();) {
      if (it->src == victim || it->dst == victim) {
        degree[it->src]--;
        degree[it->dst]--;
        it = folded.erase(it);
      } else {
        ++it;
      }
    }
    degree.erase(victim);
  }

  // Adjacency on surviving vertices.
  std::map<int, std::vector<int>> out_map, in_map;
  for (const auto& [v, d] : degree) {
    out_map[v].assign(static_cast<size_t>(rank), -1);
    in_map[v].assign(static_cast<size_t>(rank), -1);
  }
  for (const RawEdge& e : folded) {
    out_map[e.src][static_cast<size_t>(e.label - 1)] = e.dst;
    in_map[e.dst][static_cast<size_t>(e.label - 1)] = e.src;
  }

  // Canonical BFS renumbering in letter order.
  std::map<int, int> renum;
  renum[base] = 0;
  std::queue<int> q;
  q.push(base);
  int counter = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int key = 0; key < 2 * rank; ++key) {
      Letter l = letter_from_key(key);
      int w = l > 0 ? out_map[v][static_cast<size_t>(l - 1)]
                    : in_map[v][static_cast<size_t>(-l - 1)];
      if (w >= 0 && !renum.count(w)) {
        renum[w] = counter++;
        q.push(w);
      }
    }
  }

  StallingsGraph g;
  g.rank_ = rank;
  g.out_.assign(static_cast<size_t>(counter), std::vector<int>(static_cast<size_t>(rank), -1));
  g.in_.assign(static_cast<size_t>(counter), std::vector<int>(static_cast<size_t>(rank), -1));
  for (const RawEdge& e : folded) {
    int s = renum[e.src], d = renum[e.dst];
    g.out_[static_cast<size_t>(s)][static_cast<size_t>(e.label - 1)] = d;
    g.in_[static_cast<size_t>(d)][static_cast<size_t>(e.label - 1)] = s;
  }
  return g;
}

int StallingsGraph::edge_count() const {
  int n = 0;
  for (const auto& row : out_)
    for (int t : row)
      if (t >= 0) ++n;
  return n;
}

int StallingsGraph::step(int v, Letter l) const {
  if (v < 0 || v >= vertex_count()) return -1;
  if (l > 0) return out_[static_cast<size_t>(v)][static_cast<size_t>(l - 1)];
  return in_[static_cast<size_t>(v)][static_cast<size_t>(-l - 1)];
}

std::vector<std::tuple<int, int, int>> StallingsGraph::edges() const {
  std::vector<std::tuple<int, int, int>> es;
  for (int v = 0; v < vertex_count(); ++v)
    for (int i = 0; i < rank_; ++i) {
      int t = out_[static_cast<size_t>(v)][static_cast<size_t>(i)];
      if (t >= 0) es.emplace_back(v, t, i + 1);
    }
  std::sort(es.begin(), es.end());
  return es;
}

MembershipResult member(const StallingsGraph& g, const Word& w) {
  if (w.rank() != g.rank())
    throw std::invalid_argument("rank mismatch between graph and word");
  MembershipResult res;
  std::vector<int> path{StallingsGraph::kBase};
  int cur = StallingsGraph::kBase;
  for (Letter l : w.letters()) {
    cur = g.step(cur, l);
    if (cur < 0) return res;
    path.push_back(cur);
  }
  if (cur != StallingsGraph::kBase) return res;
  res.verdict = Verdict::Yes;
  res.path = std::move(path);
  return res;
}

std::vector<Word> subgroup_basis(const StallingsGraph& g) {
  int V = g.vertex_count();
  int rank = g.rank();
  // BFS tree in canonical order; path_word[v] spells base -> v in the tree.
  std::vector<Word> path_word(static_cast<size_t>(V), Word(rank));
  std::vector<bool> seen(static_cast<size_t>(V), false);
  std::set<std::tuple<int, int, int>> tree_edges;
  std::queue<int> q;
  seen[StallingsGraph::kBase] = true;
  q.push(StallingsGraph::kBase);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int key = 0; key < 2 * rank; ++key) {
      Letter l = letter_from_key(key);
      int w = g.step(v, l);
      if (w < 0 || seen[static_cast<size_t>(w)]) continue;
      seen[static_cast<size_t>(w)] = true;
      path_word[static_cast<size_t>(w)] =
          concat(path_word[static_cast<size_t>(v)], Word({l}, rank));
      if (l > 0)
        tree_edges.insert({v, w, l});
      else
        tree_edges.insert({w, v, -l});
      q.push(w);
    }
  }
  std::vector<Word> basis;
  for (const auto& [src, dst, label] : g.edges()) {
    if (tree_edges.count({src, dst, label})) continue;
    Word w = concat(concat(path_word[static_cast<size_t>(src)],
                           Word({label}, rank)),
                    invert(path_word[static_cast<size_t>(dst)]));
    basis.push_back(w);
  }
  return basis;
}

namespace {

void enumerate_rec(const StallingsGraph& g, int v, Letter last, int remaining,
                   std::vector<Letter>& cur, std::vector<Word>& out) {
  if (v == StallingsGraph::kBase) out.emplace_back(cur, g.rank());
  if (remaining == 0) return;
  for (int key = 0; key < 2 * g.rank(); ++key) {
    Letter l = letter_from_key(key);
    if (last != 0 && l == -last) continue;  // no immediate backtracking
    int w = g.step(v, l);
    if (w < 0) continue;
    cur.push_back(l);
    enumerate_rec(g, w, l, remaining - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Word> enumerate_subgroup_elements(const StallingsGraph& g,
                                              int max_len, int enum_cap) {
  if (max_len < 0) throw std::invalid_argument("max_len must be >= 0");
  if (max_len > enum_cap)
    throw capacity_error("enumeration length " + std::to_string(max_len) +
                         " exceeds cap " + std::to_string(enum_cap));
  std::vector<Word> out;
  std::vector<Letter> cur;
  enumerate_rec(g, StallingsGraph::kBase, 0, max_len, cur, out);
  std::sort(out.begin(), out.end(), word_less);
  return out;
}

}  // namespace orbitkit
