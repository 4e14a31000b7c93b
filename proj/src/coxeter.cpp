#include "transvec/coxeter.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <fstream>
#include <map>
#include <sstream>

namespace transvec {

CoxeterGraph::CoxeterGraph(int n_, const std::vector<std::pair<int, int>>& edges)
    : n(n_), adj(n_, 0) {
  if (n < 0 || n > 32) throw InputError("vertex count must be in [0,32]");
  for (auto [i, j] : edges) {
    if (i < 1 || i > n || j < 1 || j > n) throw InputError("edge endpoint out of range");
    if (i == j) throw InputError("loops are not allowed");
    adj[i - 1] |= 1u << (j - 1);
    adj[j - 1] |= 1u << (i - 1);
  }
}

CoxeterGraph CoxeterGraph::path(int n) {
  std::vector<std::pair<int, int>> es;
  for (int i = 1; i < n; ++i) es.emplace_back(i, i + 1);
  return CoxeterGraph(n, es);
}

std::vector<std::pair<int, int>> CoxeterGraph::edges() const {
  std::vector<std::pair<int, int>> es;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (adjacent(i, j)) es.emplace_back(i, j);
  return es;
}

CoxeterGraph parse_coxeter_graph(std::istream& in) {
  int n;
  if (!(in >> n)) throw InputError("graph file: missing vertex count");
  std::vector<std::pair<int, int>> es;
  int i, j;
  while (in >> i >> j) es.emplace_back(i, j);
  return CoxeterGraph(n, es);
}

CoxeterGraph load_coxeter_graph(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open graph file: " + path);
  return parse_coxeter_graph(f);
}

std::vector<int> parse_word_literal(const std::string& text) {
  std::string t = text;
  std::replace(t.begin(), t.end(), ',', ' ');
  std::istringstream is(t);
  std::vector<int> letters;
  int x;
  while (is >> x) letters.push_back(x);
  if (!is.eof()) throw InputError("word literal: expected signed integers");
  return letters;
}

SignedWord::SignedWord(CoxeterGraph g, std::vector<int> ls)
    : graph(std::move(g)), letters(std::move(ls)) {
  for (int x : letters) {
    if (x == 0) throw InputError("letter 0 is not allowed");
    int a = x > 0 ? x : -x;
    if (a > graph.n) throw InputError("letter out of range: " + std::to_string(x));
  }
}

std::vector<int> SignedWord::negative_subword() const {
  std::vector<int> r;
  for (int x : letters)
    if (x < 0) r.push_back(-x);
  return r;
}

std::vector<int> SignedWord::positive_subword() const {
  std::vector<int> r;
  for (int x : letters)
    if (x > 0) r.push_back(x);
  return r;
}

int SignedWord::distinct_letters() const {
  uint32_t seen = 0;
  for (int x : letters) seen |= 1u << ((x > 0 ? x : -x) - 1);
  return std::popcount(seen);
}

std::string move_name(Move m) {
  switch (m.kind) {
    case MoveKind::Trivial2: return "trivial 2-move @" + std::to_string(m.position);
    case MoveKind::Nontrivial2: return "non-trivial 2-move @" + std::to_string(m.position);
    case MoveKind::Braid3: return "3-move @" + std::to_string(m.position);
  }
  return "?";
}

namespace {

// Right-multiply P by the reflection matrix of generator i, in place.
void mul_reflection(ZMatrix& p, const CoxeterGraph& g, int i) {
  int n = g.n;
  std::vector<int64_t> ci(n);
  for (int r = 0; r < n; ++r) ci[r] = p.at(r, i - 1);
  for (int j = 1; j <= n; ++j) {
    if (!g.adjacent(i, j)) continue;
    for (int r = 0; r < n; ++r)
      p.at(r, j - 1) = checked_add(p.at(r, j - 1), ci[r]);
  }
  for (int r = 0; r < n; ++r) p.at(r, i - 1) = checked_sub(0, ci[r]);
}

void check_letters(const std::vector<int>& word, const CoxeterGraph& g) {
  for (int x : word)
    if (x < 1 || x > g.n) throw InputError("letter out of range: " + std::to_string(x));
}

}  // namespace

ZMatrix geometric_action(const std::vector<int>& word, const CoxeterGraph& g) {
  check_letters(word, g);
  ZMatrix p = ZMatrix::identity(g.n);
  for (int x : word) mul_reflection(p, g, x);
  return p;
}

bool is_reduced(const std::vector<int>& word, const CoxeterGraph& g) {
  check_letters(word, g);
  ZMatrix p = ZMatrix::identity(g.n);
  for (int x : word) {
    // Column x of the prefix product is the root the next reflection acts
    // by; the word stays reduced iff that root is still positive.
    bool positive = true;
    for (int r = 0; r < g.n; ++r)
      if (p.at(r, x - 1) < 0) { positive = false; break; }
    if (!positive) return false;
    mul_reflection(p, g, x);
  }
  return true;
}

bool is_reduced_pair(const SignedWord& w) {
  return is_reduced(w.negative_subword(), w.graph) &&
         is_reduced(w.positive_subword(), w.graph);
}

namespace {

bool tilde_adjacent(const SignedWord& w, int k, int l) {
  // Adjacency in the doubled alphabet: same sign and adjacent letters.
  return w.sign(k) == w.sign(l) && w.graph.adjacent(w.abs_letter(k), w.abs_letter(l));
}

}  // namespace

std::vector<Move> enumerate_moves(const SignedWord& w) {
  std::vector<Move> moves;
  for (int k = 2; k <= w.size(); ++k) {
    if (!tilde_adjacent(w, k - 1, k)) {
      MoveKind kind = (w.letter(k) == -w.letter(k - 1)) ? MoveKind::Nontrivial2
                                                        : MoveKind::Trivial2;
      moves.push_back({kind, k});
    } else if (k >= 3 && w.letter(k) == w.letter(k - 2)) {
      moves.push_back({MoveKind::Braid3, k});
    }
  }
  return moves;
}

bool move_applicable(const SignedWord& w, Move m) {
  int k = m.position;
  switch (m.kind) {
    case MoveKind::Trivial2:
      return k >= 2 && k <= w.size() && !tilde_adjacent(w, k - 1, k) &&
             w.letter(k) != -w.letter(k - 1);
    case MoveKind::Nontrivial2:
      return k >= 2 && k <= w.size() && !tilde_adjacent(w, k - 1, k) &&
             w.letter(k) == -w.letter(k - 1);
    case MoveKind::Braid3:
      return k >= 3 && k <= w.size() && tilde_adjacent(w, k - 1, k) &&
             w.letter(k) == w.letter(k - 2);
  }
  return false;
}

SignedWord apply_move(const SignedWord& w, Move m) {
  if (!move_applicable(w, m))
    throw InputError("move not applicable: " + move_name(m));
  std::vector<int> ls = w.letters;
  int k = m.position;
  if (m.kind == MoveKind::Braid3) {
    int a = ls[k - 3], b = ls[k - 2];
    ls[k - 3] = b;
    ls[k - 2] = a;
    ls[k - 1] = b;
  } else {
    std::swap(ls[k - 2], ls[k - 1]);
  }
  return SignedWord(w.graph, std::move(ls));
}

std::vector<int> move_sigma(Move m, int word_length) {
  std::vector<int> sigma(word_length + 1);
  for (int l = 0; l <= word_length; ++l) sigma[l] = l;
  if (m.kind == MoveKind::Trivial2) {
    std::swap(sigma[m.position - 1], sigma[m.position]);
  } else if (m.kind == MoveKind::Braid3) {
    std::swap(sigma[m.position - 2], sigma[m.position - 1]);
  }
  return sigma;
}

SignedWord flip_signs(const SignedWord& w) {
  std::vector<int> ls = w.letters;
  for (int& x : ls) x = -x;
  return SignedWord(w.graph, std::move(ls));
}

int MoveGraph::find(const std::vector<int>& letters) const {
  for (size_t i = 0; i < words.size(); ++i)
    if (words[i].letters == letters) return static_cast<int>(i);
  return -1;
}

MoveGraph enumerate_reduced_words(const SignedWord& seed, size_t cap) {
  if (!is_reduced_pair(seed)) throw InputError("seed word is not reduced");
  ZMatrix neg_ref = geometric_action(seed.negative_subword(), seed.graph);
  ZMatrix pos_ref = geometric_action(seed.positive_subword(), seed.graph);

  MoveGraph g;
  std::map<std::vector<int>, int> index;
  g.words.push_back(seed);
  index[seed.letters] = 0;
  std::deque<int> queue{0};
  std::map<std::tuple<int, int, int, int>, bool> edge_seen;

  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    SignedWord w = g.words[u];
    for (Move m : enumerate_moves(w)) {
      SignedWord next = apply_move(w, m);
      auto it = index.find(next.letters);
      int v;
      if (it == index.end()) {
        if (g.words.size() >= cap) {
          g.truncated = true;
          continue;
        }
        if (!is_reduced_pair(next))
          throw VerificationError("move produced a non-reduced word");
        if (geometric_action(next.negative_subword(), next.graph) != neg_ref ||
            geometric_action(next.positive_subword(), next.graph) != pos_ref)
          throw VerificationError("move changed the represented pair");
        v = static_cast<int>(g.words.size());
        g.words.push_back(next);
        index[next.letters] = v;
        queue.push_back(v);
      } else {
        v = it->second;
      }
      auto key = std::make_tuple(std::min(u, v), std::max(u, v),
                                 static_cast<int>(m.kind), m.position);
      if (!edge_seen[key]) {
        edge_seen[key] = true;
        g.edges.push_back({u, v, m});
      }
    }
  }
  return g;
}

SignedWord lexmin_w0_word_A(int n) {
  if (n < 2) throw InputError("rank parameter must be at least 2");
  std::vector<int> ls;
  for (int b = 1; b <= n - 1; ++b)
    for (int x = b; x >= 1; --x) ls.push_back(-x);
  return SignedWord(CoxeterGraph::path(n - 1), std::move(ls));
}

SignedWord a4_example_word() {
  return SignedWord(CoxeterGraph::path(4),
                    {2, 1, -4, -2, -1, 3, -2, 2, -3, -2, 4, 1, -4, -1, 3, 2, 1});
}

}  // namespace transvec
