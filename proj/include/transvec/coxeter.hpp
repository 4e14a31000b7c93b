#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "transvec/common.hpp"
#include "transvec/zmatrix.hpp"

namespace transvec {

// Finite simple graph with vertices 1..n; defines the simply-laced group
// generated by involutions s_1..s_n (braid relation of order 3 on edges,
// commutation off edges).
struct CoxeterGraph {
  int n = 0;
  std::vector<uint32_t> adj;  // adj[i-1] has bit j-1 set iff {i,j} is an edge

  CoxeterGraph() = default;
  CoxeterGraph(int n, const std::vector<std::pair<int, int>>& edges);

  // The chain 1-2-...-n (type A_n).
  static CoxeterGraph path(int n);

  bool adjacent(int i, int j) const {
    return i != j && ((adj[i - 1] >> (j - 1)) & 1u);
  }
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const CoxeterGraph&) const = default;
};

// Format: first line n, then one "i j" pair per line.
CoxeterGraph parse_coxeter_graph(std::istream& in);
CoxeterGraph load_coxeter_graph(const std::string& path);

// Whitespace- or comma-separated signed integers.
std::vector<int> parse_word_literal(const std::string& text);

// A word over the signed alphabet: letter -i contributes to the left factor
// of a pair (u,v), letter +i to the right factor. Positions are 1-based.
struct SignedWord {
  CoxeterGraph graph;
  std::vector<int> letters;

  SignedWord() = default;
  SignedWord(CoxeterGraph g, std::vector<int> ls);

  int size() const { return static_cast<int>(letters.size()); }
  int letter(int k) const { return letters[k - 1]; }
  int sign(int k) const { return letters[k - 1] > 0 ? +1 : -1; }
  int abs_letter(int k) const { return letters[k - 1] > 0 ? letters[k - 1] : -letters[k - 1]; }

  std::vector<int> negative_subword() const;  // absolute values, in order
  std::vector<int> positive_subword() const;
  // Number of distinct |letters| present.
  int distinct_letters() const;

  bool operator==(const SignedWord& o) const {
    return letters == o.letters && graph == o.graph;
  }
};

enum class MoveKind : uint8_t { Trivial2, Nontrivial2, Braid3 };

// A rewrite at position k: a 2-move touches entries k-1,k; a 3-move touches
// entries k-2,k-1,k.
struct Move {
  MoveKind kind;
  int position;
  bool operator==(const Move&) const = default;
};

inline bool is_trivial(Move m) { return m.kind == MoveKind::Trivial2; }
std::string move_name(Move m);

// Matrix of s_{w_1}...s_{w_m} acting on the root lattice: s_i sends
// a_i -> -a_i and a_j -> a_j + a_i for {i,j} an edge, a_j -> a_j otherwise.
ZMatrix geometric_action(const std::vector<int>& word, const CoxeterGraph& g);

// True iff every prefix keeps the next simple root positive; equivalently
// the word attains the minimum factorization length of its product.
bool is_reduced(const std::vector<int>& word, const CoxeterGraph& g);

// Both the negative-letter and the positive-letter subwords are reduced.
bool is_reduced_pair(const SignedWord& w);

std::vector<Move> enumerate_moves(const SignedWord& w);
bool move_applicable(const SignedWord& w, Move m);
SignedWord apply_move(const SignedWord& w, Move m);

// Position relabeling induced by a move: trivial 2-move at k swaps k-1,k;
// non-trivial 2-move is the identity; 3-move at k swaps k-2,k-1.
// Returned as sigma[l] for l in 1..m (index 0 unused).
std::vector<int> move_sigma(Move m, int word_length);

SignedWord flip_signs(const SignedWord& w);

struct MoveGraphEdge {
  int from, to;  // indices into MoveGraph::words
  Move move;
};

struct MoveGraph {
  std::vector<SignedWord> words;  // words[0] is the seed
  std::vector<MoveGraphEdge> edges;
  bool truncated = false;

  int find(const std::vector<int>& letters) const;  // -1 if absent
};

// Breadth-first closure of the seed under all moves, capped at `cap`
// vertices (exceeding the cap sets `truncated`). Every discovered word is
// re-checked to be reduced and to represent the same pair.
MoveGraph enumerate_reduced_words(const SignedWord& seed, size_t cap);

// All-negative word 1,21,321,...,(n-1)...1 over the chain with n-1 vertices;
// encodes the pair (longest element, identity). Length n(n-1)/2.
SignedWord lexmin_w0_word_A(int n);

// A fixed 17-letter word over the chain with 4 vertices, used as a fixture
// throughout the test suites.
SignedWord a4_example_word();

}  // namespace transvec
