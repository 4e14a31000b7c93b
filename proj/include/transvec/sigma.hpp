#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "transvec/coxeter.hpp"

namespace transvec {

enum class EdgeType : uint8_t { Horizontal = 0, InclinedII = 1, InclinedIII = 2 };

struct SigmaEdge {
  int from, to;
  EdgeType type;
  bool operator==(const SigmaEdge&) const = default;
};

// Directed graph on positions 1..m of a reduced pair word. Horizontal edges
// join consecutive occurrences of the same letter; inclined edges join
// adjacent letters under sign conditions on the previous occurrences.
// A position is bounded iff its letter occurred before it.
struct SigmaGraph {
  CoxeterGraph pi;
  std::vector<int> word_letters;       // signed, index k-1 for position k
  std::vector<int> lminus;             // lminus[k] for k in 1..m; 0 = none
  std::vector<char> bounded_flag;      // bounded_flag[k] for k in 1..m
  std::vector<uint8_t> dir;            // m*m; dir[(a-1)*m+(b-1)] = 1 iff a->b
  std::vector<uint8_t> type_code;      // m*m, symmetric; 0xFF = no edge

  int m() const { return static_cast<int>(word_letters.size()); }
  int letter(int k) const { return word_letters[k - 1]; }
  int sign(int k) const { return word_letters[k - 1] > 0 ? +1 : -1; }
  int abs_letter(int k) const {
    int x = word_letters[k - 1];
    return x > 0 ? x : -x;
  }
  bool bounded(int k) const { return bounded_flag[k]; }
  std::vector<int> bounded_set() const;

  bool has_edge(int a, int b) const {  // directed a->b
    return dir[static_cast<size_t>(a - 1) * m() + (b - 1)] != 0;
  }
  bool adjacent(int a, int b) const { return has_edge(a, b) || has_edge(b, a); }
  EdgeType edge_type(int a, int b) const;
  std::vector<SigmaEdge> edges() const;  // ordered by (from, to)
  std::vector<int> in_neighbors(int k) const;
  std::vector<int> out_neighbors(int k) const;
  int edge_count(EdgeType t) const;

  bool operator==(const SigmaGraph&) const = default;
};

// Largest position k < l carrying the same |letter|, or 0 if none.
int l_minus(const SignedWord& w, int l);

std::vector<int> bounded_set(const SignedWord& w);

// Requires a reduced pair word. Verifies structural invariants while
// building: the three edge conditions are mutually exclusive and every edge
// has a bounded endpoint.
SigmaGraph build_sigma(const SignedWord& w);

// Planar realization of the induced subgraph on two adjacent letters i,j:
// positions with |letter| = i sit on side -1, those with j on side +1.
struct StripPoint {
  int position;
  int side;    // -1 or +1
  int sign;    // sign of the letter
  int charge;  // side * sign
};

struct Strip {
  int li = 0, lj = 0;
  std::vector<StripPoint> points;  // ascending position
  std::vector<SigmaEdge> edges;

  int side_of(int position) const;  // 0 if not in the strip
  bool has_edge(int a, int b) const;
  bool edge_between(int a, int b) const;
  // Edges joining opposite sides, ordered by left endpoint.
  std::vector<std::pair<int, int>> inclined_edges() const;
};

Strip build_strip(const SigmaGraph& sg, int i, int j);

struct CheckReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// No two inclined segments intersect at an interior point of both.
CheckReport check_strip_planarity(const Strip& s);

// Every polygon bounded by two consecutive inclined edges and the
// horizontal chains between them is a directed cycle.
CheckReport check_strip_cycles(const Strip& s);

struct BoundaryWitness {
  int outside;          // vertex a not in S
  int unique_neighbor;  // the single b in S adjacent to a
};

// For nonempty S inside the bounded set, produces a vertex outside S
// adjacent to exactly one member of S (the construction picks the b in S
// with minimal previous occurrence and a = that occurrence); uniqueness is
// re-verified by direct adjacency count. Throws VerificationError if the
// property fails.
BoundaryWitness boundary_vertex_witness(const SigmaGraph& sg, const std::vector<int>& S);

// Predicted graph of the rewritten word: relabels all edges through the
// move's position permutation; for a non-trivial move additionally reverses
// every edge at the move position k and toggles the pair {a,b} for every
// directed path a->k->b having a bounded endpoint (a new edge is directed
// sigma(a)->sigma(b)). Edge types and the bounded data are recomputed from
// the rewritten word. Contract: equals build_sigma(apply_move(w, move)).
SigmaGraph predict_graph_change(const SigmaGraph& sg, const SignedWord& w, Move move);

std::string to_dot(const SigmaGraph& sg);
std::string summary(const SigmaGraph& sg);

}  // namespace transvec
