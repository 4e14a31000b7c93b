#include "transvec/sigma.hpp"

#include <algorithm>
#include <sstream>

namespace transvec {

std::vector<int> SigmaGraph::bounded_set() const {
  std::vector<int> r;
  for (int k = 1; k <= m(); ++k)
    if (bounded_flag[k]) r.push_back(k);
  return r;
}

EdgeType SigmaGraph::edge_type(int a, int b) const {
  uint8_t t = type_code[static_cast<size_t>(a - 1) * m() + (b - 1)];
  if (t > 2) throw InputError("no edge between the given vertices");
  return static_cast<EdgeType>(t);
}

std::vector<SigmaEdge> SigmaGraph::edges() const {
  std::vector<SigmaEdge> r;
  for (int a = 1; a <= m(); ++a)
    for (int b = 1; b <= m(); ++b)
      if (has_edge(a, b)) r.push_back({a, b, edge_type(a, b)});
  return r;
}

std::vector<int> SigmaGraph::in_neighbors(int k) const {
  std::vector<int> r;
  for (int a = 1; a <= m(); ++a)
    if (has_edge(a, k)) r.push_back(a);
  return r;
}

std::vector<int> SigmaGraph::out_neighbors(int k) const {
  std::vector<int> r;
  for (int b = 1; b <= m(); ++b)
    if (has_edge(k, b)) r.push_back(b);
  return r;
}

int SigmaGraph::edge_count(EdgeType t) const {
  int c = 0;
  for (auto& e : edges())
    if (e.type == t) ++c;
  return c;
}

int l_minus(const SignedWord& w, int l) {
  if (l < 1 || l > w.size()) throw InputError("position out of range");
  for (int k = l - 1; k >= 1; --k)
    if (w.abs_letter(k) == w.abs_letter(l)) return k;
  return 0;
}

std::vector<int> bounded_set(const SignedWord& w) {
  std::vector<int> r;
  for (int l = 2; l <= w.size(); ++l)
    if (l_minus(w, l) > 0) r.push_back(l);
  return r;
}

namespace {

struct WordView {
  const CoxeterGraph& pi;
  const std::vector<int>& letters;    // signed
  const std::vector<int>& lminus;     // 1-based

  int sgn(int k) const { return letters[k - 1] > 0 ? +1 : -1; }
  int abs(int k) const {
    int x = letters[k - 1];
    return x > 0 ? x : -x;
  }
};

struct PairClass {
  int matches = 0;
  EdgeType type{};
};

// Evaluates the three edge conditions on a pair k < l.
PairClass classify_pair(const WordView& w, int k, int l) {
  PairClass pc;
  int km = w.lminus[k], lm = w.lminus[l];
  if (k == lm) {
    ++pc.matches;
    pc.type = EdgeType::Horizontal;
  }
  bool pi_adjacent = w.pi.adjacent(w.abs(k), w.abs(l));
  if (pi_adjacent && km < lm && lm < k && w.sgn(lm) == w.sgn(k)) {
    ++pc.matches;
    pc.type = EdgeType::InclinedII;
  }
  if (pi_adjacent && lm < km && km < k && w.sgn(km) == -w.sgn(k)) {
    ++pc.matches;
    pc.type = EdgeType::InclinedIII;
  }
  return pc;
}

// Directed from the smaller endpoint iff its sign matches the rule for the
// edge family (positive for horizontal, negative for inclined).
bool directed_from_small(const WordView& w, int k, EdgeType t) {
  return (t == EdgeType::Horizontal) == (w.sgn(k) == +1);
}

std::vector<int> compute_lminus(const std::vector<int>& letters) {
  int m = static_cast<int>(letters.size());
  std::vector<int> lm(m + 1, 0);
  for (int l = 1; l <= m; ++l) {
    int al = letters[l - 1] > 0 ? letters[l - 1] : -letters[l - 1];
    for (int k = l - 1; k >= 1; --k) {
      int ak = letters[k - 1] > 0 ? letters[k - 1] : -letters[k - 1];
      if (ak == al) { lm[l] = k; break; }
    }
  }
  return lm;
}

}  // namespace

SigmaGraph build_sigma(const SignedWord& w) {
  if (!is_reduced_pair(w)) throw InputError("word is not a reduced pair word");
  int m = w.size();
  SigmaGraph sg;
  sg.pi = w.graph;
  sg.word_letters = w.letters;
  sg.lminus = compute_lminus(w.letters);
  sg.bounded_flag.assign(m + 1, 0);
  for (int l = 1; l <= m; ++l) sg.bounded_flag[l] = sg.lminus[l] > 0;
  sg.dir.assign(static_cast<size_t>(m) * m, 0);
  sg.type_code.assign(static_cast<size_t>(m) * m, 0xFF);

  WordView view{sg.pi, sg.word_letters, sg.lminus};
  for (int k = 1; k <= m; ++k) {
    for (int l = k + 1; l <= m; ++l) {
      PairClass pc = classify_pair(view, k, l);
      if (pc.matches == 0) continue;
      if (pc.matches > 1)
        throw VerificationError("edge conditions overlap on pair (" +
                                std::to_string(k) + "," + std::to_string(l) + ")");
      if (!sg.bounded_flag[k] && !sg.bounded_flag[l])
        throw VerificationError("edge with no bounded endpoint on pair (" +
                                std::to_string(k) + "," + std::to_string(l) + ")");
      int from = k, to = l;
      if (!directed_from_small(view, k, pc.type)) std::swap(from, to);
      sg.dir[static_cast<size_t>(from - 1) * m + (to - 1)] = 1;
      sg.type_code[static_cast<size_t>(k - 1) * m + (l - 1)] = static_cast<uint8_t>(pc.type);
      sg.type_code[static_cast<size_t>(l - 1) * m + (k - 1)] = static_cast<uint8_t>(pc.type);
    }
  }
  return sg;
}

int Strip::side_of(int position) const {
  for (auto& p : points)
    if (p.position == position) return p.side;
  return 0;
}

bool Strip::has_edge(int a, int b) const {
  for (auto& e : edges)
    if (e.from == a && e.to == b) return true;
  return false;
}

bool Strip::edge_between(int a, int b) const { return has_edge(a, b) || has_edge(b, a); }

std::vector<std::pair<int, int>> Strip::inclined_edges() const {
  std::vector<std::pair<int, int>> r;
  for (auto& e : edges) {
    int a = std::min(e.from, e.to), b = std::max(e.from, e.to);
    if (side_of(a) != side_of(b)) r.emplace_back(a, b);
  }
  std::sort(r.begin(), r.end());
  return r;
}

Strip build_strip(const SigmaGraph& sg, int i, int j) {
  if (!sg.pi.adjacent(i, j)) throw InputError("strip letters must be adjacent");
  Strip s;
  s.li = i;
  s.lj = j;
  for (int k = 1; k <= sg.m(); ++k) {
    int a = sg.abs_letter(k);
    if (a != i && a != j) continue;
    int side = (a == i) ? -1 : +1;
    int sign = sg.sign(k);
    s.points.push_back({k, side, sign, side * sign});
  }
  for (auto& e : sg.edges())
    if (s.side_of(e.from) != 0 && s.side_of(e.to) != 0) s.edges.push_back(e);
  return s;
}

CheckReport check_strip_planarity(const Strip& s) {
  CheckReport rep;
  auto incl = s.inclined_edges();
  for (size_t x = 0; x < incl.size(); ++x) {
    for (size_t y = x + 1; y < incl.size(); ++y) {
      auto [a1, b1] = incl[x];
      auto [a2, b2] = incl[y];
      bool same_start = s.side_of(a1) == s.side_of(a2);
      long long cross = same_start
                            ? static_cast<long long>(a1 - a2) * (b1 - b2)
                            : static_cast<long long>(a1 - b2) * (b1 - a2);
      if (cross < 0)
        rep.violations.push_back("inclined edges {" + std::to_string(a1) + "," +
                                 std::to_string(b1) + "} and {" + std::to_string(a2) +
                                 "," + std::to_string(b2) + "} cross");
    }
  }
  return rep;
}

namespace {

std::vector<int> side_points_between(const Strip& s, int side, int lo, int hi) {
  std::vector<int> r;
  for (auto& p : s.points)
    if (p.side == side && p.position >= lo && p.position <= hi) r.push_back(p.position);
  return r;
}

void check_directed_cycle(const Strip& s, const std::vector<int>& cycle, CheckReport& rep) {
  size_t t = cycle.size();
  bool forward = true, backward = true;
  for (size_t i = 0; i < t; ++i) {
    int a = cycle[i], b = cycle[(i + 1) % t];
    if (!s.edge_between(a, b)) {
      rep.violations.push_back("polygon side {" + std::to_string(a) + "," +
                               std::to_string(b) + "} is not an edge");
      return;
    }
    if (!s.has_edge(a, b)) forward = false;
    if (!s.has_edge(b, a)) backward = false;
  }
  if (!forward && !backward) {
    std::string verts;
    for (int v : cycle) verts += std::to_string(v) + " ";
    rep.violations.push_back("polygon " + verts + "is not a directed cycle");
  }
}

}  // namespace

CheckReport check_strip_cycles(const Strip& s) {
  CheckReport rep;
  auto incl = s.inclined_edges();
  for (size_t x = 0; x + 1 < incl.size(); ++x) {
    auto [b1, c1] = incl[x];
    auto [b2, c2] = incl[x + 1];
    std::vector<int> cycle;
    if (s.side_of(b2) == s.side_of(c1) && c1 <= b2) {
      // Zigzag: the second edge starts on the level the first one ends on
      // (possibly at the shared vertex c1 == b2). One chain runs c1..b2 on
      // that level, the closing chain runs b1..c2 on the other.
      cycle.push_back(b1);
      for (int v : side_points_between(s, s.side_of(c1), c1, b2)) cycle.push_back(v);
      auto back = side_points_between(s, s.side_of(b1), b1, c2);
      if (back.empty() || back.front() != b1 || back.back() != c2) {
        rep.violations.push_back("polygon between inclined edges at " +
                                 std::to_string(b1) + " and " + std::to_string(b2) +
                                 " has no closing chain");
        continue;
      }
      for (size_t i = back.size() - 1; i >= 1; --i) cycle.push_back(back[i]);
    } else if (s.side_of(b2) == s.side_of(b1) && c1 <= c2) {
      // Parallel: both edges rise the same way (possibly sharing the right
      // end c1 == c2). Chains run b1..b2 and c1..c2 along the two levels.
      auto bottom = side_points_between(s, s.side_of(b1), b1, b2);
      auto top = side_points_between(s, s.side_of(c1), c1, c2);
      if (bottom.empty() || bottom.front() != b1 || bottom.back() != b2 ||
          top.empty() || top.front() != c1 || top.back() != c2) {
        rep.violations.push_back("polygon between inclined edges at " +
                                 std::to_string(b1) + " and " + std::to_string(b2) +
                                 " has broken chains");
        continue;
      }
      cycle = bottom;
      for (size_t i = top.size(); i >= 1; --i) cycle.push_back(top[i - 1]);
    } else {
      rep.violations.push_back("consecutive inclined edges at " + std::to_string(b1) +
                               " and " + std::to_string(b2) +
                               " do not bound a triangle or trapezoid");
      continue;
    }
    check_directed_cycle(s, cycle, rep);
  }
  return rep;
}

BoundaryWitness boundary_vertex_witness(const SigmaGraph& sg, const std::vector<int>& S) {
  if (S.empty()) throw InputError("S must be nonempty");
  for (int v : S)
    if (v < 1 || v > sg.m() || !sg.bounded(v))
      throw InputError("S must consist of bounded vertices");

  int b = 0;
  for (int v : S)
    if (b == 0 || sg.lminus[v] < sg.lminus[b]) b = v;
  int a = sg.lminus[b];

  for (int v : S)
    if (v == a)
      throw VerificationError("constructed witness lies inside S");
  int count = 0, found = 0;
  for (int v : S)
    if (sg.adjacent(a, v)) { ++count; found = v; }
  if (count != 1 || found != b)
    throw VerificationError("witness " + std::to_string(a) + " is adjacent to " +
                            std::to_string(count) + " members of S");
  return {a, b};
}

SigmaGraph predict_graph_change(const SigmaGraph& sg, const SignedWord& w, Move move) {
  if (!move_applicable(w, move)) throw InputError("move not applicable: " + move_name(move));
  int m = sg.m();
  SignedWord wp = apply_move(w, move);
  std::vector<int> sigma = move_sigma(move, m);

  SigmaGraph out;
  out.pi = wp.graph;
  out.word_letters = wp.letters;
  out.lminus = compute_lminus(wp.letters);
  out.bounded_flag.assign(m + 1, 0);
  for (int l = 1; l <= m; ++l) out.bounded_flag[l] = out.lminus[l] > 0;
  out.dir.assign(static_cast<size_t>(m) * m, 0);
  out.type_code.assign(static_cast<size_t>(m) * m, 0xFF);

  auto set_dir = [&](int a, int b, bool on) {
    out.dir[static_cast<size_t>(a - 1) * m + (b - 1)] = on ? 1 : 0;
  };
  auto get_dir = [&](int a, int b) {
    return out.dir[static_cast<size_t>(a - 1) * m + (b - 1)] != 0;
  };

  int k = move.position;
  bool nontrivial = !is_trivial(move);
  for (auto& e : sg.edges()) {
    if (nontrivial && (e.from == k || e.to == k)) continue;
    set_dir(sigma[e.from], sigma[e.to], true);
  }
  if (nontrivial) {
    // Every edge at k reverses (the relabeling fixes k).
    for (int a : sg.in_neighbors(k)) set_dir(k, sigma[a], true);
    for (int b : sg.out_neighbors(k)) set_dir(sigma[b], k, true);
    // Pairs seen through k toggle; a fresh edge runs sigma(a)->sigma(b).
    for (int a : sg.in_neighbors(k)) {
      for (int b : sg.out_neighbors(k)) {
        if (a == b) continue;
        if (!sg.bounded(a) && !sg.bounded(b)) continue;
        if (get_dir(sigma[a], sigma[b]) || get_dir(sigma[b], sigma[a])) {
          set_dir(sigma[a], sigma[b], false);
          set_dir(sigma[b], sigma[a], false);
        } else {
          set_dir(sigma[a], sigma[b], true);
        }
      }
    }
  }

  WordView view{out.pi, out.word_letters, out.lminus};
  for (int a = 1; a <= m; ++a) {
    for (int b = a + 1; b <= m; ++b) {
      if (!get_dir(a, b) && !get_dir(b, a)) continue;
      PairClass pc = classify_pair(view, a, b);
      uint8_t code = (pc.matches == 1) ? static_cast<uint8_t>(pc.type) : 0xFE;
      out.type_code[static_cast<size_t>(a - 1) * m + (b - 1)] = code;
      out.type_code[static_cast<size_t>(b - 1) * m + (a - 1)] = code;
    }
  }
  return out;
}

std::string to_dot(const SigmaGraph& sg) {
  std::ostringstream os;
  os << "digraph sigma {\n  rankdir=LR;\n  node [shape=circle, style=filled];\n";
  for (int k = 1; k <= sg.m(); ++k) {
    os << "  v" << k << " [label=\"" << k << ":" << sg.letter(k) << "\", fillcolor=\""
       << (sg.sign(k) > 0 ? "gray75" : "white") << "\"];\n";
  }
  for (auto& e : sg.edges()) {
    const char* style = e.type == EdgeType::Horizontal  ? "solid"
                        : e.type == EdgeType::InclinedII ? "dashed"
                                                         : "dotted";
    os << "  v" << e.from << " -> v" << e.to << " [style=" << style << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string summary(const SigmaGraph& sg) {
  std::ostringstream os;
  os << "m: " << sg.m() << "\n";
  os << "word:";
  for (int x : sg.word_letters) os << ' ' << x;
  os << "\n";
  os << "bounded:";
  for (int v : sg.bounded_set()) os << ' ' << v;
  os << "\n";
  os << "edges_horizontal: " << sg.edge_count(EdgeType::Horizontal) << "\n";
  os << "edges_inclined_ii: " << sg.edge_count(EdgeType::InclinedII) << "\n";
  os << "edges_inclined_iii: " << sg.edge_count(EdgeType::InclinedIII) << "\n";
  return os.str();
}

}  // namespace transvec
