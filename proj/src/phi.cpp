#include "transvec/phi.hpp"

#include <deque>
#include <sstream>

namespace transvec {

PhiMap make_phi(const SigmaGraph& sigma_source, Move move, int sign) {
  if (sign != +1 && sign != -1) throw InputError("phi sign must be +1 or -1");
  int m = sigma_source.m();
  std::vector<int> sigma = move_sigma(move, m);
  PhiMap p;
  p.sign = sign;
  p.move = move;
  p.matrix = ZMatrix(m, m);
  int k = move.position;
  bool nontrivial = !is_trivial(move);
  for (int l = 1; l <= m; ++l) {
    if (nontrivial && l == k) {
      auto nbrs = sign > 0 ? sigma_source.in_neighbors(k) : sigma_source.out_neighbors(k);
      for (int a : nbrs) p.matrix.at(k - 1, a - 1) = 1;
      p.matrix.at(k - 1, k - 1) = checked_sub(p.matrix.at(k - 1, k - 1), 1);
    } else {
      p.matrix.at(l - 1, sigma[l] - 1) = 1;
    }
  }
  return p;
}

CheckReport check_phi_inverses(const SignedWord& w, Move move) {
  CheckReport rep;
  SignedWord wp = apply_move(w, move);
  SigmaGraph si = build_sigma(w), sp = build_sigma(wp);
  ZMatrix pf = make_phi(si, move, +1).matrix;
  ZMatrix mf = make_phi(si, move, -1).matrix;
  ZMatrix pb = make_phi(sp, move, +1).matrix;
  ZMatrix mb = make_phi(sp, move, -1).matrix;
  if (!(mb * pf).is_identity())
    rep.violations.push_back("phi^-(back) phi^+(forth) != Id for " + move_name(move));
  if (!(pb * mf).is_identity())
    rep.violations.push_back("phi^+(back) phi^-(forth) != Id for " + move_name(move));
  return rep;
}

CheckReport check_tau_phi_squared(const SignedWord& w, Move move) {
  if (is_trivial(move)) throw InputError("identity requires a non-trivial move");
  CheckReport rep;
  SignedWord wp = apply_move(w, move);
  SigmaGraph si = build_sigma(w), sp = build_sigma(wp);
  ZMatrix composite = make_phi(sp, move, +1).matrix * make_phi(si, move, +1).matrix;
  ZMatrix tau = transvection_matrix(SkewForm::of_sigma(si), move.position);
  if (composite != tau)
    rep.violations.push_back("phi^+ squared != tau at position " +
                             std::to_string(move.position));
  return rep;
}

IntertwinerReport check_intertwiner(const SignedWord& w, Move move) {
  IntertwinerReport rep;
  SignedWord wp = apply_move(w, move);
  SigmaGraph si = build_sigma(w), sp = build_sigma(wp);
  SkewForm fi = SkewForm::of_sigma(si), fp = SkewForm::of_sigma(sp);
  std::vector<int> sigma = move_sigma(move, si.m());
  ZMatrix phi = make_phi(si, move, +1).matrix;
  ZMatrix phi_inv = make_phi(sp, move, -1).matrix;
  int k = move.position;
  bool nontrivial = !is_trivial(move);

  for (int l : si.bounded_set()) {
    bool excepted = nontrivial && si.has_edge(l, k);
    if (!excepted) {
      rep.plain.push_back(l);
      if (phi * transvection_matrix(fi, l) != transvection_matrix(fp, sigma[l]) * phi)
        rep.check.violations.push_back("intertwining failed at generator " +
                                       std::to_string(l) + " for " + move_name(move));
    } else {
      rep.excepted.push_back(l);
      ZMatrix lhs = phi * transvection_matrix(fi, l) * phi_inv;
      ZMatrix rhs = transvection_matrix(fp, k) * transvection_matrix(fp, sigma[l]) *
                    transvection_inverse_matrix(fp, k);
      if (lhs != rhs)
        rep.check.violations.push_back("conjugated generator " + std::to_string(l) +
                                       " escaped the target group for " + move_name(move));
    }
  }
  return rep;
}

CheckReport check_omega_transform(const SignedWord& w, Move move) {
  CheckReport rep;
  SignedWord wp = apply_move(w, move);
  SigmaGraph si = build_sigma(w), sp = build_sigma(wp);
  ZMatrix mi = SkewForm::of_sigma(si).gram();
  ZMatrix mp = SkewForm::of_sigma(sp).gram();
  int k = move.position;

  ZMatrix expected = mi;
  if (!is_trivial(move)) {
    for (int a : si.in_neighbors(k)) {
      if (si.bounded(a)) continue;
      for (int b : si.out_neighbors(k)) {
        if (si.bounded(b) || a == b) continue;
        expected.at(a - 1, b - 1) = checked_sub(expected.at(a - 1, b - 1), 1);
        expected.at(b - 1, a - 1) = checked_add(expected.at(b - 1, a - 1), 1);
      }
    }
  }
  for (int sign : {+1, -1}) {
    ZMatrix phi = make_phi(si, move, sign).matrix;
    ZMatrix pulled = phi.transposed() * mp * phi;
    if (pulled != expected)
      rep.violations.push_back(std::string("pullback of the form through phi^") +
                               (sign > 0 ? "+" : "-") + " is off for " + move_name(move));
  }
  return rep;
}

namespace {

GeneratorWord map_generator(const SigmaGraph& source, const std::vector<int>& sigma,
                            Move move, int g) {
  bool excepted = !is_trivial(move) && source.has_edge(g, move.position);
  GeneratorWord out;
  if (!excepted) {
    out.factors = {{sigma[g], +1}};
  } else {
    out.factors = {{move.position, +1}, {sigma[g], +1}, {move.position, -1}};
  }
  return out;
}

GeneratorWord substitute(const GeneratorWord& expr, const SigmaGraph& source,
                         const std::vector<int>& sigma, Move move) {
  GeneratorWord out;
  for (auto [g, e] : expr.factors) {
    GeneratorWord img = map_generator(source, sigma, move, g);
    if (e == +1) {
      out.factors.insert(out.factors.end(), img.factors.begin(), img.factors.end());
    } else {
      for (auto it = img.factors.rbegin(); it != img.factors.rend(); ++it)
        out.factors.emplace_back(it->first, -it->second);
    }
  }
  return out;
}

ZMatrix evaluate_word(const GeneratorWord& expr, const SkewForm& f) {
  ZMatrix r = ZMatrix::identity(f.m);
  for (auto [g, e] : expr.factors)
    r = r * (e > 0 ? transvection_matrix(f, g) : transvection_inverse_matrix(f, g));
  return r;
}

}  // namespace

std::string ConjugacyCertificate::to_text() const {
  std::ostringstream os;
  os << "words: " << words.size() << "\n";
  for (auto& w : words) {
    os << " ";
    for (int x : w.letters) os << ' ' << x;
    os << "\n";
  }
  os << "moves:\n";
  for (auto m : path) os << "  " << move_name(m) << "\n";
  os << "phi:\n" << phi.to_text();
  os << "generators:\n";
  for (auto& [l, gw] : generator_images) {
    os << "  tau[" << l << "] ->";
    for (auto [g, e] : gw.factors) os << " tau[" << g << "]^" << (e > 0 ? "+1" : "-1");
    os << "\n";
  }
  return os.str();
}

ConjugacyCertificate conjugacy_certificate(const SignedWord& from, const SignedWord& to,
                                           size_t cap) {
  if (!(from.graph == to.graph)) throw InputError("words live over different graphs");
  if (geometric_action(from.negative_subword(), from.graph) !=
          geometric_action(to.negative_subword(), to.graph) ||
      geometric_action(from.positive_subword(), from.graph) !=
          geometric_action(to.positive_subword(), to.graph))
    throw InputError("words do not represent the same pair");

  MoveGraph mg = enumerate_reduced_words(from, cap);
  int target = mg.find(to.letters);
  if (target < 0) throw InputError("no move path found within the cap");

  // Shortest path by breadth-first search over the move graph.
  std::vector<int> parent(mg.words.size(), -1);
  std::vector<Move> via(mg.words.size());
  std::deque<int> queue{0};
  std::vector<char> seen(mg.words.size(), 0);
  seen[0] = 1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    if (u == target) break;
    for (auto& e : mg.edges) {
      int v = -1;
      if (e.from == u) v = e.to;
      else if (e.to == u) v = e.from;
      else continue;
      if (seen[v]) continue;
      seen[v] = 1;
      parent[v] = u;
      via[v] = e.move;  // moves are involutive, so the label works both ways
      queue.push_back(v);
    }
  }
  if (!seen[target]) throw InputError("move graph is disconnected within the cap");

  std::vector<int> rev;
  for (int v = target; v != 0; v = parent[v]) rev.push_back(v);

  ConjugacyCertificate cert;
  cert.words.push_back(from);
  for (auto it = rev.rbegin(); it != rev.rend(); ++it) {
    Move mv = via[*it];
    cert.path.push_back(mv);
    cert.words.push_back(apply_move(cert.words.back(), mv));
  }

  int m = from.size();
  cert.phi = ZMatrix::identity(m);
  ZMatrix phi_inv = ZMatrix::identity(m);
  SigmaGraph s0 = build_sigma(from);
  std::vector<std::pair<int, GeneratorWord>> exprs;
  for (int l : s0.bounded_set()) exprs.push_back({l, GeneratorWord{{{l, +1}}}});

  for (size_t t = 0; t < cert.path.size(); ++t) {
    SigmaGraph st = build_sigma(cert.words[t]);
    SigmaGraph st1 = build_sigma(cert.words[t + 1]);
    Move mv = cert.path[t];
    std::vector<int> sigma = move_sigma(mv, m);
    cert.phi = make_phi(st, mv, +1).matrix * cert.phi;
    phi_inv = phi_inv * make_phi(st1, mv, -1).matrix;
    for (auto& [l, expr] : exprs) expr = substitute(expr, st, sigma, mv);
  }
  if (!(phi_inv * cert.phi).is_identity())
    throw VerificationError("certificate: composite map is not invertible as built");

  SkewForm f_from = SkewForm::of_sigma(s0);
  SkewForm f_to = SkewForm::of_sigma(build_sigma(cert.words.back()));
  for (auto& [l, expr] : exprs) {
    ZMatrix lhs = cert.phi * transvection_matrix(f_from, l) * phi_inv;
    ZMatrix rhs = evaluate_word(expr, f_to);
    if (lhs != rhs)
      throw VerificationError("certificate: generator " + std::to_string(l) +
                              " is not expressed correctly");
  }
  cert.generator_images = std::move(exprs);
  return cert;
}

}  // namespace transvec
