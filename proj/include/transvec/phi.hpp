#pragma once

#include <string>
#include <vector>

#include "transvec/form.hpp"
#include "transvec/sigma.hpp"

namespace transvec {

// Change-of-basis map attached to a move. Coordinates follow the position
// relabeling except at the position of a non-trivial move, where the new
// coordinate is (sum over in-edges) - old for sign +, and (sum over
// out-edges) - old for sign -.
struct PhiMap {
  int sign = +1;  // +1 or -1
  Move move{};
  ZMatrix matrix;
};

PhiMap make_phi(const SigmaGraph& sigma_source, Move move, int sign);

// phi^-(back) ∘ phi^+(forth) = phi^+(back) ∘ phi^-(forth) = Id, exactly.
CheckReport check_phi_inverses(const SignedWord& w, Move move);

// For a non-trivial move at k: phi^+(back) ∘ phi^+(forth) equals the
// transvection at k of the source word, exactly.
CheckReport check_tau_phi_squared(const SignedWord& w, Move move);

struct IntertwinerReport {
  std::vector<int> plain;     // bounded l with phi tau_l = tau_{sigma(l)} phi
  std::vector<int> excepted;  // bounded l with an edge l -> k (non-trivial move)
  CheckReport check;
};

// For every bounded l, either the plain intertwining identity holds, or (for
// a non-trivial move with l -> k an edge) the conjugated generator equals
// tau_k' tau_{sigma(l)}' tau_k'^{-1} in the target group.
IntertwinerReport check_intertwiner(const SignedWord& w, Move move);

// Pullback of the target form through phi equals the source form, minus a
// correction supported on directed paths a -> k -> b with both ends
// unbounded (empty for trivial moves).
CheckReport check_omega_transform(const SignedWord& w, Move move);

struct GeneratorWord {
  // Factors (bounded index, exponent +-1), leftmost factor applied last.
  std::vector<std::pair<int, int>> factors;
};

struct ConjugacyCertificate {
  std::vector<SignedWord> words;  // words[0] = source, back() = target
  std::vector<Move> path;         // path[i] rewrites words[i] into words[i+1]
  ZMatrix phi;                    // composite of the sign + maps along path
  std::vector<std::pair<int, GeneratorWord>> generator_images;
  std::string to_text() const;
};

// Finds a move path between two words for the same pair (breadth-first, at
// most `cap` words explored), composes the sign + maps along it, and
// expresses every conjugated source generator as an explicit word in the
// target generators. All claims are re-verified by exact multiplication;
// failures throw VerificationError.
ConjugacyCertificate conjugacy_certificate(const SignedWord& from, const SignedWord& to,
                                           size_t cap);

}  // namespace transvec
