#pragma once

#include <string>
#include <vector>

#include "mcgspin/factorization.hpp"
#include "mcgspin/invariants.hpp"
#include "mcgspin/presentations.hpp"

namespace mcgspin {

/// c_1 .. c_{2g+1}: c_1 = -y_1, c_{2i} = x_i, c_{2i+1} = y_i - y_{i+1}, c_{2g+1} = y_g.
/// Consecutive curves intersect +1.
std::vector<Curve> chain_curves(int g);

/// q = 1 on every basis vector (the Korkmaz-Cadavid building block form).
QuadraticForm all_ones_form(int g);
/// q(x_i) = 1 for all i, q(y_i) = 1 exactly for odd i.
QuadraticForm alternating_form(int g);

/// B_0 .. B_g, a, b of the odd-genus building block, in the a_i/b_i labels.
/// B_g has the integer class 2a_{n+1} + b_{n+1} of its defining word.
std::vector<Curve> korkmaz_cadavid_curves(int g);
/// (t_{B_0} ... t_{B_g} t_a^2 t_b^2)^2 with boundary power 1.
PositiveFactorization korkmaz_cadavid(int g);

struct UVPair {
  PositiveFactorization u;
  PositiveFactorization v;  // the first 2(2g+2) twists of u moved to the end
};

UVPair u_v_factorizations(int g);

struct Conjugators {
  TwistWord phi;
  TwistWord psi;
  Curve a;  // y_3
  Curve d;  // y_5
};

Conjugators phi_psi(int g);

/// Boundary curves a = phi(c_1), b = phi(c_3), c = psi(c_1), d = psi(c_3) and
/// the eight pencil curves.
SubsurfaceImage pencil_images(int g);

/// V^phi U^psi relabelled and rearranged to V_1 (t_a t_b t_c t_d)^{2g+2} U_1, then
/// bred k times into the trailing blocks.
PositiveFactorization build_z(int g, int k);

/// Indices i of the chain classes c_i (1 <= i <= 2g) summing to v mod 2.
std::vector<int> chain_expression(const ClassMod2& v);
std::string chain_expression_text(const std::vector<int>& expr);

struct B2Replay {
  std::vector<int> initial;             // chain expression of B_2
  std::vector<std::string> letters;     // phi^-1 letters in the order they act
  std::vector<std::vector<int>> steps;  // expression after each letter
  ClassMod2 image{1};                   // phi^-1(B_2) in H_1(Sigma; Z/2)
  bool image_is_literally_c1 = false;
  /// In the quotient where every c_i equals c_1 and c_1^2 = 1, an expression
  /// with an odd number of terms is c_1.
  bool image_is_c1_in_quotient = false;
};

B2Replay replay_b2_reduction(int g);

struct ZCertificate {
  int g = 0;
  int k = 0;
  std::size_t length = 0;
  RelationCheck relation{};
  SpinCertificate spin;
  FibrationInvariants invariants{};
  bool formulas_hold = false;  // e, chi_h, c1^2 against the closed forms in g, k
  H1Certificate h1;
  bool fast_path_applicable = false;
  bool fast_path_ok = false;  // every class of U^psi occurs and spans H_1(Sigma; Z/2)
  B2Replay b2;
  bool verdict = false;
};

/// Needs a factorization produced by build_z.
ZCertificate certify_z(const PositiveFactorization& p);

struct TheoremACertificate {
  FinitePresentation normalized{{}, {}};
  int n = 0;
  int g = 0;
  std::size_t blocks = 0;
  bool extra_block = false;
  std::vector<Curve> relator_curves;  // R'_j
  std::vector<bool> parity_fixed;     // R'_j = R_j + a_{n+1}
  RelationCheck relation{};
  SpinCertificate spin;
  H1Certificate h1;
  AbelianGroup expected;  // abelianization of the input
  bool h1_matches = false;
  KorkmazRelatorSet normal_generators;
  H1Certificate normal_generator_h1;
  bool verdict = false;
};

struct TheoremAResult {
  PositiveFactorization factorization;
  TheoremACertificate certificate;
};

TheoremAResult theorem_a_build(const FinitePresentation& g);

}  // namespace mcgspin
