#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mcgspin/factorization.hpp"

namespace mcgspin {

/// Letters are signed 1-based generator indices: 3 is x_3, -3 is x_3^-1.
class FinitePresentation {
 public:
  FinitePresentation(std::vector<std::string> generators, std::vector<std::vector<int>> relators);

  std::size_t generator_count() const noexcept { return generators_.size(); }
  const std::vector<std::string>& generators() const noexcept { return generators_; }
  const std::vector<std::vector<int>>& relators() const noexcept { return relators_; }
  std::string to_text() const;

  friend bool operator==(const FinitePresentation&, const FinitePresentation&) = default;

 private:
  std::vector<std::string> generators_;
  std::vector<std::vector<int>> relators_;
};

/// Parses `gens: x1 x2; rel: x1 x2 x1^-1 x2^-1; rel: (x1 x2)^3;`.
/// Throws ParseError with the position of the offending token.
FinitePresentation parse_presentation(std::string_view text);

struct AbelianGroup {
  int free_rank = 0;
  std::vector<Integer> torsion;  // invariant factors, each >= 2, each dividing the next

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  /// "0", "Z", "Z^2 + Z/2 + Z/6".
  std::string to_string() const;
  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

struct SmithForm {
  IntMatrix d;
  std::optional<IntMatrix> u;  // d = u * m * v when transforms were requested
  std::optional<IntMatrix> v;
  std::size_t rank = 0;
  std::vector<Integer> diagonal;  // the nonzero invariant factors
};

/// Pivot on the entry of smallest absolute value, first in row-major order.
SmithForm smith_normal_form(const IntMatrix& m, bool with_transforms = false);

/// Z^ambient modulo the span of the rows (or columns) of m.
AbelianGroup quotient_group(const IntMatrix& m, std::size_t ambient);

AbelianGroup abelianization(const FinitePresentation& p);

struct NormalFormCheck {
  bool positive = true;
  bool at_most_once = true;
  bool cyclic_order = true;
  std::optional<std::size_t> first_violation;  // 0-based relator index
  bool ok() const { return positive && at_most_once && cyclic_order; }
};

NormalFormCheck check_normal_form(const FinitePresentation& p);

/// Tietze rewriting into a presentation whose relators are positive, use each
/// generator at most once and list generators in increasing cyclic order.
/// Relators already in that form are kept; an input that passes is returned unchanged.
FinitePresentation normalize_presentation(const FinitePresentation& p);

struct H1Certificate {
  bool integral = false;
  std::optional<AbelianGroup> group;  // present when integral
  int mod2_dimension = 0;             // dim H_1(X; Z/2)
};

/// H_1 of the total space: Z^{2g} modulo the vanishing-cycle classes. Falls
/// back to Z/2 coefficients when some entry has no integer class.
H1Certificate fibration_h1(const PositiveFactorization& p);
H1Certificate h1_of_classes(int genus, const std::vector<Curve>& classes);

struct KorkmazRelatorSet {
  std::vector<Curve> classes;
  /// For each conjugator curve, the index of an entry of the base
  /// factorization it meets with odd intersection.
  std::vector<std::size_t> witnesses;
  /// The single transverse intersection point is accepted on the strength of
  /// the algebraic certificate.
  bool geometric_hypothesis_assumed = true;
};

/// Normal generators of pi_1 for P P^{t_{d_1}} ... P^{t_{d_r}}: the classes of P
/// together with the d_j. Each d_j must meet some entry of P oddly.
KorkmazRelatorSet korkmaz_relator_set(const PositiveFactorization& p, const std::vector<Curve>& conjugators);

}  // namespace mcgspin
