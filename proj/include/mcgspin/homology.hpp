#pragma once

// Exact linear algebra on H_1 of a closed genus-g surface, over Z and Z/2.
//
// Coordinates are laid out as (x_1..x_g, y_1..y_g) with <x_i, y_j> = delta_ij.
// A Dehn twist about c acts on homology by the transvection v -> v + <v,c> c.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mcgspin/matrix.hpp"

namespace mcgspin {

/// Display convention for basis labels. The structural basis is the same;
/// the AB scheme names the y_i coordinate a_i and the x_i coordinate b_i.
enum class LabelScheme { XY, AB };

class SurfaceBasis {
 public:
  explicit SurfaceBasis(int genus, LabelScheme scheme = LabelScheme::XY);

  int genus() const noexcept { return genus_; }
  int dim() const noexcept { return 2 * genus_; }
  LabelScheme scheme() const noexcept { return scheme_; }

  // 1-based generator index -> 0-based coordinate.
  int x(int i) const;
  int y(int i) const;
  int a(int i) const { return y(i); }
  int b(int i) const { return x(i); }

  std::string label(int coord) const;
  /// Parses "x3", "y1", or under the AB scheme "a2", "b5".
  std::optional<int> coordinate(std::string_view label) const;

  friend bool operator==(const SurfaceBasis&, const SurfaceBasis&) = default;

 private:
  int genus_;
  LabelScheme scheme_;
};

class ClassMod2 {
 public:
  explicit ClassMod2(int genus);
  ClassMod2(int genus, Bits bits);
  static ClassMod2 basis_vector(int genus, int coord);

  int genus() const noexcept { return genus_; }
  int dim() const noexcept { return 2 * genus_; }
  const Bits& bits() const noexcept { return bits_; }
  bool test(int coord) const { return bits_[coord]; }
  ClassMod2& set(int coord, bool value = true);
  bool is_zero() const { return bits_.none(); }

  ClassMod2& operator+=(const ClassMod2& other);
  friend ClassMod2 operator+(ClassMod2 a, const ClassMod2& b) { return a += b; }
  friend bool operator==(const ClassMod2&, const ClassMod2&) = default;

 private:
  int genus_;
  Bits bits_;
};

class ClassInt {
 public:
  explicit ClassInt(int genus);
  ClassInt(int genus, std::vector<std::int64_t> coords);
  static ClassInt basis_vector(int genus, int coord);

  int genus() const noexcept { return genus_; }
  int dim() const noexcept { return 2 * genus_; }
  const std::vector<std::int64_t>& coords() const noexcept { return coords_; }
  std::int64_t operator[](int coord) const { return coords_[coord]; }
  bool is_zero() const;
  ClassMod2 reduce() const;

  ClassInt& operator+=(const ClassInt& other);
  ClassInt& operator-=(const ClassInt& other);
  friend ClassInt operator+(ClassInt a, const ClassInt& b) { return a += b; }
  friend ClassInt operator-(ClassInt a, const ClassInt& b) { return a -= b; }
  friend ClassInt operator*(std::int64_t s, const ClassInt& v);
  ClassInt operator-() const { return -1 * *this; }
  friend bool operator==(const ClassInt&, const ClassInt&) = default;

 private:
  int genus_;
  std::vector<std::int64_t> coords_;
};

/// Algebraic intersection u^T J v; over Z/2 the value is 0 or 1.
int intersect(const ClassMod2& u, const ClassMod2& v);
std::int64_t intersect(const ClassInt& u, const ClassInt& v);

/// Homological action of t_c^power: v -> v + power * <v,c> c.
ClassMod2 transvect(const ClassMod2& c, const ClassMod2& v, int power = 1);
ClassInt transvect(const ClassInt& c, const ClassInt& v, int power = 1);

/// A Z/2-valued quadratic refinement of the intersection form, stored by its
/// values on the basis. Evaluation expands v in basis vectors:
/// q(sum d_i) = sum q(d_i) + sum_{i<j} d_i . d_j.
class QuadraticForm {
 public:
  explicit QuadraticForm(ClassMod2 basis_values);

  int genus() const noexcept { return values_.genus(); }
  const ClassMod2& basis_values() const noexcept { return values_; }
  int value_on_basis(int coord) const { return values_.test(coord) ? 1 : 0; }

  friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;

 private:
  ClassMod2 values_;
};

int eval_quadratic(const QuadraticForm& q, const ClassMod2& v);
/// Same value computed from an arbitrary decomposition v = d_1 + ... + d_n.
int eval_quadratic_expansion(const QuadraticForm& q, std::span<const ClassMod2> terms);

/// t_c preserves the spin structure iff q(c) = 1. Throws for c = 0, where the
/// criterion (stated for nonseparating curves) does not apply.
bool is_twist_in_spin_mcg(const QuadraticForm& q, const ClassMod2& c);

int arf_invariant(const QuadraticForm& q);

struct SpinConstraint {
  ClassMod2 cls;
  int value;
};

inline constexpr int kMaxEnumerationGenus = 8;

/// All forms meeting the constraints, ordered by the basis-value bit pattern
/// read as an integer (coordinate 0 least significant).
std::vector<QuadraticForm> enumerate_spin_structures(int genus, std::span<const SpinConstraint> constraints);

IntMatrix symplectic_form(int genus);
BitMatrix transvection_matrix(const ClassMod2& c);
IntMatrix transvection_matrix(const ClassInt& c);
bool is_symplectic(const IntMatrix& m);
bool is_symplectic(const BitMatrix& m);

/// m <- m * T_c^power (rank-one update).
void multiply_by_transvection(BitMatrix& m, const ClassMod2& c);
void multiply_by_transvection(IntMatrix& m, const ClassInt& c, int power = 1);

ClassMod2 apply(const BitMatrix& m, const ClassMod2& v);
ClassInt apply(const IntMatrix& m, const ClassInt& v);

}  // namespace mcgspin
