#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mcgspin/homology.hpp"

namespace mcgspin {

/// Homological surrogate for a simple closed curve. Labels are for
/// certificates only; they never enter the algebra.
struct Curve {
  Curve(std::string label, ClassMod2 mod2, std::optional<ClassInt> integral = std::nullopt);
  static Curve from_integral(std::string label, ClassInt integral);

  int genus() const { return mod2.genus(); }
  bool has_integral() const { return integral.has_value(); }
  /// Same class with a different name; integral classes may differ by sign.
  Curve renamed(std::string new_label) const;

  std::string label;
  ClassMod2 mod2;
  std::optional<ClassInt> integral;

  friend bool operator==(const Curve&, const Curve&) = default;
};

struct Letter {
  Curve curve;
  int exponent;  // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A word in Dehn twists and their inverses, read as a composition of maps:
/// the rightmost letter acts first.
class TwistWord {
 public:
  static TwistWord identity(int genus, std::string name = "1");
  TwistWord(std::string name, std::vector<Letter> letters);

  int genus() const noexcept { return genus_; }
  const std::string& name() const noexcept { return name_; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  bool is_identity() const noexcept { return letters_.empty(); }
  bool has_integral() const;
  TwistWord inverse() const;

  friend bool operator==(const TwistWord&, const TwistWord&) = default;

 private:
  TwistWord(int genus, std::string name) : genus_(genus), name_(std::move(name)) {}
  int genus_;
  std::string name_;
  std::vector<Letter> letters_;
};

ClassMod2 apply_word(const TwistWord& w, const ClassMod2& v);
ClassInt apply_word(const TwistWord& w, const ClassInt& v);
/// Integral class is carried along when both the curve and every letter have one.
Curve apply_word(const TwistWord& w, const Curve& c, std::string label);
/// Intermediate classes after each letter, in the order the letters act.
/// The last entry is the full image.
std::vector<ClassMod2> apply_word_trace(const TwistWord& w, const ClassMod2& v);

struct ZFamily {
  int g;
  int k;
  friend bool operator==(const ZFamily&, const ZFamily&) = default;
};

/// t_{c_1} ... t_{c_l} = t_delta^k in the one-boundary mapping class group,
/// recorded by its closed-surface curves and the boundary power k.
class PositiveFactorization {
 public:
  PositiveFactorization(int genus, std::vector<Curve> twists, int boundary_power,
                        std::vector<std::string> provenance = {});

  int genus() const noexcept { return genus_; }
  std::size_t length() const noexcept { return twists_.size(); }
  const std::vector<Curve>& twists() const noexcept { return twists_; }
  int boundary_power() const noexcept { return boundary_power_; }
  const std::vector<std::string>& provenance() const noexcept { return provenance_; }
  const std::optional<ZFamily>& family() const noexcept { return family_; }
  bool has_integral() const;

  PositiveFactorization with_record(std::string record) const;
  PositiveFactorization with_family(ZFamily family) const;

  /// Provenance is an audit trail and does not take part in equality.
  friend bool operator==(const PositiveFactorization& a, const PositiveFactorization& b) {
    return a.genus_ == b.genus_ && a.boundary_power_ == b.boundary_power_ && a.twists_ == b.twists_ &&
           a.family_ == b.family_;
  }

 private:
  int genus_;
  std::vector<Curve> twists_;
  int boundary_power_;
  std::vector<std::string> provenance_;
  std::optional<ZFamily> family_;
};

/// Image of the four-holed genus-2 pencil surface: boundary curves a, b, c, d
/// and the eight pencil vanishing cycles in the order they appear in the pencil
/// relation.
class SubsurfaceImage {
 public:
  static constexpr std::array<std::string_view, 8> kInteriorLabels = {"B0", "B1", "B2", "C",
                                                                      "C'", "B2'", "B1'", "B0'"};

  SubsurfaceImage(std::array<Curve, 4> boundary, std::array<Curve, 8> interior);

  const std::array<Curve, 4>& boundary() const noexcept { return boundary_; }
  const std::array<Curve, 8>& interior() const noexcept { return interior_; }
  const Curve& interior(std::string_view label) const;

 private:
  std::array<Curve, 4> boundary_;
  std::array<Curve, 8> interior_;
};

enum class HurwitzDirection { Left, Right };

PositiveFactorization conjugate(const PositiveFactorization& p, const TwistWord& w);
/// Right: (t_a, t_b) -> (t_{t_a(b)}, t_a) at positions (i, i+1), 1-based. Left is its inverse.
PositiveFactorization hurwitz_move(const PositiveFactorization& p, std::size_t i, HurwitzDirection dir);
/// Moves the twist at position `from` to position `to` (1-based) through adjacent swaps, each of which
/// must be between curves of intersection zero (mod 2, and over Z when known).
PositiveFactorization commute(const PositiveFactorization& p, std::size_t from, std::size_t to);
/// Renames entries first..last (1-based, inclusive) to `as`. Each entry must
/// carry the same class as `as` (integer classes may differ by sign).
PositiveFactorization relabel(const PositiveFactorization& p, std::size_t first, std::size_t last, const Curve& as);
/// p1 * p2^w; boundary powers add.
PositiveFactorization fiber_sum(const PositiveFactorization& p1, const PositiveFactorization& p2,
                                const TwistWord& w);
/// Replaces the block t_a t_b t_c t_d starting at position `at` (1-based) by the eight
/// interior twists of `image`.
PositiveFactorization breed(const PositiveFactorization& p, std::size_t at, const SubsurfaceImage& image);
/// 1-based start positions of exact occurrences of the boundary block.
std::vector<std::size_t> find_boundary_blocks(const PositiveFactorization& p, const SubsurfaceImage& image);

BitMatrix product_mod2(const PositiveFactorization& p);
IntMatrix product_integral(const PositiveFactorization& p);

struct RelationCheck {
  bool mod2;
  std::optional<bool> integral;  // nullopt when some entry lacks an integral class
};

RelationCheck check_relation(const PositiveFactorization& p);

struct SpinCertificate {
  std::vector<std::string> labels;
  std::vector<int> values;
  bool all_ones;
  int boundary_power;
  bool boundary_power_even;
  bool verdict;
};

SpinCertificate check_spin(const PositiveFactorization& p, const QuadraticForm& q);

}  // namespace mcgspin
