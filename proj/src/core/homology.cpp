#include "mcgspin/homology.hpp"

#include <charconv>
#include <limits>

#include "mcgspin/errors.hpp"

namespace mcgspin {

namespace {

void require_same(int g1, int g2, const char* what) {
  if (g1 != g2)
    throw Error(ErrorKind::DimensionMismatch,
                std::string(what) + ": genus " + std::to_string(g1) + " vs " + std::to_string(g2));
}

// (v_x, v_y) -> (v_y, v_x)
Bits swap_halves(const Bits& v, int g) { return (v >> g) | (v << g); }

int parity(std::size_t n) { return static_cast<int>(n & 1U); }

}  // namespace

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "dimension mismatch";
    case ErrorKind::Precondition: return "precondition violated";
    case ErrorKind::NotFound: return "not found";
    case ErrorKind::Unavailable: return "unavailable";
    case ErrorKind::Overflow: return "overflow";
    case ErrorKind::Parse: return "parse error";
    case ErrorKind::Guard: return "size guard exceeded";
  }
  return "error";
}

SurfaceBasis::SurfaceBasis(int genus, LabelScheme scheme) : genus_(genus), scheme_(scheme) {
  if (genus < 1) throw Error(ErrorKind::Precondition, "genus must be positive");
}

int SurfaceBasis::x(int i) const {
  if (i < 1 || i > genus_) throw Error(ErrorKind::DimensionMismatch, "basis index out of range");
  return i - 1;
}

int SurfaceBasis::y(int i) const {
  if (i < 1 || i > genus_) throw Error(ErrorKind::DimensionMismatch, "basis index out of range");
  return genus_ + i - 1;
}

std::string SurfaceBasis::label(int coord) const {
  const bool is_x = coord < genus_;
  const int index = (is_x ? coord : coord - genus_) + 1;
  if (scheme_ == LabelScheme::AB) return (is_x ? "b" : "a") + std::to_string(index);
  return (is_x ? "x" : "y") + std::to_string(index);
}

std::optional<int> SurfaceBasis::coordinate(std::string_view label) const {
  if (label.size() < 2) return std::nullopt;
  const char kind = label.front();
  int index = 0;
  const auto* first = label.data() + 1;
  const auto* last = label.data() + label.size();
  auto [ptr, ec] = std::from_chars(first, last, index);
  if (ec != std::errc{} || ptr != last || index < 1 || index > genus_) return std::nullopt;
  const bool xy = scheme_ == LabelScheme::XY;
  if (kind == (xy ? 'x' : 'b')) return index - 1;
  if (kind == (xy ? 'y' : 'a')) return genus_ + index - 1;
  return std::nullopt;
}

ClassMod2::ClassMod2(int genus) : genus_(genus), bits_(static_cast<std::size_t>(2 * genus)) {}

ClassMod2::ClassMod2(int genus, Bits bits) : genus_(genus), bits_(std::move(bits)) {
  if (bits_.size() != static_cast<std::size_t>(2 * genus))
    throw Error(ErrorKind::DimensionMismatch, "bit vector length must be 2g");
}

ClassMod2 ClassMod2::basis_vector(int genus, int coord) {
  ClassMod2 v(genus);
  v.set(coord);
  return v;
}

ClassMod2& ClassMod2::set(int coord, bool value) {
  if (coord < 0 || coord >= dim()) throw Error(ErrorKind::DimensionMismatch, "coordinate out of range");
  bits_[coord] = value;
  return *this;
}

ClassMod2& ClassMod2::operator+=(const ClassMod2& other) {
  require_same(genus_, other.genus_, "class sum");
  bits_ ^= other.bits_;
  return *this;
}

ClassInt::ClassInt(int genus) : genus_(genus), coords_(static_cast<std::size_t>(2 * genus), 0) {}

ClassInt::ClassInt(int genus, std::vector<std::int64_t> coords) : genus_(genus), coords_(std::move(coords)) {
  if (coords_.size() != static_cast<std::size_t>(2 * genus))
    throw Error(ErrorKind::DimensionMismatch, "integer vector length must be 2g");
}

ClassInt ClassInt::basis_vector(int genus, int coord) {
  ClassInt v(genus);
  if (coord < 0 || coord >= v.dim()) throw Error(ErrorKind::DimensionMismatch, "coordinate out of range");
  v.coords_[coord] = 1;
  return v;
}

bool ClassInt::is_zero() const {
  for (auto c : coords_)
    if (c != 0) return false;
  return true;
}

ClassMod2 ClassInt::reduce() const {
  ClassMod2 r(genus_);
  for (int i = 0; i < dim(); ++i)
    if (coords_[i] % 2 != 0) r.set(i);
  return r;
}

ClassInt& ClassInt::operator+=(const ClassInt& other) {
  require_same(genus_, other.genus_, "class sum");
  for (int i = 0; i < dim(); ++i) coords_[i] = detail::checked_add(coords_[i], other.coords_[i]);
  return *this;
}

ClassInt& ClassInt::operator-=(const ClassInt& other) { return *this += -other; }

ClassInt operator*(std::int64_t s, const ClassInt& v) {
  ClassInt r = v;
  for (auto& c : r.coords_) c = detail::checked_mul(s, c);
  return r;
}

int intersect(const ClassMod2& u, const ClassMod2& v) {
  require_same(u.genus(), v.genus(), "intersect");
  return parity((u.bits() & swap_halves(v.bits(), v.genus())).count());
}

std::int64_t intersect(const ClassInt& u, const ClassInt& v) {
  require_same(u.genus(), v.genus(), "intersect");
  const int g = u.genus();
  std::int64_t s = 0;
  for (int i = 0; i < g; ++i) {
    s = detail::checked_add(s, detail::checked_mul(u[i], v[g + i]));
    s = detail::checked_add(s, -detail::checked_mul(u[g + i], v[i]));
  }
  return s;
}

ClassMod2 transvect(const ClassMod2& c, const ClassMod2& v, int power) {
  const int pairing = intersect(v, c);
  return (power % 2 != 0 && pairing != 0) ? v + c : v;
}

ClassInt transvect(const ClassInt& c, const ClassInt& v, int power) {
  const std::int64_t k = detail::checked_mul(power, intersect(v, c));
  if (k == 0) return v;
  return v + k * c;
}

QuadraticForm::QuadraticForm(ClassMod2 basis_values) : values_(std::move(basis_values)) {}

int eval_quadratic(const QuadraticForm& q, const ClassMod2& v) {
  require_same(q.genus(), v.genus(), "eval_quadratic");
  // Among basis vectors only the pairs (x_i, y_i) have nonzero intersection.
  const Bits& b = v.bits();
  return parity((b & q.basis_values().bits()).count() + (b & (b >> v.genus())).count());
}

int eval_quadratic_expansion(const QuadraticForm& q, std::span<const ClassMod2> terms) {
  int s = 0;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    s += eval_quadratic(q, terms[i]);
    for (std::size_t j = i + 1; j < terms.size(); ++j) s += intersect(terms[i], terms[j]);
  }
  return s & 1;
}

bool is_twist_in_spin_mcg(const QuadraticForm& q, const ClassMod2& c) {
  if (c.is_zero())
    throw Error(ErrorKind::Precondition, "zero class: spin criterion applies to nonseparating curves only");
  return eval_quadratic(q, c) == 1;
}

int arf_invariant(const QuadraticForm& q) {
  const int g = q.genus();
  int s = 0;
  for (int i = 0; i < g; ++i) s += q.value_on_basis(i) * q.value_on_basis(g + i);
  return s & 1;
}

std::vector<QuadraticForm> enumerate_spin_structures(int genus, std::span<const SpinConstraint> constraints) {
  if (genus < 1) throw Error(ErrorKind::Precondition, "genus must be positive");
  if (genus > kMaxEnumerationGenus)
    throw Error(ErrorKind::Guard, "brute-force enumeration limited to genus <= " +
                                      std::to_string(kMaxEnumerationGenus));
  for (const auto& c : constraints) require_same(genus, c.cls.genus(), "spin constraint");
  const int dim = 2 * genus;
  std::vector<QuadraticForm> out;
  for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << dim); ++pattern) {
    QuadraticForm q(ClassMod2(genus, Bits(static_cast<std::size_t>(dim), pattern)));
    bool ok = true;
    for (const auto& c : constraints)
      if (eval_quadratic(q, c.cls) != (c.value & 1)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(std::move(q));
  }
  return out;
}

IntMatrix symplectic_form(int genus) {
  IntMatrix j(2 * genus, 2 * genus);
  for (int i = 0; i < genus; ++i) {
    j(i, genus + i) = 1;
    j(genus + i, i) = -1;
  }
  return j;
}

BitMatrix transvection_matrix(const ClassMod2& c) {
  BitMatrix m = BitMatrix::identity(c.dim());
  multiply_by_transvection(m, c);
  return m;
}

IntMatrix transvection_matrix(const ClassInt& c) {
  IntMatrix m = IntMatrix::identity(c.dim());
  multiply_by_transvection(m, c);
  return m;
}

bool is_symplectic(const IntMatrix& m) {
  if (m.rows() != m.cols() || m.rows() % 2 != 0) return false;
  const IntMatrix j = symplectic_form(static_cast<int>(m.rows() / 2));
  return m.transpose() * j * m == j;
}

bool is_symplectic(const BitMatrix& m) {
  if (m.rows() != m.cols() || m.rows() % 2 != 0) return false;
  const int g = static_cast<int>(m.rows() / 2);
  BitMatrix j(m.rows(), m.cols());
  for (int i = 0; i < g; ++i) {
    j.set(i, g + i, true);
    j.set(g + i, i, true);
  }
  return m.transpose() * j * m == j;
}

// T_c = I + c (Jc)^T, so m T_c = m + (m c)(Jc)^T.
void multiply_by_transvection(BitMatrix& m, const ClassMod2& c) {
  if (m.cols() != static_cast<std::size_t>(c.dim()))
    throw Error(ErrorKind::DimensionMismatch, "transvection dimension mismatch");
  const Bits row = swap_halves(c.bits(), c.genus());
  for (std::size_t i = 0; i < m.rows(); ++i)
    if ((m.row(i) & c.bits()).count() & 1U) m.row(i) ^= row;
}

void multiply_by_transvection(IntMatrix& m, const ClassInt& c, int power) {
  if (m.cols() != static_cast<std::size_t>(c.dim()))
    throw Error(ErrorKind::DimensionMismatch, "transvection dimension mismatch");
  const int g = c.genus();
  std::vector<Integer> row(c.dim());
  for (int i = 0; i < g; ++i) {
    row[i] = Integer(c[g + i]) * power;
    row[g + i] = Integer(-c[i]) * power;
  }
  Integer mc;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mc = 0;
    for (int k = 0; k < c.dim(); ++k)
      if (c[k] != 0) mc += m(i, k) * c[k];
    if (mc == 0) continue;
    for (int k = 0; k < c.dim(); ++k)
      if (row[k] != 0) m(i, k) += mc * row[k];
  }
}

ClassMod2 apply(const BitMatrix& m, const ClassMod2& v) {
  if (m.cols() != static_cast<std::size_t>(v.dim())) throw Error(ErrorKind::DimensionMismatch, "apply");
  return ClassMod2(v.genus(), m.apply(v.bits()));
}

ClassInt apply(const IntMatrix& m, const ClassInt& v) {
  if (m.cols() != static_cast<std::size_t>(v.dim())) throw Error(ErrorKind::DimensionMismatch, "apply");
  std::vector<std::int64_t> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer s = 0;
    for (int k = 0; k < v.dim(); ++k) s += m(i, k) * v[k];
    if (s > std::numeric_limits<std::int64_t>::max() || s < std::numeric_limits<std::int64_t>::min())
      throw Error(ErrorKind::Overflow, "integer class coordinate overflow");
    out[i] = static_cast<std::int64_t>(s);
  }
  return ClassInt(v.genus(), std::move(out));
}

}  // namespace mcgspin
