#include "mcgspin/factorization.hpp"

#include <algorithm>

#include "mcgspin/errors.hpp"

namespace mcgspin {

namespace {

// Label of the image of a curve under a word named `name`. Consecutive
// conjugations by w and w^-1 cancel, so a right Hurwitz move followed by a
// left one restores the original labels.
std::string conjugated_label(const std::string& label, const std::string& name) {
  const std::string inverse_suffix = "^-1";
  std::string cancel;
  if (name.size() > inverse_suffix.size() && name.ends_with(inverse_suffix))
    cancel = "^{" + name.substr(0, name.size() - inverse_suffix.size()) + "}";
  else
    cancel = "^{" + name + inverse_suffix + "}";
  if (label.size() > cancel.size() && label.ends_with(cancel)) return label.substr(0, label.size() - cancel.size());
  return label + "^{" + name + "}";
}

void require_genus(int a, int b, const char* what) {
  if (a != b)
    throw Error(ErrorKind::DimensionMismatch,
                std::string(what) + ": genus " + std::to_string(a) + " vs " + std::to_string(b));
}

bool disjoint(const Curve& a, const Curve& b) {
  if (intersect(a.mod2, b.mod2) != 0) return false;
  if (a.integral && b.integral && intersect(*a.integral, *b.integral) != 0) return false;
  return true;
}

// Same genus, boundary power, provenance and family, new entries.
PositiveFactorization same_fibration(const PositiveFactorization& p, std::vector<Curve> twists) {
  PositiveFactorization r(p.genus(), std::move(twists), p.boundary_power(), p.provenance());
  return p.family() ? r.with_family(*p.family()) : r;
}

Curve twist_image(const Curve& a, const Curve& b, int power, std::string label) {
  std::optional<ClassInt> integral;
  if (a.integral && b.integral) integral = transvect(*a.integral, *b.integral, power);
  return Curve(std::move(label), transvect(a.mod2, b.mod2, power), std::move(integral));
}

}  // namespace

Curve::Curve(std::string label_, ClassMod2 mod2_, std::optional<ClassInt> integral_)
    : label(std::move(label_)), mod2(std::move(mod2_)), integral(std::move(integral_)) {
  if (integral) {
    require_genus(mod2.genus(), integral->genus(), "curve");
    if (integral->reduce() != mod2)
      throw Error(ErrorKind::Precondition, "curve " + label + ": integer class does not reduce to its mod-2 class");
  }
}

Curve Curve::from_integral(std::string label, ClassInt integral) {
  ClassMod2 m = integral.reduce();
  return Curve(std::move(label), std::move(m), std::move(integral));
}

Curve Curve::renamed(std::string new_label) const {
  Curve c = *this;
  c.label = std::move(new_label);
  return c;
}

TwistWord TwistWord::identity(int genus, std::string name) {
  if (genus < 1) throw Error(ErrorKind::Precondition, "genus must be positive");
  return TwistWord(genus, std::move(name));
}

TwistWord::TwistWord(std::string name, std::vector<Letter> letters)
    : genus_(0), name_(std::move(name)), letters_(std::move(letters)) {
  if (letters_.empty())
    throw Error(ErrorKind::Precondition, "word " + name_ + " is empty; use the identity word explicitly");
  genus_ = letters_.front().curve.genus();
  for (const auto& l : letters_) {
    require_genus(genus_, l.curve.genus(), "word letter");
    if (l.exponent != 1 && l.exponent != -1)
      throw Error(ErrorKind::Precondition, "word exponents must be +1 or -1");
  }
}

bool TwistWord::has_integral() const {
  return std::all_of(letters_.begin(), letters_.end(), [](const Letter& l) { return l.curve.has_integral(); });
}

TwistWord TwistWord::inverse() const {
  const std::string suffix = "^-1";
  std::string inv_name = name_.ends_with(suffix) ? name_.substr(0, name_.size() - suffix.size()) : name_ + suffix;
  if (letters_.empty()) return identity(genus_, std::move(inv_name));
  std::vector<Letter> inv(letters_.rbegin(), letters_.rend());
  for (auto& l : inv) l.exponent = -l.exponent;
  return TwistWord(std::move(inv_name), std::move(inv));
}

ClassMod2 apply_word(const TwistWord& w, const ClassMod2& v) {
  if (!w.is_identity()) require_genus(w.genus(), v.genus(), "apply_word");
  ClassMod2 r = v;
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) r = transvect(it->curve.mod2, r, it->exponent);
  return r;
}

ClassInt apply_word(const TwistWord& w, const ClassInt& v) {
  if (!w.is_identity()) require_genus(w.genus(), v.genus(), "apply_word");
  ClassInt r = v;
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    if (!it->curve.integral)
      throw Error(ErrorKind::Unavailable, "letter " + it->curve.label + " has no integer class");
    r = transvect(*it->curve.integral, r, it->exponent);
  }
  return r;
}

Curve apply_word(const TwistWord& w, const Curve& c, std::string label) {
  std::optional<ClassInt> integral;
  if (c.integral && w.has_integral()) integral = apply_word(w, *c.integral);
  return Curve(std::move(label), apply_word(w, c.mod2), std::move(integral));
}

std::vector<ClassMod2> apply_word_trace(const TwistWord& w, const ClassMod2& v) {
  if (!w.is_identity()) require_genus(w.genus(), v.genus(), "apply_word");
  std::vector<ClassMod2> trace;
  trace.reserve(w.letters().size());
  ClassMod2 r = v;
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    r = transvect(it->curve.mod2, r, it->exponent);
    trace.push_back(r);
  }
  return trace;
}

PositiveFactorization::PositiveFactorization(int genus, std::vector<Curve> twists, int boundary_power,
                                             std::vector<std::string> provenance)
    : genus_(genus), twists_(std::move(twists)), boundary_power_(boundary_power),
      provenance_(std::move(provenance)) {
  if (genus < 1) throw Error(ErrorKind::Precondition, "genus must be positive");
  if (twists_.empty()) throw Error(ErrorKind::Precondition, "a positive factorization needs at least one twist");
  if (boundary_power < 0) throw Error(ErrorKind::Precondition, "boundary power must be non-negative");
  for (const auto& c : twists_) require_genus(genus_, c.genus(), "factorization entry");
}

bool PositiveFactorization::has_integral() const {
  return std::all_of(twists_.begin(), twists_.end(), [](const Curve& c) { return c.has_integral(); });
}

PositiveFactorization PositiveFactorization::with_record(std::string record) const {
  PositiveFactorization p = *this;
  p.provenance_.push_back(std::move(record));
  return p;
}

PositiveFactorization PositiveFactorization::with_family(ZFamily family) const {
  PositiveFactorization p = *this;
  p.family_ = family;
  return p;
}

SubsurfaceImage::SubsurfaceImage(std::array<Curve, 4> boundary, std::array<Curve, 8> interior)
    : boundary_(std::move(boundary)), interior_(std::move(interior)) {
  const int g = boundary_[0].genus();
  ClassMod2 sum(g);
  for (int i = 0; i < 4; ++i) {
    require_genus(g, boundary_[i].genus(), "subsurface boundary");
    sum += boundary_[i].mod2;
    for (int j = i + 1; j < 4; ++j)
      if (intersect(boundary_[i].mod2, boundary_[j].mod2) != 0)
        throw Error(ErrorKind::Precondition, "boundary curves " + boundary_[i].label + " and " +
                                                 boundary_[j].label + " intersect");
  }
  if (!sum.is_zero()) throw Error(ErrorKind::Precondition, "boundary classes do not sum to zero mod 2");
  for (const auto& c : interior_) {
    require_genus(g, c.genus(), "subsurface interior");
    for (const auto& b : boundary_)
      if (intersect(c.mod2, b.mod2) != 0)
        throw Error(ErrorKind::Precondition, "interior curve " + c.label + " meets boundary curve " + b.label);
  }
}

const Curve& SubsurfaceImage::interior(std::string_view label) const {
  for (std::size_t i = 0; i < kInteriorLabels.size(); ++i)
    if (kInteriorLabels[i] == label) return interior_[i];
  throw Error(ErrorKind::NotFound, "no pencil curve named " + std::string(label));
}

PositiveFactorization conjugate(const PositiveFactorization& p, const TwistWord& w) {
  if (w.is_identity()) return p.with_record("conjugate by " + w.name());
  require_genus(p.genus(), w.genus(), "conjugate");
  std::vector<Curve> out;
  out.reserve(p.length());
  for (const auto& c : p.twists()) out.push_back(apply_word(w, c, conjugated_label(c.label, w.name())));
  PositiveFactorization r = same_fibration(p, std::move(out));
  return r.with_record("conjugate by " + w.name());
}

PositiveFactorization hurwitz_move(const PositiveFactorization& p, std::size_t i, HurwitzDirection dir) {
  if (i < 1 || i >= p.length())
    throw Error(ErrorKind::Precondition, "Hurwitz index " + std::to_string(i) + " out of range 1.." +
                                             std::to_string(p.length() - 1));
  std::vector<Curve> t = p.twists();
  const Curve a = t[i - 1];
  const Curve b = t[i];
  if (dir == HurwitzDirection::Right) {
    t[i - 1] = twist_image(a, b, 1, conjugated_label(b.label, a.label));
    t[i] = a;
  } else {
    t[i - 1] = b;
    t[i] = twist_image(b, a, -1, conjugated_label(a.label, b.label + "^-1"));
  }
  PositiveFactorization r = same_fibration(p, std::move(t));
  return r.with_record("hurwitz " + std::to_string(i) + (dir == HurwitzDirection::Right ? " right" : " left"));
}

PositiveFactorization commute(const PositiveFactorization& p, std::size_t from, std::size_t to) {
  const std::size_t n = p.length();
  if (from < 1 || from > n || to < 1 || to > n)
    throw Error(ErrorKind::Precondition, "commute positions out of range");
  std::vector<Curve> t = p.twists();
  std::size_t swaps = 0;
  for (std::size_t pos = from - 1; pos != to - 1; ++swaps) {
    const std::size_t next = pos < to - 1 ? pos + 1 : pos - 1;
    if (!disjoint(t[pos], t[next]))
      throw Error(ErrorKind::Precondition, "cannot commute " + t[pos].label + " past " + t[next].label +
                                               ": classes intersect");
    std::swap(t[pos], t[next]);
    pos = next;
  }
  PositiveFactorization r = same_fibration(p, std::move(t));
  return r.with_record("commute " + std::to_string(from) + "->" + std::to_string(to) + " (" +
                       std::to_string(swaps) + " swaps)");
}

PositiveFactorization relabel(const PositiveFactorization& p, std::size_t first, std::size_t last, const Curve& as) {
  if (first < 1 || first > last || last > p.length())
    throw Error(ErrorKind::Precondition, "relabel range out of bounds");
  std::vector<Curve> t = p.twists();
  for (std::size_t i = first - 1; i < last; ++i) {
    const Curve& c = t[i];
    const bool same = c.mod2 == as.mod2 &&
                      (!c.integral || !as.integral || *c.integral == *as.integral || *c.integral == -*as.integral);
    if (!same) throw Error(ErrorKind::Precondition, "entry " + std::to_string(i + 1) + " (" + c.label +
                                                        ") does not carry the class of " + as.label);
    t[i] = as;
  }
  PositiveFactorization r = same_fibration(p, std::move(t));
  return r.with_record("relabel " + std::to_string(first) + ".." + std::to_string(last) + " as " + as.label);
}

PositiveFactorization fiber_sum(const PositiveFactorization& p1, const PositiveFactorization& p2,
                                const TwistWord& w) {
  require_genus(p1.genus(), p2.genus(), "fiber_sum");
  const PositiveFactorization q = conjugate(p2, w);
  std::vector<Curve> t = p1.twists();
  t.insert(t.end(), q.twists().begin(), q.twists().end());
  std::vector<std::string> prov = p1.provenance();
  prov.insert(prov.end(), q.provenance().begin(), q.provenance().end());
  PositiveFactorization r(p1.genus(), std::move(t), p1.boundary_power() + p2.boundary_power(), std::move(prov));
  return r.with_record("fiber sum " + std::to_string(p1.length()) + "+" + std::to_string(p2.length()) +
                       " by " + w.name());
}

std::vector<std::size_t> find_boundary_blocks(const PositiveFactorization& p, const SubsurfaceImage& image) {
  std::vector<std::size_t> out;
  const auto& t = p.twists();
  const auto& b = image.boundary();
  for (std::size_t i = 0; i + 4 <= t.size(); ++i)
    if (t[i] == b[0] && t[i + 1] == b[1] && t[i + 2] == b[2] && t[i + 3] == b[3]) out.push_back(i + 1);
  return out;
}

PositiveFactorization breed(const PositiveFactorization& p, std::size_t at, const SubsurfaceImage& image) {
  require_genus(p.genus(), image.boundary()[0].genus(), "breed");
  const auto& t = p.twists();
  if (at < 1 || at + 3 > t.size())
    throw Error(ErrorKind::NotFound, "no four-entry block at position " + std::to_string(at));
  for (std::size_t j = 0; j < 4; ++j)
    if (t[at - 1 + j] != image.boundary()[j])
      throw Error(ErrorKind::NotFound, "entry " + std::to_string(at + j) + " (" + t[at - 1 + j].label +
                                           ") does not match boundary curve " + image.boundary()[j].label);
  std::vector<Curve> out(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(at - 1));
  out.insert(out.end(), image.interior().begin(), image.interior().end());
  out.insert(out.end(), t.begin() + static_cast<std::ptrdiff_t>(at + 3), t.end());
  PositiveFactorization r = same_fibration(p, std::move(out));
  return r.with_record("breed at " + std::to_string(at));
}

BitMatrix product_mod2(const PositiveFactorization& p) {
  BitMatrix m = BitMatrix::identity(static_cast<std::size_t>(2 * p.genus()));
  for (const auto& c : p.twists()) multiply_by_transvection(m, c.mod2);
  return m;
}

IntMatrix product_integral(const PositiveFactorization& p) {
  IntMatrix m = IntMatrix::identity(static_cast<std::size_t>(2 * p.genus()));
  for (const auto& c : p.twists()) {
    if (!c.integral) throw Error(ErrorKind::Unavailable, "entry " + c.label + " has no integer class");
    multiply_by_transvection(m, *c.integral);
  }
  return m;
}

RelationCheck check_relation(const PositiveFactorization& p) {
  RelationCheck r{product_mod2(p).is_identity(), std::nullopt};
  if (p.has_integral()) r.integral = product_integral(p).is_identity();
  return r;
}

SpinCertificate check_spin(const PositiveFactorization& p, const QuadraticForm& q) {
  require_genus(p.genus(), q.genus(), "check_spin");
  SpinCertificate cert;
  cert.all_ones = true;
  for (const auto& c : p.twists()) {
    const int v = eval_quadratic(q, c.mod2);
    cert.labels.push_back(c.label);
    cert.values.push_back(v);
    cert.all_ones = cert.all_ones && v == 1;
  }
  cert.boundary_power = p.boundary_power();
  cert.boundary_power_even = p.boundary_power() % 2 == 0;
  cert.verdict = cert.all_ones && cert.boundary_power_even;
  return cert;
}

}  // namespace mcgspin
