#include "mcgspin/presentations.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "mcgspin/errors.hpp"

namespace mcgspin {

FinitePresentation::FinitePresentation(std::vector<std::string> generators, std::vector<std::vector<int>> relators)
    : generators_(std::move(generators)), relators_(std::move(relators)) {
  const int n = static_cast<int>(generators_.size());
  std::set<std::string> seen;
  for (const auto& g : generators_) {
    if (g.empty()) throw Error(ErrorKind::Precondition, "empty generator name");
    if (!seen.insert(g).second) throw Error(ErrorKind::Precondition, "duplicate generator " + g);
  }
  for (std::size_t j = 0; j < relators_.size(); ++j)
    for (int letter : relators_[j])
      if (letter == 0 || letter > n || letter < -n)
        throw Error(ErrorKind::Precondition,
                    "relator " + std::to_string(j + 1) + " uses generator index " + std::to_string(letter));
}

std::string FinitePresentation::to_text() const {
  std::string out = "gens:";
  for (const auto& g : generators_) out += " " + g;
  out += ";";
  for (const auto& r : relators_) {
    out += " rel:";
    for (int letter : r) {
      out += " " + generators_[std::abs(letter) - 1];
      if (letter < 0) out += "^-1";
    }
    out += ";";
  }
  return out;
}

namespace {

class PresentationParser {
 public:
  explicit PresentationParser(std::string_view text) : text_(text) {}

  FinitePresentation parse() {
    std::vector<std::string> gens;
    std::vector<std::vector<int>> rels;
    bool have_gens = false;
    skip_space();
    while (!at_end()) {
      const auto [line, col] = position();
      const std::string keyword = identifier("'gens' or 'rel'");
      expect(':');
      if (keyword == "gens") {
        if (have_gens) fail(line, col, "generators declared twice");
        have_gens = true;
        skip_space();
        while (!at_end() && peek() != ';') {
          const auto [gl, gc] = position();
          std::string name = identifier("generator name");
          if (std::find(gens.begin(), gens.end(), name) != gens.end())
            fail(gl, gc, "duplicate generator '" + name + "'");
          gens.push_back(std::move(name));
          skip_space();
        }
        expect(';');
      } else if (keyword == "rel") {
        if (!have_gens) fail(line, col, "relator before 'gens:' declaration");
        std::vector<int> word = parse_word(gens);
        expect(';');
        rels.push_back(std::move(word));
      } else {
        fail(line, col, "expected 'gens' or 'rel', found '" + keyword + "'");
      }
      skip_space();
    }
    if (!have_gens) fail(1, 1, "missing 'gens:' declaration");
    return FinitePresentation(std::move(gens), std::move(rels));
  }

 private:
  static constexpr std::size_t kMaxRelatorLength = 1'000'000;

  std::vector<int> parse_word(const std::vector<std::string>& gens) {
    std::vector<int> word;
    skip_space();
    while (!at_end() && peek() != ';' && peek() != ')') {
      const auto [line, col] = position();
      std::vector<int> factor;
      if (peek() == '(') {
        ++pos_;
        factor = parse_word(gens);
        expect(')');
      } else {
        const std::string name = identifier("generator");
        auto it = std::find(gens.begin(), gens.end(), name);
        if (it == gens.end()) fail(line, col, "undeclared generator '" + name + "'");
        factor.push_back(static_cast<int>(it - gens.begin()) + 1);
      }
      skip_space();
      long long power = 1;
      if (!at_end() && peek() == '^') {
        ++pos_;
        power = integer();
      }
      if (power < 0) {
        std::reverse(factor.begin(), factor.end());
        for (auto& l : factor) l = -l;
        power = -power;
      }
      if (static_cast<double>(factor.size()) * static_cast<double>(power) + static_cast<double>(word.size()) >
          static_cast<double>(kMaxRelatorLength))
        fail(line, col, "relator longer than " + std::to_string(kMaxRelatorLength) + " letters");
      for (long long k = 0; k < power; ++k) word.insert(word.end(), factor.begin(), factor.end());
      skip_space();
    }
    return word;
  }

  long long integer() {
    skip_space();
    const auto [line, col] = position();
    bool negative = false;
    if (!at_end() && (peek() == '-' || peek() == '+')) negative = text_[pos_++] == '-';
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail(line, col, "expected an integer exponent");
    long long v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (text_[pos_++] - '0');
      if (v > 1'000'000) fail(line, col, "exponent too large");
    }
    return negative ? -v : v;
  }

  std::string identifier(const char* what) {
    skip_space();
    const auto [line, col] = position();
    if (at_end() || !(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_'))
      fail(line, col, std::string("expected ") + what);
    std::string out;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' || peek() == '\''))
      out += text_[pos_++];
    return out;
  }

  void expect(char c) {
    skip_space();
    const auto [line, col] = position();
    if (at_end() || peek() != c) fail(line, col, std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_space() {
    while (!at_end()) {
      if (std::isspace(static_cast<unsigned char>(peek()))) {
        ++pos_;
      } else if (peek() == '#') {
        while (!at_end() && peek() != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::pair<std::size_t, std::size_t> position() const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos_; ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    return {line, col};
  }

  [[noreturn]] void fail(std::size_t line, std::size_t col, const std::string& msg) const {
    throw ParseError(ErrorKind::Parse, line, col, msg);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

Integer abs_value(const Integer& v) { return v < 0 ? Integer(-v) : v; }

void add_row_multiple(IntMatrix& a, std::size_t dst, std::size_t src, const Integer& q) {
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (a(src, j) != 0) a(dst, j) -= q * a(src, j);
}

void add_col_multiple(IntMatrix& a, std::size_t dst, std::size_t src, const Integer& q) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (a(i, src) != 0) a(i, dst) -= q * a(i, src);
}

}  // namespace

FinitePresentation parse_presentation(std::string_view text) { return PresentationParser(text).parse(); }

std::string AbelianGroup::to_string() const {
  std::vector<std::string> parts;
  if (free_rank == 1) parts.push_back("Z");
  if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
  for (const auto& d : torsion) parts.push_back("Z/" + d.str());
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

SmithForm smith_normal_form(const IntMatrix& m, bool with_transforms) {
  IntMatrix a = m;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  IntMatrix u, v;
  if (with_transforms) {
    u = IntMatrix::identity(rows);
    v = IntMatrix::identity(cols);
  }
  const auto row_op = [&](std::size_t dst, std::size_t src, const Integer& q) {
    add_row_multiple(a, dst, src, q);
    if (with_transforms) add_row_multiple(u, dst, src, q);
  };
  const auto col_op = [&](std::size_t dst, std::size_t src, const Integer& q) {
    add_col_multiple(a, dst, src, q);
    if (with_transforms) add_col_multiple(v, dst, src, q);
  };

  std::size_t t = 0;
  while (t < rows && t < cols) {
    bool done_with_t = false;
    bool any = true;
    while (!done_with_t) {
      // smallest nonzero |entry| in the trailing block, first in row-major order
      std::size_t pi = rows, pj = cols;
      Integer best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (a(i, j) == 0) continue;
          Integer mag = abs_value(a(i, j));
          if (pi == rows || mag < best) {
            best = std::move(mag);
            pi = i;
            pj = j;
          }
        }
      if (pi == rows) {
        any = false;
        break;
      }
      if (pi != t) {
        a.swap_rows(pi, t);
        if (with_transforms) u.swap_rows(pi, t);
      }
      if (pj != t) {
        a.swap_cols(pj, t);
        if (with_transforms) v.swap_cols(pj, t);
      }
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        const Integer q = a(i, t) / a(t, t);
        row_op(i, t, q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        const Integer q = a(t, j) / a(t, t);
        col_op(j, t, q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // enforce divisibility of the remaining block by the pivot
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a(i, j) % a(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == rows) {
        done_with_t = true;
      } else {
        row_op(t, bad, Integer(-1));
      }
    }
    if (!any) break;
    if (a(t, t) < 0) {
      for (std::size_t j = 0; j < cols; ++j) a(t, j) = -a(t, j);
      if (with_transforms)
        for (std::size_t j = 0; j < rows; ++j) u(t, j) = -u(t, j);
    }
    ++t;
  }
  SmithForm out;
  out.rank = t;
  for (std::size_t i = 0; i < t; ++i) out.diagonal.push_back(a(i, i));
  out.d = std::move(a);
  if (with_transforms) {
    out.u = std::move(u);
    out.v = std::move(v);
  }
  return out;
}

AbelianGroup quotient_group(const IntMatrix& m, std::size_t ambient) {
  const SmithForm s = smith_normal_form(m);
  AbelianGroup g;
  g.free_rank = static_cast<int>(ambient - s.rank);
  for (const auto& d : s.diagonal)
    if (d > 1) g.torsion.push_back(d);
  return g;
}

AbelianGroup abelianization(const FinitePresentation& p) {
  const std::size_t n = p.generator_count();
  IntMatrix m(p.relators().size(), n);
  for (std::size_t j = 0; j < p.relators().size(); ++j)
    for (int letter : p.relators()[j]) m(j, std::abs(letter) - 1) += letter > 0 ? 1 : -1;
  return quotient_group(m, n);
}

NormalFormCheck check_normal_form(const FinitePresentation& p) {
  NormalFormCheck check;
  for (std::size_t j = 0; j < p.relators().size(); ++j) {
    const auto& r = p.relators()[j];
    const bool positive = std::all_of(r.begin(), r.end(), [](int l) { return l > 0; });
    std::set<int> distinct;
    for (int l : r) distinct.insert(std::abs(l));
    const bool once = distinct.size() == r.size();
    std::size_t descents = 0;
    for (std::size_t i = 0; i < r.size(); ++i)
      if (std::abs(r[i]) >= std::abs(r[(i + 1) % r.size()])) ++descents;
    const bool cyclic = r.size() < 2 || (once && descents <= 1);
    if ((!positive || !once || !cyclic) && !check.first_violation) check.first_violation = j;
    check.positive = check.positive && positive;
    check.at_most_once = check.at_most_once && once;
    check.cyclic_order = check.cyclic_order && cyclic;
  }
  return check;
}

FinitePresentation normalize_presentation(const FinitePresentation& p) {
  std::vector<bool> offending(p.relators().size(), false);
  bool any = false;
  for (std::size_t j = 0; j < p.relators().size(); ++j) {
    const FinitePresentation single(p.generators(), {p.relators()[j]});
    offending[j] = !check_normal_form(single).ok();
    any = any || offending[j];
  }
  if (!any) return p;

  std::vector<std::string> gens = p.generators();
  std::set<std::string> used(gens.begin(), gens.end());
  const auto fresh = [&](const std::string& base) {
    std::string name = base;
    for (int k = 2; used.count(name); ++k) name = base + "_" + std::to_string(k);
    used.insert(name);
    gens.push_back(name);
    return static_cast<int>(gens.size());
  };

  // x-bar stands for x^-1; it is needed wherever x occurs positively in a rewritten relator
  std::vector<int> inverse_of(p.generator_count() + 1, 0);
  std::vector<std::vector<int>> extra;
  for (std::size_t j = 0; j < p.relators().size(); ++j) {
    if (!offending[j]) continue;
    for (int l : p.relators()[j])
      if (l > 0 && inverse_of[l] == 0) {
        inverse_of[l] = fresh(p.generators()[l - 1] + "bar");
        extra.push_back({l, inverse_of[l]});
      }
  }

  std::vector<std::vector<int>> rels;
  std::vector<std::vector<int>> links;
  for (std::size_t j = 0; j < p.relators().size(); ++j) {
    const auto& r = p.relators()[j];
    if (!offending[j]) {
      rels.push_back(r);
      continue;
    }
    std::vector<int> replacement;
    for (std::size_t t = 0; t < r.size(); ++t) {
      const int z = fresh("z" + std::to_string(j + 1) + "_" + std::to_string(t + 1));
      replacement.push_back(z);
      // z x-bar = 1 makes z = x; z x = 1 makes z = x^-1
      links.push_back({z, r[t] > 0 ? inverse_of[r[t]] : -r[t]});
    }
    rels.push_back(std::move(replacement));
  }
  rels.insert(rels.end(), extra.begin(), extra.end());
  rels.insert(rels.end(), links.begin(), links.end());
  return FinitePresentation(std::move(gens), std::move(rels));
}

H1Certificate h1_of_classes(int genus, const std::vector<Curve>& classes) {
  H1Certificate cert;
  const std::size_t dim = static_cast<std::size_t>(2 * genus);
  BitMatrix rows(classes.size(), dim);
  bool integral = true;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i].genus() != genus) throw Error(ErrorKind::DimensionMismatch, "H1: class genus mismatch");
    rows.row(i) = classes[i].mod2.bits();
    integral = integral && classes[i].has_integral();
  }
  cert.mod2_dimension = static_cast<int>(dim - rows.rank());
  if (!integral) return cert;
  // identical classes (up to sign) span the same subgroup
  std::set<std::vector<std::int64_t>> unique;
  for (const auto& c : classes) {
    std::vector<std::int64_t> v = c.integral->coords();
    const auto lead = std::find_if(v.begin(), v.end(), [](std::int64_t x) { return x != 0; });
    if (lead != v.end() && *lead < 0)
      for (auto& x : v) x = -x;
    unique.insert(std::move(v));
  }
  IntMatrix m(unique.size(), dim);
  std::size_t i = 0;
  for (const auto& v : unique) {
    for (std::size_t k = 0; k < dim; ++k) m(i, k) = v[k];
    ++i;
  }
  cert.integral = true;
  cert.group = quotient_group(m, dim);
  return cert;
}

H1Certificate fibration_h1(const PositiveFactorization& p) { return h1_of_classes(p.genus(), p.twists()); }

KorkmazRelatorSet korkmaz_relator_set(const PositiveFactorization& p, const std::vector<Curve>& conjugators) {
  KorkmazRelatorSet out;
  out.classes = p.twists();
  for (const auto& d : conjugators) {
    if (d.genus() != p.genus()) throw Error(ErrorKind::DimensionMismatch, "conjugator genus mismatch");
    std::size_t w = 0;
    while (w < p.length() && intersect(d.mod2, p.twists()[w].mod2) == 0) ++w;
    if (w == p.length())
      throw Error(ErrorKind::Precondition,
                  "curve " + d.label + " has even intersection with every vanishing cycle");
    out.witnesses.push_back(w);
    out.classes.push_back(d);
  }
  return out;
}

}  // namespace mcgspin
