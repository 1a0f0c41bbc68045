#include "mcgspin/invariants.hpp"

#include <limits>

#include "mcgspin/errors.hpp"

namespace mcgspin {

namespace {

using RationalMatrix = std::vector<std::vector<Rational>>;

// Basis of the right kernel of m (rows x cols), one vector per free column.
std::vector<std::vector<Rational>> kernel(RationalMatrix m, std::size_t cols) {
  const std::size_t rows = m.size();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -m[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

IntMatrix symplectic_inverse(const IntMatrix& a) {
  const IntMatrix j = symplectic_form(static_cast<int>(a.rows() / 2));
  IntMatrix r = j * a.transpose() * j;
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t k = 0; k < r.cols(); ++k) r(i, k) = -r(i, k);
  return r;
}

std::int64_t to_int64(const Integer& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw Error(ErrorKind::Overflow, "invariant exceeds 64-bit range");
  return static_cast<std::int64_t>(v);
}

}  // namespace

std::int64_t euler_characteristic(const PositiveFactorization& p) {
  return 4 - 4 * static_cast<std::int64_t>(p.genus()) + static_cast<std::int64_t>(p.length());
}

std::int64_t signature_endo(const PositiveFactorization& p, const HyperellipticCertificate&) {
  for (const auto& c : p.twists())
    if (c.mod2.is_zero())
      throw Error(ErrorKind::Precondition, "entry " + c.label + " is separating; only nonseparating cycles are supported");
  const Integer g = p.genus();
  const Rational sigma = Rational(-(g + 1) * Integer(p.length()), 2 * g + 1);
  if (denominator(sigma) != 1)
    throw Error(ErrorKind::Precondition, "hyperelliptic signature is not an integer: certificate invalid");
  return to_int64(numerator(sigma));
}

int signature_of_symmetric(RationalMatrix s) {
  int pos = 0;
  int neg = 0;
  std::size_t n = s.size();
  while (n > 0) {
    std::size_t k = 0;
    while (k < n && s[k][k] == 0) ++k;
    if (k == n) {
      // zero diagonal: find an off-diagonal entry and add row/column j into i
      std::size_t pi = n, pj = n;
      for (std::size_t i = 0; i < n && pi == n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (s[i][j] != 0) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == n) break;
      for (std::size_t c = 0; c < n; ++c) s[pi][c] += s[pj][c];
      for (std::size_t r = 0; r < n; ++r) s[r][pi] += s[r][pj];
      continue;
    }
    const Rational d = s[k][k];
    (d > 0 ? pos : neg) += 1;
    RationalMatrix next;
    next.reserve(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      std::vector<Rational> row;
      row.reserve(n - 1);
      for (std::size_t j = 0; j < n; ++j) {
        if (j == k) continue;
        row.push_back(s[i][k] == 0 ? s[i][j] : s[i][j] - s[i][k] * s[k][j] / d);
      }
      next.push_back(std::move(row));
    }
    s = std::move(next);
    --n;
  }
  return pos - neg;
}

int meyer_cocycle(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.rows() != a.cols() || b.rows() != b.cols() || a.rows() % 2 != 0)
    throw Error(ErrorKind::DimensionMismatch, "Meyer cocycle needs two square matrices of equal even size");
  const std::size_t n = a.rows();
  const IntMatrix a_inv = symplectic_inverse(a);
  RationalMatrix system(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      system[i][k] = Rational(a_inv(i, k) - (i == k ? 1 : 0));
      system[i][n + k] = Rational(b(i, k) - (i == k ? 1 : 0));
    }
  const auto basis = kernel(std::move(system), 2 * n);
  if (basis.empty()) return 0;
  const IntMatrix j = symplectic_form(static_cast<int>(n / 2));
  // (I - B) y and J (I - B) y for each basis vector
  std::vector<std::vector<Rational>> w(basis.size(), std::vector<Rational>(n, Rational(0)));
  for (std::size_t t = 0; t < basis.size(); ++t)
    for (std::size_t i = 0; i < n; ++i) {
      Rational s = basis[t][n + i];
      for (std::size_t k = 0; k < n; ++k)
        if (b(i, k) != 0) s -= Rational(b(i, k)) * basis[t][n + k];
      w[t][i] = s;
    }
  std::vector<std::vector<Rational>> jw(basis.size(), std::vector<Rational>(n, Rational(0)));
  for (std::size_t t = 0; t < basis.size(); ++t)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (j(i, k) != 0) jw[t][i] += Rational(j(i, k)) * w[t][k];
  RationalMatrix form(basis.size(), std::vector<Rational>(basis.size(), Rational(0)));
  for (std::size_t s = 0; s < basis.size(); ++s)
    for (std::size_t t = 0; t < basis.size(); ++t) {
      Rational v = 0;
      for (std::size_t i = 0; i < n; ++i) v += (basis[s][i] + basis[s][n + i]) * jw[t][i];
      form[s][t] = v;
    }
  for (std::size_t s = 0; s < form.size(); ++s)
    for (std::size_t t = s + 1; t < form.size(); ++t)
      if (form[s][t] != form[t][s]) throw Error(ErrorKind::Precondition, "Meyer form is not symmetric");
  return signature_of_symmetric(std::move(form));
}

std::int64_t signature_meyer(const PositiveFactorization& p) {
  if (!p.has_integral())
    throw Error(ErrorKind::Unavailable, "Meyer signature needs integer classes for every entry");
  const auto& t = p.twists();
  // A separating vanishing cycle adds a local correction this sum does not model.
  for (const auto& c : t)
    if (c.integral->is_zero())
      throw Error(ErrorKind::Precondition, "entry " + c.label + " is separating; only nonseparating cycles are supported");
  IntMatrix partial = transvection_matrix(*t[0].integral);
  std::int64_t sigma = 0;
  for (std::size_t i = 1; i < t.size(); ++i) {
    const IntMatrix next = transvection_matrix(*t[i].integral);
    sigma += meyer_cocycle(partial, next);
    multiply_by_transvection(partial, *t[i].integral);
  }
  return sigma;
}

const char* to_string(SignatureSource s) {
  switch (s) {
    case SignatureSource::EndoHyperelliptic: return "endo-hyperelliptic";
    case SignatureSource::Meyer: return "meyer";
    case SignatureSource::PaperFormula: return "paper-formula";
  }
  return "unknown";
}

FibrationInvariants invariants_of(const PositiveFactorization& p, SignatureSource source,
                                  const std::optional<HyperellipticCertificate>& cert) {
  FibrationInvariants inv{};
  inv.euler = euler_characteristic(p);
  inv.method = source;
  switch (source) {
    case SignatureSource::EndoHyperelliptic:
      if (!cert) throw Error(ErrorKind::Unavailable, "Endo's formula needs a hyperellipticity certificate");
      inv.signature = signature_endo(p, *cert);
      break;
    case SignatureSource::Meyer:
      inv.signature = signature_meyer(p);
      break;
    case SignatureSource::PaperFormula:
      if (!p.family())
        throw Error(ErrorKind::Unavailable, "closed-form signature is known only for the Z_{g,k} family");
      inv.signature = -8 * (static_cast<std::int64_t>(p.family()->g) + 1);
      break;
  }
  const std::int64_t total = inv.euler + inv.signature;
  if (total % 4 != 0)
    throw Error(ErrorKind::Precondition, "e + sigma = " + std::to_string(total) + " is not divisible by 4");
  inv.chi_h = total / 4;
  inv.c1_squared = 2 * inv.euler + 3 * inv.signature;
  return inv;
}

bool is_admissible(const GeographyPoint& pt) {
  const auto [m, n] = pt;
  if (n < 0) return false;
  const std::int64_t diff = n - 8 * m;
  if (((diff % 16) + 16) % 16 != 0) return false;
  return n <= 8 * (m - 6) && 3 * n <= 16 * m;
}

std::optional<ZFamily> realize(const GeographyPoint& pt) {
  if (pt.n < 0 || pt.n % 8 != 0) return std::nullopt;
  const std::int64_t k = pt.n / 8;
  const std::int64_t g = pt.m - 1 - k;
  if (g < 5 || g % 2 == 0 || k > 2 * g + 2) return std::nullopt;
  if (g > std::numeric_limits<int>::max() / 4) return std::nullopt;
  return ZFamily{static_cast<int>(g), static_cast<int>(k)};
}

GeographyPoint family_point(const ZFamily& f) {
  return {static_cast<std::int64_t>(f.g) + 1 + f.k, 8 * static_cast<std::int64_t>(f.k)};
}

std::vector<GeographyPoint> enumerate_region(std::int64_t m_max) {
  if (m_max > kMaxRegionM)
    throw Error(ErrorKind::Guard, "region enumeration limited to m <= " + std::to_string(kMaxRegionM));
  std::vector<GeographyPoint> out;
  for (std::int64_t m = 0; m <= m_max; ++m) {
    // n must be congruent to 8m mod 16
    for (std::int64_t n = (m % 2 == 0) ? 0 : 8; n <= 8 * (m - 6); n += 16) {
      const GeographyPoint pt{m, n};
      if (is_admissible(pt)) out.push_back(pt);
    }
  }
  return out;
}

}  // namespace mcgspin
