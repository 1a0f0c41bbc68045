#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mcgspin/factorization.hpp"

namespace mcgspin {

/// e = 4 - 4g + l for a genus-g fibration over the sphere with l singular fibers.
std::int64_t euler_characteristic(const PositiveFactorization& p);

/// The caller's statement that the monodromy commutes with a hyperelliptic
/// involution; the library records it but cannot check it.
struct HyperellipticCertificate {
  std::string justification;
};

/// sigma = -(g+1)/(2g+1) * l for hyperelliptic fibrations whose vanishing
/// cycles are all nonseparating. Zero classes are rejected.
std::int64_t signature_endo(const PositiveFactorization& p, const HyperellipticCertificate& cert);

/// Meyer's cocycle on Sp(2g, Z): the signature of
///   <(x1,y1),(x2,y2)> = <x1 + y1, (I - B) y2>
/// on the space of (x, y) with (A^-1 - I) x + (B - I) y = 0.
int meyer_cocycle(const IntMatrix& a, const IntMatrix& b);
/// Signature of a symmetric rational matrix (exact congruence diagonalization).
int signature_of_symmetric(std::vector<std::vector<Rational>> m);
/// Sum of the cocycle over consecutive partial products of the monodromy.
std::int64_t signature_meyer(const PositiveFactorization& p);

enum class SignatureSource { EndoHyperelliptic, Meyer, PaperFormula };

const char* to_string(SignatureSource s);

struct FibrationInvariants {
  std::int64_t euler;
  std::int64_t signature;
  SignatureSource method;
  std::int64_t chi_h;
  std::int64_t c1_squared;
};

/// PaperFormula is available only for members of the Z_{g,k} family, where
/// sigma = -8(g+1); EndoHyperelliptic needs a certificate.
FibrationInvariants invariants_of(const PositiveFactorization& p, SignatureSource source,
                                  const std::optional<HyperellipticCertificate>& cert = std::nullopt);

struct GeographyPoint {
  std::int64_t m;  // chi_h
  std::int64_t n;  // c1^2
  friend auto operator<=>(const GeographyPoint&, const GeographyPoint&) = default;
};

bool is_admissible(const GeographyPoint& pt);
/// (g, k) with chi_h(Z_{g,k}) = m and c1^2(Z_{g,k}) = n, when such a member exists.
std::optional<ZFamily> realize(const GeographyPoint& pt);
GeographyPoint family_point(const ZFamily& f);

inline constexpr std::int64_t kMaxRegionM = 10000;

/// Admissible points with m <= m_max, sorted by (m, n).
std::vector<GeographyPoint> enumerate_region(std::int64_t m_max);

}  // namespace mcgspin
