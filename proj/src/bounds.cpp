#include "sunit/bounds.hpp"

#include <algorithm>

#include "sunit/errors.hpp"

namespace sunit {

namespace {

Integer factorial(int k) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(std::max(k, 0)));
  return out;
}

Integer ipow(const Integer& base, unsigned long e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

Rational rpow(const Rational& base, long e) {
  Rational num(ipow(base.get_num(), static_cast<unsigned long>(e < 0 ? -e : e)));
  Rational den(ipow(base.get_den(), static_cast<unsigned long>(e < 0 ? -e : e)));
  Rational out = e < 0 ? den / num : num / den;
  out.canonicalize();
  return out;
}

Rational q(long num, long den) {
  Rational out(num, den);
  out.canonicalize();
  return out;
}

Real one(Precision prec) { return Real(1, prec); }

// (2/pi)^{2ndr2/(2n-s)} (2 sqrt2/pi)^{nds/(2n-s)}: the archimedean volume
// correction shared by f1 and f2.
Real archimedean_factor(const AlgebraShape& sh) {
  const Precision prec = sh.covolume.precision();
  const Real pi = Real::pi(prec);
  const Real two(2, prec);
  const long denom = 2L * sh.n - sh.s;
  Real out = pow(two / pi, q(2L * sh.n * sh.d * sh.r2, denom));
  out = out * pow(two * sqrt(two) / pi, q(1L * sh.n * sh.d * sh.s, denom));
  return out;
}

}  // namespace

const char* to_string(PlaceKind kind) {
  switch (kind) {
    case PlaceKind::kRealSplit:
      return "real-split";
    case PlaceKind::kComplex:
      return "complex";
    case PlaceKind::kRamifiedQuaternion:
      return "ramified-H";
  }
  return "?";
}

void AlgebraShape::validate() const {
  auto fail = [](const std::string& why) { throw InvalidShapeError("invalid algebra shape: " + why); };
  if (n < 1) fail("n must be positive");
  if (d < 1) fail("d must be positive");
  if (r1 < 0 || r2 < 0) fail("r1 and r2 must be non-negative");
  if (n != r1 + 2 * r2) fail("n must equal r1 + 2 r2");
  if (s < 0 || s > r1) fail("s must lie in [0, r1]");
  if (s > 0 && d % 2 != 0) fail("a ramified real place forces an even degree d");
  if (!(covolume > 0) || !covolume.is_finite()) fail("covolume must be a positive real");
}

AlgebraShape AlgebraShape::hurwitz(Precision prec) {
  AlgebraShape sh;
  sh.n = 1;
  sh.d = 2;
  sh.s = 1;
  sh.r1 = 1;
  sh.r2 = 0;
  sh.covolume = Real(2, prec);
  return sh;
}

FinitePlaces FinitePlaces::from(const SPlaceSet& s) {
  FinitePlaces out;
  for (unsigned long p : s.primes()) out.norms.emplace_back(p);
  return out;
}

Integer FinitePlaces::max_norm() const {
  Integer m = 1;
  for (const auto& x : norms) m = std::max(m, x);
  return m;
}

Real volume_constant_z(const AlgebraShape& sh) {
  sh.validate();
  const Precision prec = sh.covolume.precision();
  const Real pi = Real::pi(prec);
  const long d2 = 1L * sh.d * sh.d;
  Real z = pow(Real(2, prec), d2 * (sh.r1 - sh.s));
  z = z * pow(pi * pi * 2, q(d2 * sh.s, 4));
  z = z * pow(pi * 2, d2 * sh.r2);
  return z;
}

Real minkowski_c(const AlgebraShape& sh) {
  const Real z = volume_constant_z(sh);
  const Precision prec = sh.covolume.precision();
  const long d2 = 1L * sh.d * sh.d;
  Real ratio = pow(Real(2, prec), d2 * sh.n) * sh.covolume / z;
  return pow(ratio, q(2, d2 * (2L * sh.n - sh.s)));
}

Real m_x_tight(const AlgebraShape& sh, const Real& c) {
  sh.validate();
  const long d2 = 1L * sh.d * sh.d;
  std::optional<Real> best;
  auto consider = [&best](Real candidate) {
    if (!best || *best < candidate) best = std::move(candidate);
  };
  if (sh.r1 > sh.s) consider(pow(c * sh.d, d2 * sh.n));
  if (sh.s > 0) consider(pow(c * sh.d / 2, q(d2 * sh.n, 2)));
  if (sh.r2 > 0) consider(pow(c * c * sh.d, q(d2 * sh.n, 2)));
  return *best;
}

Real m_x_uniform(const AlgebraShape& sh, const Real& c) {
  sh.validate();
  const long exponent = 1L * sh.n * sh.d * sh.d;
  const Real cd = c * sh.d;
  if (cd * 2 >= 1) return pow(cd, exponent);
  return pow(cd / 2, q(exponent, 2));
}

DeltaBounds delta_bounds(PlaceKind kind, int m) {
  if (m < 1) throw InputError("delta bounds need m >= 1");
  const unsigned long degree = kind == PlaceKind::kComplex ? 2 : 1;  // [k_v:R]
  const unsigned long um = static_cast<unsigned long>(m);
  DeltaBounds out;
  out.delta1 = ipow(Integer(m), degree);
  out.delta2 = ipow(Integer(2), degree * um * (um - 1));
  if (kind != PlaceKind::kRamifiedQuaternion) {
    out.delta2 = std::min(out.delta2, ipow(factorial(m - 1), degree));
  }
  return out;
}

Real mu1_bound(const AlgebraShape& sh) {
  sh.validate();
  const int d = sh.d;
  Rational split = Rational(factorial(d - 1) * d);
  Rational value = rpow(split, sh.n);
  if (sh.s > 0) {
    // d even here, so (d/2)(d-2) is an integer.
    Rational ramified(ipow(Integer(2), static_cast<unsigned long>((d / 2) * (d - 2))) * d,
                      factorial(d - 1) * 4);
    ramified.canonicalize();
    value *= rpow(ramified, sh.s);
  }
  return Real::from_rational(value, sh.covolume.precision());
}

Rational exponent_e(const AlgebraShape& sh) {
  sh.validate();
  return q(2L * sh.n, 1L * sh.d * (2L * sh.n - sh.s));
}

TConstants t_constants(const AlgebraShape& sh, const Real& c, const Real& m_x,
                       const FinitePlaces& places) {
  sh.validate();
  const Precision prec = sh.covolume.precision();
  const Real unit = one(prec);

  // m'_{S_f} = max (#k(w))^{d(v)/d}; d(v) is 2 at ramified real places, else 1.
  const long local_index = sh.s > 0 ? 2 : 1;
  Real m_prime = unit;
  if (!places.norms.empty()) {
    m_prime = pow(Real::from_integer(places.max_norm(), prec), q(local_index, sh.d));
  }

  TConstants t{m_prime, max(unit, c), pow(m_prime, q(1, sh.n)), unit, unit, unit,
               max(unit, pow(m_x, q(1, 1L * sh.d * sh.n))), unit, unit};

  // Each archimedean place contributes max(T1^{[k_v:R] m(v)} T2^{[k_v:R]}, T5^{[k_v:R]}).
  const Real split = max(pow(t.T1, sh.d) * t.T2, t.T5);
  const Real complex = max(pow(t.T1, 2L * sh.d) * t.T2 * t.T2, t.T5 * t.T5);
  t.T6 = pow(split, sh.r1 - sh.s) * pow(complex, sh.r2);
  if (sh.s > 0) t.T6 = t.T6 * pow(max(pow(t.T1, sh.d / 2) * t.T2, t.T5), sh.s);

  t.T6_upper = m_prime * max(unit, pow(c * sh.d, 1L * sh.n * sh.d));
  return t;
}

Real general_height_bound(const AlgebraShape& sh, const TConstants& t) {
  return mu1_bound(sh) * t.T6 * t.T3 * t.T3prime * t.T4;
}

std::pair<Real, Real> f1_f2(const AlgebraShape& sh) {
  const Real c = minkowski_c(sh);
  if (c < 1) {
    throw UnsupportedBranchError("closed forms f1/f2 are only available for c >= 1 (c = " +
                                 c.to_string(12) + ")");
  }
  const Precision prec = sh.covolume.precision();
  const int n = sh.n;
  const int d = sh.d;
  const int s = sh.s;
  const Real arch = archimedean_factor(sh);
  const Real dr(d, prec);

  Real f1 = pow(dr, 1L * n * d) * arch;

  Real f2 = pow(dr, 1L * n * d + n + s);
  f2 = f2 * Real::from_integer(ipow(factorial(d - 1), static_cast<unsigned long>(n - s)), prec);
  f2 = f2 * pow(Real(2, prec), q(1L * s * (1L * d * d - 2L * d - 4), 2));
  f2 = f2 * arch;
  return {std::move(f1), std::move(f2)};
}

BoundReport thresholds_and_final(const AlgebraShape& sh, const FinitePlaces& places,
                                 OnSmallC on_small_c) {
  sh.validate();
  const Precision prec = sh.covolume.precision();
  Real z = volume_constant_z(sh);
  Real c = minkowski_c(sh);
  Real mx = m_x_tight(sh, c);
  Real mx_uniform = m_x_uniform(sh, c);
  const Rational e_exact = exponent_e(sh);
  if (e_exact > 1) throw VerificationError("exponent e exceeds 1");
  TConstants t = t_constants(sh, c, mx, places);

  BoundReport r{prec,
                z,
                c,
                mx,
                mx_uniform,
                Real::from_rational(e_exact, prec),
                t,
                mu1_bound(sh),
                std::nullopt,
                std::nullopt,
                pow(mx, q(1, sh.d)),
                std::nullopt,
                general_height_bound(sh, t),
                std::nullopt,
                sh.covolume * sh.covolume,
                c < 1};

  if (!r.c_lt_one || on_small_c == OnSmallC::kThrow) {
    auto [f1, f2] = f1_f2(sh);
    const Real scale = pow(sh.covolume, e_exact);
    r.place_threshold_closed_form = f1 * scale;
    r.height_bound_closed_form = f2 * t.m_prime * scale;
    r.f1 = std::move(f1);
    r.f2 = std::move(f2);
  }
  return r;
}

bool BoundReport::requires_place(const Integer& norm) const {
  // Round the threshold up by a relative margin well above the working error.
  const Real slack = pow(Real(10, precision), -static_cast<long>(precision.digits10) + 8);
  return Real::from_integer(norm, precision) <= place_threshold * (Real(1, precision) + slack);
}

nlohmann::json to_json(const BoundReport& r) {
  const unsigned digits = r.precision.digits10;
  auto str = [digits](const Real& x) { return x.to_string(digits); };
  auto opt = [&str](const std::optional<Real>& x) -> nlohmann::json {
    return x ? nlohmann::json(str(*x)) : nlohmann::json(nullptr);
  };
  nlohmann::json j;
  j["precision_digits"] = digits;
  j["error_bound"] = "1e-" + std::to_string(digits > 8 ? digits - 8 : 0);
  j["z"] = str(r.z);
  j["c"] = str(r.c);
  j["c_lt_one"] = r.c_lt_one;
  j["m_X"] = str(r.m_X);
  j["m_X_uniform"] = str(r.m_X_uniform);
  j["e"] = str(r.e);
  j["m_prime_Sf"] = str(r.T.m_prime);
  j["T1"] = str(r.T.T1);
  j["T2"] = str(r.T.T2);
  j["T3"] = str(r.T.T3);
  j["T3prime"] = str(r.T.T3prime);
  j["T4"] = str(r.T.T4);
  j["T5"] = str(r.T.T5);
  j["T6"] = str(r.T.T6);
  j["T6_upper"] = str(r.T.T6_upper);
  j["mu1_bound"] = str(r.mu1_bound);
  j["f1"] = opt(r.f1);
  j["f2"] = opt(r.f2);
  j["place_threshold"] = str(r.place_threshold);
  j["place_threshold_closed_form"] = opt(r.place_threshold_closed_form);
  j["height_bound_general"] = str(r.height_bound_general);
  j["height_bound_closed_form"] = opt(r.height_bound_closed_form);
  j["discriminant"] = str(r.discriminant);
  return j;
}

AlgebraShape shape_from_json(const nlohmann::json& doc, Precision prec) {
  auto real_field = [&](const char* key) {
    const auto& v = doc.at(key);
    if (v.is_string()) return Real::from_string(v.get<std::string>(), prec);
    if (v.is_number_integer()) return Real(v.get<long>(), prec);
    if (v.is_number()) return Real::from_string(v.dump(), prec);
    throw InvalidShapeError(std::string("field '") + key + "' must be a number or decimal string");
  };
  try {
    AlgebraShape sh;
    sh.n = doc.at("n").get<int>();
    sh.d = doc.at("d").get<int>();
    sh.s = doc.value("s", 0);
    sh.r1 = doc.at("r1").get<int>();
    sh.r2 = doc.value("r2", 0);
    if (doc.contains("covolume")) {
      sh.covolume = real_field("covolume");
    } else if (doc.contains("discriminant")) {
      sh.covolume = sqrt(abs(real_field("discriminant")));
    } else {
      throw InvalidShapeError("shape document needs 'covolume' or 'discriminant'");
    }
    sh.validate();
    return sh;
  } catch (const nlohmann::json::exception& ex) {
    throw InvalidShapeError(std::string("malformed shape document: ") + ex.what());
  }
}

}  // namespace sunit
