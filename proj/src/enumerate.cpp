#include "sunit/enumerate.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "sunit/errors.hpp"

namespace sunit {

namespace {

std::int64_t isqrt(std::int64_t n) {
  if (n <= 0) return 0;
  mpz_class z(static_cast<unsigned long>(n));
  mpz_sqrt(z.get_mpz_t(), z.get_mpz_t());
  return static_cast<std::int64_t>(z.get_ui());
}

bool same_parity(std::int64_t a, std::int64_t b) { return ((a ^ b) & 1) == 0; }

}  // namespace

NormClassEnumeration enumerate_by_norm(unsigned long m) {
  if (m == 0) throw InputError("norm classes are enumerated for m >= 1");
  NormClassEnumeration out{m, {}};
  const std::int64_t target = 4 * static_cast<std::int64_t>(m);
  const std::int64_t ra = isqrt(target);
  for (std::int64_t a = -ra; a <= ra; ++a) {
    const std::int64_t rest_a = target - a * a;
    const std::int64_t rb = isqrt(rest_a);
    for (std::int64_t b = -rb; b <= rb; ++b) {
      if (!same_parity(a, b)) continue;
      const std::int64_t rest_b = rest_a - b * b;
      const std::int64_t rc = isqrt(rest_b);
      for (std::int64_t c = -rc; c <= rc; ++c) {
        if (!same_parity(a, c)) continue;
        const std::int64_t rest_c = rest_b - c * c;
        const std::int64_t d = isqrt(rest_c);
        if (d * d != rest_c || !same_parity(a, d)) continue;
        auto push = [&](std::int64_t dd) {
          out.elements.emplace_back(Integer(static_cast<long>(a)), Integer(static_cast<long>(b)),
                                    Integer(static_cast<long>(c)), Integer(static_cast<long>(dd)));
        };
        if (d != 0) push(-d);
        push(d);
      }
    }
  }
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

unsigned long sum_of_odd_divisors(unsigned long m) {
  while (m != 0 && m % 2 == 0) m /= 2;
  unsigned long total = 0;
  for (unsigned long k = 1; k * k <= m; ++k) {
    if (m % k != 0) continue;
    total += k;
    if (k != m / k) total += m / k;
  }
  return total;
}

int multiplicative_order(const HurwitzElement& q, int max_order) {
  const HurwitzElement one(2, 0, 0, 0);
  HurwitzElement acc = q;
  for (int k = 1; k <= max_order; ++k) {
    if (acc == one) return k;
    acc = acc * q;
  }
  return 0;
}

UnitGroupReport unit_group_check() {
  UnitGroupReport report;
  report.units = enumerate_by_norm(1).elements;
  if (report.units.size() != 24) {
    throw VerificationError("expected 24 units, found " + std::to_string(report.units.size()));
  }
  const std::set<HurwitzElement> members(report.units.begin(), report.units.end());
  for (const auto& u : report.units) {
    for (const auto& v : report.units) {
      if (!members.contains(u * v)) {
        throw VerificationError("unit group not closed: " + to_string(u) + " * " + to_string(v));
      }
    }
    // For norm one the inverse is the conjugate.
    if (!members.contains(u.conjugate()) || !(u * u.conjugate() == HurwitzElement(2, 0, 0, 0))) {
      throw VerificationError("unit without inverse in the group: " + to_string(u));
    }
    const int order = multiplicative_order(u);
    if (order == 0) throw VerificationError("unit of infinite order: " + to_string(u));
    ++report.order_counts[order];
  }
  report.elements_of_order_two = report.order_counts.contains(2) ? report.order_counts.at(2) : 0;
  if (report.elements_of_order_two != 1) {
    throw VerificationError("expected exactly one element of order 2, found " +
                            std::to_string(report.elements_of_order_two));
  }
  return report;
}

std::vector<HurwitzElement> generating_set(const SPlaceSet& s) {
  std::vector<HurwitzElement> out = enumerate_by_norm(1).elements;
  for (unsigned long p : s.primes()) {
    auto cls = enumerate_by_norm(p).elements;
    out.insert(out.end(), cls.begin(), cls.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<HurwitzElement> bounded_height_integral(const Rational& x) {
  if (x < 1) throw InputError("height bound must be at least 1");
  Integer limit = x.get_num() / x.get_den();  // floor for x > 0
  if (!limit.fits_ulong_p()) throw InputError("height bound too large to enumerate");
  std::vector<HurwitzElement> out;
  for (unsigned long m = 1; m <= limit.get_ui(); ++m) {
    auto cls = enumerate_by_norm(m).elements;
    out.insert(out.end(), cls.begin(), cls.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<HurwitzElement> bounded_height_integral(const Real& x) {
  if (x < 1) throw InputError("height bound must be at least 1");
  return bounded_height_integral(Rational(x.floor()));
}

}  // namespace sunit
