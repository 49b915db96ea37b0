#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "momentbounds/oracle/generators.hpp"
#include "momentbounds/oracle/sturm.hpp"
#include "momentbounds/span.hpp"

using namespace momentbounds;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

Polynomial quintic() {
  return Polynomial({1.0, 80.0, 1500.0, 5000.0, 3750.0, 0.2});
}

const SpanBound& find_bound(const SpanReport& r, const std::string& name) {
  const auto it = std::find_if(r.bounds.begin(), r.bounds.end(),
                               [&](const auto& b) { return b.name == name; });
  REQUIRE(it != r.bounds.end());
  return *it;
}

}  // namespace

TEST_CASE("polynomial construction") {
  CHECK_THROWS_AS(Polynomial({1.0}), DegreeError);
  CHECK_THROWS_AS(Polynomial({0.0, 1.0}), Error);
  const Polynomial p({2.0, 4.0, -6.0});
  CHECK(p.coefficients()[0] == 1.0);
  CHECK(p.coefficients()[1] == 2.0);
  CHECK(p.a(2) == -3.0);
  CHECK(p.a(5) == 0.0);  // coefficients beyond the degree read as zero
  CHECK_THAT(p(1.0), WithinAbs(0.0, 1e-15));
}

TEST_CASE("depress reproduces the worked diminished quintic") {
  const auto [q, shift] = depress(quintic());
  CHECK_THAT(shift, WithinAbs(-16.0, 1e-13));
  const std::vector<double> expect = {1.0, 0.0, -1060.0, 14920.0, 12710.0,
                                      -3648479.0 / 5.0};
  REQUIRE(q.coefficients().size() == expect.size());
  for (std::size_t i = 0; i < expect.size(); ++i) {
    CHECK_THAT(q.coefficients()[i],
               WithinAbs(expect[i], 1e-9 * std::max(1.0, std::abs(expect[i]))));
  }
}

TEST_CASE("depress leaves a depressed polynomial unchanged") {
  const Polynomial p({1.0, 0.0, -1.0});  // x^2 - 1
  const auto [q, shift] = depress(p);
  CHECK(shift == 0.0);
  CHECK(q.coefficients()[2] == -1.0);
}

TEST_CASE("depress collapses a repeated root") {
  // (x - 3)^4 -> y^4 with t = -a1/n = 3
  const Polynomial p({1.0, -12.0, 54.0, -108.0, 81.0});
  const auto [q, shift] = depress(p);
  CHECK_THAT(shift, WithinAbs(3.0, 1e-15));
  for (int k = 1; k <= 4; ++k) CHECK_THAT(q.a(k), WithinAbs(0.0, 1e-10));
  CHECK_THROWS_AS(depress(Polynomial({1.0, 2.0})), DegreeError);
}

TEST_CASE("power_sums via Newton's identities") {
  const auto [q, shift] = depress(quintic());
  const PowerSums ps = power_sums(q);
  CHECK(ps.n == 5);
  CHECK_THAT(ps.m2, WithinRel(424.0, 1e-11));
  CHECK_THAT(ps.m3, WithinRel(-8952.0, 1e-11));
  CHECK_THAT(ps.m4, WithinRel(439272.0, 1e-11));
  CHECK_THAT(ps.alpha[2], WithinRel(5.0 * 424.0, 1e-11));
  CHECK(ps.alpha[1] == 0.0);

  const PowerSums two = power_sums(Polynomial({1.0, 0.0, -1.0}));
  CHECK_THAT(two.m2, WithinAbs(1.0, 1e-15));

  const PowerSums quartic = power_sums(Polynomial({1.0, 0.0, 0.0, 0.0, 0.0}));
  CHECK(quartic.m2 == 0.0);
  CHECK(quartic.m3 == 0.0);
  CHECK(quartic.m4 == 0.0);

  CHECK_THROWS_AS(power_sums(quintic()), NotDepressedError);
}

TEST_CASE("power sums agree with direct summation over oracle roots") {
  oracle::PolynomialGenerator gen(7);
  for (int i = 0; i < 50; ++i) {
    const auto inst = gen.next();
    const auto [q, shift] = depress(inst.poly);
    const PowerSums ps = power_sums(q);
    double m2 = 0.0, m3 = 0.0, m4 = 0.0;
    for (double r : inst.roots) {
      const double y = r - shift;  // roots of the depressed polynomial
      m2 += y * y;
      m3 += y * y * y;
      m4 += y * y * y * y;
    }
    const double n = static_cast<double>(inst.roots.size());
    m2 /= n;
    m3 /= n;
    m4 /= n;
    CHECK_THAT(ps.m2, WithinAbs(m2, 1e-8 * std::max(1.0, std::abs(m2))));
    CHECK_THAT(ps.m3, WithinAbs(m3, 1e-8 * std::max(1.0, std::abs(m3))));
    CHECK_THAT(ps.m4, WithinAbs(m4, 1e-8 * std::max(1.0, std::abs(m4))));
  }
}

TEST_CASE("span bounds on the worked quintic") {
  const auto [q, shift] = depress(quintic());
  const PowerSums ps = power_sums(q);
  CHECK_THAT(span_upper_nagy(ps).value, WithinRel(2.0 * std::sqrt(1060.0), 1e-12));
  CHECK_THAT(span_upper_nagy(ps).value, WithinAbs(65.116, 5e-3));
  CHECK_THAT(span_lower_popoviciu(ps).value, WithinRel(2.0 * std::sqrt(424.0), 1e-12));
  CHECK_THAT(span_lower_popoviciu(ps).value, WithinAbs(41.183, 5e-3));
  const auto [lo, hi] = span_fourth(ps);
  CHECK_THAT(lo.value, WithinAbs(47.916, 5e-3));
  CHECK_THAT(hi.value, WithinAbs(64.744, 5e-3));
  CHECK(lo.applicable);
  CHECK_THAT(span_lower_sixth(ps).value, WithinAbs(48.435, 5e-3));
}

TEST_CASE("span bounds on closed-form polynomials") {
  SECTION("x^2 - 1 saturates everything applicable") {
    const PowerSums ps = power_sums(Polynomial({1.0, 0.0, -1.0}));
    CHECK_THAT(span_upper_nagy(ps).value, WithinAbs(2.0, 1e-13));
    CHECK_THAT(span_lower_popoviciu(ps).value, WithinAbs(2.0, 1e-13));
    const auto [lo, hi] = span_fourth(ps);
    CHECK_FALSE(lo.applicable);  // stated for degree >= 5
    CHECK(hi.applicable);
    CHECK_THAT(hi.value, WithinAbs(2.0, 1e-13));
    CHECK_FALSE(span_lower_sixth(ps).applicable);
  }
  SECTION("y^3 - 3y has roots {-sqrt3, 0, sqrt3}") {
    const PowerSums ps = power_sums(Polynomial({1.0, 0.0, -3.0, 0.0}));
    CHECK_THAT(span_upper_nagy(ps).value, WithinRel(2.0 * std::sqrt(3.0), 1e-13));
    CHECK_THAT(span_lower_popoviciu(ps).value, WithinRel(2.0 * std::sqrt(2.0), 1e-13));
  }
  SECTION("y^n collapses to zero") {
    const PowerSums ps = power_sums(Polynomial({1.0, 0.0, 0.0, 0.0, 0.0, 0.0}));
    CHECK(span_upper_nagy(ps).value == 0.0);
    const auto [lo, hi] = span_fourth(ps);
    CHECK(lo.value == 0.0);
    CHECK(hi.value == 0.0);
    CHECK(lo.applicable);  // degree 5
    CHECK(span_lower_sixth(ps).value == 0.0);
  }
  SECTION("positive a2 betrays complex roots") {
    const PowerSums ps = power_sums(Polynomial({1.0, 0.0, 1.0}));  // x^2 + 1
    CHECK_THROWS_AS(span_upper_nagy(ps), RealRootednessViolation);
    CHECK_THROWS_AS(span_lower_popoviciu(ps), RealRootednessViolation);
  }
}

TEST_CASE("span ordering and covariance properties") {
  oracle::PolynomialGenerator gen(11);
  for (int i = 0; i < 80; ++i) {
    const auto inst = gen.next();
    const auto [q, shift] = depress(inst.poly);
    const PowerSums ps = power_sums(q);

    // popoviciu lower <= nagy upper always
    CHECK(span_lower_popoviciu(ps).value <= span_upper_nagy(ps).value + 1e-12);

    // shift invariance: bounds of p(x + c) equal bounds of p
    std::vector<double> shifted_roots;
    for (double r : inst.roots) shifted_roots.push_back(r - 4.5);
    std::vector<double> coeffs{1.0};
    for (double r : shifted_roots) {
      coeffs.push_back(0.0);
      for (std::size_t k = coeffs.size() - 1; k >= 1; --k) {
        coeffs[k] -= r * coeffs[k - 1];
      }
    }
    const auto [q2, shift2] = depress(Polynomial(std::move(coeffs)));
    const PowerSums ps2 = power_sums(q2);
    const double tol = 1e-9 * std::max(1.0, span_upper_nagy(ps).value);
    CHECK_THAT(span_upper_nagy(ps2).value, WithinAbs(span_upper_nagy(ps).value, tol));
    CHECK_THAT(span_lower_sixth(ps2).value, WithinAbs(span_lower_sixth(ps).value,
                                                      10.0 * tol));

    // scale covariance: roots scaled by s scale every bound by s
    const double s = 1.75;
    std::vector<double> scaled{1.0};
    for (double r : inst.roots) {
      scaled.push_back(0.0);
      for (std::size_t k = scaled.size() - 1; k >= 1; --k) {
        scaled[k] -= s * r * scaled[k - 1];
      }
    }
    const auto [q3, shift3] = depress(Polynomial(std::move(scaled)));
    const PowerSums ps3 = power_sums(q3);
    CHECK_THAT(span_upper_nagy(ps3).value,
               WithinAbs(s * span_upper_nagy(ps).value,
                         1e-9 * std::max(1.0, s * span_upper_nagy(ps).value)));
    const auto [lo, hi] = span_fourth(ps);
    const auto [lo3, hi3] = span_fourth(ps3);
    CHECK_THAT(hi3.value, WithinAbs(s * hi.value, 1e-9 * std::max(1.0, s * hi.value)));
  }
}

TEST_CASE("span_report") {
  SECTION("worked quintic with verification") {
    const SpanReport rep = span_report(quintic(), true);
    REQUIRE(rep.exact.has_value());
    CHECK(*rep.exact >= 48.435 - 5e-3);
    CHECK(*rep.exact <= 64.744 + 5e-3);
    CHECK_THAT(rep.shift, WithinAbs(-16.0, 1e-12));
    CHECK_THAT(find_bound(rep, "nagy_upper").value, WithinAbs(65.116, 5e-3));
    CHECK_THAT(find_bound(rep, "sixth_lower").value, WithinAbs(48.435, 5e-3));
  }
  SECTION("x^2 - 1: every applicable bound equals the span") {
    const SpanReport rep = span_report(Polynomial({1.0, 0.0, -1.0}), true);
    REQUIRE(rep.exact.has_value());
    CHECK_THAT(*rep.exact, WithinAbs(2.0, 1e-9));
    for (const auto& b : rep.bounds) {
      if (b.applicable) CHECK_THAT(b.value, WithinAbs(2.0, 1e-9));
    }
  }
  SECTION("complex roots are rejected in verify mode") {
    CHECK_THROWS_AS(span_report(Polynomial({1.0, 0.0, 1.0}), true),
                    RealRootednessViolation);
  }
  SECTION("degree one collapses to zero") {
    const SpanReport rep = span_report(Polynomial({1.0, -3.0}), true);
    REQUIRE(rep.exact.has_value());
    CHECK(*rep.exact == 0.0);
    for (const auto& b : rep.bounds) CHECK(b.value == 0.0);
  }
}
