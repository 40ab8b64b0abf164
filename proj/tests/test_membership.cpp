#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "support.hpp"
#include "teapot/atlas.hpp"
#include "teapot/errors.hpp"
#include "teapot/membership.hpp"
#include "teapot/parry_series.hpp"
#include "teapot/roots.hpp"

using namespace teapot;
using teapot::testing::rng;
using cd = std::complex<double>;

namespace {

GrowthRate rate(const char* text) { return GrowthRate::parse(text); }

const char* kTribonacci = "poly:-1,-1,-1,1";
const cd kWitnessConjugate(-0.5840341196392905, 0.4820600149798202);

cd random_point(double r_min, double r_max) {
  std::uniform_real_distribution<double> radius(r_min, r_max);
  std::uniform_real_distribution<double> angle(-3.14159, 3.14159);
  return std::polar(radius(rng()), angle(rng()));
}

}  // namespace

TEST_CASE("reduction to the fundamental range") {
  const Reduction a = reduce_to_fundamental(cd(0.3, 0.1), rate("1.8"));
  CHECK(a.k == 0);
  CHECK(a.z == cd(0.3, 0.1));
  CHECK(a.lambda.compare(mpq_class(9, 5)) == 0);

  const Reduction b = reduce_to_fundamental(cd(0.5, 0.5), rate("1.3"));
  CHECK(b.k == 1);
  CHECK(b.lambda.compare(mpq_class(169, 100)) == 0);
  CHECK(std::abs(b.z - cd(0, 0.5)) < 1e-16);

  const Reduction c = reduce_to_fundamental(cd(0.9, 0), rate("1.15"));
  CHECK(c.k == 2);
  CHECK(c.lambda.compare(mpq_class(174900625, 100000000)) == 0);
  CHECK(c.z_error > 0);
  CHECK(c.z_error < 1e-15);

  const Reduction d = reduce_to_fundamental(cd(0.9, 0), rate("poly:-2,0,0,1"));
  CHECK(d.k == 1);
  CHECK(d.lambda.value() == doctest::Approx(std::cbrt(4.0)));
}

TEST_CASE("outside test") {
  const GrowthRate tri = rate(kTribonacci);
  const Certificate a = certify_outside(1.5, tri, 60);
  CHECK(a.verdict == Verdict::CertifiedOut);
  CHECK(a.method == Method::OutsideSeries);
  CHECK(a.depth <= 60);
  CHECK(a.margin > 0);

  const Certificate root = certify_outside(tri.value(), tri, 200);
  CHECK(root.verdict == Verdict::Inconclusive);
  CHECK(root.depth == 200);

  const Certificate far = certify_outside(3.0, rate("1.7"), 60);
  CHECK(far.verdict == Verdict::CertifiedOut);
  CHECK(far.depth <= 4);
  CHECK(certify_outside(3.0, tri, 60).depth <= 4);
}

TEST_CASE("a ten-digit truncation of the tribonacci constant is outside the slice") {
  // Outside the disk the tribonacci slice meets the real axis only at the
  // constant itself, so a nearby decimal is eventually excluded.
  const Certificate c = certify_outside(1.839286755, rate(kTribonacci), 200);
  CHECK(c.verdict == Verdict::CertifiedOut);
  CHECK(c.depth > 20);
}

TEST_CASE("inside test") {
  const Certificate mirror = certify_inside(-kWitnessConjugate, rate("1.82"), 20);
  CHECK(mirror.verdict == Verdict::CertifiedOut);
  CHECK(mirror.method == Method::InsideEnumeration);
  CHECK(mirror.depth <= 20);
  CHECK(mirror.margin > 0);

  const Certificate member = certify_inside(cd(-0.419643, 0.606291), rate("1.85"), 20);
  CHECK(member.verdict == Verdict::Inconclusive);
  for (std::size_t n = 1; n <= 20; ++n) {
    CHECK(certify_inside(cd(-0.419643, 0.606291), rate("1.85"), n).verdict == Verdict::Inconclusive);
  }

  const Certificate fast = certify_inside(0.3, rate("1.5"), 20);
  CHECK(fast.verdict == Verdict::CertifiedOut);
  CHECK(fast.method == Method::FastPathHalfDisk);
}

TEST_CASE("ball certificates") {
  CHECK(ball_radius(0.75, 20, 0.1) == doctest::Approx(2.384185791015625e-09).epsilon(1e-12));
  CHECK(ball_radius(0.75, 20, 0.0) == 0.0);
  CHECK(ball_radius(0.5 + 1e-9, 5, 0.1) < 2e-9);
  const GrowthRate l = rate("1.82");
  const double r = certify_ball(-kWitnessConjugate, l, 20, 0.005);
  CHECK(r > 0);
  CHECK(r <= ball_radius(std::abs(kWitnessConjugate), 20, 0.005));
  CHECK_THROWS_AS(certify_ball(-kWitnessConjugate, l, 20, 1.0), MarginInsufficient);
  CHECK_THROWS_AS(certify_ball(kWitnessConjugate, l, 20, 0.001), MarginInsufficient);
}

TEST_CASE("point dispatcher") {
  const Certificate one = test_point(1.0, rate("1.6"));
  CHECK(one.verdict == Verdict::Member);
  CHECK(one.method == Method::UnitCircle);
  CHECK(test_point(cd(0, -1), rate("1.3")).verdict == Verdict::Member);
  CHECK(test_point(cd(-1, 0), rate("1.9")).verdict == Verdict::Member);

  const Certificate half_i = test_point(cd(0, 0.5), rate("1.3"));
  CHECK(half_i.verdict == Verdict::CertifiedOut);
  CHECK(half_i.method == Method::FastPathHalfDisk);
  CHECK(half_i.reduction_exponent == 1);

  const Certificate out = test_point(1.5, rate(kTribonacci));
  CHECK(out.verdict == Verdict::CertifiedOut);
  CHECK(out.method == Method::OutsideSeries);

  CHECK_THROWS_AS(test_point(cd(1.0 + 1e-14, 0), rate("1.6")), AmbiguousModulus);
  // 0.6 and 0.8 are not exact doubles, so this point is off the circle.
  CHECK_THROWS_AS(test_point(cd(0.6, 0.8), rate("1.6")), AmbiguousModulus);
}

TEST_CASE("certified verdicts carry a positive margin") {
  const SliceTester tester(rate("1.7"), MembershipBudget{120, 12});
  for (int trial = 0; trial < 400; ++trial) {
    const cd z = random_point(0.2, 1.8);
    if (std::abs(std::abs(z) - 1.0) < 1e-9) continue;
    const Certificate c = tester.test(z);
    if (c.verdict == Verdict::CertifiedOut) REQUIRE(c.margin > 0);
    REQUIRE(c.verdict != Verdict::Member);
  }
}

TEST_CASE("forward disc invariance") {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 20000; ++trial) {
    const cd z = random_point(0.0, 0.999);
    const double r = 2.0 / (1.0 - std::abs(z));
    const cd x = std::polar(r * unit(rng()), 6.2831853 * unit(rng()));
    const double slack = 1e-12 * r;
    REQUIRE(std::abs(z * x) <= r + slack);
    REQUIRE(std::abs(2.0 - z * x) <= r + slack);
  }
}

TEST_CASE("escape is monotone") {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 20000; ++trial) {
    const cd z = random_point(0.01, 0.999);
    const double r = 2.0 / (1.0 - std::abs(z));
    const cd y = std::polar(r * (1.0 + 1e-9 + 10.0 * unit(rng())), 6.2831853 * unit(rng()));
    REQUIRE(std::abs(y / z) > std::abs(y));
    REQUIRE(std::abs((2.0 - y) / z) > std::abs(y));
  }
}

TEST_CASE("squaring reduction is consistent") {
  const MembershipBudget budget{120, 14};
  std::size_t certified = 0;
  for (const char* l : {"1.1", "1.2", "1.3", "1.4"}) {
    const GrowthRate lam = rate(l);
    const GrowthRate lam2 = lam.squared();
    for (int i = 0; i < 15; ++i) {
      for (int j = 0; j < 15; ++j) {
        const cd z(-1.4 + 0.2 * i + 0.013, -1.4 + 0.2 * j + 0.007);
        if (std::abs(std::abs(z) - 1.0) < 1e-6) continue;
        const Certificate a = test_point(z, lam, budget);
        const Certificate b = test_point(z * z, lam2, budget);
        REQUIRE_MESSAGE(a.verdict == b.verdict, l << " " << z);
        if (a.verdict == Verdict::CertifiedOut) ++certified;
      }
    }
  }
  CHECK(certified > 0);
}

TEST_CASE("verdicts are symmetric under conjugation") {
  const SliceTester tester(rate("1.82"), MembershipBudget{200, 16});
  for (int trial = 0; trial < 300; ++trial) {
    const cd z = random_point(0.45, 1.6);
    if (std::abs(std::abs(z) - 1.0) < 1e-9) continue;
    REQUIRE(tester.test(z).verdict == tester.test(std::conj(z)).verdict);
  }
}

// Persistence makes the disk roots members of every higher slice; outside
// the disk the slice is only lambda itself.
TEST_CASE("disk roots of admissible Parry polynomials are never excluded") {
  std::size_t tested = 0;
  for (const Word& w : admissible_words(9)) {
    const IntPolynomial p = parry_polynomial(w);
    const auto lead = leading_root(p);
    const double low = lead ? *lead : 1.0;
    for (double t : {1e-6, 0.05, 0.2}) {
      const double lam = low + t;
      if (lam >= 2.0) continue;
      const SliceTester tester(GrowthRate(lam), MembershipBudget{200, 14});
      for (cd z : all_roots(p).roots) {
        if (std::abs(z) >= 1.0 - 1e-9) continue;
        REQUIRE_MESSAGE(tester.test(z).verdict != Verdict::CertifiedOut, w.str() << " " << z << " " << lam);
        ++tested;
      }
    }
  }
  CHECK(tested > 300);
}
