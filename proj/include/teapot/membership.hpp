#pragma once

// Certification that a point z lies outside the slice Xi_lambda.
//
//   |z| > 1  partial sums of H(It_lambda, 1/z) against their tail bound;
//   |z| < 1  inverse branches along the words of M_{N,lambda} must all
//            leave the disk of radius 2 / (1 - |z|);
//   |z| = 1  always a member.
// For lambda < sqrt 2 the pair is replaced by (z^2, lambda^2) until the
// rate reaches [sqrt 2, 2).
//
// Every decisive inequality is checked against a forward bound on the
// floating-point error, including the error of z^(2^k) after reduction.

#include <complex>
#include <cstddef>
#include <optional>
#include <string>

#include "teapot/growth_rate.hpp"
#include "teapot/suitability.hpp"
#include "teapot/symbolic.hpp"

namespace teapot {

enum class Verdict { CertifiedOut, Member, Inconclusive };
enum class Method { OutsideSeries, InsideEnumeration, FastPathHalfDisk, UnitCircle };

std::string to_string(Verdict v);
std::string to_string(Method m);

struct Certificate {
  Verdict verdict = Verdict::Inconclusive;
  Method method = Method::InsideEnumeration;
  // Series terms or word length at which the verdict was reached (the budget
  // when inconclusive).
  std::size_t depth = 0;
  // Slack in the decisive inequality after subtracting error bounds.
  double margin = 0.0;
  unsigned reduction_exponent = 0;
  // Precision of the floating-point arithmetic used on z.
  unsigned precision_bits = 53;
};

struct Reduction {
  std::complex<double> z;
  GrowthRate lambda;
  unsigned k = 0;
  // |computed z - exact z^(2^k)|.
  double z_error = 0.0;
};

// lambda in (1, 2).
Reduction reduce_to_fundamental(std::complex<double> z, const GrowthRate& lambda);

// |z0| > 1. z_error bounds the uncertainty of z0 itself.
Certificate certify_outside(std::complex<double> z0, const GrowthRate& lambda, std::size_t max_n,
                            double z_error = 0.0);
// Same, reusing a precomputed prefix of It_lambda of length >= max_n - 1.
Certificate certify_outside(std::complex<double> z0, const Word& itinerary, std::size_t max_n, double z_error = 0.0);

// 0 < |z0| < 1, lambda in [sqrt 2, 2).
Certificate certify_inside(std::complex<double> z0, const GrowthRate& lambda, std::size_t max_depth,
                           double z_error = 0.0);
// Same, with a context whose prefix has length >= max_depth.
Certificate certify_inside(std::complex<double> z0, const SuitabilityContext& ctx, std::size_t max_depth,
                           double z_error = 0.0);

// Radius of a disk around z certified outside, given an inside certificate
// at depth n whose words all exceed 2 / (1 - |z|) by at least epsilon.
double ball_radius(double modulus, std::size_t n, double epsilon);
// Runs certify_inside at depth n; throws MarginInsufficient unless it
// certifies with margin >= epsilon. Requires 1/2 < |z| < 1.
double certify_ball(std::complex<double> z, const GrowthRate& lambda, std::size_t n, double epsilon);

struct MembershipBudget {
  std::size_t outside_terms = 200;
  std::size_t inside_depth = 20;
};

// Tests many points against one slice; the reduction of lambda and the
// symbolic data are computed once. Safe to share between threads.
class SliceTester {
 public:
  SliceTester(const GrowthRate& lambda, MembershipBudget budget = {});
  // Throws AmbiguousModulus when |z| is within 1e-12 of 1 but z is not
  // exactly on the unit circle.
  Certificate test(std::complex<double> z) const;

  const GrowthRate& lambda() const { return lambda_; }
  const GrowthRate& reduced_lambda() const { return reduced_; }
  unsigned reduction_exponent() const { return k_; }

 private:
  GrowthRate lambda_;
  GrowthRate reduced_;
  unsigned k_ = 0;
  MembershipBudget budget_;
  Word itinerary_;
  std::optional<SuitabilityContext> context_;
};

Certificate test_point(std::complex<double> z, const GrowthRate& lambda, MembershipBudget budget = {});

}  // namespace teapot
