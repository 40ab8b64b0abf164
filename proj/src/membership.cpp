#include "teapot/membership.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "teapot/errors.hpp"
#include "teapot/kneading.hpp"

namespace teapot {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon() / 2;  // unit roundoff
constexpr double kCircleTolerance = 1e-12;

bool below_sqrt2(const GrowthRate& lambda) {
  return lambda.sign_of(exact::ZPolynomial({mpz_class(-2), mpz_class(0), mpz_class(1)})) < 0;
}

void require_below_two(const GrowthRate& lambda) {
  if (lambda.compare(mpq_class(2)) >= 0) throw std::invalid_argument("membership tests need lambda < 2");
}

// z -> z^2 with a running bound on the distance to the exact power.
void square_tracked(std::complex<double>& z, double& err) {
  const double r = std::abs(z);
  z = z * z;
  err = 2 * r * err + err * err + 4 * kEps * std::abs(z);
}

Certificate make(Verdict v, Method m, std::size_t depth, double margin) {
  Certificate c;
  c.verdict = v;
  c.method = m;
  c.depth = depth;
  c.margin = margin;
  return c;
}

// Fast path and modulus bookkeeping shared by both certify_inside overloads.
struct InsideSetup {
  double r = 0;     // |z0| as computed
  double r_lo = 0;  // lower bound on the exact modulus
  double r_hi = 0;  // upper bound on the exact modulus
};

std::optional<Certificate> inside_prelude(std::complex<double> z0, double z_error, InsideSetup& s) {
  s.r = std::abs(z0);
  if (!(s.r < 1.0)) throw std::invalid_argument("certify_inside needs |z| < 1");
  s.r_hi = s.r * (1 + 2 * kEps) + z_error;
  s.r_lo = s.r * (1 - 2 * kEps) - z_error;
  if (s.r_hi < 0.5) return make(Verdict::CertifiedOut, Method::FastPathHalfDisk, 0, 0.5 - s.r_hi);
  if (s.r_hi >= 1.0 || s.r_lo <= 0.0) return make(Verdict::Inconclusive, Method::InsideEnumeration, 0, 0.0);
  return std::nullopt;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::CertifiedOut: return "CertifiedOut";
    case Verdict::Member: return "Member";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

std::string to_string(Method m) {
  switch (m) {
    case Method::OutsideSeries: return "OutsideSeries";
    case Method::InsideEnumeration: return "InsideEnumeration";
    case Method::FastPathHalfDisk: return "FastPathHalfDisk";
    case Method::UnitCircle: return "UnitCircle";
  }
  return "?";
}

Reduction reduce_to_fundamental(std::complex<double> z, const GrowthRate& lambda) {
  require_below_two(lambda);
  Reduction out{z, lambda, 0, 0.0};
  while (below_sqrt2(out.lambda)) {
    out.lambda = out.lambda.squared();
    square_tracked(out.z, out.z_error);
    ++out.k;
  }
  return out;
}

Certificate certify_outside(std::complex<double> z0, const Word& itinerary, std::size_t max_n, double z_error) {
  const double rz = std::abs(z0);
  if (!(rz > 1.0)) throw std::invalid_argument("certify_outside needs |z| > 1");
  if (max_n >= 2 && itinerary.size() + 1 < max_n) throw std::invalid_argument("itinerary prefix too short");

  const std::complex<double> u = 1.0 / z0;
  const double ru = std::abs(u);
  const double rz_lo = rz * (1 - 2 * kEps) - z_error;
  if (rz_lo <= 1.0) return make(Verdict::Inconclusive, Method::OutsideSeries, 0, 0.0);
  // |u - 1/z| from the uncertainty of z0 and the rounding of the reciprocal.
  const double du = z_error / (rz_lo * rz) + 4 * kEps * ru;
  const double ru_hi = ru + du;
  if (ru_hi >= 1.0) return make(Verdict::Inconclusive, Method::OutsideSeries, 0, 0.0);

  std::complex<double> sum = 1.0;  // h_0
  std::complex<double> power = 1.0;
  double abs_sum = 1.0;    // sum |h_k| |u|^k
  double deriv_sum = 0.0;  // sum k |h_k| ru_hi^(k-1)
  double rpow = 1.0;       // ru_hi^k
  int sign = 1;
  double margin = -std::numeric_limits<double>::infinity();

  for (std::size_t n = 1; n <= max_n; ++n) {
    if (n >= 2) {
      const std::size_t k = n - 1;
      const int w = itinerary[k - 1];
      deriv_sum += w ? 2.0 * static_cast<double>(k) * rpow : 0.0;
      power *= u;
      rpow *= ru_hi;
      if (w) {
        sum += static_cast<double>(-2 * sign) * power;
        abs_sum += 2.0 * rpow;
        sign = -sign;
      }
      const double tail = 2.0 * rpow * ru_hi / (1.0 - ru_hi);
      const double rounding = static_cast<double>(n + 4) * 8 * kEps * abs_sum;
      margin = std::abs(sum) - tail - rounding - deriv_sum * du;
      if (margin > 0) return make(Verdict::CertifiedOut, Method::OutsideSeries, n, margin);
    }
  }
  return make(Verdict::Inconclusive, Method::OutsideSeries, max_n, margin);
}

Certificate certify_outside(std::complex<double> z0, const GrowthRate& lambda, std::size_t max_n, double z_error) {
  const Word it = itinerary_prefix(lambda, std::max<std::size_t>(max_n, 2) - 1).letters;
  return certify_outside(z0, it, max_n, z_error);
}

Certificate certify_inside(std::complex<double> z0, const SuitabilityContext& ctx, std::size_t max_depth,
                           double z_error) {
  InsideSetup s;
  if (auto early = inside_prelude(z0, z_error, s)) return *early;
  if (max_depth > ctx.itplus_prefix.size()) throw std::length_error("depth exceeds the suitability context");

  const double escape = 2.0 / (1.0 - s.r_hi) * (1 + 4 * kEps);
  double min_margin = std::numeric_limits<double>::infinity();
  std::size_t max_alive = 0;
  bool alive_at_limit = max_depth == 0;
  std::vector<Letter> letters;
  letters.reserve(max_depth);

  // y_j = f^{-1}_{w_j}(y_{j-1}) with f^{-1}_0(y) = y/z and f^{-1}_1(y) = (2 - y)/z.
  // Once |y| > 2/(1 - |z|) it keeps growing along every branch, so the
  // subtree below an escaped node needs no further work.
  auto dfs = [&](auto&& self, std::complex<double> y, double err) -> void {
    for (Letter a : {Letter{0}, Letter{1}}) {
      if (alive_at_limit) return;
      letters.push_back(a);
      if (condition_at(letters, ctx)) {
        const std::complex<double> num = a ? 2.0 - y : y;
        const double abs_num = std::abs(num);
        const std::complex<double> next = num / z0;
        const double err_num = err + (a ? 2 * kEps * abs_num : 0.0);
        const double next_err = err_num / s.r_lo + abs_num * z_error / (s.r_lo * s.r) + 8 * kEps * std::abs(next);
        const double m = std::abs(next) - next_err - escape;
        const std::size_t depth = letters.size();
        if (m > 0) {
          min_margin = std::min(min_margin, m);
        } else {
          max_alive = std::max(max_alive, depth);
          if (depth == max_depth) {
            alive_at_limit = true;
          } else {
            self(self, next, next_err);
          }
        }
      }
      letters.pop_back();
    }
  };
  dfs(dfs, std::complex<double>(1.0, 0.0), 0.0);

  if (alive_at_limit) return make(Verdict::Inconclusive, Method::InsideEnumeration, max_depth, 0.0);
  return make(Verdict::CertifiedOut, Method::InsideEnumeration, max_alive + 1, min_margin);
}

Certificate certify_inside(std::complex<double> z0, const GrowthRate& lambda, std::size_t max_depth, double z_error) {
  InsideSetup s;
  if (auto early = inside_prelude(z0, z_error, s)) return *early;
  require_below_two(lambda);
  if (below_sqrt2(lambda)) throw std::invalid_argument("certify_inside needs lambda >= sqrt 2; reduce first");
  return certify_inside(z0, make_suitability_context(lambda, max_depth), max_depth, z_error);
}

double ball_radius(double modulus, std::size_t n, double epsilon) {
  if (n == 0) throw std::invalid_argument("ball_radius needs depth >= 1");
  const double gap = 1.0 - modulus;
  const double terms[] = {gap / 2, gap * gap * epsilon / 16, modulus - 0.5,
                          epsilon / (static_cast<double>(n) * std::ldexp(1.0, static_cast<int>(n) + 1))};
  return std::max(0.0, *std::min_element(std::begin(terms), std::end(terms)));
}

double certify_ball(std::complex<double> z, const GrowthRate& lambda, std::size_t n, double epsilon) {
  const double m = std::abs(z);
  if (!(m > 0.5 && m < 1.0)) throw std::invalid_argument("certify_ball needs 1/2 < |z| < 1");
  const Certificate c = certify_inside(z, lambda, n);
  if (c.verdict != Verdict::CertifiedOut || c.margin < epsilon) {
    throw MarginInsufficient("inside certificate margin " + std::to_string(c.margin) + " is below epsilon " +
                             std::to_string(epsilon));
  }
  return ball_radius(m, n, epsilon);
}

SliceTester::SliceTester(const GrowthRate& lambda, MembershipBudget budget)
    : lambda_(lambda), reduced_(lambda), budget_(budget) {
  require_below_two(lambda);
  while (below_sqrt2(reduced_)) {
    reduced_ = reduced_.squared();
    ++k_;
  }
  itinerary_ = itinerary_prefix(reduced_, std::max<std::size_t>(budget_.outside_terms, 2) - 1).letters;
  context_ = make_suitability_context(reduced_, std::max<std::size_t>(budget_.inside_depth, 1));
}

Certificate SliceTester::test(std::complex<double> z) const {
  const mpq_class re(z.real());
  const mpq_class im(z.imag());
  if (re * re + im * im == 1) {
    Certificate c = make(Verdict::Member, Method::UnitCircle, 0, 0.0);
    return c;
  }
  if (std::abs(std::abs(z) - 1.0) <= kCircleTolerance) {
    throw AmbiguousModulus("|z| is within 1e-12 of 1 but z is not on the unit circle");
  }

  double err = 0.0;
  for (unsigned i = 0; i < k_; ++i) square_tracked(z, err);
  const double r = std::abs(z);

  Certificate c;
  if (std::abs(r - 1.0) <= err + 4 * kEps) {
    c = make(Verdict::Inconclusive, r > 1 ? Method::OutsideSeries : Method::InsideEnumeration, 0, 0.0);
  } else if (r > 1.0) {
    c = certify_outside(z, itinerary_, budget_.outside_terms, err);
  } else {
    c = certify_inside(z, *context_, budget_.inside_depth, err);
  }
  c.reduction_exponent = k_;
  return c;
}

Certificate test_point(std::complex<double> z, const GrowthRate& lambda, MembershipBudget budget) {
  return SliceTester(lambda, budget).test(z);
}

}  // namespace teapot
