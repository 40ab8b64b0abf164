#include "teapot/kneading.hpp"

#include <map>
#include <stdexcept>

#include "mpfr_real.hpp"
#include "teapot/errors.hpp"
#include "teapot/parry_series.hpp"

namespace teapot {

namespace {

using detail::MpReal;

struct OrbitRun {
  std::vector<Letter> letters;
  std::vector<OrbitPoint> points;
  std::vector<std::size_t> hits;
  std::optional<Word> period;
  bool confirmed_exactly = false;
  unsigned precision = 0;
};

// Outcome of one pass at fixed precision: either complete, or stopped at the
// first step whose letter could not be decided.
struct Pass {
  bool complete = false;
  std::size_t stuck_at = 0;
};

class OrbitComputer {
 public:
  OrbitComputer(const GrowthRate& lambda, std::size_t n, const KneadingOptions& options)
      : lambda_(lambda), n_(n), exact_fallback_(options.exact_fallback) {
    initial_ = options.initial_precision ? options.initial_precision : static_cast<unsigned>(2 * n + 64);
    cap_ = options.max_precision ? options.max_precision : 4 * initial_;
    if (cap_ < initial_) cap_ = initial_;
  }

  OrbitRun run() {
    unsigned prec = initial_;
    for (;;) {
      const Pass pass = attempt(prec);
      if (pass.complete) {
        result_.precision = prec;
        return std::move(result_);
      }
      if (prec < cap_) {
        prec = std::min(cap_, prec * 2);
        continue;
      }
      decide_exactly(pass.stuck_at);
    }
  }

 private:
  // Letter at step k from the exact sign of lambda * F(u, lambda) - 1.
  void decide_exactly(std::size_t k) {
    Word u(std::span<const Letter>(result_.letters.data(), k));
    if (!exact_fallback_) {
      throw PrecisionExhausted("orbit point " + std::to_string(k) + " is within " + std::to_string(cap_) +
                               "-bit error of the critical point for lambda = " + lambda_.str());
    }
    // z F(u, z) - 1 vanishes at lambda exactly when x_k = 1/lambda.
    IntPolynomial q = IntPolynomial::monomial(1, 1) * F_polynomial(u) - IntPolynomial({1});
    const int s = lambda_.sign_of(q.to_exact());
    decided_[k] = s;
  }

  Pass attempt(unsigned prec) {
    result_ = OrbitRun{};
    const mpfr_prec_t p = prec;
    const auto [lo, hi] = lambda_.bracket(prec + 4);
    const mpq_class mid = (lo + hi) / 2;
    MpReal lam(p, mid, MPFR_RNDN);
    // |lambda - lam| <= 2^(1-p).
    MpReal delta(64);
    mpfr_set_ui_2exp(delta.get(), 1, 1 - static_cast<long>(prec), MPFR_RNDU);
    MpReal lam_hi(64);  // upper bound for lambda
    mpfr_add(lam_hi.get(), lam.get(), delta.get(), MPFR_RNDU);
    MpReal round(64);  // per-step rounding allowance
    mpfr_set_ui_2exp(round.get(), 1, 2 - static_cast<long>(prec), MPFR_RNDU);

    MpReal x(p);
    mpfr_set_ui(x.get(), 1, MPFR_RNDN);
    MpReal err(64);
    MpReal t(p);
    MpReal bound(64);
    MpReal tmp(64);
    MpReal absx(64);

    auto push_point = [&] {
      MpReal e(64);
      // Conversion to double adds at most one ulp of the value.
      mpfr_set(e.get(), err.get(), MPFR_RNDU);
      const double v = x.to_double();
      double e_d = e.to_double(MPFR_RNDU);
      e_d += std::abs(v) * 2.3e-16;
      result_.points.push_back({v, e_d});
    };
    // Error of lambda * x against the true product: lam_hi * err + delta * |x| + round.
    auto product_error = [&](MpReal& out) {
      mpfr_abs(absx.get(), x.get(), MPFR_RNDU);
      mpfr_mul(out.get(), lam_hi.get(), err.get(), MPFR_RNDU);
      mpfr_mul(tmp.get(), delta.get(), absx.get(), MPFR_RNDU);
      mpfr_add(out.get(), out.get(), tmp.get(), MPFR_RNDU);
      mpfr_add(out.get(), out.get(), round.get(), MPFR_RNDU);
    };

    push_point();
    for (std::size_t k = 0; k < n_; ++k) {
      mpfr_mul(t.get(), lam.get(), x.get(), MPFR_RNDN);
      mpfr_sub_ui(t.get(), t.get(), 1, MPFR_RNDN);
      product_error(bound);

      int side;  // sign of lambda x_k - 1
      if (mpfr_cmpabs(t.get(), bound.get()) > 0) {
        side = mpfr_sgn(t.get());
      } else if (auto it = decided_.find(k); it != decided_.end()) {
        side = it->second;
      } else {
        return Pass{false, k};
      }

      if (side == 0) {
        close_period(k);
        return Pass{true, 0};
      }
      const Letter letter = side > 0 ? 1 : 0;
      result_.letters.push_back(letter);

      // x_{k+1} = lambda x (letter 0) or 2 - lambda x (letter 1).
      product_error(bound);
      mpfr_mul(x.get(), lam.get(), x.get(), MPFR_RNDN);
      if (letter) mpfr_ui_sub(x.get(), 2, x.get(), MPFR_RNDN);
      mpfr_set(err.get(), bound.get(), MPFR_RNDU);
      push_point();
    }
    return Pass{true, 0};
  }

  // x_k = 1/lambda exactly, so x_{k+1} = 1 and the orbit repeats with period k + 1.
  void close_period(std::size_t k) {
    Word u(std::span<const Letter>(result_.letters.data(), k));
    // Both letters code the critical point; the smaller coding under <=_E wins.
    const Letter c = u.sign() < 0 ? 1 : 0;
    result_.letters.push_back(c);
    const std::size_t period = k + 1;
    result_.period = Word(std::span<const Letter>(result_.letters));
    result_.confirmed_exactly = true;
    for (std::size_t j = k; j < n_; j += period) result_.hits.push_back(j);
    // Exact reset: the orbit returns to 1.
    result_.points.push_back({1.0, 0.0});
    for (std::size_t j = k + 1; j < n_; ++j) {
      result_.letters.push_back(result_.letters[j % period]);
      result_.points.push_back(result_.points[(j + 1) % period]);
    }
  }

  const GrowthRate& lambda_;
  std::size_t n_;
  bool exact_fallback_;
  unsigned initial_ = 0;
  unsigned cap_ = 0;
  std::map<std::size_t, int> decided_;
  OrbitRun result_;
};

}  // namespace

std::optional<SymbolSeq> ItineraryPrefix::sequence() const {
  if (!period) return std::nullopt;
  return SymbolSeq::periodic(*period);
}

std::vector<OrbitPoint> tent_orbit(const GrowthRate& lambda, std::size_t n, const KneadingOptions& options) {
  return OrbitComputer(lambda, n, options).run().points;
}

ItineraryPrefix itinerary_prefix(const GrowthRate& lambda, std::size_t n, const KneadingOptions& options) {
  if (n == 0) throw std::invalid_argument("itinerary length must be positive");
  OrbitRun run = OrbitComputer(lambda, n, options).run();
  ItineraryPrefix out{lambda, Word(std::span<const Letter>(run.letters)), std::move(run.hits), std::move(run.period),
                      run.confirmed_exactly, run.precision};
  return out;
}

Word right_limit_itinerary(const GrowthRate& lambda, std::size_t n, const KneadingOptions& options) {
  ItineraryPrefix it = [&] {
    try {
      return itinerary_prefix(lambda, n, options);
    } catch (const PrecisionExhausted& e) {
      throw PeriodUndetected(std::string("cannot decide periodicity of the itinerary: ") + e.what());
    }
  }();
  if (!it.period) return it.letters;
  // Flip the last letter of the minimal period word.
  const Word w0 = SymbolSeq::periodic(*it.period).period();
  const Word flipped = w0.with_flipped(w0.size() - 1);
  return SymbolSeq::periodic(flipped).prefix(n);
}

std::size_t zero_run_bound(const GrowthRate& lambda, const KneadingOptions& options) {
  if (lambda.compare(mpq_class(2)) >= 0) throw std::invalid_argument("zero_run_bound needs lambda < 2");
  for (std::size_t n = 16;; n *= 2) {
    const Word w = right_limit_itinerary(lambda, n, options);
    for (std::size_t i = 1; i < w.size(); ++i) {
      if (w[i] == 1) return i - 1;
    }
    if (n > (std::size_t{1} << 20)) throw PeriodUndetected("leading zero run exceeds budget");
  }
}

}  // namespace teapot
