#pragma once

#include <gmpxx.h>
#include <mpfr.h>

namespace teapot::detail {

// Owning handle for an mpfr_t.
class MpReal {
 public:
  explicit MpReal(mpfr_prec_t precision) { mpfr_init2(v_, precision); mpfr_set_zero(v_, 1); }
  MpReal(mpfr_prec_t precision, const mpq_class& q, mpfr_rnd_t rnd) : MpReal(precision) {
    mpfr_set_q(v_, q.get_mpq_t(), rnd);
  }
  ~MpReal() { mpfr_clear(v_); }
  MpReal(const MpReal&) = delete;
  MpReal& operator=(const MpReal&) = delete;

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  double to_double(mpfr_rnd_t rnd = MPFR_RNDN) const { return mpfr_get_d(v_, rnd); }

 private:
  mpfr_t v_;
};

}  // namespace teapot::detail
