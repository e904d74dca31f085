#ifndef QAPERY_REAL_HPP
#define QAPERY_REAL_HPP

#include <mpfr.h>

#include <string>
#include <utility>

#include "qapery/rational.hpp"

namespace qapery {

inline mpfr_prec_t bits_for_digits(long digits) {
  // log2(10) = 3.3219...; slack absorbs rounding of the last operations.
  return static_cast<mpfr_prec_t>(digits * 3.3220 + 24);
}

// Value-semantic arbitrary precision real over MPFR. Every value carries its
// own precision; binary operations compute at the wider of the two.
class Real {
 public:
  Real() { mpfr_init2(v_, 64); mpfr_set_zero(v_, 1); }
  explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  Real(long x, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_si(v_, x, MPFR_RNDN); }
  Real(const Rat& q, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN); }
  Real(const Int& z, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN); }
  Real(const std::string& s, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    if (mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0)
      throw ConfigError("malformed real literal: " + s);
  }

  Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real(Real&& o) noexcept { mpfr_init2(v_, 64); mpfr_swap(v_, o.v_); }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  bool is_zero() const { return mpfr_zero_p(v_); }
  int sgn() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long exponent() const { return mpfr_zero_p(v_) ? LONG_MIN : mpfr_get_exp(v_); }

  friend Real operator+(const Real& a, const Real& b) {
    Real r(pmax(a, b)); mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
  }
  friend Real operator-(const Real& a, const Real& b) {
    Real r(pmax(a, b)); mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
  }
  friend Real operator*(const Real& a, const Real& b) {
    Real r(pmax(a, b)); mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
  }
  friend Real operator/(const Real& a, const Real& b) {
    Real r(pmax(a, b)); mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
  }
  Real operator-() const { Real r(prec()); mpfr_neg(r.v_, v_, MPFR_RNDN); return r; }

  Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

  Real& mul_si(long x) { mpfr_mul_si(v_, v_, x, MPFR_RNDN); return *this; }
  Real& div_si(long x) { mpfr_div_si(v_, v_, x, MPFR_RNDN); return *this; }
  // *this += a*b without a temporary.
  Real& fma(const Real& a, const Real& b) { mpfr_fma(v_, a.v_, b.v_, v_, MPFR_RNDN); return *this; }

  friend bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
  friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }

  friend Real abs(const Real& a) { Real r(a.prec()); mpfr_abs(r.v_, a.v_, MPFR_RNDN); return r; }
  friend Real sqrt(const Real& a) { Real r(a.prec()); mpfr_sqrt(r.v_, a.v_, MPFR_RNDN); return r; }
  friend Real log(const Real& a) { Real r(a.prec()); mpfr_log(r.v_, a.v_, MPFR_RNDN); return r; }
  friend Real exp(const Real& a) { Real r(a.prec()); mpfr_exp(r.v_, a.v_, MPFR_RNDN); return r; }
  friend Real sin(const Real& a) { Real r(a.prec()); mpfr_sin(r.v_, a.v_, MPFR_RNDN); return r; }
  friend Real pow_ui(const Real& a, unsigned long k) {
    Real r(a.prec()); mpfr_pow_ui(r.v_, a.v_, k, MPFR_RNDN); return r;
  }

  static Real pi(mpfr_prec_t prec) { Real r(prec); mpfr_const_pi(r.v_, MPFR_RNDN); return r; }
  // MPFR's Brent-McMillan evaluation; used as the independent second method
  // against the Euler-Maclaurin implementation in zetaid.
  static Real euler_gamma_builtin(mpfr_prec_t prec) {
    Real r(prec); mpfr_const_euler(r.v_, MPFR_RNDN); return r;
  }
  static Real zeta_builtin(unsigned long k, mpfr_prec_t prec) {
    Real r(prec); mpfr_zeta_ui(r.v_, k, MPFR_RNDN); return r;
  }
  static Real pow10(long e, mpfr_prec_t prec) {
    Real r(prec); mpfr_set_si(r.v_, 10, MPFR_RNDN); mpfr_pow_si(r.v_, r.v_, e, MPFR_RNDN); return r;
  }

  // Fixed scientific form with `digits` significant digits; deterministic for
  // a given (value, digits) pair, which the JSON writer relies on.
  std::string to_string(int digits = 30) const;

  // Nearest integer (ties away from zero).
  Int round_to_int() const {
    Real t(prec());
    mpfr_round(t.v_, v_);
    Int z;
    mpfr_get_z(z.get_mpz_t(), t.v_, MPFR_RNDN);
    return z;
  }

 private:
  static mpfr_prec_t pmax(const Real& a, const Real& b) {
    return std::max(mpfr_get_prec(a.v_), mpfr_get_prec(b.v_));
  }
  mpfr_t v_;
};

using RealVec = std::vector<Real>;

}  // namespace qapery

#endif
