#ifndef QAPERY_RATIONAL_HPP
#define QAPERY_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace qapery {

using Int = mpz_class;
using Rat = mpq_class;
using RatVec = std::vector<Rat>;

// Raised when a variety spec or parameter set is not admissible.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a caller violates a documented precondition.
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when an internal consistency guard fires; always a bug, never input.
struct InternalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

// Parses "p", "-p" or "p/q"; throws ConfigError on malformed input.
inline Rat rat_from_string(const std::string& s) {
  try {
    Rat q(s);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw ConfigError("malformed rational: " + s);
  }
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// q must be integral and fit a long.
inline long rat_to_long(const Rat& q) {
  if (!is_integer(q)) throw InternalError("expected integer, got " + q.get_str());
  return q.get_num().get_si();
}

inline Rat dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw InternalError("dot: dimension mismatch");
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline RatVec axpy(const Rat& c, const RatVec& x, const RatVec& y) {
  RatVec r(y);
  for (size_t i = 0; i < x.size(); ++i) r[i] += c * x[i];
  return r;
}

inline bool is_zero(const RatVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

// Scales an exact rational vector to integral entries with content 1 and the
// first nonzero entry positive. Zero vectors are returned unchanged.
inline RatVec normalize_integral(const RatVec& v) {
  Int lcm_den = 1;
  for (const auto& x : v) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den().get_mpz_t());
  Int gcd_num = 0;
  std::vector<Int> scaled(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    scaled[i] = Int(v[i] * lcm_den);
    mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), scaled[i].get_mpz_t());
  }
  if (gcd_num == 0) return v;
  int sign = 0;
  for (const auto& x : scaled)
    if (x != 0) {
      sign = x > 0 ? 1 : -1;
      break;
    }
  RatVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(scaled[i] * sign) / Rat(gcd_num);
  return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

}  // namespace qapery

#endif
