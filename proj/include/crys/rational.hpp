#pragma once

#include <cstdint>
#include <gmpxx.h>

namespace crys {

using Rat = mpq_class;
using Int = mpz_class;

// c^e for integer e of either sign; c must be nonzero when e < 0.
inline Rat rat_pow(const Rat& c, long e) {
  Rat out;
  if (e >= 0) {
    mpz_pow_ui(out.get_num_mpz_t(), c.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(out.get_den_mpz_t(), c.get_den_mpz_t(), static_cast<unsigned long>(e));
  } else {
    mpz_pow_ui(out.get_num_mpz_t(), c.get_den_mpz_t(), static_cast<unsigned long>(-e));
    mpz_pow_ui(out.get_den_mpz_t(), c.get_num_mpz_t(), static_cast<unsigned long>(-e));
  }
  out.canonicalize();
  return out;
}

// Deterministic seeded generator. We avoid std::uniform_int_distribution on
// purpose: its output is implementation-defined, and reports must be
// byte-identical for a given seed everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

  std::uint64_t next() {
    // splitmix64
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [lo, hi], inclusive
  long uniform(long lo, long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next() % span);
  }

  // p/q with p,q uniform in [1, bound]
  Rat positive_rational(long bound = 100) {
    return Rat(uniform(1, bound), uniform(1, bound));
  }

 private:
  std::uint64_t state_;
};

}  // namespace crys
