#include "jring/rational.hpp"
#include "jring/execution.hpp"

#include <stdexcept>

#ifdef JRING_HAVE_OPENMP
#include <omp.h>
#endif

namespace jring {

std::string to_string(const Integer& value) { return value.get_str(10); }

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str(10);
  return value.get_str(10);
}

Integer parse_integer(const std::string& text) {
  Integer out;
  if (text.empty() || out.set_str(text, 10) != 0)
    throw std::invalid_argument("not an integer: '" + text + "'");
  return out;
}

Rational parse_rational(const std::string& text) {
  Rational out;
  if (text.empty() || out.set_str(text, 10) != 0 || out.get_den() == 0)
    throw std::invalid_argument("not a rational: '" + text + "'");
  out.canonicalize();
  return out;
}

Integer factorial(unsigned long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

int parallel_thread_count() {
#ifdef JRING_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace jring
