#include "qpluck/qcalc.hpp"

#include <map>
#include <mutex>
#include <utility>

namespace qpluck {

Poly q_int(int k) {
  if (k < 1) throw InvalidInput("q-integer index must be >= 1");
  return Poly(std::vector<Coeff>(static_cast<size_t>(k), Coeff(1)));
}

Poly q_factorial(int k) {
  if (k < 0) throw InvalidInput("q-factorial of negative integer");
  Poly r = Poly::one();
  for (int i = 2; i <= k; ++i) r = r * q_int(i);
  return r;
}

namespace {

// Shared memo for gauss(); keyed on (min,max) since the coefficient is
// symmetric in its arguments.
std::map<std::pair<int, int>, Poly>& gauss_memo() {
  static std::map<std::pair<int, int>, Poly> memo;
  return memo;
}
std::mutex gauss_mutex;

Poly gauss_impl(int m, int n) {
  if (m > n) std::swap(m, n);
  if (m == 0) return Poly::one();
  const std::pair<int, int> key{m, n};
  {
    std::lock_guard<std::mutex> lock(gauss_mutex);
    auto it = gauss_memo().find(key);
    if (it != gauss_memo().end()) return it->second;
  }
  Poly value = gauss_impl(m, n - 1) + gauss_impl(m - 1, n).shifted(n);
  std::lock_guard<std::mutex> lock(gauss_mutex);
  return gauss_memo().emplace(key, std::move(value)).first->second;
}

}  // namespace

Poly gauss(int m, int n) {
  if (m < 0 || n < 0) throw InvalidInput("gauss arguments must be nonnegative");
  return gauss_impl(m, n);
}

Poly q_multinomial(const std::vector<int>& parts) {
  if (parts.empty()) throw InvalidInput("q-multinomial of empty part list");
  Poly r = Poly::one();
  int total = 0;
  for (int p : parts) {
    if (p < 0) throw InvalidInput("negative block size");
    if (p > 0 && total > 0) r = r * gauss(p, total);
    total += p;
  }
  return r;
}

Coeff binomial_exact(unsigned long n, unsigned long k) {
  Coeff r;
  if (k > n) return Coeff(0);
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

namespace {

void enumerate_monotone(int pos, int m, int lo, int n, int rank,
                        std::vector<Coeff>& counts) {
  if (pos == m) {
    ++counts[static_cast<size_t>(rank)];
    return;
  }
  for (int v = lo; v <= n; ++v)
    enumerate_monotone(pos + 1, m, v, n, rank + v, counts);
}

}  // namespace

Poly lattice_gf(int m, int n) {
  if (m < 0 || n < 0) throw InvalidInput("lattice_gf arguments must be nonnegative");
  const Coeff total = binomial_exact(static_cast<unsigned long>(m + n),
                                     static_cast<unsigned long>(m));
  if (total > 10'000'000) throw BudgetExceeded("lattice enumeration too large");
  std::vector<Coeff> counts(static_cast<size_t>(m * n) + 1, Coeff(0));
  enumerate_monotone(0, m, 0, n, 0, counts);
  return Poly(std::move(counts));
}

}  // namespace qpluck
