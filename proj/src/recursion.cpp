#include "chord/recursion.hpp"

#include <stdexcept>

namespace chord {

Int one_backbone_count(int g, int k, const Spectrum& n, OneBackboneMemo& memo) {
  if (g < 0 || k < 0) return 0;
  // One backbone forces n = k + 1 - 2g boundary cycles.
  if (n.size() != k + 1 - 2L * g) return 0;
  const long l = n.weight();
  if (k == 0)
    return (g == 0 && n == Spectrum::unit(static_cast<int>(l))) ? Int(1) : Int(0);

  const auto key = std::make_tuple(g, k, n);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  Int doubled = 0;  // twice the right-hand side, to keep the 1/2 exact

  // A chord bordered by two distinct boundary cycles: erasing it joins
  // them, the genus is unchanged.
  for (const auto& [a, ma] : n.entries()) {
    for (const auto& [b, mb] : n.entries()) {
      if (b < a) continue;
      if (a == b && ma < 2) continue;
      Spectrum child = n;
      child.bump(a, -1);
      child.bump(b, -1);
      child.bump(a + b + 2, 1);
      const long ways =
          static_cast<long>(a + b + 2) * (n.mult(a + b + 2) + 1) * (a == b ? 1 : 2);
      doubled += ways * one_backbone_count(g, k - 1, child, memo);
    }
  }

  // A chord traversed twice by one boundary cycle: erasing it splits the
  // cycle and lowers the genus.
  if (g >= 1) {
    for (const auto& [i, mi] : n.entries()) {
      for (int j = 1; j <= i + 1; ++j) {
        const int r = i + 2 - j;
        Spectrum child = n;
        child.bump(i, -1);
        child.bump(j, 1);
        child.bump(r, 1);
        const long f1 = n.mult(j) + 1 + (j == r ? 1 : 0) - (j == i ? 1 : 0);
        const long f2 = n.mult(r) + 1 - (j == 2 ? 1 : 0);
        if (f1 <= 0 || f2 <= 0) continue;
        doubled += static_cast<long>(j) * r * f1 * f2 *
                   one_backbone_count(g - 1, k - 1, child, memo);
      }
    }
  }

  Int result, rem;
  const Int divisor = Int(2) * k;
  mpz_fdiv_qr(result.get_mpz_t(), rem.get_mpz_t(), doubled.get_mpz_t(),
              divisor.get_mpz_t());
  if (rem != 0)
    throw std::logic_error("one-backbone recursion sum not divisible by 2k");
  memo[key] = result;
  return result;
}

}  // namespace chord
