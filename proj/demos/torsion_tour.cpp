// Builds a few torsion complexes and shows how their Betti tables depend on
// the characteristic of the coefficient field.

#include <iostream>

#include "torflag/torflag.hpp"

using namespace torflag;

int main() {
  for (std::uint64_t m : {2, 5, 12}) {
    const auto [x, cert] = build_xm(m);
    std::cout << cert.label << ": f-vector " << fvector_string(cert.fvector) << ", maxdeg " << cert.maxdeg << ", H1 = " << cert.h1.to_string()
              << '\n';
  }

  const auto g = build_group_complex({2, 4});
  std::cout << "\nZ/2 + Z/4 complex: H1 = " << homology(g, 1).to_string() << '\n';

  const auto rp2 = rp2_flag();
  std::cout << "\nRP^2 (" << fvector_string(rp2.f_vector()) << "): H1 = " << homology(rp2, 1).to_string() << "\n\n";
  for (std::uint64_t p : {0, 2, 3}) {
    std::cout << "Betti table over characteristic " << p << ":\n" << betti_table(rp2, Characteristic(p)).render() << '\n';
  }

  const auto sc = semicontinuity_check(rp2, 2);
  std::cout << "entries that grow in characteristic 2:";
  for (auto [i, j] : sc.strict) std::cout << " (" << i << "," << j << ")";
  std::cout << '\n';

  const auto t = torsion_primes(rp2);
  for (const auto& [p, w] : t.witness) {
    std::cout << p << "-torsion appears in H_" << w.dimension << " of the subcomplex on " << w.alpha.size() << " vertices\n";
  }
}
