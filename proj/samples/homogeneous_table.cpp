// Exact homogeneous eigenvector at zeta = 1/2 and a few of its sum rules.

#include <iostream>

#include "susy8v/eigensolver.hpp"
#include "susy8v/predictions.hpp"
#include "susy8v/scalars.hpp"

using namespace susy8v;

int main() {
  const BigRational zeta(1, 2);
  for (int n = 0; n <= 3; ++n) {
    const ExactPsi e = homogeneous_psi_exact(n, zeta);
    std::cout << "n = " << n << "\n"
              << "  norm      " << norm_measure(e.psi).get_str() << "  closed form "
              << norm_predict(n).eval_rational({{"z", zeta}}).get_str() << "\n"
              << "  S(mu)     " << S_predict(n).substitute("z", RatFunc(zeta)).to_string() << "\n"
              << "  polarized " << e.psi[polarized_down_index(n)].get_str() << "\n";
  }
}
