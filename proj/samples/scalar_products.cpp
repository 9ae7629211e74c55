// Solve for the eigenvector at random inhomogeneities and compare its scalar
// products with the boundary vectors against the closed forms.

#include <cstdio>
#include <random>

#include "susy8v/eigensolver.hpp"
#include "susy8v/scalars.hpp"

using namespace susy8v;

int main() {
  Theta<Complex> th(ThetaParams::make(0.25));
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1, 1);
  auto point = [&] { return Complex(u(rng), 0.3 * u(rng)); };

  for (int n = 1; n <= 3; ++n) {
    std::vector<Complex> xs(n);
    for (auto& x : xs) x = point();
    const PsiVector psi = solve_psi(th, scalar_product_args(xs));
    const Complex lam0 = point();
    const Complex scale = Z_measure(th, xs, lam0, psi) / scalar_predict(th, xs, lam0, ScalarKind::Z);
    std::printf("n = %d (%d sites)\n", n, 2 * n + 1);
    for (int j = 0; j < 3; ++j) {
      const Complex lam = point();
      for (auto k : {ScalarKind::Z, ScalarKind::ZbarPlus, ScalarKind::ZbarMinus}) {
        const Complex r = scalar_measure(th, xs, lam, k, psi) / (scale * scalar_predict(th, xs, lam, k));
        std::printf("  lambda = %+.3f%+.3fi  %-6s measured/closed = %.12f%+.1ei\n", lam.real(), lam.imag(), kind_name(k),
                    r.real(), r.imag());
      }
    }
  }
}
