// Walk through the idempotents of Z[R6] coming from the covering R6 -> R3.
#include <iostream>

#include "qring/qring.hpp"

using namespace qring;

int main() {
  const auto Z = CoeffRing::integers();
  auto R6 = make::dihedral(6), R3 = make::dihedral(3);
  auto cov = check_covering(QuandleHom(R6, R3, {0, 1, 2, 0, 1, 2}));
  std::cout << "R6 -> R3 is a covering, nontrivial: " << std::boolalpha << cov.nontrivial() << "\n";

  // 2e0 - e3 on the unit fibre, plus a zero-sum block e1 - e4 on fibre 1
  CoveringFamilyParams p{Z, {ZeroSumBlock{1, {{1, Scalar(1)}, {4, Scalar(-1)}}}}, 0, {{0, Scalar(2)}, {3, Scalar(-1)}}, 0};
  auto u = covering_idempotent(cov, p);
  std::cout << "family member u = " << io::display(u) << ", u*u == u: " << is_idempotent(u, R6) << "\n";

  auto cl = covering_classify(u, cov);
  std::cout << "classified back into the family: " << cl.in_family << "\n";

  SearchSpec spec;
  spec.box_bound = 2;
  auto rep = enumerate_boxed_Z(R6.magma(), spec, "R6");
  std::size_t members = 0;
  for (const auto& v : rep.idempotents) members += covering_classify(v, cov).in_family ? 1 : 0;
  std::cout << rep.idempotents.size() << " idempotents with coefficients in [-2, 2], " << members
            << " of them in the family\n";

  auto z = right_zero_divisor_from_fiber(cov, 0, {Scalar(1), Scalar(-1)});
  std::cout << io::display(z.element) << " is killed by every right multiplication: " << z.verified << "\n";
}
