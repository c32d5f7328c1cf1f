#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "finrep/imprimitivity.hpp"
#include "finrep/kernels.hpp"
#include "finrep/mackey.hpp"
#include "finrep/repr.hpp"
#include "finrep/spectral.hpp"

using namespace finrep;

namespace {

bool bits_equal(const CMat& x, const CMat& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) return false;
  for (int j = 0; j < x.cols(); ++j)
    for (int i = 0; i < x.rows(); ++i)
      if (x(i, j) != y(i, j)) return false;
  return true;
}

bool bits_equal(const std::vector<CMat>& x, const std::vector<CMat>& y) {
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!bits_equal(x[i], y[i])) return false;
  return true;
}

struct KernelInputs {
  FiniteAbelianGroup a = make_abelian({2, 6});
  AbelianRep rep;
  std::vector<CMat> atoms;

  KernelInputs() {
    Rng rng(3);
    rep = random_smooth_rep(a, 7, rng).rep;
    atoms = fourier_projectors_serial(a, rep.mats);
  }
};

}  // namespace

TEST_CASE("serial and omp variants agree bitwise") {
  const KernelInputs in;

  SUBCASE("homomorphism deviation") {
    const FiniteGroup g = abelian_as_group(in.a);
    CHECK(homomorphism_deviation_serial(g, in.rep.mats) ==
          homomorphism_deviation_omp(g, in.rep.mats));
  }
  SUBCASE("fourier projectors") {
    CHECK(bits_equal(fourier_projectors_serial(in.a, in.rep.mats),
                     fourier_projectors_omp(in.a, in.rep.mats)));
  }
  SUBCASE("reconstruction") {
    CHECK(bits_equal(reconstruct_from_atoms_serial(in.a, in.atoms),
                     reconstruct_from_atoms_omp(in.a, in.atoms)));
  }
  SUBCASE("average conjugation") {
    std::vector<CMat> inv;
    for (const CMat& m : in.rep.mats) inv.push_back(m.inverse());
    const CMat x = in.rep.mats[3] + in.rep.mats[5];
    CHECK(bits_equal(average_conjugation_serial(in.rep.mats, inv, x),
                     average_conjugation_omp(in.rep.mats, inv, x)));
  }
  SUBCASE("covariance deviation") {
    const SemidirectPtr g = catalog_group("affine5");
    const SystemOfImprimitivity sys = restrict_to_system(g, regular_representation(g->table()));
    std::vector<CMat> pi2_inv;
    for (const CMat& m : sys.pi2.mats) pi2_inv.push_back(m.inverse());
    CHECK(covariance_deviation_serial(sys.dual, sys.pi2.mats, pi2_inv, sys.p.atoms) ==
          covariance_deviation_omp(sys.dual, sys.pi2.mats, pi2_inv, sys.p.atoms));
    CHECK(covariance_deviation_serial(sys.dual, sys.pi2.mats, pi2_inv, sys.p.atoms) <
          kMatrixTol);
  }
}

TEST_CASE("dispatcher honors the runtime switch") {
  const KernelInputs in;
  const bool before = ParallelConfig::enabled().load();

  ParallelConfig::enabled().store(false);
  const std::vector<CMat> off = fourier_projectors(in.a, in.rep.mats);
  ParallelConfig::enabled().store(true);
  const std::vector<CMat> on = fourier_projectors(in.a, in.rep.mats);
  ParallelConfig::enabled().store(before);

  CHECK(bits_equal(off, fourier_projectors_serial(in.a, in.rep.mats)));
  CHECK(bits_equal(off, on));
}

TEST_CASE("fourier projectors satisfy the measure axioms and invert") {
  const KernelInputs in;
  const ProjectionValuedMeasure p{in.a, in.rep.dim, in.atoms};
  CHECK(pvm_deviation(p) < kMatrixTol);

  const std::vector<CMat> back = reconstruct_from_atoms_serial(in.a, in.atoms);
  double dev = 0.0;
  for (int x = 0; x < in.a.size(); ++x)
    dev = std::max(dev, max_abs(CMat(back[x] - in.rep.mats[x])));
  CHECK(dev < kMatrixTol);
}

TEST_CASE("homomorphism deviation flags a broken table") {
  const KernelInputs in;
  const FiniteGroup g = abelian_as_group(in.a);
  CHECK(homomorphism_deviation_serial(g, in.rep.mats) < kMatrixTol);

  std::vector<CMat> bad = in.rep.mats;
  bad[1] *= 2.0;
  CHECK(homomorphism_deviation_serial(g, bad) > 0.5);
  CHECK(homomorphism_deviation_serial(g, bad) == homomorphism_deviation_omp(g, bad));
}

TEST_CASE("kernel input validation") {
  const KernelInputs in;
  const FiniteGroup g = abelian_as_group(in.a);
  std::vector<CMat> short_list(in.rep.mats.begin(), in.rep.mats.end() - 1);
  CHECK_THROWS_AS(homomorphism_deviation_serial(g, short_list), std::invalid_argument);
  CHECK_THROWS_AS(fourier_projectors_omp(in.a, short_list), std::invalid_argument);
  CHECK_THROWS_AS(reconstruct_from_atoms_serial(in.a, short_list), std::invalid_argument);
  CHECK_THROWS_AS(average_conjugation_serial(in.rep.mats, short_list, in.rep.mats[0]),
                  std::invalid_argument);
}
