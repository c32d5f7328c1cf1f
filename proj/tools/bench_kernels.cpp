// Times the serial reference kernels against their OpenMP variants on
// synthetic desk-scale inputs and reports whether the outputs agree bitwise.

#include "finrep/imprimitivity.hpp"
#include "finrep/kernels.hpp"
#include "finrep/mackey.hpp"
#include "finrep/repr.hpp"
#include "finrep/spectral.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <vector>

namespace {

using namespace finrep;

double time_ms(const std::function<void()>& body) {
  body();  // warm up allocator and caches before timing
  double best = 1e300;
  for (int run = 0; run < 3; ++run) {
    const auto start = std::chrono::steady_clock::now();
    body();
    const auto stop = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(stop - start).count());
  }
  return best;
}

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

void row(const char* name, const char* size, double serial_ms, double omp_ms, bool agree) {
  std::printf("%-24s  %-18s  %9.2f  %9.2f  %6.2fx  %s\n", name, size, serial_ms, omp_ms,
              serial_ms / omp_ms, agree ? "yes" : "NO");
}

}  // namespace

int main() {
  std::printf("OpenMP: %s, max threads %d\n",
              openmp_available() ? "available" : "not available", openmp_max_threads());
  std::printf("%-24s  %-18s  %9s  %9s  %7s  %s\n", "kernel", "size", "serial_ms", "omp_ms",
              "speedup", "agree");

  {
    const FiniteGroup g = abelian_as_group(make_abelian({32}));
    const MatrixRep reg = regular_representation(share(g));
    double serial = 0, omp = 0;
    const double t_s = time_ms([&] { serial = homomorphism_deviation_serial(g, reg.mats); });
    const double t_p = time_ms([&] { omp = homomorphism_deviation_omp(g, reg.mats); });
    row("homomorphism_deviation", "|G|=32 dim=32", t_s, t_p, serial == omp);
  }

  const FiniteAbelianGroup a = make_abelian({64});
  Rng rng(kDefaultSeed);
  const RandomAbelianRep smooth = random_smooth_rep(a, 48, rng);
  std::vector<CMat> atoms;
  {
    std::vector<CMat> out_s, out_p;
    const double t_s = time_ms([&] { out_s = fourier_projectors_serial(a, smooth.rep.mats); });
    const double t_p = time_ms([&] { out_p = fourier_projectors_omp(a, smooth.rep.mats); });
    row("fourier_projectors", "|A|=64 dim=48", t_s, t_p, bits_equal(out_s, out_p));
    atoms = std::move(out_s);
  }
  {
    std::vector<CMat> out_s, out_p;
    const double t_s = time_ms([&] { out_s = reconstruct_from_atoms_serial(a, atoms); });
    const double t_p = time_ms([&] { out_p = reconstruct_from_atoms_omp(a, atoms); });
    row("reconstruct_from_atoms", "|A|=64 dim=48", t_s, t_p, bits_equal(out_s, out_p));
  }
  {
    std::vector<CMat> inv;
    inv.reserve(smooth.rep.mats.size());
    for (const CMat& m : smooth.rep.mats) inv.push_back(m.inverse());
    const CMat x = CMat::Identity(48, 48) + atoms[smooth.chars[0]];
    CMat out_s, out_p;
    const double t_s =
        time_ms([&] { out_s = average_conjugation_serial(smooth.rep.mats, inv, x); });
    const double t_p = time_ms([&] { out_p = average_conjugation_omp(smooth.rep.mats, inv, x); });
    row("average_conjugation", "|A|=64 dim=48", t_s, t_p, bits_equal(out_s, out_p));
  }
  {
    const SemidirectPtr g = catalog_group("affine7");
    const SystemOfImprimitivity sys =
        restrict_to_system(g, regular_representation(g->table()));
    std::vector<CMat> pi2_inv;
    pi2_inv.reserve(sys.pi2.mats.size());
    for (const CMat& m : sys.pi2.mats) pi2_inv.push_back(m.inverse());
    double out_s = 0, out_p = 0;
    const double t_s = time_ms(
        [&] { out_s = covariance_deviation_serial(sys.dual, sys.pi2.mats, pi2_inv, sys.p.atoms); });
    const double t_p = time_ms(
        [&] { out_p = covariance_deviation_omp(sys.dual, sys.pi2.mats, pi2_inv, sys.p.atoms); });
    row("covariance_deviation", "|H|=6 |A|=7 dim=42", t_s, t_p, out_s == out_p);
  }
  return 0;
}
