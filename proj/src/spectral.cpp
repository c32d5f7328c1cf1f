#include "finrep/spectral.hpp"

#include "finrep/kernels.hpp"

#include <algorithm>
#include <stdexcept>

namespace finrep {

namespace {

[[noreturn]] void arg_fail(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

AbelianRep make_abelian_rep(FiniteAbelianGroup a, std::vector<CMat> mats, double tol) {
  if (static_cast<int>(mats.size()) != a.size())
    arg_fail("abelian rep: one matrix per element required");
  const Eigen::Index d = mats[0].rows();
  if (d == 0) arg_fail("abelian rep: zero-dimensional matrices");
  for (const CMat& m : mats)
    if (m.rows() != d || m.cols() != d) arg_fail("abelian rep: matrices must share one square size");
  const FiniteGroup tab = abelian_as_group(a);
  const double dev = homomorphism_deviation(tab, mats);
  if (!(dev <= tol))
    arg_fail("abelian rep: homomorphism deviation " + std::to_string(dev) +
             " exceeds tolerance " + std::to_string(tol));
  return AbelianRep{std::move(a), static_cast<int>(d), std::move(mats)};
}

CMat ProjectionValuedMeasure::at_set(const std::vector<int>& chars) const {
  CMat acc = CMat::Zero(dim, dim);
  for (int chi : chars) acc += atoms[chi];
  return acc;
}

std::vector<int> ProjectionValuedMeasure::support(double tol) const {
  std::vector<int> out;
  for (int chi = 0; chi < static_cast<int>(atoms.size()); ++chi)
    if (max_abs(atoms[chi]) > tol) out.push_back(chi);
  return out;
}

double pvm_deviation(const ProjectionValuedMeasure& p) {
  const int n = p.abelian.size();
  if (static_cast<int>(p.atoms.size()) != n)
    arg_fail("pvm: one atom per character required");
  for (const CMat& m : p.atoms)
    if (m.rows() != p.dim || m.cols() != p.dim) arg_fail("pvm: atom size mismatch");
  double dev = 0.0;
  CMat sum = CMat::Zero(p.dim, p.dim);
  for (int i = 0; i < n; ++i) {
    sum += p.atoms[i];
    for (int j = 0; j < n; ++j) {
      const CMat prod = p.atoms[i] * p.atoms[j];
      dev = std::max(dev, max_abs(CMat(prod - (i == j ? p.atoms[i] : CMat::Zero(p.dim, p.dim)))));
    }
  }
  dev = std::max(dev, max_abs(CMat(sum - CMat::Identity(p.dim, p.dim))));
  return dev;
}

void verify_pvm(const ProjectionValuedMeasure& p, double tol) {
  const double dev = pvm_deviation(p);
  if (!(dev <= tol))
    arg_fail("pvm: axiom deviation " + std::to_string(dev) + " exceeds tolerance " +
             std::to_string(tol));
}

std::vector<Complex> indicator_to_characters(const FiniteAbelianGroup& b,
                                             const std::vector<int>& e) {
  for (int x : e)
    if (x < 0 || x >= b.size()) arg_fail("indicator_to_characters: element out of range");
  std::vector<Complex> c(b.size(), 0.0);
  for (int chi = 0; chi < b.size(); ++chi) {
    Complex acc = 0.0;
    for (int x : e) acc += std::conj(char_value(b, chi, x));
    c[chi] = acc / static_cast<double>(b.size());
  }
  return c;
}

ProjectionValuedMeasure spectral_measure(const AbelianRep& rep, double tol) {
  ProjectionValuedMeasure p{rep.abelian, rep.dim, fourier_projectors(rep.abelian, rep.mats)};
  verify_pvm(p, tol);
  return p;
}

AbelianRep reconstruct_rep(const ProjectionValuedMeasure& p, double tol) {
  verify_pvm(p, tol);
  return make_abelian_rep(p.abelian, reconstruct_from_atoms(p.abelian, p.atoms), tol);
}

std::vector<int> support_of_vector(const ProjectionValuedMeasure& p, const CVec& v, double tol) {
  if (v.size() != p.dim) arg_fail("support_of_vector: dimension mismatch");
  std::vector<int> out;
  for (int chi = 0; chi < static_cast<int>(p.atoms.size()); ++chi)
    if (max_abs(CVec(p.atoms[chi] * v)) > tol) out.push_back(chi);
  return out;
}

SubgroupLevel make_level(const FiniteAbelianGroup& a, std::vector<int> u_elements) {
  std::sort(u_elements.begin(), u_elements.end());
  u_elements.erase(std::unique(u_elements.begin(), u_elements.end()), u_elements.end());
  if (u_elements.empty() || u_elements.front() != 0)
    arg_fail("level: subgroup must contain the identity");
  for (int x : u_elements)
    if (x < 0 || x >= a.size()) arg_fail("level: element out of range");
  for (int x : u_elements)
    for (int y : u_elements)
      if (!std::binary_search(u_elements.begin(), u_elements.end(), a.add(x, y)))
        arg_fail("level: set is not closed under addition");

  SubgroupLevel lvl{a, std::move(u_elements), {}};
  for (int chi = 0; chi < a.size(); ++chi) {
    bool trivial_on_u = true;
    for (int x : lvl.u)
      if (std::abs(char_value(a, chi, x) - Complex(1.0, 0.0)) > 1e-9) {
        trivial_on_u = false;
        break;
      }
    if (trivial_on_u) lvl.annihilator.push_back(chi);
  }
  if (static_cast<long long>(lvl.u.size()) * static_cast<long long>(lvl.annihilator.size()) !=
      static_cast<long long>(a.size()))
    arg_fail("level: |U| |U^perp| != |A|");
  // the annihilator is closed under addition of exponents
  for (int x : lvl.annihilator)
    for (int y : lvl.annihilator)
      if (!std::binary_search(lvl.annihilator.begin(), lvl.annihilator.end(), a.add(x, y)))
        arg_fail("level: annihilator is not a subgroup");
  return lvl;
}

CMat fixed_space(const AbelianRep& rep, const std::vector<int>& u) {
  CMat avg = CMat::Zero(rep.dim, rep.dim);
  for (int x : u) avg += rep.mats[x];
  avg /= static_cast<double>(u.size());
  return range_basis_svd(avg, kRankCutoff);
}

LevelMeasure level_measure(const AbelianRep& rep, const SubgroupLevel& u, double tol) {
  const CMat basis = fixed_space(rep, u.u);
  const int k = static_cast<int>(basis.cols());
  LevelMeasure out;
  out.level = u;
  out.basis = basis;
  if (k == 0) {
    out.measure = ProjectionValuedMeasure{rep.abelian, 0,
                                          std::vector<CMat>(rep.abelian.size(), CMat::Zero(0, 0))};
    return out;
  }
  // restriction of pi to its fixed space, in the orthonormal basis
  std::vector<CMat> restr(rep.abelian.size());
  for (int x = 0; x < rep.abelian.size(); ++x) restr[x] = basis.adjoint() * rep.mats[x] * basis;
  const AbelianRep sub = make_abelian_rep(rep.abelian, std::move(restr), tol);
  out.measure = spectral_measure(sub, tol);
  for (int chi = 0; chi < rep.abelian.size(); ++chi)
    if (!std::binary_search(u.annihilator.begin(), u.annihilator.end(), chi) &&
        max_abs(out.measure.atoms[chi]) > tol)
      arg_fail("level measure: atom outside the annihilator");
  return out;
}

PatchReport verify_patching(const AbelianRep& rep, const SubgroupLevel& u,
                            const SubgroupLevel& u2, double tol) {
  const LevelMeasure l1 = level_measure(rep, u, tol);
  const LevelMeasure l2 = level_measure(rep, u2, tol);
  const ProjectionValuedMeasure ambient = spectral_measure(rep, tol);

  std::vector<int> joined = u.u;
  joined.insert(joined.end(), u2.u.begin(), u2.u.end());
  const CMat w = fixed_space(rep, generated_subgroup(rep.abelian, joined));

  PatchReport report;
  report.max_deviation = 0.0;
  for (Eigen::Index c = 0; c < w.cols(); ++c) {
    const CVec v = w.col(c);
    for (int chi = 0; chi < rep.abelian.size(); ++chi) {
      const CVec via1 = l1.basis * (l1.measure.atoms[chi] * (l1.basis.adjoint() * v));
      const CVec via2 = l2.basis * (l2.measure.atoms[chi] * (l2.basis.adjoint() * v));
      const CVec glob = ambient.atoms[chi] * v;
      report.max_deviation = std::max(report.max_deviation, max_abs(CVec(via1 - via2)));
      report.max_deviation = std::max(report.max_deviation, max_abs(CVec(via1 - glob)));
    }
  }
  report.ok = report.max_deviation <= tol;
  return report;
}

std::pair<bool, bool> commutant_check(const AbelianRep& rep, const ProjectionValuedMeasure& p,
                                      const CMat& x, double tol) {
  if (x.rows() != rep.dim || x.cols() != rep.dim)
    arg_fail("commutant_check: dimension mismatch");
  bool with_rep = true, with_atoms = true;
  for (const CMat& m : rep.mats)
    if (max_abs(CMat(m * x - x * m)) > tol) { with_rep = false; break; }
  for (const CMat& m : p.atoms)
    if (max_abs(CMat(m * x - x * m)) > tol) { with_atoms = false; break; }
  return {with_rep, with_atoms};
}

RandomAbelianRep random_smooth_rep(const FiniteAbelianGroup& a, int dim, Rng& rng,
                                   double max_cond) {
  if (dim < 1) arg_fail("random_smooth_rep: dimension must be positive");
  RandomAbelianRep out;
  std::uniform_int_distribution<int> pick(0, a.size() - 1);
  out.chars.resize(dim);
  for (int i = 0; i < dim; ++i) out.chars[i] = pick(rng);
  out.conjugator = random_invertible(dim, rng, max_cond);
  const CMat sinv = out.conjugator.inverse();
  std::vector<CMat> mats(a.size());
  for (int x = 0; x < a.size(); ++x) {
    CVec diag(dim);
    for (int i = 0; i < dim; ++i) diag[i] = char_value(a, out.chars[i], x);
    mats[x] = out.conjugator * diag.asDiagonal() * sinv;
  }
  out.rep = make_abelian_rep(a, std::move(mats));
  return out;
}

}  // namespace finrep
