#include "finrep/imprimitivity.hpp"

#include "finrep/kernels.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace finrep {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

CMat mat_of(const CVec& v, int rows, int cols) {
  return Eigen::Map<const CMat>(v.data(), rows, cols);
}

CMat kron(const CMat& a, const CMat& b) {
  CMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// Rows annihilating vec(T) exactly when T m_from = m_to T, with T mapping the
// first space into the second (column-major vectorization).
CMat intertwine_rows(const CMat& m_from, const CMat& m_to) {
  const auto d1 = m_from.rows();
  const auto d2 = m_to.rows();
  return kron(m_from.transpose(), CMat::Identity(d2, d2)) -
         kron(CMat::Identity(d1, d1), m_to);
}

std::string h_name(const SemidirectGroup& g, int h) {
  const auto& labels = g.h_part().labels;
  std::string out = std::to_string(h);
  if (h < static_cast<int>(labels.size()) && !labels[h].empty())
    out += " (" + labels[h] + ")";
  return out;
}

void validate_system(const SystemOfImprimitivity& sys, double tol) {
  if (!sys.group) fail("system: missing group");
  const SemidirectGroup& g = *sys.group;
  if (!sys.pi2.group || sys.pi2.group->size != g.h_part().size)
    fail("system: pi2 does not live on the acting group");
  if (!(sys.p.abelian == g.a_part())) fail("system: measure on the wrong dual");
  if (sys.p.dim != sys.pi2.dim) fail("system: dimension mismatch between pi2 and the measure");
  if (sys.dual.perm.size() != static_cast<std::size_t>(g.h_part().size))
    fail("system: dual action size mismatch");
  if (rep_deviation(sys.pi2) > tol) fail("system: pi2 is not a representation");
  verify_pvm(sys.p, tol);

  const std::vector<CMat> inv = sys.pi2.inverse_mats();
  const double dev = covariance_deviation(sys.dual, sys.pi2.mats, inv, sys.p.atoms);
  if (dev > tol) {
    int bad_h = 0, bad_chi = 0;
    double worst = -1.0;
    for (int h = 0; h < g.h_part().size; ++h)
      for (int chi = 0; chi < static_cast<int>(sys.p.atoms.size()); ++chi) {
        const double d =
            max_abs(CMat(sys.pi2.mats[h] * sys.p.atoms[chi] * inv[h] -
                         sys.p.atoms[sys.dual.act(h, chi)]));
        if (d > worst) {
          worst = d;
          bad_h = h;
          bad_chi = chi;
        }
      }
    std::ostringstream msg;
    msg << "system: covariance fails at h = " << h_name(g, bad_h) << ", chi = " << bad_chi
        << " (deviation " << worst << ")";
    fail(msg.str());
  }
}

void check_same_context(const SystemOfImprimitivity& sys1, const SystemOfImprimitivity& sys2) {
  if (!(sys1.p.abelian == sys2.p.abelian)) fail("systems: different abelian parts");
  if (!sys1.pi2.group->same_structure(*sys2.pi2.group)) fail("systems: different acting groups");
  if (sys1.dual.perm != sys2.dual.perm) fail("systems: different dual actions");
}

// Null-space basis of the joint intertwining conditions, as matrices mapping
// sys1's space into sys2's.
std::vector<CMat> joint_intertwiners(const SystemOfImprimitivity& sys1,
                                     const SystemOfImprimitivity& sys2) {
  check_same_context(sys1, sys2);
  const int d1 = sys1.pi2.dim;
  const int d2 = sys2.pi2.dim;
  const std::vector<int> gens = generating_set(*sys1.pi2.group);
  const int chars = static_cast<int>(sys1.p.atoms.size());
  const Eigen::Index block = static_cast<Eigen::Index>(d1) * d2;

  CMat stack(block * (gens.size() + chars), block);
  Eigen::Index row = 0;
  for (int h : gens) {
    stack.middleRows(row, block) = intertwine_rows(sys1.pi2.mats[h], sys2.pi2.mats[h]);
    row += block;
  }
  for (int chi = 0; chi < chars; ++chi) {
    stack.middleRows(row, block) = intertwine_rows(sys1.p.atoms[chi], sys2.p.atoms[chi]);
    row += block;
  }

  const CMat basis = null_space(stack, kRankCutoff);
  std::vector<CMat> out;
  out.reserve(basis.cols());
  for (Eigen::Index c = 0; c < basis.cols(); ++c) out.push_back(mat_of(basis.col(c), d2, d1));
  return out;
}

}  // namespace

double system_covariance_deviation(const SystemOfImprimitivity& sys) {
  return covariance_deviation(sys.dual, sys.pi2.mats, sys.pi2.inverse_mats(), sys.p.atoms);
}

SystemOfImprimitivity make_system(SemidirectPtr group, MatrixRep pi2, ProjectionValuedMeasure p,
                                  double tol) {
  if (!group) fail("make_system: missing group");
  DualActionHom dual = dual_action(*group);
  SystemOfImprimitivity sys{std::move(group), std::move(dual), std::move(pi2), std::move(p)};
  validate_system(sys, tol);
  return sys;
}

SystemOfImprimitivity restrict_to_system(const SemidirectPtr& g, const MatrixRep& rep,
                                         double tol) {
  if (!g) fail("restrict_to_system: missing group");
  if (!rep.group || rep.group->size != g->size())
    fail("restrict_to_system: representation does not live on the product group");
  const int na = g->a_part().size();
  const int nh = g->h_part().size;

  std::vector<CMat> h_mats(nh);
  for (int h = 0; h < nh; ++h) h_mats[h] = rep.mats[g->index_of(h, 0)];
  MatrixRep pi2 = make_rep(g->h_ptr(), std::move(h_mats), tol);

  std::vector<CMat> a_mats(na);
  const int he = g->h_part().identity;
  for (int a = 0; a < na; ++a) a_mats[a] = rep.mats[g->index_of(he, a)];
  AbelianRep pi1 = make_abelian_rep(g->a_part(), std::move(a_mats), tol);

  const std::vector<CMat> pi2_inv = pi2.inverse_mats();
  for (int h = 0; h < nh; ++h)
    for (int a = 0; a < na; ++a) {
      const double dev =
          max_abs(CMat(pi2.mats[h] * pi1.mats[a] * pi2_inv[h] - pi1.mats[g->act(h, a)]));
      if (dev > tol) {
        std::ostringstream msg;
        msg << "restrict_to_system: conjugation identity fails at h = " << h_name(*g, h)
            << ", a = " << a << " (deviation " << dev << ")";
        fail(msg.str());
      }
    }

  ProjectionValuedMeasure p = spectral_measure(pi1, tol);
  SystemOfImprimitivity sys{g, dual_action(*g), std::move(pi2), std::move(p)};
  validate_system(sys, tol);
  return sys;
}

MatrixRep assemble(const SystemOfImprimitivity& sys, double tol) {
  validate_system(sys, tol);
  const SemidirectGroup& g = *sys.group;
  const AbelianRep pi1 = reconstruct_rep(sys.p, tol);

  std::vector<CMat> mats(g.size());
  for (int h = 0; h < g.h_part().size; ++h)
    for (int a = 0; a < g.a_part().size(); ++a)
      mats[g.index_of(h, a)] = pi1.mats[a] * sys.pi2.mats[h];
  return make_rep(g.table(), std::move(mats), tol);
}

int system_hom_dimension(const SystemOfImprimitivity& sys1, const SystemOfImprimitivity& sys2) {
  return static_cast<int>(joint_intertwiners(sys1, sys2).size());
}

bool system_irreducible(const SystemOfImprimitivity& sys) {
  return system_hom_dimension(sys, sys) == 1;
}

std::optional<CMat> systems_equivalent(const SystemOfImprimitivity& sys1,
                                       const SystemOfImprimitivity& sys2, std::uint64_t seed) {
  check_same_context(sys1, sys2);
  if (sys1.pi2.dim != sys2.pi2.dim) return std::nullopt;
  const std::vector<CMat> basis = joint_intertwiners(sys1, sys2);
  if (basis.empty()) return std::nullopt;

  Rng rng(derive_seed(seed, 0x31));
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  for (int attempt = 0; attempt < 32; ++attempt) {
    CMat t = CMat::Zero(sys2.pi2.dim, sys1.pi2.dim);
    for (const CMat& b : basis) t += Complex(unif(rng), unif(rng)) * b;
    Eigen::JacobiSVD<CMat> svd(t);
    const double smax = svd.singularValues()[0];
    const double smin = svd.singularValues()[svd.singularValues().size() - 1];
    if (smax > 0 && smin > kRankCutoff * std::max(1.0, smax)) return t;
  }
  return std::nullopt;
}

SupportReport system_support(const SystemOfImprimitivity& sys) {
  SupportReport out;
  out.support = sys.p.support();
  const std::vector<Orbit> orbs = orbits(sys.dual);
  for (int chi : out.support) {
    const int o = orbit_of(orbs, chi);
    if (out.orbit == -1) out.orbit = o;
    else if (out.orbit != o) out.multiple = true;
  }
  if (out.multiple) out.orbit = -1;
  return out;
}

std::vector<std::pair<int, CMat>> stalk_decomposition(const SystemOfImprimitivity& sys,
                                                      double tol) {
  std::vector<std::pair<int, CMat>> out;
  int total = 0;
  for (int chi : sys.p.support(tol)) {
    CMat basis = range_basis_qr(sys.p.atoms[chi], kRankCutoff);
    total += static_cast<int>(basis.cols());
    out.emplace_back(chi, std::move(basis));
  }
  if (total != sys.pi2.dim)
    throw std::runtime_error("stalk_decomposition: stalk dimensions do not sum to the total");

  for (int h = 0; h < sys.pi2.group->size; ++h)
    for (const auto& [chi, basis] : out) {
      const CMat moved = sys.pi2.mats[h] * basis;
      const CMat residual = sys.p.atoms[sys.dual.act(h, chi)] * moved - moved;
      if (max_abs(residual) > tol * std::max(1.0, max_abs(moved)))
        throw std::runtime_error("stalk_decomposition: the action does not permute the stalks");
    }
  return out;
}

StalkData stalk_rep(const SystemOfImprimitivity& sys, int chi0, double tol) {
  if (chi0 < 0 || chi0 >= static_cast<int>(sys.p.atoms.size()))
    fail("stalk_rep: character index out of range");
  StalkData out;
  out.chi0 = chi0;
  out.chi0_vec = char_of_index(sys.p.abelian, chi0);
  out.basis = range_basis_qr(sys.p.atoms[chi0], kRankCutoff);
  if (out.basis.cols() == 0) fail("stalk_rep: character lies outside the support");
  out.stabilizer = stabilizer(sys.dual, chi0);

  const int n0 = out.stabilizer.table->size;
  std::vector<CMat> mats(n0);
  for (int s = 0; s < n0; ++s) {
    const CMat moved = sys.pi2.mats[out.stabilizer.embed[s]] * out.basis;
    mats[s] = out.basis.adjoint() * moved;
    if (max_abs(CMat(out.basis * mats[s] - moved)) > tol * std::max(1.0, max_abs(moved)))
      throw std::runtime_error("stalk_rep: stalk is not invariant under the stabilizer");
  }
  out.pi0 = make_rep(out.stabilizer.table, std::move(mats), tol);
  return out;
}

TransportResult transport_to_induced(const SystemOfImprimitivity& sys, int chi0, double tol) {
  if (!system_irreducible(sys)) fail("transport_to_induced: system is reducible");
  const SupportReport sup = system_support(sys);
  const std::vector<Orbit> orbs = orbits(sys.dual);
  if (chi0 < 0 || chi0 >= static_cast<int>(sys.p.atoms.size()))
    fail("transport_to_induced: character index out of range");
  if (sup.multiple || orbit_of(orbs, chi0) != sup.orbit)
    fail("transport_to_induced: chi0 does not lie on the support orbit");

  const StalkData stalk = stalk_rep(sys, chi0, tol);
  const FiniteGroup& h_group = sys.group->h_part();
  const RightCosets cosets = right_cosets(h_group, stalk.stabilizer);
  const int m = static_cast<int>(cosets.reps.size());
  const int d0 = static_cast<int>(stalk.basis.cols());
  const int d = sys.pi2.dim;
  const int dim_bar = m * d0;

  MatrixRep pi2_bar = induce(sys.group->h_ptr(), stalk.stabilizer, stalk.pi0);

  std::vector<int> orbit_chars(m);
  for (int j = 0; j < m; ++j)
    orbit_chars[j] = sys.dual.act(h_group.inv[cosets.reps[j]], chi0);
  {
    std::vector<int> sorted = orbit_chars;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != orbs[sup.orbit].elements)
      throw std::runtime_error("transport_to_induced: coset characters do not cover the orbit");
  }

  std::vector<CMat> atoms(sys.p.atoms.size(), CMat::Zero(dim_bar, dim_bar));
  for (int j = 0; j < m; ++j)
    atoms[orbit_chars[j]].block(j * d0, j * d0, d0, d0) = CMat::Identity(d0, d0);
  ProjectionValuedMeasure p_bar{sys.p.abelian, dim_bar, std::move(atoms)};

  CMat t(dim_bar, d);
  CMat t_inv(d, dim_bar);
  for (int j = 0; j < m; ++j) {
    t.middleRows(j * d0, d0) =
        stalk.basis.adjoint() * sys.pi2.mats[cosets.reps[j]] * sys.p.atoms[orbit_chars[j]];
    t_inv.middleCols(j * d0, d0) = sys.pi2.mats[h_group.inv[cosets.reps[j]]] * stalk.basis;
  }
  if (max_abs(CMat(t * t_inv - CMat::Identity(dim_bar, dim_bar))) > tol ||
      max_abs(CMat(t_inv * t - CMat::Identity(d, d))) > tol)
    throw std::runtime_error("transport_to_induced: transport is not invertible");

  TransportResult out{make_system(sys.group, std::move(pi2_bar), std::move(p_bar), tol),
                      std::move(orbit_chars), std::move(t), std::move(t_inv)};

  for (int h = 0; h < h_group.size; ++h) {
    const double dev = max_abs(CMat(out.t * sys.pi2.mats[h] - out.induced.pi2.mats[h] * out.t));
    if (dev > tol * std::max(1.0, max_abs(sys.pi2.mats[h])))
      throw std::runtime_error("transport_to_induced: transport fails to intertwine the action");
  }
  for (std::size_t chi = 0; chi < sys.p.atoms.size(); ++chi) {
    const double dev =
        max_abs(CMat(out.t * sys.p.atoms[chi] - out.induced.p.atoms[chi] * out.t));
    if (dev > tol * std::max(1.0, max_abs(sys.p.atoms[chi])))
      throw std::runtime_error("transport_to_induced: transport fails to intertwine the measure");
  }
  return out;
}

}  // namespace finrep
