// Spectral decomposition of finite-dimensional representations of a finite
// abelian group: atomic projection-valued measures, vector supports,
// subgroup levels with their annihilators and fixed spaces, patching across
// levels, and the commutant equivalence.

#pragma once

#include "finrep/groups.hpp"
#include "finrep/linalg.hpp"

#include <utility>
#include <vector>

namespace finrep {

struct AbelianRep {
  FiniteAbelianGroup abelian;
  int dim = 0;
  std::vector<CMat> mats;  // one per element index
};

// Validates square equal sizes and the homomorphism law within tol.
AbelianRep make_abelian_rep(FiniteAbelianGroup a, std::vector<CMat> mats,
                            double tol = kMatrixTol);

// Atoms stored densely, one (possibly zero) projection per character; the
// value on any character set is the sum of its atoms.
struct ProjectionValuedMeasure {
  FiniteAbelianGroup abelian;
  int dim = 0;
  std::vector<CMat> atoms;

  CMat at_set(const std::vector<int>& chars) const;
  std::vector<int> support(double tol = kMatrixTol) const;
};

// Max deviation over the axioms: atoms idempotent, pairwise products zero,
// atoms summing to the identity.
double pvm_deviation(const ProjectionValuedMeasure& p);
// Throws std::invalid_argument when pvm_deviation exceeds tol.
void verify_pvm(const ProjectionValuedMeasure& p, double tol = kMatrixTol);

// Fourier coefficients of the indicator function of E: c_chi =
// (1/|B|) sum_{b in E} conj(chi(b)); the expansion reproduces the indicator
// exactly on every point.
std::vector<Complex> indicator_to_characters(const FiniteAbelianGroup& b,
                                             const std::vector<int>& e);

// P_chi = (1/|A|) sum_a conj(chi(a)) pi(a).  The result always satisfies the
// PVM axioms when pi is a representation; verified within tol before return.
ProjectionValuedMeasure spectral_measure(const AbelianRep& rep, double tol = kMatrixTol);

// pi(a) = sum_chi chi(a) P_chi.  Rejects measures violating the axioms.
AbelianRep reconstruct_rep(const ProjectionValuedMeasure& p, double tol = kMatrixTol);

// Minimal support E(v) = {chi : |P_chi v| > tol}; P_E v = P_{E cap E(v)} v
// holds for every E.
std::vector<int> support_of_vector(const ProjectionValuedMeasure& p, const CVec& v,
                                   double tol = kMatrixTol);

// A subgroup U of A together with its annihilator in the dual.
struct SubgroupLevel {
  FiniteAbelianGroup a;
  std::vector<int> u;            // sorted, closed under addition
  std::vector<int> annihilator;  // sorted character indices with chi|_U = 1
};

// Validates closure, computes the annihilator, checks |U| |U^perp| = |A|.
SubgroupLevel make_level(const FiniteAbelianGroup& a, std::vector<int> u_elements);

// Orthonormal basis of V^U = {v : pi(u) v = v for all u in U}, extracted
// from the averaging projector (1/|U|) sum_u pi(u) with cutoff kRankCutoff.
CMat fixed_space(const AbelianRep& rep, const std::vector<int>& u);

// The spectral measure of pi restricted to V^U, expressed in the returned
// orthonormal basis; its atoms vanish outside the annihilator.
struct LevelMeasure {
  SubgroupLevel level;
  CMat basis;  // ambient dim x dim V^U
  ProjectionValuedMeasure measure;
};
LevelMeasure level_measure(const AbelianRep& rep, const SubgroupLevel& u,
                           double tol = kMatrixTol);

// Compares the level measures of U and U' on V^U cap V^{U'} (the fixed space
// of the subgroup generated by U and U'), atom by atom and against the
// ambient measure; atomwise agreement extends to every character set by
// additivity.
struct PatchReport {
  bool ok = false;
  double max_deviation = 0.0;
};
PatchReport verify_patching(const AbelianRep& rep, const SubgroupLevel& u,
                            const SubgroupLevel& u2, double tol = kMatrixTol);

// (X commutes with every pi(a), X commutes with every atom); the booleans
// agree for valid inputs.
std::pair<bool, bool> commutant_check(const AbelianRep& rep, const ProjectionValuedMeasure& p,
                                      const CMat& x, double tol = kMatrixTol);

// Test-input generator: pi(a) = S diag(chi_{k_1}(a), ..., chi_{k_dim}(a))
// S^-1 for uniformly chosen character indices k and a random conjugator with
// bounded condition number.
struct RandomAbelianRep {
  AbelianRep rep;
  std::vector<int> chars;  // chosen character index per diagonal slot
  CMat conjugator;
};
RandomAbelianRep random_smooth_rep(const FiniteAbelianGroup& a, int dim, Rng& rng,
                                   double max_cond = 300.0);

}  // namespace finrep
