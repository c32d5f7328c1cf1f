// Systems of imprimitivity for a semidirect product H acting on the dual of
// A: the correspondence with representations of the full group, equivalence
// and irreducibility transfer, orbit supports, stalk decompositions, and the
// explicit transport onto the induced model.

#pragma once

#include "finrep/repr.hpp"
#include "finrep/spectral.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace finrep {

// A representation of H together with a covariant measure on the dual of A:
// pi2(h) P_chi pi2(h)^-1 = P_{h[chi]}.
struct SystemOfImprimitivity {
  SemidirectPtr group;
  DualActionHom dual;
  MatrixRep pi2;              // lives on group->h_ptr()
  ProjectionValuedMeasure p;  // measure on the dual of group->a_part()
};

double system_covariance_deviation(const SystemOfImprimitivity& sys);

// Validates shapes, the PVM axioms and covariance; a covariance failure is
// reported with the offending (h, chi) pair.
SystemOfImprimitivity make_system(SemidirectPtr group, MatrixRep pi2,
                                  ProjectionValuedMeasure p, double tol = kMatrixTol);

// Restriction of a representation of G to the pair (H, A): pi2 from the
// embedded copy of H, the measure from the spectral decomposition of the
// restriction to A.  Verifies the conjugation identity
// pi2(h) pi1(a) pi2(h)^-1 = pi1(h[a]) and covariance.
SystemOfImprimitivity restrict_to_system(const SemidirectPtr& g, const MatrixRep& rep,
                                         double tol = kMatrixTol);

// pi(h,a) = pi1(a) pi2(h) with pi1 reconstructed from the measure; inverse of
// restrict_to_system in both directions.
MatrixRep assemble(const SystemOfImprimitivity& sys, double tol = kMatrixTol);

// Dimension of the joint intertwiner space {T : T pi2 = pi2' T, T P_chi =
// P'_chi T}, computed as a stacked null space.
int system_hom_dimension(const SystemOfImprimitivity& sys1, const SystemOfImprimitivity& sys2);

// True iff the joint commutant has dimension 1.
bool system_irreducible(const SystemOfImprimitivity& sys);

// Invertible joint intertwiner when one exists (seeded random element of the
// intertwiner space; any nonzero element works in the irreducible case).
std::optional<CMat> systems_equivalent(const SystemOfImprimitivity& sys1,
                                       const SystemOfImprimitivity& sys2,
                                       std::uint64_t seed = kDefaultSeed);

// Support of the measure and the dual orbit carrying it.
struct SupportReport {
  std::vector<int> support;
  int orbit = -1;       // index into orbits(dual), when the support sits in one
  bool multiple = false;
};
SupportReport system_support(const SystemOfImprimitivity& sys);

// Orthonormal bases of the stalks P_chi V over the support; dimensions sum
// to the total dimension and pi2(h) carries the chi-stalk onto the
// h[chi]-stalk (both verified).
std::vector<std::pair<int, CMat>> stalk_decomposition(const SystemOfImprimitivity& sys,
                                                      double tol = kMatrixTol);

// The stabilizer representation on one stalk.
struct StalkData {
  int chi0 = 0;
  CharacterVec chi0_vec;
  Subgroup stabilizer;  // subgroup of H fixing chi0
  CMat basis;           // orthonormal stalk basis, ambient dim x stalk dim
  MatrixRep pi0;        // on stabilizer.table
};
StalkData stalk_rep(const SystemOfImprimitivity& sys, int chi0, double tol = kMatrixTol);

// The induced model over the orbit of chi0: pi2-bar is the representation of
// H induced from the stalk representation of the stabilizer, the measure has
// one block-selector atom per orbit character, and T carries the original
// system onto it (block row j of T is B0^* pi2(r_j) P_{r_j^-1[chi0]}, block
// column j of T^-1 is pi2(r_j)^-1 B0, over coset representatives r_j).
struct TransportResult {
  SystemOfImprimitivity induced;
  std::vector<int> orbit_chars;  // character carried by each block
  CMat t;
  CMat t_inv;
};
TransportResult transport_to_induced(const SystemOfImprimitivity& sys, int chi0,
                                     double tol = kMatrixTol);

}  // namespace finrep
