// Classification of the irreducible representations of H acting on A: one
// entry per (dual orbit, stabilizer irreducible), realized by inducing the
// twisted stabilizer representation from the little group, audited for
// completeness against the regular-representation oracle.

#pragma once

#include "finrep/imprimitivity.hpp"

#include <string>
#include <vector>

namespace finrep {

// The subgroup (stabilizer of chi) x A inside the full product group.
Subgroup little_group(const SemidirectPtr& g, const Subgroup& stab);

// sigma(h0, a) = chi(a) pi0(h0) on the little group; pi0 must live on
// stab.table and stab must fix chi, otherwise sigma fails validation.
MatrixRep twist_by_character(const SemidirectPtr& g, const Subgroup& little,
                             const Subgroup& stab, const MatrixRep& pi0, int chi);

// One classified irreducible: a dual orbit, one irreducible of its
// stabilizer, and the induced representation of the full group.
struct ClassificationEntry {
  int orbit = 0;       // index into orbits(dual)
  int orbit_rep = 0;   // character index of the chosen base point
  int orbit_size = 0;
  Subgroup stabilizer;
  int stalk_index = 0;  // position among the stabilizer irreducibles
  int stalk_dim = 0;
  std::string stalk_label;
  MatrixRep stalk_irrep;  // on stabilizer.table
  MatrixRep induced;      // on the full group table
};

struct ClassificationReport {
  SemidirectPtr group;
  std::vector<ClassificationEntry> entries;
  long long group_order = 0;
  long long sum_dim_sq = 0;
  std::vector<std::vector<int>> hom_matrix;  // hom dims between induced entries
  std::vector<int> oracle_match;             // entry -> index into decompose_regular(G)
};

// One entry per (orbit, stabilizer irreducible), ordered by orbit
// representative, then stabilizer-irreducible dimension, then the canonical
// character key.  Stabilizer irreducibles come from decompose_regular on the
// stabilizer's own table; failures there are reported with the orbit named.
ClassificationReport classify(const SemidirectPtr& g, std::uint64_t seed = kDefaultSeed);

// Recomputes and checks: sum of squared dimensions equals the group order,
// the pairwise hom matrix is the identity, and matching against the
// regular-representation oracle is a bijection.  Failures are listed.
struct CompletenessResult {
  bool ok = true;
  std::vector<std::string> failures;
};
CompletenessResult completeness_check(const ClassificationReport& report, const SemidirectPtr& g,
                                      std::uint64_t seed = kDefaultSeed);

// Index of the unique entry equivalent to pi, located through the system
// pipeline (restrict, read off the support orbit, compare stalks) and
// cross-checked by a direct hom computation.  Throws when no entry or more
// than one entry matches.
int match_irrep(const MatrixRep& pi, const ClassificationReport& report, double tol = kMatrixTol);

// For the orbit through chi: the hom matrix between the induced entries
// equals the hom matrix between the stabilizer irreducibles entrywise.
bool hom_correspondence_check(const SemidirectPtr& g, int chi, std::uint64_t seed = kDefaultSeed);

// Named test groups used by the verification suites and the acceptance run:
// affine F_p for p in {3,5,7}, Heisenberg mod p for p in {2,3}, a negation
// action on Z/4, and two direct products with trivial twisting.
struct CatalogEntry {
  std::string name;
  SemidirectPtr group;
};
const std::vector<CatalogEntry>& builtin_catalog();
SemidirectPtr catalog_group(const std::string& name);  // throws on unknown names

}  // namespace finrep
