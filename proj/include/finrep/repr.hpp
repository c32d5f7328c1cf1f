// Matrix representations of finite groups: validation, conjugacy classes,
// character tables via class-sum eigenvectors, decomposition of the regular
// representation into one unitary copy of each irreducible, Hom spaces by
// averaging, and compact induction from a subgroup.

#pragma once

#include "finrep/groups.hpp"
#include "finrep/linalg.hpp"

#include <optional>
#include <vector>

namespace finrep {

struct MatrixRep {
  GroupPtr group;
  int dim = 0;
  std::vector<CMat> mats;  // one per element index

  const CMat& at(int g) const { return mats[g]; }
  std::vector<CMat> inverse_mats() const;  // entry g holds mats[g^-1]
};

// Checks one matrix per element of the right size and homomorphism deviation
// at most tol; throws std::invalid_argument otherwise.
MatrixRep make_rep(GroupPtr group, std::vector<CMat> mats, double tol = kMatrixTol);

// max of identity deviation and all pair deviations (see kernels).
double rep_deviation(const MatrixRep& rep);

// Left-translation permutation matrices.
MatrixRep regular_representation(GroupPtr group);

MatrixRep restrict_rep(const MatrixRep& rep, const Subgroup& s);
MatrixRep direct_sum(const MatrixRep& x, const MatrixRep& y);
std::vector<Complex> trace_vector(const MatrixRep& rep);

// ---------------------------------------------------------------------------
// Conjugacy classes and characters

struct ConjClasses {
  std::vector<std::vector<int>> members;  // each sorted; classes sorted by min
  std::vector<int> class_of;              // per element
  std::vector<int> reps;                  // minimal element per class

  int count() const { return static_cast<int>(members.size()); }
};

ConjClasses conjugacy_classes(const FiniteGroup& g);

// Rows are irreducible characters evaluated on class representatives, sorted
// by degree then lexicographically by value.  Computed from class-sum
// structure constants via a seeded random eigenvector split; both
// orthogonality relations are verified before returning.
struct CharacterTable {
  ConjClasses classes;
  std::vector<int> degrees;
  std::vector<std::vector<Complex>> values;  // values[s][j] on class j

  int count() const { return static_cast<int>(degrees.size()); }
};

CharacterTable character_table(const FiniteGroup& g, std::uint64_t seed = kDefaultSeed);

// Character of a matrix representation on class representatives.
std::vector<Complex> character_of(const MatrixRep& rep, const ConjClasses& classes);

// ---------------------------------------------------------------------------
// Hom spaces

// dim Hom(from, to) = (1/|G|) sum_g tr from(g) * conj(tr to(g)); must be
// within kRoundTol of an integer.
int hom_dimension(const MatrixRep& from, const MatrixRep& to);
int commutant_dimension(const MatrixRep& rep);
bool is_irreducible(const MatrixRep& rep);

// Orthonormal basis (as matrices T with T from(g) = to(g) T) of the
// intertwiner space, found by averaging random matrices; the count matches
// hom_dimension and every element is verified against all group elements.
std::vector<CMat> intertwiner_basis(const MatrixRep& from, const MatrixRep& to,
                                    std::uint64_t seed = kDefaultSeed);

// Invertible intertwiner if the representations are equivalent.
std::optional<CMat> equivalence(const MatrixRep& from, const MatrixRep& to,
                                std::uint64_t seed = kDefaultSeed);

// ---------------------------------------------------------------------------
// Regular decomposition (the oracle)

struct IrrepDecomposition {
  CharacterTable table;
  std::vector<MatrixRep> irreps;  // unitary, one per character row
};

// One unitary copy of every irreducible, cut out of the regular
// representation by central projectors and a random equivariant operator.
// Deterministic for a fixed seed; retries internally with derived seeds.
IrrepDecomposition decompose_regular(GroupPtr group, std::uint64_t seed = kDefaultSeed);

// ---------------------------------------------------------------------------
// Cosets and induction

// Small generating set found greedily (identity excluded).
std::vector<int> generating_set(const FiniteGroup& g);

struct RightCosets {
  std::vector<int> reps;      // minimal element per coset Sg, ascending
  std::vector<int> coset_of;  // per group element, index into reps
};

RightCosets right_cosets(const FiniteGroup& g, const Subgroup& s);

// Compactly induced representation.  sigma must live on s.table.  Block
// (i,j) of the result at g is sigma((r_i g) r_j^-1) when S r_i g = S r_j and
// zero otherwise; the dimension is [G:S] * dim sigma.
MatrixRep induce(GroupPtr group, const Subgroup& s, const MatrixRep& sigma);

}  // namespace finrep
