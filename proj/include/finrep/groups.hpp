// Finite abelian groups and their duals, generic finite groups given by
// multiplication table, semidirect products H x_t A, dual actions on the
// character group, orbits and stabilizers.
//
// Elements everywhere are canonical integer indices.  Abelian elements and
// characters are exponent vectors enumerated lexicographically (first
// component most significant), so index 0 is the identity / trivial
// character.  A semidirect element (h,a) has index h*|A|+a.

#pragma once

#include "finrep/config.hpp"
#include "finrep/linalg.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace finrep {

// ---------------------------------------------------------------------------
// Abelian groups and characters

struct FiniteAbelianGroup {
  std::vector<int> orders;  // n_1..n_r, all >= 1

  int size() const;
  int rank() const { return static_cast<int>(orders.size()); }
  int identity() const { return 0; }

  std::vector<int> vector_of(int index) const;
  int index_of(const std::vector<int>& v) const;  // reduces mod orders first
  int add(int a, int b) const;
  int neg(int a) const;

  bool operator==(const FiniteAbelianGroup& o) const { return orders == o.orders; }
};

// all orders >= 1, list nonempty; throws std::invalid_argument otherwise
FiniteAbelianGroup make_abelian(const std::vector<int>& orders);

// The same group as a generic multiplication table (labels are exponent
// vectors).  Declared after FiniteGroup below.
struct FiniteGroup;
FiniteGroup abelian_as_group(const FiniteAbelianGroup& a);

// Closure of the given elements under addition, sorted ascending.
std::vector<int> generated_subgroup(const FiniteAbelianGroup& a, const std::vector<int>& gens);

// A character chi_k, k an exponent vector: chi(a) = exp(2 pi i sum k_i a_i / n_i).
struct CharacterVec {
  std::vector<int> exponents;
};

// All |A| characters in lexicographic exponent order; index 0 is trivial.
std::vector<CharacterVec> dual_group(const FiniteAbelianGroup& a);

// chi(a) for character index chi and element index a (indices share the same
// mixed-radix enumeration).
Complex char_value(const FiniteAbelianGroup& a, int chi, int elem);
Complex char_value(const FiniteAbelianGroup& a, const CharacterVec& chi, int elem);

int char_index(const FiniteAbelianGroup& a, const CharacterVec& chi);
CharacterVec char_of_index(const FiniteAbelianGroup& a, int chi);

// ---------------------------------------------------------------------------
// Generic finite groups

struct FiniteGroup {
  int size = 0;
  std::vector<int> mul;   // row-major size x size
  int identity = 0;
  std::vector<int> inv;
  std::vector<std::string> labels;  // optional, for display

  int times(int g, int h) const { return mul[static_cast<size_t>(g) * size + h]; }
  int inverse(int g) const { return inv[g]; }
  int order_of(int g) const;

  // Exhaustive group-axiom check (associativity, identity, inverses); throws.
  void validate() const;

  bool same_structure(const FiniteGroup& o) const {
    return size == o.size && identity == o.identity && mul == o.mul;
  }
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

FiniteGroup cyclic_group(int n);
FiniteGroup units_group(int n);  // (Z/n)^x under multiplication, labeled by residue
FiniteGroup group_from_table(const std::vector<std::vector<int>>& table);  // validates
FiniteGroup trivial_group();

inline GroupPtr share(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

// A subgroup carried as its own multiplication table plus the inclusion map.
struct Subgroup {
  GroupPtr table;
  std::vector<int> embed;  // element index in the parent, per subgroup index
};

// Elements must be closed under the parent multiplication; throws otherwise.
Subgroup subgroup_from_elements(const FiniteGroup& parent, std::vector<int> elements);

// ---------------------------------------------------------------------------
// Automorphisms and actions

// Integer matrix acting on exponent vectors: (M v)_i = sum_j M_ij v_j mod n_i.
struct AutomorphismMat {
  std::vector<std::vector<long long>> mat;  // r x r

  static AutomorphismMat identity_map(int rank);

  std::vector<int> apply(const FiniteAbelianGroup& a, const std::vector<int>& v) const;
  int apply_index(const FiniteAbelianGroup& a, int elem) const;

  // Well-definedness (n_i | M_ij * n_j) and exhaustive bijectivity; throws.
  void validate(const FiniteAbelianGroup& a) const;
};

struct ActionHom {
  std::vector<AutomorphismMat> per_element;  // indexed like H

  static ActionHom trivial(int h_size, int rank);
};

// ---------------------------------------------------------------------------
// Semidirect products

class SemidirectGroup {
 public:
  SemidirectGroup(GroupPtr h, FiniteAbelianGroup a, ActionHom t);

  int size() const { return h_->size * a_.size(); }
  int identity() const { return index_of(h_->identity, 0); }
  int index_of(int h, int a) const { return h * a_.size() + a; }
  int h_of(int g) const { return g / a_.size(); }
  int a_of(int g) const { return g % a_.size(); }

  // (h,a)(h',a') = (hh', a + t_h(a'))
  int times(int g1, int g2) const;
  int inverse(int g) const;

  int act(int h, int a) const { return t_.per_element[h].apply_index(a_, a); }
  int act_inv(int h, int a) const { return act(h_->inverse(h), a); }

  const FiniteGroup& h_part() const { return *h_; }
  GroupPtr h_ptr() const { return h_; }
  const FiniteAbelianGroup& a_part() const { return a_; }
  const ActionHom& action() const { return t_; }

  // Full multiplication table (built lazily, cached, thread-safe).  Throws if
  // the group exceeds `limit`.
  GroupPtr table(std::int64_t limit = kDefaultGroupLimit) const;

 private:
  GroupPtr h_;
  FiniteAbelianGroup a_;
  ActionHom t_;
  mutable std::mutex table_mu_;
  mutable GroupPtr table_;
};

using SemidirectPtr = std::shared_ptr<const SemidirectGroup>;

// Verifies that t maps into automorphisms of A and is a homomorphism on H
// (the offending pair is reported on failure), then builds the group.
SemidirectPtr make_semidirect(GroupPtr h, FiniteAbelianGroup a, ActionHom t);

// ---------------------------------------------------------------------------
// Dual action, orbits, stabilizers

struct DualActionHom {
  GroupPtr h;
  FiniteAbelianGroup a;
  std::vector<std::vector<int>> perm;  // perm[h][chi] = index of t'_h(chi)

  int act(int hh, int chi) const { return perm[hh][chi]; }
  // t'_{e} = id and t'_{gh} = t'_g t'_h, checked exhaustively; throws.
  void validate() const;
};

// t'_h(chi)(a) = chi(t_{h^-1}(a)), computed in exact integer arithmetic.
DualActionHom dual_action(const SemidirectGroup& g);

struct Orbit {
  int representative;          // minimal character index
  std::vector<int> elements;   // sorted ascending
};

// Orbits partition the dual; sorted by representative.
std::vector<Orbit> orbits(const DualActionHom& dual);
// Same partition computed while seeding the scan in the given order (used to
// check enumeration-order independence).
std::vector<Orbit> orbits(const DualActionHom& dual, const std::vector<int>& processing_order);

// Which orbit (index into the orbits() result) contains character chi.
int orbit_of(const std::vector<Orbit>& orbs, int chi);

// H_chi = {h : t'_h(chi) = chi} as a subgroup of H.
Subgroup stabilizer(const DualActionHom& dual, int chi);
Subgroup stabilizer(const DualActionHom& dual, const CharacterVec& chi);

// Finite discrete spaces always admit separating invariant opens; the witness
// lists, per ordered pair of distinct orbits, the invariant set (the first
// orbit) containing exactly one of the two.
struct SmoothWitness {
  bool smooth = false;
  std::vector<std::tuple<int, int, std::vector<int>>> separators;
};
SmoothWitness smooth_action_check(const DualActionHom& dual);

}  // namespace finrep
