#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "finrep/repr.hpp"

#include <algorithm>
#include <complex>

using namespace finrep;

namespace {

SemidirectPtr affine3() {
  GroupPtr h = share(units_group(3));
  ActionHom t;
  t.per_element = {AutomorphismMat{{{1}}}, AutomorphismMat{{{2}}}};
  return make_semidirect(h, make_abelian({3}), t);
}

SemidirectPtr heisenberg3() {
  GroupPtr h = share(cyclic_group(3));
  ActionHom t;
  for (long long c = 0; c < 3; ++c) t.per_element.push_back(AutomorphismMat{{{1, 0}, {c, 1}}});
  return make_semidirect(h, make_abelian({3, 3}), t);
}

MatrixRep character_rep(GroupPtr g, const std::vector<Complex>& values) {
  std::vector<CMat> mats(values.size(), CMat(1, 1));
  for (size_t i = 0; i < values.size(); ++i) mats[i](0, 0) = values[i];
  return make_rep(std::move(g), std::move(mats));
}

}  // namespace

TEST_CASE("regular representation is a faithful homomorphism") {
  const GroupPtr g = share(cyclic_group(4));
  const MatrixRep reg = regular_representation(g);
  CHECK(reg.dim == 4);
  CHECK(rep_deviation(reg) == 0.0);
  for (int x = 1; x < 4; ++x) CHECK(max_abs(CMat(reg.mats[x] - reg.mats[0])) > 0.5);
}

TEST_CASE("make_rep validates shapes and the homomorphism law") {
  const GroupPtr g = share(cyclic_group(2));
  CHECK_THROWS_AS(make_rep(g, {CMat::Identity(2, 2)}), std::invalid_argument);
  std::vector<CMat> bad{CMat::Identity(2, 2), CMat::Identity(2, 2)};
  bad[1](0, 0) = 0.5;
  CHECK_THROWS_AS(make_rep(g, bad), std::invalid_argument);
  std::vector<CMat> ragged{CMat::Identity(2, 2), CMat::Identity(3, 3)};
  CHECK_THROWS_AS(make_rep(g, ragged), std::invalid_argument);
}

TEST_CASE("conjugacy classes of the order-6 affine group") {
  const GroupPtr tab = affine3()->table();
  const ConjClasses c = conjugacy_classes(*tab);
  REQUIRE(c.count() == 3);
  CHECK(c.members[0] == std::vector<int>{0});
  CHECK(c.members[1] == std::vector<int>{1, 2});
  CHECK(c.members[2] == std::vector<int>{3, 4, 5});
  CHECK(c.reps == std::vector<int>{0, 1, 3});
  CHECK(c.class_of[4] == 2);
}

TEST_CASE("character table of the order-6 affine group") {
  const GroupPtr tab = affine3()->table();
  const CharacterTable t = character_table(*tab);
  REQUIRE(t.count() == 3);
  CHECK(t.degrees == std::vector<int>{1, 1, 2});
  // rows sorted by degree then value: sign, trivial, then the 2-dim character
  const std::vector<std::vector<Complex>> expect = {
      {1.0, 1.0, -1.0}, {1.0, 1.0, 1.0}, {2.0, -1.0, 0.0}};
  for (int s = 0; s < 3; ++s)
    for (int j = 0; j < 3; ++j)
      CHECK(std::abs(t.values[s][j] - expect[s][j]) < 1e-9);
}

TEST_CASE("character table is stable across seeds") {
  const GroupPtr tab = heisenberg3()->table();
  const CharacterTable t0 = character_table(*tab, 0);
  const CharacterTable t1 = character_table(*tab, 12345);
  REQUIRE(t0.count() == t1.count());
  CHECK(t0.degrees == t1.degrees);
  for (int s = 0; s < t0.count(); ++s)
    for (int j = 0; j < t0.count(); ++j)
      CHECK(std::abs(t0.values[s][j] - t1.values[s][j]) < 1e-9);
}

TEST_CASE("Heisenberg group has nine linear and two cubic characters") {
  const GroupPtr tab = heisenberg3()->table();
  const CharacterTable t = character_table(*tab);
  REQUIRE(t.count() == 11);
  std::vector<int> degs = t.degrees;
  std::sort(degs.begin(), degs.end());
  CHECK(degs == std::vector<int>{1, 1, 1, 1, 1, 1, 1, 1, 1, 3, 3});
}

TEST_CASE("regular decomposition of the order-6 affine group") {
  const GroupPtr tab = affine3()->table();
  const IrrepDecomposition dec = decompose_regular(tab);
  REQUIRE(dec.irreps.size() == 3);
  CHECK(dec.irreps[0].dim == 1);
  CHECK(dec.irreps[1].dim == 1);
  CHECK(dec.irreps[2].dim == 2);
  for (const MatrixRep& r : dec.irreps) {
    CHECK(is_irreducible(r));
    CHECK(rep_deviation(r) < 1e-9);
    for (const CMat& m : r.mats)
      CHECK(max_abs(CMat(m.adjoint() * m - CMat::Identity(r.dim, r.dim))) < 1e-9);
  }
  for (int s = 0; s < 3; ++s)
    for (int u = 0; u < 3; ++u)
      CHECK(hom_dimension(dec.irreps[s], dec.irreps[u]) == (s == u ? 1 : 0));
  // multiplicities inside the regular representation equal the degrees
  const MatrixRep reg = regular_representation(tab);
  for (int s = 0; s < 3; ++s)
    CHECK(hom_dimension(dec.irreps[s], reg) == dec.irreps[s].dim);
}

TEST_CASE("regular decomposition of the Heisenberg group") {
  const GroupPtr tab = heisenberg3()->table();
  const IrrepDecomposition dec = decompose_regular(tab);
  REQUIRE(dec.irreps.size() == 11);
  long long sumsq = 0;
  for (const MatrixRep& r : dec.irreps) {
    CHECK(is_irreducible(r));
    sumsq += static_cast<long long>(r.dim) * r.dim;
  }
  CHECK(sumsq == 27);
}

TEST_CASE("hom dimensions count multiplicities") {
  const GroupPtr tab = affine3()->table();
  const MatrixRep reg = regular_representation(tab);
  CHECK(commutant_dimension(reg) == 6);  // sum of squared multiplicities
  const MatrixRep triv = character_rep(tab, {1, 1, 1, 1, 1, 1});
  CHECK(hom_dimension(triv, reg) == 1);
  CHECK(is_irreducible(triv));
  CHECK(!is_irreducible(reg));
}

TEST_CASE("equivalence finds an invertible intertwiner for conjugated irreducibles") {
  const GroupPtr tab = affine3()->table();
  const IrrepDecomposition dec = decompose_regular(tab);
  const MatrixRep& pi = dec.irreps[2];
  Rng rng(7);
  const CMat s = random_invertible(2, rng);
  std::vector<CMat> conj(pi.mats.size());
  for (size_t g = 0; g < conj.size(); ++g) conj[g] = s * pi.mats[g] * s.inverse();
  const MatrixRep rho = make_rep(tab, std::move(conj), 1e-7);

  const auto t = equivalence(pi, rho);
  REQUIRE(t.has_value());
  for (int g = 0; g < tab->size; ++g)
    CHECK(max_abs(CMat(*t * pi.mats[g] - rho.mats[g] * *t)) < 1e-7);

  // same dimension, disjoint content: no intertwiner at all
  const MatrixRep two_lin = direct_sum(dec.irreps[0], dec.irreps[1]);
  CHECK(hom_dimension(two_lin, pi) == 0);
  CHECK(!equivalence(two_lin, pi).has_value());

  // nonzero Hom but unequal multiplicities: no invertible intertwiner
  const MatrixRep t_plus_t = direct_sum(dec.irreps[1], dec.irreps[1]);
  const MatrixRep t_plus_s = direct_sum(dec.irreps[1], dec.irreps[0]);
  CHECK(hom_dimension(t_plus_t, t_plus_s) == 2);
  CHECK(!equivalence(t_plus_t, t_plus_s).has_value());
}

TEST_CASE("intertwiner bases have the predicted size and really intertwine") {
  const GroupPtr tab = affine3()->table();
  const IrrepDecomposition dec = decompose_regular(tab);
  const MatrixRep reg = regular_representation(tab);
  for (const MatrixRep& irr : dec.irreps) {
    const auto basis = intertwiner_basis(irr, reg);
    CHECK(static_cast<int>(basis.size()) == irr.dim);
    for (const CMat& b : basis) {
      CHECK(max_abs(b) > 1e-3);
      for (int g = 0; g < tab->size; ++g)
        CHECK(max_abs(CMat(reg.mats[g] * b - b * irr.mats[g])) < 1e-7);
    }
  }
}

TEST_CASE("cosets of a subgroup") {
  const GroupPtr tab = affine3()->table();
  const Subgroup s = subgroup_from_elements(*tab, {0, 3});
  const RightCosets rc = right_cosets(*tab, s);
  REQUIRE(rc.reps.size() == 3);
  CHECK(rc.reps[0] == 0);
  for (int g = 0; g < 6; ++g)
    for (int e : s.embed)
      CHECK(rc.coset_of[tab->times(e, g)] == rc.coset_of[g]);
  int counts[3] = {0, 0, 0};
  for (int g = 0; g < 6; ++g) ++counts[rc.coset_of[g]];
  CHECK(counts[0] == 2);
  CHECK(counts[1] == 2);
  CHECK(counts[2] == 2);
}

TEST_CASE("generating sets are small and generate") {
  const FiniteGroup c6 = cyclic_group(6);
  CHECK(generating_set(c6) == std::vector<int>{1});
  const GroupPtr tab = affine3()->table();
  const auto gens = generating_set(*tab);
  CHECK(gens.size() <= 2);
}

TEST_CASE("induction from the trivial subgroup gives the regular character") {
  const GroupPtr tab = affine3()->table();
  const Subgroup triv = subgroup_from_elements(*tab, {0});
  const MatrixRep one = character_rep(triv.table, {1});
  const MatrixRep ind = induce(tab, triv, one);
  CHECK(ind.dim == 6);
  const MatrixRep reg = regular_representation(tab);
  const auto ti = trace_vector(ind), tr = trace_vector(reg);
  for (int g = 0; g < 6; ++g) CHECK(std::abs(ti[g] - tr[g]) < 1e-9);
}

TEST_CASE("induction from the rotation subgroup yields the 2-dim irreducible") {
  const GroupPtr tab = affine3()->table();
  const Subgroup rot = subgroup_from_elements(*tab, {0, 1, 2});
  const Complex w = unit_phase(1.0 / 3.0);
  const MatrixRep chi1 = character_rep(rot.table, {1.0, w, w * w});
  const MatrixRep ind = induce(tab, rot, chi1);
  CHECK(ind.dim == 2);
  CHECK(is_irreducible(ind));
  const ConjClasses c = conjugacy_classes(*tab);
  const auto chi = character_of(ind, c);
  CHECK(std::abs(chi[0] - Complex(2, 0)) < 1e-9);
  CHECK(std::abs(chi[1] - Complex(-1, 0)) < 1e-9);
  CHECK(std::abs(chi[2] - Complex(0, 0)) < 1e-9);
}

TEST_CASE("induction satisfies Frobenius reciprocity") {
  const GroupPtr tab = affine3()->table();
  const Subgroup rot = subgroup_from_elements(*tab, {0, 1, 2});
  const IrrepDecomposition gd = decompose_regular(tab);
  const IrrepDecomposition sd = decompose_regular(rot.table);
  for (const MatrixRep& sigma : sd.irreps) {
    const MatrixRep ind = induce(tab, rot, sigma);
    for (const MatrixRep& pi : gd.irreps)
      CHECK(hom_dimension(ind, pi) == hom_dimension(sigma, restrict_rep(pi, rot)));
  }
}
