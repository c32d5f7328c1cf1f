#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "finrep/groups.hpp"

#include <algorithm>
#include <numeric>

using namespace finrep;

namespace {

// H = (Z/3)^x acting on Z/3 by multiplication; isomorphic to S_3.
SemidirectPtr affine3() {
  GroupPtr h = share(units_group(3));
  FiniteAbelianGroup a = make_abelian({3});
  ActionHom t;
  t.per_element = {AutomorphismMat{{{1}}}, AutomorphismMat{{{2}}}};
  return make_semidirect(h, a, t);
}

// H = Z/3 acting on (Z/3)^2 by t_c(a,b) = (a, ca+b).
SemidirectPtr heisenberg3() {
  GroupPtr h = share(cyclic_group(3));
  FiniteAbelianGroup a = make_abelian({3, 3});
  ActionHom t;
  for (long long c = 0; c < 3; ++c) t.per_element.push_back(AutomorphismMat{{{1, 0}, {c, 1}}});
  return make_semidirect(h, a, t);
}

}  // namespace

TEST_CASE("abelian group indexing and arithmetic") {
  const FiniteAbelianGroup a = make_abelian({2, 3});
  CHECK(a.size() == 6);
  CHECK(a.rank() == 2);
  CHECK(a.identity() == 0);
  for (int x = 0; x < 6; ++x) CHECK(a.index_of(a.vector_of(x)) == x);
  CHECK(a.vector_of(5) == std::vector<int>{1, 2});
  CHECK(a.add(a.index_of({1, 2}), a.index_of({1, 1})) == a.index_of({0, 0}));
  for (int x = 0; x < 6; ++x) {
    CHECK(a.add(x, a.neg(x)) == 0);
    CHECK(a.add(x, 0) == x);
  }
  CHECK(a.index_of({-1, 7}) == a.index_of({1, 1}));
}

TEST_CASE("abelian group rejects bad orders") {
  CHECK_THROWS_AS(make_abelian({}), std::invalid_argument);
  CHECK_THROWS_AS(make_abelian({3, 0}), std::invalid_argument);
  CHECK_THROWS_AS(make_abelian({-2}), std::invalid_argument);
}

TEST_CASE("characters of Z/4") {
  const FiniteAbelianGroup a = make_abelian({4});
  CHECK(std::abs(char_value(a, 0, 3) - Complex(1, 0)) < 1e-12);
  CHECK(std::abs(char_value(a, 1, 1) - Complex(0, 1)) < 1e-12);
  CHECK(std::abs(char_value(a, 2, 1) - Complex(-1, 0)) < 1e-12);
  CHECK(std::abs(char_value(a, 3, 3) - Complex(0, 1)) < 1e-12);
  // orthogonality
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Complex acc = 0;
      for (int x = 0; x < 4; ++x) acc += char_value(a, i, x) * std::conj(char_value(a, j, x));
      CHECK(std::abs(acc - (i == j ? 4.0 : 0.0)) < 1e-12);
    }
}

TEST_CASE("characters respect the group law") {
  const FiniteAbelianGroup a = make_abelian({2, 4});
  for (int chi = 0; chi < a.size(); ++chi)
    for (int x = 0; x < a.size(); ++x)
      for (int y = 0; y < a.size(); ++y)
        CHECK(std::abs(char_value(a, chi, a.add(x, y)) -
                       char_value(a, chi, x) * char_value(a, chi, y)) < 1e-12);
}

TEST_CASE("dual group enumeration round trips") {
  const FiniteAbelianGroup a = make_abelian({3, 2});
  const auto chars = dual_group(a);
  CHECK(chars.size() == 6);
  for (int i = 0; i < 6; ++i) CHECK(char_index(a, chars[i]) == i);
  CHECK(chars[0].exponents == std::vector<int>{0, 0});
}

TEST_CASE("cyclic and unit groups") {
  FiniteGroup c6 = cyclic_group(6);
  c6.validate();
  CHECK(c6.order_of(1) == 6);
  CHECK(c6.order_of(2) == 3);
  CHECK(c6.inverse(1) == 5);

  FiniteGroup u8 = units_group(8);
  u8.validate();
  CHECK(u8.size == 4);
  for (int x = 0; x < 4; ++x) CHECK(u8.times(x, x) == u8.identity);

  FiniteGroup u7 = units_group(7);
  CHECK(u7.size == 6);
  bool has_gen = false;
  for (int x = 0; x < 6; ++x) has_gen = has_gen || u7.order_of(x) == 6;
  CHECK(has_gen);
  CHECK(u7.labels[u7.identity] == "1");
}

TEST_CASE("group_from_table validates") {
  const FiniteGroup z2 = group_from_table({{0, 1}, {1, 0}});
  CHECK(z2.identity == 0);
  CHECK_THROWS_AS(group_from_table({{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(group_from_table({{1, 1}, {1, 1}}), std::invalid_argument);
  // not associative: a Latin square that is no group
  CHECK_THROWS_AS(group_from_table({{0, 1, 2, 3, 4},
                                    {1, 0, 3, 4, 2},
                                    {2, 4, 0, 1, 3},
                                    {3, 2, 4, 0, 1},
                                    {4, 3, 1, 2, 0}}),
                  std::invalid_argument);
}

TEST_CASE("subgroup extraction") {
  const FiniteGroup c6 = cyclic_group(6);
  const Subgroup s = subgroup_from_elements(c6, {0, 2, 4});
  CHECK(s.table->size == 3);
  CHECK(s.embed == std::vector<int>{0, 2, 4});
  s.table->validate();
  CHECK_THROWS_AS(subgroup_from_elements(c6, {0, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(subgroup_from_elements(c6, {}), std::invalid_argument);
}

TEST_CASE("automorphism validation") {
  const FiniteAbelianGroup a24 = make_abelian({2, 4});
  AutomorphismMat swap{{{0, 1}, {1, 0}}};
  CHECK_THROWS_AS(swap.validate(a24), std::invalid_argument);  // 4 does not divide 1*2
  const FiniteAbelianGroup a4 = make_abelian({4});
  AutomorphismMat dbl{{{2}}};
  CHECK_THROWS_AS(dbl.validate(a4), std::invalid_argument);  // not injective
  AutomorphismMat ok{{{3}}};
  ok.validate(a4);
  CHECK(ok.apply_index(a4, 1) == 3);
  CHECK(AutomorphismMat::identity_map(2).apply(a24, {1, 3}) == std::vector<int>{1, 3});
}

TEST_CASE("semidirect product of units acting on Z/3") {
  const SemidirectPtr g = affine3();
  CHECK(g->size() == 6);
  CHECK(g->identity() == 0);
  for (int x = 0; x < 6; ++x) {
    CHECK(g->index_of(g->h_of(x), g->a_of(x)) == x);
    CHECK(g->times(x, g->inverse(x)) == g->identity());
  }
  // element orders of S_3: identity, two 3-cycles, three involutions
  const GroupPtr tab = g->table();
  tab->validate();
  int ord2 = 0, ord3 = 0;
  for (int x = 0; x < 6; ++x) {
    if (tab->order_of(x) == 2) ++ord2;
    if (tab->order_of(x) == 3) ++ord3;
  }
  CHECK(ord2 == 3);
  CHECK(ord3 == 2);
  CHECK(tab->labels[g->index_of(1, 2)] == "(1,2)");
}

TEST_CASE("semidirect rejects non-homomorphic actions") {
  GroupPtr h = share(cyclic_group(4));
  FiniteAbelianGroup a = make_abelian({5});
  ActionHom t;
  t.per_element = {AutomorphismMat{{{1}}}, AutomorphismMat{{{2}}}, AutomorphismMat{{{3}}},
                   AutomorphismMat{{{2}}}};
  CHECK_THROWS_WITH_AS(static_cast<void>(make_semidirect(h, a, t)),
                       doctest::Contains("pair"), std::invalid_argument);
  ActionHom bad_e;
  bad_e.per_element = {AutomorphismMat{{{2}}}, AutomorphismMat{{{1}}}, AutomorphismMat{{{1}}},
                       AutomorphismMat{{{1}}}};
  CHECK_THROWS_AS(static_cast<void>(make_semidirect(h, make_abelian({5}), bad_e)),
                  std::invalid_argument);
  ActionHom wrong_size;
  wrong_size.per_element = {AutomorphismMat{{{1}}}};
  CHECK_THROWS_AS(static_cast<void>(make_semidirect(h, make_abelian({5}), wrong_size)),
                  std::invalid_argument);
}

TEST_CASE("dual action matches its defining formula") {
  for (const SemidirectPtr& g : {affine3(), heisenberg3()}) {
    const DualActionHom dual = dual_action(*g);
    const FiniteAbelianGroup& a = g->a_part();
    for (int hh = 0; hh < g->h_part().size; ++hh)
      for (int chi = 0; chi < a.size(); ++chi)
        for (int x = 0; x < a.size(); ++x) {
          const Complex lhs = char_value(a, dual.perm[hh][chi], x);
          const Complex rhs = char_value(a, chi, g->act_inv(hh, x));
          CHECK(std::abs(lhs - rhs) < 1e-12);
        }
  }
}

TEST_CASE("dual action of the affine group swaps the nontrivial characters") {
  const SemidirectPtr g = affine3();
  const DualActionHom dual = dual_action(*g);
  const int h2 = 1;  // residue 2
  CHECK(dual.perm[h2][0] == 0);
  CHECK(dual.perm[h2][1] == 2);
  CHECK(dual.perm[h2][2] == 1);

  const auto orbs = orbits(dual);
  REQUIRE(orbs.size() == 2);
  CHECK(orbs[0].representative == 0);
  CHECK(orbs[0].elements == std::vector<int>{0});
  CHECK(orbs[1].representative == 1);
  CHECK(orbs[1].elements == std::vector<int>{1, 2});
  CHECK(orbit_of(orbs, 2) == 1);

  CHECK(stabilizer(dual, 0).table->size == 2);
  CHECK(stabilizer(dual, 1).table->size == 1);
}

TEST_CASE("Heisenberg dual orbits") {
  const SemidirectPtr g = heisenberg3();
  CHECK(g->size() == 27);
  const DualActionHom dual = dual_action(*g);
  // t'_c maps exponents (m,n) to (m-nc, n)
  const FiniteAbelianGroup& a = g->a_part();
  CHECK(dual.perm[1][a.index_of({0, 1})] == a.index_of({2, 1}));
  const auto orbs = orbits(dual);
  REQUIRE(orbs.size() == 5);
  CHECK(orbs[0].elements == std::vector<int>{0});
  CHECK(orbs[1].elements == std::vector<int>{1, 4, 7});
  CHECK(orbs[2].elements == std::vector<int>{2, 5, 8});
  CHECK(orbs[3].elements == std::vector<int>{3});
  CHECK(orbs[4].elements == std::vector<int>{6});
  // orbit-stabilizer product
  for (const Orbit& o : orbs)
    CHECK(static_cast<int>(o.elements.size()) * stabilizer(dual, o.representative).table->size ==
          g->h_part().size);
}

TEST_CASE("orbit partition does not depend on the scan order") {
  const SemidirectPtr g = heisenberg3();
  const DualActionHom dual = dual_action(*g);
  const auto base = orbits(dual);
  std::vector<int> order(g->a_part().size());
  std::iota(order.begin(), order.end(), 0);
  for (int rot = 1; rot < 9; rot += 3) {
    std::rotate(order.begin(), order.begin() + rot, order.end());
    const auto alt = orbits(dual, order);
    REQUIRE(alt.size() == base.size());
    for (size_t i = 0; i < base.size(); ++i) {
      CHECK(alt[i].representative == base[i].representative);
      CHECK(alt[i].elements == base[i].elements);
    }
  }
}

TEST_CASE("trivial action gives a direct product with singleton orbits") {
  GroupPtr h = share(cyclic_group(2));
  const FiniteAbelianGroup a = make_abelian({5});
  const SemidirectPtr g = make_semidirect(h, a, ActionHom::trivial(2, 1));
  const DualActionHom dual = dual_action(*g);
  const auto orbs = orbits(dual);
  CHECK(orbs.size() == 5);
  for (const Orbit& o : orbs) {
    CHECK(o.elements.size() == 1);
    CHECK(stabilizer(dual, o.representative).table->size == 2);
  }
}

TEST_CASE("finite discrete actions are smooth with explicit separators") {
  const SemidirectPtr g = affine3();
  const DualActionHom dual = dual_action(*g);
  const SmoothWitness w = smooth_action_check(dual);
  CHECK(w.smooth);
  REQUIRE(w.separators.size() == 2);
  const auto orbs = orbits(dual);
  for (const auto& [i, j, set] : w.separators) {
    CHECK(set == orbs[i].elements);
    for (int chi : orbs[j].elements)
      CHECK(!std::binary_search(set.begin(), set.end(), chi));
    // invariance of the separating set
    for (int hh = 0; hh < g->h_part().size; ++hh)
      for (int chi : set) CHECK(std::binary_search(set.begin(), set.end(), dual.perm[hh][chi]));
  }
}
