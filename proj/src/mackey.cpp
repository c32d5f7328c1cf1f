#include "finrep/mackey.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace finrep {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

SemidirectPtr affine(int p) {
  GroupPtr h = share(units_group(p));
  ActionHom t;
  for (long long r = 1; r < p; ++r) t.per_element.push_back(AutomorphismMat{{{r}}});
  return make_semidirect(std::move(h), make_abelian({p}), std::move(t));
}

SemidirectPtr heisenberg(int p) {
  GroupPtr h = share(cyclic_group(p));
  ActionHom t;
  for (long long c = 0; c < p; ++c) t.per_element.push_back(AutomorphismMat{{{1, 0}, {c, 1}}});
  return make_semidirect(std::move(h), make_abelian({p, p}), std::move(t));
}

SemidirectPtr negation_on_z4() {
  ActionHom t;
  t.per_element = {AutomorphismMat{{{1}}}, AutomorphismMat{{{3}}}};
  return make_semidirect(share(cyclic_group(2)), make_abelian({4}), std::move(t));
}

SemidirectPtr product(int h_order, int a_order) {
  return make_semidirect(share(cyclic_group(h_order)), make_abelian({a_order}),
                         ActionHom::trivial(h_order, 1));
}

}  // namespace

Subgroup little_group(const SemidirectPtr& g, const Subgroup& stab) {
  if (!g) fail("little_group: missing group");
  std::vector<int> elements;
  elements.reserve(stab.embed.size() * g->a_part().size());
  for (int h : stab.embed)
    for (int a = 0; a < g->a_part().size(); ++a) elements.push_back(g->index_of(h, a));
  return subgroup_from_elements(*g->table(), std::move(elements));
}

MatrixRep twist_by_character(const SemidirectPtr& g, const Subgroup& little,
                             const Subgroup& stab, const MatrixRep& pi0, int chi) {
  if (!g) fail("twist_by_character: missing group");
  if (!pi0.group || !pi0.group->same_structure(*stab.table))
    fail("twist_by_character: representation does not live on the stabilizer");

  std::vector<int> stab_pos(g->h_part().size, -1);
  for (int s = 0; s < static_cast<int>(stab.embed.size()); ++s) stab_pos[stab.embed[s]] = s;

  std::vector<CMat> mats(little.table->size);
  for (int i = 0; i < little.table->size; ++i) {
    const int e = little.embed[i];
    const int s = stab_pos[g->h_of(e)];
    if (s < 0) fail("twist_by_character: little group reaches outside the stabilizer");
    mats[i] = char_value(g->a_part(), chi, g->a_of(e)) * pi0.mats[s];
  }
  return make_rep(little.table, std::move(mats));
}

ClassificationReport classify(const SemidirectPtr& g, std::uint64_t seed) {
  if (!g) fail("classify: missing group");
  ClassificationReport report;
  report.group = g;
  report.group_order = g->size();

  const DualActionHom dual = dual_action(*g);
  const std::vector<Orbit> orbs = orbits(dual);

  // Orbits come sorted by representative and decompose_regular sorts by
  // dimension then character values, so the double loop already emits the
  // canonical entry order.
  for (int oi = 0; oi < static_cast<int>(orbs.size()); ++oi) {
    const Orbit& orb = orbs[oi];
    Subgroup stab = stabilizer(dual, orb.representative);
    IrrepDecomposition dec;
    try {
      dec = decompose_regular(stab.table, derive_seed(seed, 0x40 + static_cast<std::uint64_t>(oi)));
    } catch (const std::exception& e) {
      throw std::runtime_error("classify: orbit " + std::to_string(oi) + " (representative " +
                               std::to_string(orb.representative) +
                               "): " + e.what());
    }
    const Subgroup little = little_group(g, stab);

    for (int k = 0; k < static_cast<int>(dec.irreps.size()); ++k) {
      ClassificationEntry ent;
      ent.orbit = oi;
      ent.orbit_rep = orb.representative;
      ent.orbit_size = static_cast<int>(orb.elements.size());
      ent.stabilizer = stab;
      ent.stalk_index = k;
      ent.stalk_dim = dec.irreps[k].dim;
      ent.stalk_label = "pi0." + std::to_string(k);
      ent.stalk_irrep = dec.irreps[k];
      ent.induced = induce(g->table(), little,
                           twist_by_character(g, little, stab, dec.irreps[k], orb.representative));

      if (ent.induced.dim != ent.orbit_size * ent.stalk_dim)
        throw std::runtime_error("classify: induced dimension mismatch on orbit " +
                                 std::to_string(oi));
      if (!is_irreducible(ent.induced))
        throw std::runtime_error("classify: induced entry is reducible on orbit " +
                                 std::to_string(oi) + " (" + ent.stalk_label + ")");

      report.sum_dim_sq += static_cast<long long>(ent.induced.dim) * ent.induced.dim;
      report.entries.push_back(std::move(ent));
    }
  }

  const int n = static_cast<int>(report.entries.size());
  report.hom_matrix.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      report.hom_matrix[i][j] =
          hom_dimension(report.entries[i].induced, report.entries[j].induced);

  const IrrepDecomposition oracle =
      decompose_regular(g->table(), derive_seed(seed, 0x51));
  report.oracle_match.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    int found = -1;
    bool unique = true;
    for (int j = 0; j < static_cast<int>(oracle.irreps.size()); ++j) {
      if (oracle.irreps[j].dim != report.entries[i].induced.dim) continue;
      if (hom_dimension(report.entries[i].induced, oracle.irreps[j]) != 1) continue;
      if (found >= 0) unique = false;
      found = j;
    }
    report.oracle_match[i] = unique ? found : -1;
  }
  return report;
}

CompletenessResult completeness_check(const ClassificationReport& report, const SemidirectPtr& g,
                                      std::uint64_t seed) {
  CompletenessResult res;
  if (!g) {
    res.ok = false;
    res.failures.push_back("missing group");
    return res;
  }

  long long sum = 0;
  for (const ClassificationEntry& ent : report.entries)
    sum += static_cast<long long>(ent.induced.dim) * ent.induced.dim;
  if (sum != g->size()) {
    std::ostringstream msg;
    msg << "sum of squares " << sum << " != group order " << g->size() << " (deficit "
        << g->size() - sum << ")";
    res.failures.push_back(msg.str());
  }

  const int n = static_cast<int>(report.entries.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int hd = hom_dimension(report.entries[i].induced, report.entries[j].induced);
      const int want = i == j ? 1 : 0;
      if (hd != want) {
        std::ostringstream msg;
        msg << "entries " << i << " and " << j << " have hom dimension " << hd << " (expected "
            << want << ")";
        res.failures.push_back(msg.str());
      }
    }

  const IrrepDecomposition oracle = decompose_regular(g->table(), derive_seed(seed, 0x51));
  const int m = static_cast<int>(oracle.irreps.size());
  if (n != m)
    res.failures.push_back("entry count " + std::to_string(n) + " != oracle irreducible count " +
                           std::to_string(m));
  std::vector<int> hits(m, -1);
  for (int i = 0; i < n; ++i) {
    int found = -1;
    int count = 0;
    for (int j = 0; j < m; ++j) {
      if (oracle.irreps[j].dim != report.entries[i].induced.dim) continue;
      if (hom_dimension(report.entries[i].induced, oracle.irreps[j]) == 1) {
        found = j;
        ++count;
      }
    }
    if (count != 1) {
      res.failures.push_back("entry " + std::to_string(i) + " matches " + std::to_string(count) +
                             " oracle irreducibles");
      continue;
    }
    if (hits[found] >= 0)
      res.failures.push_back("entries " + std::to_string(hits[found]) + " and " +
                             std::to_string(i) + " match the same oracle irreducible " +
                             std::to_string(found));
    hits[found] = i;
  }

  res.ok = res.failures.empty();
  return res;
}

int match_irrep(const MatrixRep& pi, const ClassificationReport& report, double tol) {
  if (!is_irreducible(pi)) fail("match_irrep: representation is reducible");
  if (!report.group) fail("match_irrep: report carries no group");

  const SystemOfImprimitivity sys = restrict_to_system(report.group, pi, tol);
  const SupportReport sup = system_support(sys);
  if (sup.multiple)
    throw std::runtime_error("match_irrep: support crosses orbits despite irreducibility");
  const std::vector<Orbit> orbs = orbits(sys.dual);
  const StalkData stalk = stalk_rep(sys, orbs[sup.orbit].representative, tol);

  int found = -1;
  for (int i = 0; i < static_cast<int>(report.entries.size()); ++i) {
    const ClassificationEntry& ent = report.entries[i];
    if (ent.orbit != sup.orbit || ent.stalk_dim != stalk.pi0.dim) continue;
    if (hom_dimension(stalk.pi0, ent.stalk_irrep) != 1) continue;
    if (hom_dimension(pi, ent.induced) != 1)
      throw std::runtime_error(
          "match_irrep: stalk comparison and direct comparison disagree at entry " +
          std::to_string(i));
    if (found >= 0)
      throw std::runtime_error("match_irrep: entries " + std::to_string(found) + " and " +
                               std::to_string(i) + " both match");
    found = i;
  }
  if (found < 0) throw std::runtime_error("match_irrep: no entry matches");
  return found;
}

bool hom_correspondence_check(const SemidirectPtr& g, int chi, std::uint64_t seed) {
  if (!g) fail("hom_correspondence_check: missing group");
  const DualActionHom dual = dual_action(*g);
  if (chi < 0 || chi >= g->a_part().size())
    fail("hom_correspondence_check: character index out of range");

  const Subgroup stab = stabilizer(dual, chi);
  const Subgroup little = little_group(g, stab);
  const IrrepDecomposition dec = decompose_regular(stab.table, derive_seed(seed, 0x61));

  std::vector<MatrixRep> induced;
  induced.reserve(dec.irreps.size());
  for (const MatrixRep& pi0 : dec.irreps)
    induced.push_back(induce(g->table(), little, twist_by_character(g, little, stab, pi0, chi)));

  for (std::size_t k = 0; k < dec.irreps.size(); ++k)
    for (std::size_t l = 0; l < dec.irreps.size(); ++l)
      if (hom_dimension(induced[k], induced[l]) != hom_dimension(dec.irreps[k], dec.irreps[l]))
        return false;
  return true;
}

const std::vector<CatalogEntry>& builtin_catalog() {
  static const std::vector<CatalogEntry> catalog = [] {
    std::vector<CatalogEntry> v;
    v.push_back({"affine3", affine(3)});
    v.push_back({"affine5", affine(5)});
    v.push_back({"affine7", affine(7)});
    v.push_back({"heis2", heisenberg(2)});
    v.push_back({"heis3", heisenberg(3)});
    v.push_back({"z4_neg", negation_on_z4()});
    v.push_back({"c2xz3", product(2, 3)});
    v.push_back({"c2xz4", product(2, 4)});
    return v;
  }();
  return catalog;
}

SemidirectPtr catalog_group(const std::string& name) {
  std::string known;
  for (const CatalogEntry& ent : builtin_catalog()) {
    if (ent.name == name) return ent.group;
    if (!known.empty()) known += ", ";
    known += ent.name;
  }
  fail("unknown catalog group '" + name + "' (known: " + known + ")");
}

}  // namespace finrep
