#include "finrep/groups.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace finrep {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

long long imod(long long x, long long n) {
  long long r = x % n;
  return r < 0 ? r + n : r;
}

}  // namespace

// ---------------------------------------------------------------------------
// FiniteAbelianGroup

int FiniteAbelianGroup::size() const {
  long long n = 1;
  for (int o : orders) n *= o;
  return static_cast<int>(n);
}

std::vector<int> FiniteAbelianGroup::vector_of(int index) const {
  std::vector<int> v(orders.size());
  for (int i = rank() - 1; i >= 0; --i) {
    v[i] = index % orders[i];
    index /= orders[i];
  }
  return v;
}

int FiniteAbelianGroup::index_of(const std::vector<int>& v) const {
  if (static_cast<int>(v.size()) != rank())
    fail("element vector rank mismatch");
  long long idx = 0;
  for (int i = 0; i < rank(); ++i)
    idx = idx * orders[i] + imod(v[i], orders[i]);
  return static_cast<int>(idx);
}

int FiniteAbelianGroup::add(int a, int b) const {
  std::vector<int> va = vector_of(a), vb = vector_of(b);
  for (int i = 0; i < rank(); ++i) va[i] = static_cast<int>(imod(va[i] + vb[i], orders[i]));
  return index_of(va);
}

int FiniteAbelianGroup::neg(int a) const {
  std::vector<int> v = vector_of(a);
  for (int i = 0; i < rank(); ++i) v[i] = static_cast<int>(imod(-v[i], orders[i]));
  return index_of(v);
}

FiniteAbelianGroup make_abelian(const std::vector<int>& orders) {
  if (orders.empty()) fail("make_abelian: empty order list");
  for (int o : orders)
    if (o < 1) fail("make_abelian: order " + std::to_string(o) + " is not positive");
  long long n = 1;
  for (int o : orders) {
    n *= o;
    if (n > (1LL << 30)) fail("make_abelian: group too large");
  }
  return FiniteAbelianGroup{orders};
}

FiniteGroup abelian_as_group(const FiniteAbelianGroup& a) {
  const int n = a.size();
  FiniteGroup g;
  g.size = n;
  g.identity = 0;
  g.mul.resize(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) g.mul[static_cast<size_t>(x) * n + y] = a.add(x, y);
  g.inv.resize(n);
  for (int x = 0; x < n; ++x) g.inv[x] = a.neg(x);
  for (int x = 0; x < n; ++x) {
    std::string label;
    for (int v : a.vector_of(x)) label += (label.empty() ? "" : ",") + std::to_string(v);
    g.labels.push_back(label);
  }
  return g;
}

std::vector<int> generated_subgroup(const FiniteAbelianGroup& a, const std::vector<int>& gens) {
  std::vector<char> in(a.size(), 0);
  in[0] = 1;
  std::vector<int> out{0}, frontier{0};
  for (int g : gens)
    if (g < 0 || g >= a.size()) fail("generated_subgroup: element out of range");
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier)
      for (int g : gens) {
        const int y = a.add(x, g);
        if (!in[y]) {
          in[y] = 1;
          out.push_back(y);
          next.push_back(y);
        }
      }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CharacterVec> dual_group(const FiniteAbelianGroup& a) {
  std::vector<CharacterVec> out;
  out.reserve(a.size());
  for (int k = 0; k < a.size(); ++k) out.push_back({a.vector_of(k)});
  return out;
}

Complex char_value(const FiniteAbelianGroup& a, int chi, int elem) {
  const std::vector<int> k = a.vector_of(chi), v = a.vector_of(elem);
  double phase = 0.0;
  for (int i = 0; i < a.rank(); ++i)
    phase += static_cast<double>(static_cast<long long>(k[i]) * v[i] % a.orders[i]) / a.orders[i];
  return unit_phase(phase);
}

Complex char_value(const FiniteAbelianGroup& a, const CharacterVec& chi, int elem) {
  return char_value(a, char_index(a, chi), elem);
}

int char_index(const FiniteAbelianGroup& a, const CharacterVec& chi) {
  return a.index_of(chi.exponents);
}

CharacterVec char_of_index(const FiniteAbelianGroup& a, int chi) {
  return {a.vector_of(chi)};
}

// ---------------------------------------------------------------------------
// FiniteGroup

int FiniteGroup::order_of(int g) const {
  int x = g, n = 1;
  while (x != identity) {
    x = times(x, g);
    ++n;
    if (n > size) fail("order_of: element never reaches the identity");
  }
  return n;
}

void FiniteGroup::validate() const {
  if (size <= 0) fail("group: empty");
  if (static_cast<int>(mul.size()) != size * size) fail("group: bad table size");
  if (static_cast<int>(inv.size()) != size) fail("group: bad inverse table size");
  for (int x : mul)
    if (x < 0 || x >= size) fail("group: table entry out of range");
  if (identity < 0 || identity >= size) fail("group: identity out of range");
  for (int g = 0; g < size; ++g) {
    if (times(identity, g) != g || times(g, identity) != g)
      fail("group: identity law fails at element " + std::to_string(g));
    if (times(g, inv[g]) != identity || times(inv[g], g) != identity)
      fail("group: inverse law fails at element " + std::to_string(g));
  }
  for (int g = 0; g < size; ++g)
    for (int h = 0; h < size; ++h)
      for (int k = 0; k < size; ++k)
        if (times(times(g, h), k) != times(g, times(h, k)))
          fail("group: associativity fails at (" + std::to_string(g) + "," +
               std::to_string(h) + "," + std::to_string(k) + ")");
}

namespace {

std::vector<int> inverses_from_table(int size, const std::vector<int>& mul, int identity) {
  std::vector<int> inv(size, -1);
  for (int g = 0; g < size; ++g)
    for (int h = 0; h < size; ++h)
      if (mul[static_cast<size_t>(g) * size + h] == identity) { inv[g] = h; break; }
  for (int g = 0; g < size; ++g)
    if (inv[g] < 0) fail("group: element " + std::to_string(g) + " has no inverse");
  return inv;
}

}  // namespace

FiniteGroup cyclic_group(int n) {
  if (n < 1) fail("cyclic_group: order must be positive");
  FiniteGroup g;
  g.size = n;
  g.identity = 0;
  g.mul.resize(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      g.mul[static_cast<size_t>(i) * n + j] = (i + j) % n;
  g.inv.resize(n);
  for (int i = 0; i < n; ++i) g.inv[i] = (n - i) % n;
  return g;
}

FiniteGroup units_group(int n) {
  if (n < 1) fail("units_group: modulus must be positive");
  if (n == 1) {
    FiniteGroup g = trivial_group();
    g.labels = {"0"};
    return g;
  }
  std::vector<int> units;
  for (int r = 1; r < n; ++r)
    if (std::gcd(r, n) == 1) units.push_back(r);
  std::unordered_map<int, int> idx;
  for (int i = 0; i < static_cast<int>(units.size()); ++i) idx[units[i]] = i;
  FiniteGroup g;
  g.size = static_cast<int>(units.size());
  g.identity = idx.at(1);
  g.mul.resize(static_cast<size_t>(g.size) * g.size);
  for (int i = 0; i < g.size; ++i)
    for (int j = 0; j < g.size; ++j)
      g.mul[static_cast<size_t>(i) * g.size + j] =
          idx.at(static_cast<int>(static_cast<long long>(units[i]) * units[j] % n));
  g.inv = inverses_from_table(g.size, g.mul, g.identity);
  for (int u : units) g.labels.push_back(std::to_string(u));
  return g;
}

FiniteGroup group_from_table(const std::vector<std::vector<int>>& table) {
  if (table.empty()) fail("group_from_table: empty table");
  FiniteGroup g;
  g.size = static_cast<int>(table.size());
  g.mul.reserve(static_cast<size_t>(g.size) * g.size);
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != g.size) fail("group_from_table: ragged table");
    for (int x : row) g.mul.push_back(x);
  }
  // locate the identity
  g.identity = -1;
  for (int e = 0; e < g.size; ++e) {
    bool ok = true;
    for (int x = 0; x < g.size && ok; ++x)
      ok = g.mul[static_cast<size_t>(e) * g.size + x] == x &&
           g.mul[static_cast<size_t>(x) * g.size + e] == x;
    if (ok) { g.identity = e; break; }
  }
  if (g.identity < 0) fail("group_from_table: no identity element");
  g.inv = inverses_from_table(g.size, g.mul, g.identity);
  g.validate();
  return g;
}

FiniteGroup trivial_group() { return cyclic_group(1); }

Subgroup subgroup_from_elements(const FiniteGroup& parent, std::vector<int> elements) {
  if (elements.empty()) fail("subgroup: empty element list");
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  std::unordered_map<int, int> idx;
  for (int i = 0; i < static_cast<int>(elements.size()); ++i) {
    if (elements[i] < 0 || elements[i] >= parent.size) fail("subgroup: element out of range");
    idx[elements[i]] = i;
  }
  const int n = static_cast<int>(elements.size());
  FiniteGroup g;
  g.size = n;
  g.mul.resize(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int p = parent.times(elements[i], elements[j]);
      auto it = idx.find(p);
      if (it == idx.end())
        fail("subgroup: not closed under multiplication at (" + std::to_string(elements[i]) +
             "," + std::to_string(elements[j]) + ")");
      g.mul[static_cast<size_t>(i) * n + j] = it->second;
    }
  auto eit = idx.find(parent.identity);
  if (eit == idx.end()) fail("subgroup: identity missing");
  g.identity = eit->second;
  g.inv = inverses_from_table(n, g.mul, g.identity);
  if (!parent.labels.empty())
    for (int e : elements) g.labels.push_back(parent.labels[e]);
  return Subgroup{share(std::move(g)), std::move(elements)};
}

// ---------------------------------------------------------------------------
// AutomorphismMat / ActionHom

AutomorphismMat AutomorphismMat::identity_map(int rank) {
  AutomorphismMat m;
  m.mat.assign(rank, std::vector<long long>(rank, 0));
  for (int i = 0; i < rank; ++i) m.mat[i][i] = 1;
  return m;
}

std::vector<int> AutomorphismMat::apply(const FiniteAbelianGroup& a,
                                        const std::vector<int>& v) const {
  const int r = a.rank();
  std::vector<int> out(r);
  for (int i = 0; i < r; ++i) {
    long long s = 0;
    for (int j = 0; j < r; ++j) s += imod(mat[i][j], a.orders[i]) * v[j];
    out[i] = static_cast<int>(imod(s, a.orders[i]));
  }
  return out;
}

int AutomorphismMat::apply_index(const FiniteAbelianGroup& a, int elem) const {
  return a.index_of(apply(a, a.vector_of(elem)));
}

void AutomorphismMat::validate(const FiniteAbelianGroup& a) const {
  const int r = a.rank();
  if (static_cast<int>(mat.size()) != r) fail("automorphism: matrix rank mismatch");
  for (const auto& row : mat)
    if (static_cast<int>(row.size()) != r) fail("automorphism: ragged matrix");
  // well-definedness on the product of cyclic factors: n_i | M_ij * n_j
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (imod(mat[i][j] * a.orders[j], a.orders[i]) != 0)
        fail("automorphism: not well defined at entry (" + std::to_string(i) + "," +
             std::to_string(j) + ")");
  // exhaustive bijectivity
  std::vector<char> hit(a.size(), 0);
  for (int x = 0; x < a.size(); ++x) {
    const int y = apply_index(a, x);
    if (hit[y]) fail("automorphism: not injective (collision at image " + std::to_string(y) + ")");
    hit[y] = 1;
  }
}

ActionHom ActionHom::trivial(int h_size, int rank) {
  ActionHom t;
  t.per_element.assign(h_size, AutomorphismMat::identity_map(rank));
  return t;
}

// ---------------------------------------------------------------------------
// SemidirectGroup

SemidirectGroup::SemidirectGroup(GroupPtr h, FiniteAbelianGroup a, ActionHom t)
    : h_(std::move(h)), a_(std::move(a)), t_(std::move(t)) {}

int SemidirectGroup::times(int g1, int g2) const {
  const int h1 = h_of(g1), a1 = a_of(g1), h2 = h_of(g2), a2 = a_of(g2);
  return index_of(h_->times(h1, h2), a_.add(a1, act(h1, a2)));
}

int SemidirectGroup::inverse(int g) const {
  const int hi = h_->inverse(h_of(g));
  return index_of(hi, act(hi, a_.neg(a_of(g))));
}

GroupPtr SemidirectGroup::table(std::int64_t limit) const {
  std::lock_guard<std::mutex> lock(table_mu_);
  if (table_) return table_;
  const std::int64_t n = size();
  if (n > limit)
    fail("semidirect table: group order " + std::to_string(n) + " exceeds limit " +
         std::to_string(limit));
  FiniteGroup g;
  g.size = static_cast<int>(n);
  g.identity = identity();
  g.mul.resize(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      g.mul[static_cast<size_t>(x) * n + y] = times(x, y);
  g.inv.resize(n);
  for (int x = 0; x < n; ++x) g.inv[x] = inverse(x);
  for (int x = 0; x < n; ++x)
    g.labels.push_back("(" + std::to_string(h_of(x)) + "," + std::to_string(a_of(x)) + ")");
  table_ = share(std::move(g));
  return table_;
}

namespace {

// Exhaustive identities of the semidirect construction; full pair check is
// limited to |G| <= 2048, beyond that conjugation is spot-checked.
void verify_semidirect_axioms(const SemidirectGroup& g) {
  const FiniteGroup& h = g.h_part();
  const FiniteAbelianGroup& a = g.a_part();
  const int e = g.identity();

  // (h,a)^-1 = (h^-1, t_{h^-1}(-a)), and it really inverts
  for (int x = 0; x < g.size(); ++x) {
    const int inv = g.inverse(x);
    const int hi = h.inverse(g.h_of(x));
    if (inv != g.index_of(hi, g.act(hi, a.neg(g.a_of(x)))))
      fail("semidirect: inverse formula fails at element " + std::to_string(x));
    if (g.times(x, inv) != e || g.times(inv, x) != e)
      fail("semidirect: inverse law fails at element " + std::to_string(x));
  }

  // every element factors as (h,a) = (e,a)(h,0), and h a h^-1 = h[a]
  for (int x = 0; x < g.size(); ++x) {
    const int hh = g.h_of(x), aa = g.a_of(x);
    if (g.times(g.index_of(h.identity, aa), g.index_of(hh, 0)) != x)
      fail("semidirect: G = AH fails at element " + std::to_string(x));
  }
  for (int hh = 0; hh < h.size; ++hh)
    for (int aa = 0; aa < a.size(); ++aa) {
      const int ht = g.index_of(hh, 0);
      const int conj = g.times(g.times(ht, g.index_of(h.identity, aa)), g.inverse(ht));
      if (conj != g.index_of(h.identity, g.act(hh, aa)))
        fail("semidirect: h a h^-1 = h[a] fails at (h,a)=(" + std::to_string(hh) + "," +
             std::to_string(aa) + ")");
    }

  // A is normal: (h,a)(e,a')(h,a)^-1 = (e, a + h[a'] - a)
  for (int x = 0; x < g.size(); ++x) {
    const int hh = g.h_of(x), aa = g.a_of(x);
    const int xi = g.inverse(x);
    for (int ap = 0; ap < a.size(); ++ap) {
      const int conj = g.times(g.times(x, g.index_of(h.identity, ap)), xi);
      const int expect = g.index_of(h.identity, a.add(aa, a.add(g.act(hh, ap), a.neg(aa))));
      if (conj != expect)
        fail("semidirect: normality of A fails at element " + std::to_string(x));
    }
  }

  // conjugation in coordinates: x y x^-1 = (h h' h^-1, a + h[a'] - (h h' h^-1)[a])
  const bool full = g.size() <= 2048;
  const int stride = full ? 1 : std::max(1, g.size() / 64);
  for (int x = 0; x < g.size(); x += (full ? 1 : stride))
    for (int y = 0; y < g.size(); y += (full ? 1 : stride)) {
      const int hh = g.h_of(x), aa = g.a_of(x);
      const int hp = g.h_of(y), ap = g.a_of(y);
      const int hconj = h.times(h.times(hh, hp), h.inverse(hh));
      const int aval = a.add(aa, a.add(g.act(hh, ap),
                                       g.act(hconj, a.neg(aa))));
      if (g.times(g.times(x, y), g.inverse(x)) != g.index_of(hconj, aval))
        fail("semidirect: conjugation formula fails at pair (" + std::to_string(x) + "," +
             std::to_string(y) + ")");
    }
}

}  // namespace

SemidirectPtr make_semidirect(GroupPtr h, FiniteAbelianGroup a, ActionHom t) {
  if (!h) fail("make_semidirect: null H");
  if (a.orders.empty()) fail("make_semidirect: invalid abelian part");
  if (static_cast<int>(t.per_element.size()) != h->size)
    fail("make_semidirect: action must supply one automorphism per H element");
  for (const auto& m : t.per_element) m.validate(a);

  // t_e = id, and t is a homomorphism on H (actions compared pointwise)
  for (int x = 0; x < a.size(); ++x)
    if (t.per_element[h->identity].apply_index(a, x) != x)
      fail("make_semidirect: t_e is not the identity automorphism");
  // cache the action as index tables for the pair check
  std::vector<std::vector<int>> act(h->size, std::vector<int>(a.size()));
  for (int hh = 0; hh < h->size; ++hh)
    for (int x = 0; x < a.size(); ++x)
      act[hh][x] = t.per_element[hh].apply_index(a, x);
  for (int g1 = 0; g1 < h->size; ++g1)
    for (int g2 = 0; g2 < h->size; ++g2) {
      const int g12 = h->times(g1, g2);
      for (int x = 0; x < a.size(); ++x)
        if (act[g12][x] != act[g1][act[g2][x]])
          fail("make_semidirect: action is not a homomorphism at pair (g,h)=(" +
               std::to_string(g1) + "," + std::to_string(g2) + ")");
    }

  auto g = std::make_shared<const SemidirectGroup>(std::move(h), std::move(a), std::move(t));
  verify_semidirect_axioms(*g);
  return g;
}

// ---------------------------------------------------------------------------
// Dual action

DualActionHom dual_action(const SemidirectGroup& g) {
  const FiniteAbelianGroup& a = g.a_part();
  const FiniteGroup& h = g.h_part();
  const int r = a.rank();
  DualActionHom dual;
  dual.h = g.h_ptr();
  dual.a = a;
  dual.perm.assign(h.size, std::vector<int>(a.size()));
  for (int hh = 0; hh < h.size; ++hh) {
    const AutomorphismMat& minv = g.action().per_element[h.inverse(hh)];
    // chi(t_{h^-1} x) has exponent k'_j = sum_i k_i (N_ij n_j / n_i) mod n_j
    std::vector<std::vector<long long>> coef(r, std::vector<long long>(r));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        coef[i][j] = imod(minv.mat[i][j], a.orders[i]) * a.orders[j] / a.orders[i];
    for (int chi = 0; chi < a.size(); ++chi) {
      const std::vector<int> k = a.vector_of(chi);
      std::vector<int> kp(r);
      for (int j = 0; j < r; ++j) {
        long long s = 0;
        for (int i = 0; i < r; ++i) s += k[i] * coef[i][j];
        kp[j] = static_cast<int>(imod(s, a.orders[j]));
      }
      dual.perm[hh][chi] = a.index_of(kp);
    }
  }
  dual.validate();
  return dual;
}

void DualActionHom::validate() const {
  const int n = a.size();
  for (int hh = 0; hh < h->size; ++hh) {
    std::vector<char> hit(n, 0);
    for (int chi = 0; chi < n; ++chi) {
      const int y = perm[hh][chi];
      if (y < 0 || y >= n || hit[y])
        fail("dual action: t'_" + std::to_string(hh) + " is not a bijection");
      hit[y] = 1;
    }
  }
  if (h->size > 0)
    for (int chi = 0; chi < n; ++chi)
      if (perm[h->identity][chi] != chi) fail("dual action: t'_e is not the identity");
  for (int g1 = 0; g1 < h->size; ++g1)
    for (int g2 = 0; g2 < h->size; ++g2) {
      const int g12 = h->times(g1, g2);
      for (int chi = 0; chi < n; ++chi)
        if (perm[g12][chi] != perm[g1][perm[g2][chi]])
          fail("dual action: not a homomorphism at pair (" + std::to_string(g1) + "," +
               std::to_string(g2) + ")");
    }
}

// ---------------------------------------------------------------------------
// Orbits, stabilizers, smoothness

std::vector<Orbit> orbits(const DualActionHom& dual) {
  std::vector<int> order(dual.a.size());
  for (int i = 0; i < dual.a.size(); ++i) order[i] = i;
  return orbits(dual, order);
}

std::vector<Orbit> orbits(const DualActionHom& dual, const std::vector<int>& processing_order) {
  const int n = dual.a.size();
  std::vector<char> seen(n, 0);
  std::vector<Orbit> out;
  for (int start : processing_order) {
    if (start < 0 || start >= n) fail("orbits: processing order out of range");
    if (seen[start]) continue;
    std::vector<int> stack{start}, elems;
    seen[start] = 1;
    while (!stack.empty()) {
      const int chi = stack.back();
      stack.pop_back();
      elems.push_back(chi);
      for (int hh = 0; hh < dual.h->size; ++hh) {
        const int y = dual.perm[hh][chi];
        if (!seen[y]) { seen[y] = 1; stack.push_back(y); }
      }
    }
    std::sort(elems.begin(), elems.end());
    out.push_back(Orbit{elems.front(), std::move(elems)});
  }
  std::sort(out.begin(), out.end(),
            [](const Orbit& x, const Orbit& y) { return x.representative < y.representative; });
  return out;
}

int orbit_of(const std::vector<Orbit>& orbs, int chi) {
  for (int i = 0; i < static_cast<int>(orbs.size()); ++i)
    if (std::binary_search(orbs[i].elements.begin(), orbs[i].elements.end(), chi)) return i;
  fail("orbit_of: character not covered by the orbit list");
}

Subgroup stabilizer(const DualActionHom& dual, int chi) {
  if (chi < 0 || chi >= dual.a.size()) fail("stabilizer: character index out of range");
  std::vector<int> elems;
  for (int hh = 0; hh < dual.h->size; ++hh)
    if (dual.perm[hh][chi] == chi) elems.push_back(hh);
  return subgroup_from_elements(*dual.h, std::move(elems));
}

Subgroup stabilizer(const DualActionHom& dual, const CharacterVec& chi) {
  return stabilizer(dual, char_index(dual.a, chi));
}

SmoothWitness smooth_action_check(const DualActionHom& dual) {
  SmoothWitness w;
  w.smooth = true;  // orbits are open in the discrete topology
  const std::vector<Orbit> orbs = orbits(dual);
  for (int i = 0; i < static_cast<int>(orbs.size()); ++i)
    for (int j = 0; j < static_cast<int>(orbs.size()); ++j)
      if (i != j) w.separators.emplace_back(i, j, orbs[i].elements);
  return w;
}

}  // namespace finrep
