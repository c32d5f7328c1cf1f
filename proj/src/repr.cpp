#include "finrep/repr.hpp"

#include "finrep/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace finrep {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error(msg); }

CVec vectorize(const CMat& m) {
  return Eigen::Map<const CVec>(m.data(), m.size());
}

CMat unvectorize(const CVec& v, Eigen::Index rows, Eigen::Index cols) {
  return Eigen::Map<const CMat>(v.data(), rows, cols);
}

}  // namespace

std::vector<CMat> MatrixRep::inverse_mats() const {
  std::vector<CMat> out(mats.size());
  for (int g = 0; g < group->size; ++g) out[g] = mats[group->inverse(g)];
  return out;
}

MatrixRep make_rep(GroupPtr group, std::vector<CMat> mats, double tol) {
  if (!group) throw std::invalid_argument("make_rep: null group");
  if (static_cast<int>(mats.size()) != group->size)
    throw std::invalid_argument("make_rep: one matrix per element required");
  const Eigen::Index d = mats[0].rows();
  if (d == 0) throw std::invalid_argument("make_rep: zero-dimensional matrices");
  for (const CMat& m : mats)
    if (m.rows() != d || m.cols() != d)
      throw std::invalid_argument("make_rep: matrices must share one square size");
  const double dev = homomorphism_deviation(*group, mats);
  if (!(dev <= tol))
    throw std::invalid_argument("make_rep: homomorphism deviation " + std::to_string(dev) +
                                " exceeds tolerance " + std::to_string(tol));
  return MatrixRep{std::move(group), static_cast<int>(d), std::move(mats)};
}

double rep_deviation(const MatrixRep& rep) {
  return homomorphism_deviation(*rep.group, rep.mats);
}

MatrixRep regular_representation(GroupPtr group) {
  const int n = group->size;
  std::vector<CMat> mats(n);
  for (int g = 0; g < n; ++g) {
    CMat m = CMat::Zero(n, n);
    for (int x = 0; x < n; ++x) m(group->times(g, x), x) = 1.0;
    mats[g] = std::move(m);
  }
  return MatrixRep{std::move(group), n, std::move(mats)};
}

MatrixRep restrict_rep(const MatrixRep& rep, const Subgroup& s) {
  std::vector<CMat> mats(s.embed.size());
  for (size_t i = 0; i < s.embed.size(); ++i) mats[i] = rep.mats[s.embed[i]];
  return MatrixRep{s.table, rep.dim, std::move(mats)};
}

MatrixRep direct_sum(const MatrixRep& x, const MatrixRep& y) {
  if (!x.group->same_structure(*y.group))
    throw std::invalid_argument("direct_sum: mismatched groups");
  std::vector<CMat> mats(x.mats.size());
  for (size_t g = 0; g < mats.size(); ++g) {
    CMat m = CMat::Zero(x.dim + y.dim, x.dim + y.dim);
    m.topLeftCorner(x.dim, x.dim) = x.mats[g];
    m.bottomRightCorner(y.dim, y.dim) = y.mats[g];
    mats[g] = std::move(m);
  }
  return MatrixRep{x.group, x.dim + y.dim, std::move(mats)};
}

std::vector<Complex> trace_vector(const MatrixRep& rep) {
  std::vector<Complex> tr(rep.mats.size());
  for (size_t g = 0; g < rep.mats.size(); ++g) tr[g] = rep.mats[g].trace();
  return tr;
}

// ---------------------------------------------------------------------------
// Conjugacy classes

ConjClasses conjugacy_classes(const FiniteGroup& g) {
  const int n = g.size;
  ConjClasses c;
  c.class_of.assign(n, -1);
  std::vector<char> seen(n, 0);
  for (int x = 0; x < n; ++x) {
    if (seen[x]) continue;
    std::vector<int> cls;
    for (int h = 0; h < n; ++h) {
      const int y = g.times(g.times(h, x), g.inverse(h));
      if (!seen[y]) { seen[y] = 1; cls.push_back(y); }
    }
    std::sort(cls.begin(), cls.end());
    c.members.push_back(std::move(cls));
  }
  std::sort(c.members.begin(), c.members.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (int j = 0; j < c.count(); ++j) {
    c.reps.push_back(c.members[j].front());
    for (int x : c.members[j]) c.class_of[x] = j;
  }
  return c;
}

// ---------------------------------------------------------------------------
// Character table

namespace {

// a[i][j][l] = #{(x,y) in C_i x C_j : xy = z_l} for the fixed reps z_l.
std::vector<std::vector<std::vector<long long>>> structure_constants(const FiniteGroup& g,
                                                                     const ConjClasses& c) {
  const int k = c.count();
  std::vector a(k, std::vector(k, std::vector<long long>(k, 0)));
  for (int i = 0; i < k; ++i)
    for (int x : c.members[i]) {
      const int xi = g.inverse(x);
      for (int l = 0; l < k; ++l) {
        const int y = g.times(xi, c.reps[l]);
        a[i][c.class_of[y]][l] += 1;
      }
    }
  return a;
}

struct RowKey {
  int degree;
  std::vector<std::pair<long long, long long>> rounded;
  bool operator<(const RowKey& o) const {
    if (degree != o.degree) return degree < o.degree;
    return rounded < o.rounded;
  }
};

RowKey row_key(int degree, const std::vector<Complex>& row) {
  RowKey k{degree, {}};
  k.rounded.reserve(row.size());
  for (Complex v : row)
    k.rounded.emplace_back(std::llround(v.real() * 1e6), std::llround(v.imag() * 1e6));
  return k;
}

void verify_orthogonality(const FiniteGroup& g, const CharacterTable& t) {
  const int k = t.count();
  const double tol = 1e-7;
  long long sumsq = 0;
  for (int d : t.degrees) sumsq += static_cast<long long>(d) * d;
  if (sumsq != g.size) fail("character table: degrees do not sum to the group order");
  for (int s = 0; s < k; ++s)
    for (int u = 0; u < k; ++u) {
      Complex acc = 0;
      for (int j = 0; j < k; ++j)
        acc += static_cast<double>(t.classes.members[j].size()) * t.values[s][j] *
               std::conj(t.values[u][j]);
      acc /= static_cast<double>(g.size);
      if (std::abs(acc - (s == u ? 1.0 : 0.0)) > tol)
        fail("character table: row orthogonality fails");
    }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Complex acc = 0;
      for (int s = 0; s < k; ++s) acc += t.values[s][i] * std::conj(t.values[s][j]);
      const double expect = i == j ? static_cast<double>(g.size) / t.classes.members[i].size() : 0.0;
      if (std::abs(acc - expect) > tol * g.size) fail("character table: column orthogonality fails");
    }
}

}  // namespace

CharacterTable character_table(const FiniteGroup& g, std::uint64_t seed) {
  const ConjClasses classes = conjugacy_classes(g);
  const int k = classes.count();
  const auto a = structure_constants(g, classes);
  const int l0 = classes.class_of[g.identity];

  for (std::uint64_t attempt = 0; attempt < 32; ++attempt) {
    Rng rng(derive_seed(seed, attempt));
    std::uniform_real_distribution<double> unif(0.1, 1.0);
    CMat m = CMat::Zero(k, k);
    std::vector<double> coef(k);
    for (int i = 0; i < k; ++i) coef[i] = unif(rng);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        for (int l = 0; l < k; ++l) m(j, l) += coef[i] * static_cast<double>(a[i][j][l]);

    Eigen::ComplexEigenSolver<CMat> es(m);
    if (es.info() != Eigen::Success) continue;
    // the class-sum eigenbasis is usable only if the spectrum is simple
    bool separated = true;
    const double scale = std::max(1.0, max_abs(CVec(es.eigenvalues())));
    for (int s = 0; s < k && separated; ++s)
      for (int u = s + 1; u < k; ++u)
        if (std::abs(es.eigenvalues()[s] - es.eigenvalues()[u]) < 1e-6 * scale) {
          separated = false;
          break;
        }
    if (!separated) continue;

    CharacterTable t;
    t.classes = classes;
    bool ok = true;
    for (int s = 0; s < k && ok; ++s) {
      CVec w = es.eigenvectors().col(s);
      if (std::abs(w[l0]) < 1e-8 * max_abs(w)) { ok = false; break; }
      w /= w[l0];  // central character of the identity class is 1
      double inv_dsq = 0;
      for (int l = 0; l < k; ++l)
        inv_dsq += std::norm(w[l]) / static_cast<double>(classes.members[l].size());
      const double dref = std::sqrt(static_cast<double>(g.size) / inv_dsq);
      const int d = static_cast<int>(std::llround(dref));
      if (d < 1 || std::abs(dref - d) > 1e-6 * std::max(1.0, dref)) { ok = false; break; }
      std::vector<Complex> row(k);
      for (int l = 0; l < k; ++l)
        row[l] = static_cast<double>(d) * w[l] / static_cast<double>(classes.members[l].size());
      t.degrees.push_back(d);
      t.values.push_back(std::move(row));
    }
    if (!ok) continue;

    std::vector<int> order(k);
    for (int s = 0; s < k; ++s) order[s] = s;
    std::vector<RowKey> keys(k);
    for (int s = 0; s < k; ++s) keys[s] = row_key(t.degrees[s], t.values[s]);
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return keys[x] < keys[y]; });
    CharacterTable sorted;
    sorted.classes = classes;
    for (int s : order) {
      sorted.degrees.push_back(t.degrees[s]);
      sorted.values.push_back(std::move(t.values[s]));
    }
    verify_orthogonality(g, sorted);
    return sorted;
  }
  fail("character table: no attempt produced a simple class-sum spectrum");
}

std::vector<Complex> character_of(const MatrixRep& rep, const ConjClasses& classes) {
  std::vector<Complex> out(classes.count());
  for (int j = 0; j < classes.count(); ++j) out[j] = rep.mats[classes.reps[j]].trace();
  return out;
}

// ---------------------------------------------------------------------------
// Hom spaces

int hom_dimension(const MatrixRep& from, const MatrixRep& to) {
  if (!from.group->same_structure(*to.group))
    throw std::invalid_argument("hom_dimension: mismatched groups");
  Complex acc = 0;
  for (int g = 0; g < from.group->size; ++g)
    acc += from.mats[g].trace() * std::conj(to.mats[g].trace());
  acc /= static_cast<double>(from.group->size);
  const long long n = std::llround(acc.real());
  if (std::abs(acc.imag()) > kRoundTol || std::abs(acc.real() - static_cast<double>(n)) > kRoundTol ||
      n < 0)
    fail("hom_dimension: character inner product " + std::to_string(acc.real()) + "+" +
         std::to_string(acc.imag()) + "i is not a nonnegative integer");
  return static_cast<int>(n);
}

int commutant_dimension(const MatrixRep& rep) { return hom_dimension(rep, rep); }

bool is_irreducible(const MatrixRep& rep) { return commutant_dimension(rep) == 1; }

std::vector<CMat> intertwiner_basis(const MatrixRep& from, const MatrixRep& to,
                                    std::uint64_t seed) {
  const int h = hom_dimension(from, to);
  if (h == 0) return {};
  const std::vector<CMat> from_inv = from.inverse_mats();
  Rng rng(derive_seed(seed, 0x17));
  const int tries = h + 4;
  CMat images(static_cast<Eigen::Index>(to.dim) * from.dim, tries);
  for (int r = 0; r < tries; ++r) {
    const CMat x = random_matrix(to.dim, from.dim, rng);
    const CMat img = average_conjugation(to.mats, from_inv, x);
    images.col(r) = vectorize(img);
  }
  const CMat basis = range_basis_svd(images, kRankCutoff * std::max(1.0, max_abs(images)));
  if (basis.cols() != h)
    fail("intertwiner_basis: averaged images span dimension " + std::to_string(basis.cols()) +
         ", expected " + std::to_string(h));
  std::vector<CMat> out(h);
  for (int r = 0; r < h; ++r) {
    out[r] = unvectorize(basis.col(r), to.dim, from.dim);
    for (int g = 0; g < from.group->size; ++g)
      if (max_abs(CMat(to.mats[g] * out[r] - out[r] * from.mats[g])) > 1e-7)
        fail("intertwiner_basis: basis element fails to intertwine");
  }
  return out;
}

std::optional<CMat> equivalence(const MatrixRep& from, const MatrixRep& to, std::uint64_t seed) {
  if (from.dim != to.dim) return std::nullopt;
  if (hom_dimension(from, to) == 0) return std::nullopt;
  const std::vector<CMat> basis = intertwiner_basis(from, to, seed);
  Rng rng(derive_seed(seed, 0x29));
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  for (int attempt = 0; attempt < 32; ++attempt) {
    CMat t = CMat::Zero(to.dim, from.dim);
    for (const CMat& b : basis) t += Complex(unif(rng), unif(rng)) * b;
    Eigen::JacobiSVD<CMat> svd(t);
    const double smax = svd.singularValues()[0];
    const double smin = svd.singularValues()[svd.singularValues().size() - 1];
    if (smax > 0 && smin > kRankCutoff * std::max(1.0, smax)) return t;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Regular decomposition

namespace {

// Orthonormal basis of the range of a Hermitian projector.
CMat projector_range(const CMat& p, int expected_rank) {
  if (max_abs(CMat(p - p.adjoint())) > 1e-9) fail("projector: not Hermitian");
  if (max_abs(CMat(p * p - p)) > 1e-8) fail("projector: not idempotent");
  Eigen::SelfAdjointEigenSolver<CMat> es(p);
  if (es.info() != Eigen::Success) fail("projector: eigensolve failed");
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
    if (es.eigenvalues()[i] > 0.5) keep.push_back(i);
  if (static_cast<int>(keep.size()) != expected_rank)
    fail("projector: rank " + std::to_string(keep.size()) + ", expected " +
         std::to_string(expected_rank));
  CMat b(p.rows(), expected_rank);
  for (size_t i = 0; i < keep.size(); ++i) b.col(i) = es.eigenvectors().col(keep[i]);
  return b;
}

}  // namespace

IrrepDecomposition decompose_regular(GroupPtr group, std::uint64_t seed) {
  IrrepDecomposition out;
  out.table = character_table(*group, seed);
  const MatrixRep reg = regular_representation(group);
  const int n = group->size;
  const ConjClasses& classes = out.table.classes;

  for (int s = 0; s < out.table.count(); ++s) {
    const int d = out.table.degrees[s];
    // central projector onto the isotypic component, entrywise in the
    // regular basis: p[x][y] = (d/|G|) conj(chi(x y^-1))
    CMat p(n, n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        p(x, y) = static_cast<double>(d) / n *
                  std::conj(out.table.values[s][classes.class_of[group->times(x, group->inverse(y))]]);
    const CMat b = projector_range(p, d * d);

    std::vector<CMat> sigma(n), sigma_inv(n);
    for (int g = 0; g < n; ++g) sigma[g] = b.adjoint() * reg.mats[g] * b;
    for (int g = 0; g < n; ++g) sigma_inv[g] = sigma[group->inverse(g)];

    MatrixRep irrep;
    if (d == 1) {
      irrep = make_rep(group, std::move(sigma));
    } else {
      bool done = false;
      for (std::uint64_t attempt = 0; attempt < 32 && !done; ++attempt) {
        Rng rng(derive_seed(seed, 1000 + 100 * static_cast<std::uint64_t>(s) + attempt));
        CMat x = random_matrix(d * d, d * d, rng);
        x = (x + CMat(x.adjoint())).eval() / 2.0;
        const CMat t = average_conjugation(sigma, sigma_inv, x);
        Eigen::SelfAdjointEigenSolver<CMat> es(t);
        if (es.info() != Eigen::Success) continue;
        // eigenvalues ascending; need d clusters of size exactly d
        const auto& ev = es.eigenvalues();
        const double scale = std::max(1.0, std::abs(ev[ev.size() - 1] - ev[0]));
        std::vector<int> cluster_start{0};
        for (Eigen::Index i = 1; i < ev.size(); ++i)
          if (ev[i] - ev[i - 1] > 1e-4 * scale) cluster_start.push_back(static_cast<int>(i));
        cluster_start.push_back(static_cast<int>(ev.size()));
        bool shapes_ok = static_cast<int>(cluster_start.size()) == d + 1;
        for (size_t c = 0; c + 1 < cluster_start.size() && shapes_ok; ++c) {
          const int lo = cluster_start[c], hi = cluster_start[c + 1];
          shapes_ok = hi - lo == d && ev[hi - 1] - ev[lo] < 1e-7 * scale;
        }
        if (!shapes_ok) continue;
        const CMat u = es.eigenvectors().leftCols(d);
        std::vector<CMat> mats(n);
        for (int g = 0; g < n; ++g) mats[g] = u.adjoint() * sigma[g] * u;
        irrep = make_rep(group, std::move(mats));
        done = true;
      }
      if (!done)
        fail("decompose_regular: no attempt isolated a single copy of irreducible " +
             std::to_string(s));
    }

    double chi_dev = 0;
    for (int j = 0; j < classes.count(); ++j)
      chi_dev = std::max(chi_dev,
                         std::abs(irrep.mats[classes.reps[j]].trace() - out.table.values[s][j]));
    if (chi_dev > 1e-7) fail("decompose_regular: extracted copy has the wrong character");
    if (!is_irreducible(irrep)) fail("decompose_regular: extracted copy is not irreducible");
    out.irreps.push_back(std::move(irrep));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cosets and induction

std::vector<int> generating_set(const FiniteGroup& g) {
  std::vector<char> in(g.size, 0);
  in[g.identity] = 1;
  int covered = 1;
  std::vector<int> gens, closure{g.identity};
  while (covered < g.size) {
    int pick = -1;
    for (int x = 0; x < g.size; ++x)
      if (!in[x]) { pick = x; break; }
    gens.push_back(pick);
    // grow the closure with the new generator
    std::vector<int> frontier{pick};
    in[pick] = 1;
    closure.push_back(pick);
    ++covered;
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int x : frontier)
        for (size_t c = 0; c < closure.size(); ++c) {
          for (int y : {g.times(x, closure[c]), g.times(closure[c], x)})
            if (!in[y]) {
              in[y] = 1;
              closure.push_back(y);
              next.push_back(y);
              ++covered;
            }
        }
      frontier = std::move(next);
    }
  }
  std::sort(gens.begin(), gens.end());
  return gens;
}

RightCosets right_cosets(const FiniteGroup& g, const Subgroup& s) {
  const int n = g.size;
  std::vector<int> min_of(n, -1);
  for (int x = 0; x < n; ++x) {
    if (min_of[x] >= 0) continue;
    std::vector<int> coset;
    coset.reserve(s.embed.size());
    for (int e : s.embed) coset.push_back(g.times(e, x));
    const int m = *std::min_element(coset.begin(), coset.end());
    for (int y : coset) min_of[y] = m;
  }
  RightCosets rc;
  rc.reps = min_of;
  std::sort(rc.reps.begin(), rc.reps.end());
  rc.reps.erase(std::unique(rc.reps.begin(), rc.reps.end()), rc.reps.end());
  rc.coset_of.resize(n);
  for (int x = 0; x < n; ++x)
    rc.coset_of[x] = static_cast<int>(
        std::lower_bound(rc.reps.begin(), rc.reps.end(), min_of[x]) - rc.reps.begin());
  return rc;
}

MatrixRep induce(GroupPtr group, const Subgroup& s, const MatrixRep& sigma) {
  if (!sigma.group->same_structure(*s.table))
    throw std::invalid_argument("induce: representation does not live on the subgroup");
  const RightCosets rc = right_cosets(*group, s);
  const int m = static_cast<int>(rc.reps.size());
  const int ds = sigma.dim;
  std::unordered_map<int, int> sub_index;
  for (int i = 0; i < static_cast<int>(s.embed.size()); ++i) sub_index[s.embed[i]] = i;

  std::vector<CMat> mats(group->size);
  for (int g = 0; g < group->size; ++g) {
    CMat mat = CMat::Zero(static_cast<Eigen::Index>(m) * ds, static_cast<Eigen::Index>(m) * ds);
    for (int i = 0; i < m; ++i) {
      const int x = group->times(rc.reps[i], g);
      const int j = rc.coset_of[x];
      const int sel = group->times(x, group->inverse(rc.reps[j]));
      auto it = sub_index.find(sel);
      if (it == sub_index.end()) fail("induce: coset representative bookkeeping broke");
      mat.block(static_cast<Eigen::Index>(i) * ds, static_cast<Eigen::Index>(j) * ds, ds, ds) =
          sigma.mats[it->second];
    }
    mats[g] = std::move(mat);
  }
  return make_rep(group, std::move(mats));
}

}  // namespace finrep
