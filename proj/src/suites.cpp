#include "finrep/suites.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace finrep {

namespace {

std::string format_dev(double dev) {
  std::ostringstream out;
  out.precision(3);
  out << std::scientific << dev;
  return out.str();
}

// Lazily shared inputs for the suites that work through the irreducibles.
struct SuiteContext {
  SemidirectPtr g;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  FaultMode fault = FaultMode::none;

  std::optional<IrrepDecomposition> dec;
  std::optional<std::vector<Orbit>> orbs;

  const IrrepDecomposition& irreps() {
    if (!dec) dec = decompose_regular(g->table(), seed);
    return *dec;
  }
  const std::vector<Orbit>& dual_orbits() {
    if (!orbs) orbs = orbits(dual_action(*g));
    return *orbs;
  }
  // Validation tolerance for systems built from conjugated data; conjugation
  // inflates roundoff past the verification tolerance for exact inputs.
  double loose() const { return std::max(tol, 1e-7); }
};

std::vector<std::vector<int>> subgroups_of(const FiniteAbelianGroup& a) {
  std::vector<std::vector<int>> out;
  const auto add = [&out](std::vector<int> u) {
    if (std::find(out.begin(), out.end(), u) == out.end()) out.push_back(std::move(u));
  };
  for (int x = 0; x < a.size(); ++x) add(generated_subgroup(a, {x}));
  std::vector<int> full(a.size());
  for (int x = 0; x < a.size(); ++x) full[x] = x;
  add(full);
  return out;
}

SystemOfImprimitivity conjugated_system(const SystemOfImprimitivity& sys, const CMat& q,
                                        double tol) {
  const CMat q_inv = q.inverse();
  std::vector<CMat> mats;
  mats.reserve(sys.pi2.mats.size());
  for (const CMat& m : sys.pi2.mats) mats.push_back(q * m * q_inv);
  std::vector<CMat> atoms;
  atoms.reserve(sys.p.atoms.size());
  for (const CMat& p : sys.p.atoms) atoms.push_back(q * p * q_inv);
  return make_system(sys.group, make_rep(sys.pi2.group, std::move(mats), tol),
                     ProjectionValuedMeasure{sys.p.abelian, sys.p.dim, std::move(atoms)}, tol);
}

MatrixRep conjugated_rep(const MatrixRep& rep, const CMat& q, double tol) {
  const CMat q_inv = q.inverse();
  std::vector<CMat> mats;
  mats.reserve(rep.mats.size());
  for (const CMat& m : rep.mats) mats.push_back(q * m * q_inv);
  return make_rep(rep.group, std::move(mats), tol);
}

SuiteResult run_thm1(SuiteContext& ctx) {
  SuiteResult res{"thm1", true, 0.0, {}};
  const FiniteAbelianGroup& a = ctx.g->a_part();
  Rng rng(derive_seed(ctx.seed, 0x71));

  const int trials = 20;
  for (int i = 0; i < trials; ++i) {
    const RandomAbelianRep sample = random_smooth_rep(a, 3 + i % 6, rng);
    ProjectionValuedMeasure p = spectral_measure(sample.rep, ctx.loose());

    if (ctx.fault == FaultMode::drop_atom && i == 0) {
      const int chi = p.support().front();
      p.atoms[chi].setZero();
      const double dev = pvm_deviation(p);
      res.max_deviation = std::max(res.max_deviation, dev);
      if (dev > ctx.tol) {
        res.pass = false;
        res.notes.push_back("dropped atom at chi = " + std::to_string(chi) +
                            ": axiom deviation " + format_dev(dev));
      }
      continue;
    }

    double dev = pvm_deviation(p);
    const AbelianRep back = reconstruct_rep(p, ctx.loose());
    for (int x = 0; x < a.size(); ++x)
      dev = std::max(dev, max_abs(CMat(back.mats[x] - sample.rep.mats[x])));
    res.max_deviation = std::max(res.max_deviation, dev);
    if (dev > ctx.tol) {
      res.pass = false;
      res.notes.push_back("round trip " + std::to_string(i) + ": deviation " + format_dev(dev));
    }
  }
  res.notes.push_back(std::to_string(trials) + " spectral round trips");

  const std::vector<std::vector<int>> subs = subgroups_of(a);
  int pairs = 0;
  for (const std::vector<int>& u : subs)
    for (const std::vector<int>& u2 : subs) {
      const SubgroupLevel lu = make_level(a, u);
      const SubgroupLevel lu2 = make_level(a, u2);
      for (int i = 0; i < 3; ++i) {
        const RandomAbelianRep sample = random_smooth_rep(a, 5, rng);
        const PatchReport patch = verify_patching(sample.rep, lu, lu2, ctx.loose());
        res.max_deviation = std::max(res.max_deviation, patch.max_deviation);
        if (!patch.ok || patch.max_deviation > ctx.tol) {
          res.pass = false;
          res.notes.push_back("patching deviation " + format_dev(patch.max_deviation) + " at |U| = " +
                              std::to_string(u.size()) + ", |U'| = " + std::to_string(u2.size()));
        }
      }
      ++pairs;
    }
  res.notes.push_back(std::to_string(pairs) + " level pairs patched");
  return res;
}

SuiteResult run_lemma1(SuiteContext& ctx) {
  SuiteResult res{"lemma1", true, 0.0, {}};
  const IrrepDecomposition& dec = ctx.irreps();
  Rng rng(derive_seed(ctx.seed, 0x72));

  for (std::size_t k = 0; k < dec.irreps.size(); ++k) {
    const MatrixRep& pi = dec.irreps[k];
    SystemOfImprimitivity sys = restrict_to_system(ctx.g, pi, ctx.loose());

    if (ctx.fault == FaultMode::break_covariance) {
      const CMat q = random_invertible(pi.dim, rng);
      const CMat q_inv = q.inverse();
      for (CMat& atom : sys.p.atoms) atom = q * atom * q_inv;
    }

    const double cov = system_covariance_deviation(sys);
    res.max_deviation = std::max(res.max_deviation, cov);
    if (cov > ctx.tol) {
      res.pass = false;
      res.notes.push_back("irreducible " + std::to_string(k) + ": covariance deviation " +
                          format_dev(cov));
      continue;
    }

    const MatrixRep back = assemble(sys, ctx.loose());
    double dev = 0.0;
    for (int e = 0; e < ctx.g->size(); ++e)
      dev = std::max(dev, max_abs(CMat(back.mats[e] - pi.mats[e])));
    res.max_deviation = std::max(res.max_deviation, dev);
    if (dev > ctx.tol) {
      res.pass = false;
      res.notes.push_back("irreducible " + std::to_string(k) + ": round-trip deviation " +
                          format_dev(dev));
    }
  }
  res.notes.push_back(std::to_string(dec.irreps.size()) + " irreducibles restricted and assembled");
  return res;
}

SuiteResult run_lemma2(SuiteContext& ctx) {
  SuiteResult res{"lemma2", true, 0.0, {}};
  const IrrepDecomposition& dec = ctx.irreps();
  Rng rng(derive_seed(ctx.seed, 0x73));

  std::vector<SystemOfImprimitivity> systems;
  systems.reserve(dec.irreps.size());
  for (const MatrixRep& pi : dec.irreps)
    systems.push_back(restrict_to_system(ctx.g, pi, ctx.loose()));

  int conjugations = 0;
  for (std::size_t k = 0; k < dec.irreps.size(); ++k) {
    for (int trial = 0; trial < 5; ++trial) {
      const CMat q = random_invertible(dec.irreps[k].dim, rng);
      const SystemOfImprimitivity moved = conjugated_system(systems[k], q, ctx.loose());
      if (!systems_equivalent(systems[k], moved, ctx.seed).has_value()) {
        res.pass = false;
        res.notes.push_back("conjugate of irreducible " + std::to_string(k) +
                            " not detected equivalent as a system");
      }
      if (!equivalence(dec.irreps[k], conjugated_rep(dec.irreps[k], q, ctx.loose())).has_value()) {
        res.pass = false;
        res.notes.push_back("conjugate of irreducible " + std::to_string(k) +
                            " not detected equivalent as a representation");
      }
      ++conjugations;
    }
  }

  int cross = 0;
  for (std::size_t k = 0; k < systems.size(); ++k)
    for (std::size_t l = k + 1; l < systems.size(); ++l) {
      if (systems_equivalent(systems[k], systems[l], ctx.seed).has_value() ||
          equivalence(dec.irreps[k], dec.irreps[l]).has_value()) {
        res.pass = false;
        res.notes.push_back("irreducibles " + std::to_string(k) + " and " + std::to_string(l) +
                            " wrongly detected equivalent");
      }
      ++cross;
    }
  res.notes.push_back(std::to_string(conjugations) + " conjugations detected, " +
                      std::to_string(cross) + " cross pairs separated");
  return res;
}

SuiteResult run_lemma3(SuiteContext& ctx) {
  SuiteResult res{"lemma3", true, 0.0, {}};
  const IrrepDecomposition& dec = ctx.irreps();
  const std::vector<Orbit>& orbs = ctx.dual_orbits();

  std::vector<int> orbit_of_irrep(dec.irreps.size(), -1);
  for (std::size_t k = 0; k < dec.irreps.size(); ++k) {
    const SystemOfImprimitivity sys = restrict_to_system(ctx.g, dec.irreps[k], ctx.loose());
    const SupportReport sup = system_support(sys);
    if (sup.multiple || sup.orbit < 0 || sys.p.support() != orbs[sup.orbit].elements) {
      res.pass = false;
      res.notes.push_back("irreducible " + std::to_string(k) +
                          " is not supported on a single full orbit");
      continue;
    }
    orbit_of_irrep[k] = sup.orbit;
  }

  bool cross_checked = false;
  for (std::size_t k = 0; k < dec.irreps.size() && !cross_checked; ++k)
    for (std::size_t l = k + 1; l < dec.irreps.size() && !cross_checked; ++l) {
      if (orbit_of_irrep[k] < 0 || orbit_of_irrep[k] == orbit_of_irrep[l]) continue;
      const SystemOfImprimitivity sum =
          restrict_to_system(ctx.g, direct_sum(dec.irreps[k], dec.irreps[l]), ctx.loose());
      if (!system_support(sum).multiple) {
        res.pass = false;
        res.notes.push_back("cross-orbit direct sum not reported as multiple");
      }
      cross_checked = true;
    }
  res.notes.push_back(std::to_string(dec.irreps.size()) + " supports checked" +
                      (cross_checked ? ", cross-orbit sum reported multiple" : ""));
  return res;
}

SuiteResult run_transport(SuiteContext& ctx) {
  SuiteResult res{"transport", true, 0.0, {}};
  const IrrepDecomposition& dec = ctx.irreps();
  const std::vector<Orbit>& orbs = ctx.dual_orbits();
  const int he = ctx.g->h_part().identity;

  for (std::size_t k = 0; k < dec.irreps.size(); ++k) {
    const SystemOfImprimitivity sys = restrict_to_system(ctx.g, dec.irreps[k], ctx.loose());
    const int chi0 = orbs[system_support(sys).orbit].representative;
    TransportResult moved;
    try {
      moved = transport_to_induced(sys, chi0, ctx.loose());
    } catch (const std::exception& e) {
      res.pass = false;
      res.notes.push_back("irreducible " + std::to_string(k) + ": " + e.what());
      continue;
    }

    const int dim = moved.induced.pi2.dim;
    const int m = static_cast<int>(moved.orbit_chars.size());
    const int d0 = dim / m;
    double dev = max_abs(CMat(moved.t * moved.t_inv - CMat::Identity(dim, dim)));
    dev = std::max(dev,
                   max_abs(CMat(moved.t_inv * moved.t - CMat::Identity(sys.pi2.dim, sys.pi2.dim))));

    const MatrixRep model = assemble(moved.induced, ctx.loose());
    for (int x = 0; x < ctx.g->a_part().size(); ++x) {
      CMat want = CMat::Zero(dim, dim);
      for (int j = 0; j < m; ++j)
        want.block(j * d0, j * d0, d0, d0) =
            char_value(ctx.g->a_part(), moved.orbit_chars[j], x) * CMat::Identity(d0, d0);
      dev = std::max(dev, max_abs(CMat(model.mats[ctx.g->index_of(he, x)] - want)));
    }
    res.max_deviation = std::max(res.max_deviation, dev);
    if (dev > ctx.tol) {
      res.pass = false;
      res.notes.push_back("irreducible " + std::to_string(k) + ": induced-model deviation " +
                          format_dev(dev));
    }
  }
  res.notes.push_back(std::to_string(dec.irreps.size()) + " transports verified");
  return res;
}

SuiteResult run_hom(SuiteContext& ctx) {
  SuiteResult res{"hom", true, 0.0, {}};
  const std::vector<Orbit>& orbs = ctx.dual_orbits();
  for (std::size_t oi = 0; oi < orbs.size(); ++oi)
    if (!hom_correspondence_check(ctx.g, orbs[oi].representative, ctx.seed)) {
      res.pass = false;
      res.notes.push_back("hom matrices differ on orbit " + std::to_string(oi));
    }
  res.notes.push_back(std::to_string(orbs.size()) + " orbits compared");
  return res;
}

}  // namespace

FaultMode fault_from_string(const std::string& s) {
  if (s.empty() || s == "none") return FaultMode::none;
  if (s == "break-covariance") return FaultMode::break_covariance;
  if (s == "drop-atom") return FaultMode::drop_atom;
  throw std::invalid_argument("unknown fault mode '" + s +
                              "' (known: none, break-covariance, drop-atom)");
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"thm1",   "lemma1",    "lemma2",
                                                 "lemma3", "transport", "hom"};
  return names;
}

std::vector<SuiteResult> run_suites(const SemidirectPtr& g, const std::string& which,
                                    FaultMode fault, std::uint64_t seed, double tol) {
  if (!g) throw std::invalid_argument("run_suites: missing group");
  if (tol <= 0) throw std::invalid_argument("run_suites: tolerance must be positive");
  const std::vector<std::string>& names = suite_names();
  if (which != "all" && std::find(names.begin(), names.end(), which) == names.end())
    throw std::invalid_argument("unknown suite '" + which + "' (known: all, thm1, lemma1, lemma2, "
                                "lemma3, transport, hom)");

  SuiteContext ctx{g, seed, tol, fault, {}, {}};
  std::vector<SuiteResult> out;
  for (const std::string& name : names) {
    if (which != "all" && which != name) continue;
    if (name == "thm1") out.push_back(run_thm1(ctx));
    else if (name == "lemma1") out.push_back(run_lemma1(ctx));
    else if (name == "lemma2") out.push_back(run_lemma2(ctx));
    else if (name == "lemma3") out.push_back(run_lemma3(ctx));
    else if (name == "transport") out.push_back(run_transport(ctx));
    else out.push_back(run_hom(ctx));
  }
  return out;
}

}  // namespace finrep
