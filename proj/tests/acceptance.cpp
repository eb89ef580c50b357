// Acceptance gate: one criterion per numbered check, each printing a single
// pass/fail line with its headline numbers and elapsed time. Exit 0 only if
// every selected criterion passes. Criterion 11 shells out to the CLI given
// on the command line: acceptance [number [cli_path data_dir]].

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "orlicz/convexity.hpp"
#include "orlicz/duality.hpp"
#include "orlicz/errors.hpp"
#include "orlicz/numeric.hpp"
#include "orlicz/orlicz_module.hpp"

using namespace orlicz;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  const char* label;
  double cap_seconds;
  std::function<Outcome()> run;
};

std::string g_cli_path;
std::string g_data_dir;

double rel_gap(double got, double want) {
  return std::fabs(got - want) / std::max(1.0, std::fabs(want));
}

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(3) << v;
  return os.str();
}

ProbSpacePtr random_space(Rng& rng, std::size_t max_atoms) {
  const std::size_t m = 1 + rng.index(max_atoms);
  std::vector<double> w(m);
  double sum = 0.0;
  for (auto& v : w) {
    v = 0.1 + rng.uniform();
    sum += v;
  }
  for (auto& v : w) v /= sum;
  return make_space(std::move(w));
}

RandomVariable random_variable(Rng& rng, const ProbSpacePtr& s, bool allow_zero) {
  std::vector<double> v(s->atom_count());
  for (auto& x : v) x = 1.5 * rng.normal();
  if (allow_zero && s->atom_count() > 1) v[rng.index(v.size())] = 0.0;
  return RandomVariable(s, std::move(v));
}

double fiber_exponent(Rng& rng) {
  switch (rng.index(4)) {
    case 0: return 1.0;
    case 1: return 2.0;
    case 2: return kInf;
    default: return 1.0 + 3.0 * rng.uniform();
  }
}

// --- 01: conjugates of the power family in closed form -------------------

Outcome c01() {
  Outcome out;
  double worst = 0.0;
  for (double p : {1.5, 2.0, 3.0, 4.0}) {
    const double q = p / (p - 1.0);
    const YoungFunction psi = YoungFunction::power(p).conjugate();
    for (double s : linear_grid(0.0, 10.0, 100)) {
      const double want = std::pow(p, 1.0 - q) / q * std::pow(s, q);
      worst = std::max(worst, std::fabs(psi(s) - want));
    }
  }
  out.pass = worst <= 1e-9;

  const YoungFunction unit = YoungFunction::power(1.0).conjugate();
  const bool jump_ok = unit.jump_point() &&
                       std::fabs(*unit.jump_point() - 1.0) <= 1e-9 &&
                       unit(0.5) == 0.0 && unit(2.0) == kInf;
  out.pass = out.pass && jump_ok;
  out.detail = "max grid gap " + fmt(worst) + ", unit jump " +
               (jump_ok ? "ok" : "WRONG");
  return out;
}

// --- 02: biconjugation across every family --------------------------------

Outcome c02() {
  Outcome out;
  double worst_closed = 0.0, worst_grid = 0.0;

  const auto gap_on = [](const YoungFunction& a, const YoungFunction& b,
                         double hi) {
    double gap = 0.0;
    for (double t : linear_grid(0.0, hi, 80)) {
      const double va = a(t), vb = b(t);
      if (va == kInf && vb == kInf) continue;
      if (va == kInf || vb == kInf) return kInf;
      gap = std::max(gap, std::fabs(va - vb));
    }
    return gap;
  };

  for (const auto& phi :
       {YoungFunction::power(1.5), YoungFunction::power(2.0),
        YoungFunction::power(3.0), YoungFunction::power(4.0),
        YoungFunction::scaled_power(2.0, 2.5)})
    worst_closed = std::max(worst_closed, gap_on(phi, phi.conjugate().conjugate(), 6.0));

  {
    const auto phi = YoungFunction::linear_jump(1.5);
    const auto bi = phi.conjugate().conjugate();
    worst_closed = std::max(worst_closed, gap_on(phi, bi, 1.49));
    if (!bi.jump_point() || std::fabs(*bi.jump_point() - 1.5) > 1e-9)
      worst_closed = kInf;
  }

  for (const auto& phi :
       {YoungFunction::piecewise_linear({1.0, 2.0}, {0.5, 2.0, 4.0}),
        YoungFunction::piecewise_linear({1.0, 2.0}, {0.5, 2.0})}) {
    const auto bi = phi.conjugate().conjugate();
    const double stop = phi.jump_point() ? *phi.jump_point() * 0.95 : 5.0;
    worst_grid = std::max(worst_grid, gap_on(phi, bi, stop));
  }

  {
    std::vector<double> ts, ys;
    for (int i = 0; i <= 60; ++i) {
      const double t = i * 0.05;
      ts.push_back(t);
      ys.push_back(t * t);
    }
    const auto lin = YoungFunction::tabulated(ts, ys, YoungFunction::Tail::linear);
    worst_grid = std::max(worst_grid, gap_on(lin, lin.conjugate().conjugate(), 2.8));
    const auto jmp = YoungFunction::tabulated(ts, ys, YoungFunction::Tail::jump);
    worst_grid = std::max(worst_grid, gap_on(jmp, jmp.conjugate().conjugate(), 2.8));
  }

  out.pass = worst_closed <= 1e-9 && worst_grid <= 1e-4;
  out.detail =
      "closed-form gap " + fmt(worst_closed) + ", grid gap " + fmt(worst_grid);
  return out;
}

// --- 03: power growth reduces to the p-mean -------------------------------

Outcome c03() {
  Outcome out;
  Rng rng(2026);
  double worst_lux = 0.0, worst_orl = 0.0;

  for (int k = 0; k < 100; ++k) {
    const auto s = random_space(rng, 8);
    const double p = 1.1 + 2.9 * rng.uniform();
    const double q = p / (p - 1.0);
    OrliczContext ctx(YoungFunction::power(p), s);
    const RandomVariable xi = random_variable(rng, s, true);
    double mean = 0.0;
    for (std::size_t i = 0; i < s->atom_count(); ++i)
      mean += s->weight(i) * std::pow(std::fabs(xi[i]), p);
    const double pmean = std::pow(mean, 1.0 / p);
    worst_lux = std::max(worst_lux, std::fabs(luxemburg_norm(ctx, xi) - pmean));
    const double factor = std::pow(p, 1.0 / p) * std::pow(q, 1.0 / q);
    worst_orl =
        std::max(worst_orl, rel_gap(orlicz_norm(ctx, xi), factor * pmean));
  }

  for (int k = 0; k < 100; ++k) {
    const auto s = random_space(rng, 8);
    const double p = 1.1 + 2.9 * rng.uniform();
    const double q = p / (p - 1.0);
    OrliczContext ctx(YoungFunction::power(p), s);
    const std::size_t n = 1 + rng.index(4);
    std::vector<double> pf(s->atom_count());
    for (auto& v : pf) v = fiber_exponent(rng);
    const auto mod = make_module(s, n, pf);
    const ModuleOrliczContext mctx(ctx, mod);
    std::vector<double> flat(s->atom_count() * n);
    for (auto& v : flat) v = rng.normal();
    const ModuleElement x(mod, std::move(flat));
    const RandomVariable nx = random_norm(x);
    double mean = 0.0;
    for (std::size_t i = 0; i < s->atom_count(); ++i)
      mean += s->weight(i) * std::pow(nx[i], p);
    const double pmean = std::pow(mean, 1.0 / p);
    worst_lux = std::max(
        worst_lux, std::fabs(module_norm(mctx, x, NormFlavor::luxemburg) - pmean));
    const double factor = std::pow(p, 1.0 / p) * std::pow(q, 1.0 / q);
    worst_orl = std::max(
        worst_orl, rel_gap(module_norm(mctx, x, NormFlavor::orlicz), factor * pmean));
  }

  out.pass = worst_lux <= 1e-9 && worst_orl <= 1e-6;
  out.detail = "lux gap " + fmt(worst_lux) + ", orlicz rel gap " + fmt(worst_orl);
  return out;
}

// --- 04: amemiya route against the brute-force oracle ---------------------

Outcome c04() {
  Outcome out;
  Rng rng(404);
  double worst = 0.0;
  for (int k = 0; k < 50; ++k) {
    const auto s = random_space(rng, 3);
    YoungFunction phi = YoungFunction::power(2.0);
    switch (k == 0 ? 3 : rng.index(3)) {
      case 0: phi = YoungFunction::power(1.2 + 2.0 * rng.uniform()); break;
      case 1: phi = YoungFunction::scaled_power(0.5 + rng.uniform(), 1.5 + rng.uniform()); break;
      case 2: phi = YoungFunction::piecewise_linear({0.5, 1.5}, {0.5, 2.0, 5.0}); break;
      default: phi = YoungFunction::linear_jump(1.2); break;
    }
    OrliczContext ctx(phi, s);
    const RandomVariable xi = random_variable(rng, s, k % 3 == 0);
    const double fast = orlicz_norm(ctx, xi);
    const double slow = orlicz_norm_oracle(ctx, xi, 1 + k);
    worst = std::max(worst, rel_gap(fast, slow));
  }
  out.pass = worst <= 1e-4;
  out.detail = "worst rel gap " + fmt(worst) + " over 50 instances";
  return out;
}

// --- 05: holder pairs and the two-sided norm comparison -------------------

Outcome c05() {
  Outcome out;
  Rng rng(505);
  long long violations = 0;
  std::string first;

  const auto note = [&](const char* what, int k) {
    ++violations;
    if (first.empty()) first = std::string(what) + " at pair " + std::to_string(k);
  };

  for (int k = 0; k < 10000; ++k) {
    const auto s = random_space(rng, 6);
    YoungFunction phi = YoungFunction::power(2.0);
    switch (rng.index(4)) {
      case 0: phi = YoungFunction::power(1.0 + 3.0 * rng.uniform()); break;
      case 1: phi = YoungFunction::scaled_power(0.5 + rng.uniform(), 1.2 + 2.0 * rng.uniform()); break;
      case 2: phi = YoungFunction::piecewise_linear({0.7, 1.8}, {0.6, 2.2, 5.5}); break;
      default: phi = YoungFunction::linear_jump(0.5 + rng.uniform()); break;
    }
    OrliczContext ctx(phi, s);
    const OrliczContext dual = ctx.swapped();
    const RandomVariable xi = random_variable(rng, s, k % 4 == 0);
    const RandomVariable eta = random_variable(rng, s, k % 5 == 0);

    const double lux_xi = luxemburg_norm(ctx, xi);
    const double orl_xi = orlicz_norm(ctx, xi);
    const double orl_eta_dual = orlicz_norm(dual, eta);

    if (std::fabs(expectation(xi * eta)) > lux_xi * orl_eta_dual + 1e-9)
      note("holder", k);

    const double c = 0.25 + 3.0 * rng.uniform();
    if (std::fabs(luxemburg_norm(ctx, c * xi) - c * lux_xi) >
        1e-9 * std::max(1.0, c * lux_xi))
      note("lux homogeneity", k);
    if (std::fabs(orlicz_norm(ctx, c * xi) - c * orl_xi) >
        1e-9 * std::max(1.0, c * orl_xi))
      note("orlicz homogeneity", k);

    const double lux_eta = luxemburg_norm(ctx, eta);
    const double orl_eta = orlicz_norm(ctx, eta);
    if (luxemburg_norm(ctx, xi + eta) >
        lux_xi + lux_eta + 1e-9 * std::max(1.0, lux_xi + lux_eta))
      note("lux triangle", k);
    if (orlicz_norm(ctx, xi + eta) >
        orl_xi + orl_eta + 1e-9 * std::max(1.0, orl_xi + orl_eta))
      note("orlicz triangle", k);

    if (lux_xi > orl_xi + 1e-9 || orl_xi > 2.0 * lux_xi + 1e-9)
      note("two-sided comparison", k);

    std::vector<double> shrunk(s->atom_count());
    for (std::size_t i = 0; i < shrunk.size(); ++i)
      shrunk[i] = xi[i] * rng.uniform();
    const RandomVariable inner(s, std::move(shrunk));
    if (luxemburg_norm(ctx, inner) > lux_xi + 1e-9) note("monotonicity", k);

    if (phi.finite_everywhere() && !xi.is_zero()) {
      if (modular(ctx, xi, lux_xi) > 1.0 + 1e-9) note("modular at norm", k);
      if (modular(ctx, xi, lux_xi * (1.0 - 1e-6)) < 1.0 - 1e-6)
        note("modular below norm", k);
    }
  }

  out.pass = violations == 0;
  out.detail = violations == 0
                   ? "0 violations over 1e4 pairs"
                   : std::to_string(violations) + " violations, first: " + first;
  return out;
}

// --- 06: duality isometry over the scenario grid --------------------------

Outcome c06() {
  Outcome out;
  double worst = 0.0;
  int ran = 0;
  std::string first;

  const std::vector<std::pair<std::size_t, std::size_t>> sizes{{2, 2}, {3, 2}, {4, 3}};
  int scenario = 0;
  for (double p_young : {1.5, 2.0, 3.0}) {
    for (int fiber_kind = 0; fiber_kind < 4; ++fiber_kind) {
      for (const auto& [m, n] : sizes) {
        ++scenario;
        const auto s = uniform_space(m);
        std::vector<double> pf(m);
        for (std::size_t i = 0; i < m; ++i) {
          const double menu[4] = {1.0, 2.0, kInf, 1.0 + static_cast<double>((i + fiber_kind) % 3)};
          pf[i] = fiber_kind < 3 ? menu[fiber_kind] : menu[3];
        }
        const auto mod = make_module(s, n, pf);
        const ModuleOrliczContext mctx(
            OrliczContext(YoungFunction::power(p_young), s), mod);
        Rng rng(1000 + scenario);
        std::vector<double> flat(m * n);
        for (auto& v : flat) v = rng.normal();
        flat[0] += 1.0;  // keep f away from zero
        const RandomFunctional f(mod, std::move(flat));
        for (const auto flavor : {NormFlavor::luxemburg, NormFlavor::orlicz}) {
          const IsometryReport rep = isometry_check(f, mctx, flavor, 500, 11);
          const double gap = std::fabs(rep.lhs - rep.rhs) / std::max(rep.rhs, 1.0);
          worst = std::max(worst, gap);
          ++ran;
          if (!rep.pass && first.empty())
            first = "scenario " + std::to_string(scenario) +
                    (flavor == NormFlavor::luxemburg ? " lux" : " orl");
        }
      }
    }
  }

  out.pass = worst <= 1e-4 && first.empty();
  out.detail = "worst rel gap " + fmt(worst) + " over " + std::to_string(ran) +
               " checks" + (first.empty() ? "" : ", first fail " + first);
  return out;
}

// --- 07: kernel recovery round trip ----------------------------------------

Outcome c07() {
  Outcome out;
  Rng rng(707);
  double worst_entry = 0.0, worst_span = 0.0, worst_xg = 0.0;

  for (int k = 0; k < 100; ++k) {
    const auto s = random_space(rng, 4);
    const std::size_t n = 1 + rng.index(3);
    std::vector<double> pf(s->atom_count());
    for (auto& v : pf) v = fiber_exponent(rng);
    const auto mod = make_module(s, n, pf);
    const double menu[3] = {1.5, 2.0, 3.0};
    const ModuleOrliczContext mctx(
        OrliczContext(YoungFunction::power(menu[rng.index(3)]), s), mod);
    std::vector<double> flat(s->atom_count() * n);
    for (auto& v : flat) v = rng.normal();
    if (k % 7 == 0) flat[rng.index(flat.size())] = 0.0;
    const RandomFunctional f(mod, flat);
    const EmbeddedFunctional tf = embed(f, mctx);
    const RepresentReport rep =
        represent([&](const ModuleElement& x) { return tf(x); }, mctx, 7 + k);
    for (std::size_t i = 0; i < flat.size(); ++i)
      worst_entry = std::max(worst_entry, std::fabs(rep.f.flat()[i] - flat[i]));
    worst_span = std::max(worst_span, rep.max_spanning_residual);
    for (std::size_t i = 0; i < rep.x_g.size(); ++i)
      worst_xg = std::max(worst_xg, std::fabs(rep.x_g[i] - rep.dual_norm_of_f[i]));
  }

  out.pass = worst_entry <= 1e-12 && worst_span <= 1e-9 && worst_xg <= 1e-12;
  out.detail = "entry gap " + fmt(worst_entry) + ", spanning " + fmt(worst_span) +
               ", dual-norm field gap " + fmt(worst_xg);
  return out;
}

// --- 08: truncations reach their target, cauchy tails settle ---------------

Outcome c08() {
  Outcome out;
  Rng rng(808);
  bool all_zero = true;
  int worst_level = 0;
  bool all_cauchy = true, all_metric = true;

  for (int k = 0; k < 100; ++k) {
    const auto s = random_space(rng, 4);
    const std::size_t n = 1 + rng.index(3);
    std::vector<double> pf(s->atom_count());
    for (auto& v : pf) v = fiber_exponent(rng);
    const auto mod = make_module(s, n, pf);
    const double menu[3] = {1.5, 2.0, 3.0};
    const ModuleOrliczContext mctx(
        OrliczContext(YoungFunction::power(menu[rng.index(3)]), s), mod);
    std::vector<double> flat(s->atom_count() * n);
    for (auto& v : flat) v = 3.0 * rng.normal();
    const ModuleElement x(mod, std::move(flat));

    const DensityReport d = density_check(mctx, x, 1e-300);
    all_zero = all_zero && d.distance == 0.0;
    worst_level = std::max(worst_level, d.n);

    std::vector<double> dirflat(s->atom_count() * n);
    for (auto& v : dirflat) v = rng.normal();
    const ModuleElement dir(mod, std::move(dirflat));
    std::vector<ModuleElement> seq;
    for (int j = 0; j < 40; ++j) seq.push_back(x + std::pow(0.5, j) * dir);
    const CauchyReport r = cauchy_limit_check(mctx, seq, 1e-4);
    all_cauchy = all_cauchy && r.cauchy && r.converges;
    all_metric = all_metric && r.metric_cauchy;
  }

  out.pass = all_zero && all_cauchy && all_metric;
  out.detail = std::string(all_zero ? "every distance exactly 0" : "NONZERO distance") +
               ", deepest level " + std::to_string(worst_level) +
               (all_cauchy ? ", tails settle" : ", tail FAILURE") +
               (all_metric ? ", metric follows" : ", metric FAILURE");
  return out;
}

// --- 09: strict convexity quadrants ----------------------------------------

Outcome c09() {
  Outcome out;
  std::ostringstream detail;

  {
    const auto s = uniform_space(2);
    const ModuleOrliczContext mctx(OrliczContext(YoungFunction::power(2.0), s),
                                   make_module(s, 2, 2.0));
    bool clean = true;
    for (const auto flavor : {NormFlavor::luxemburg, NormFlavor::orlicz}) {
      const ModuleOrliczSpace space(mctx, flavor);
      const auto v = strict_convexity_falsifier(space, 100000, 9);
      clean = clean && v.status == ConvexityVerdict::Status::verified_by_search;
    }
    out.pass = out.pass && clean;
    detail << "round case " << (clean ? "clean" : "FALSIFIED");
  }

  {
    const auto s = uniform_space(2);
    const ModuleOrliczContext mctx(OrliczContext(YoungFunction::power(2.0), s),
                                   make_module(s, 2, 1.0));
    const auto rep = equivalence_harness(mctx, NormFlavor::luxemburg, 100000, 9);
    const bool ok = !rep.fibers.all_verified &&
                    rep.composite.status == ConvexityVerdict::Status::falsified &&
                    rep.fiber_lift && rep.lifts_valid && rep.consistent;
    out.pass = out.pass && ok;
    detail << ", flat-fiber lift " << (ok ? "ok" : "BROKEN");
  }

  {
    const auto s = uniform_space(2);
    const ModuleOrliczContext mctx(OrliczContext(YoungFunction::power(1.0), s),
                                   make_module(s, 2, 2.0));
    const auto rep = equivalence_harness(mctx, NormFlavor::luxemburg, 100000, 9);
    const bool ok = rep.scalar.status == ConvexityVerdict::Status::falsified &&
                    rep.composite.status == ConvexityVerdict::Status::falsified &&
                    rep.scalar_lift && rep.lifts_valid && rep.consistent;
    out.pass = out.pass && ok;
    detail << ", linear-growth lift " << (ok ? "ok" : "BROKEN");
  }

  out.detail = detail.str();
  return out;
}

// --- 10: moduli of convexity against the closed form -----------------------

Outcome c10() {
  Outcome out;
  std::ostringstream detail;
  const auto s = uniform_space(2);

  {
    const auto mod = make_module(s, 2, 2.0);
    const FiberSpace fiber(mod, 0);
    double worst = 0.0;
    for (double eps : {0.2, 1.0, 2.0}) {
      const auto est = modulus_of_convexity(fiber, eps, 1000000, 10);
      const double want = 1.0 - std::sqrt(1.0 - eps * eps / 4.0);
      worst = std::max(worst, std::fabs(est.delta - want));
    }
    out.pass = out.pass && worst <= 1e-4;
    detail << "round gap " << fmt(worst);
  }

  {
    const auto mod = make_module(s, 2, 1.0);
    const FiberSpace fiber(mod, 0);
    const auto est = modulus_of_convexity(fiber, 0.5, 1000000, 10);
    out.pass = out.pass && est.delta <= 1e-6;
    detail << ", flat delta " << fmt(est.delta);
  }

  {
    const ModuleOrliczContext mctx(OrliczContext(YoungFunction::power(2.0), s),
                                   make_module(s, 2, 2.0));
    bool flags = false;
    for (double eps : {0.5, 1.0})
      flags = flags ||
              modulus_harness(mctx, NormFlavor::luxemburg, eps, 20000, 10).contradiction;
    const ModuleOrliczContext mixed(OrliczContext(YoungFunction::power(2.0), s),
                                    make_module(s, 2, std::vector<double>{2.0, 1.0}));
    flags = flags ||
            modulus_harness(mixed, NormFlavor::luxemburg, 1.0, 20000, 10).contradiction;
    out.pass = out.pass && !flags;
    detail << ", contradictions " << (flags ? "RAISED" : "none");
  }

  out.detail = detail.str();
  return out;
}

// --- 11: reports are byte-identical for a fixed scenario and seed ----------

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Outcome c11() {
  Outcome out;
  if (g_cli_path.empty() || g_data_dir.empty()) {
    out.pass = false;
    out.detail = "needs the cli path and data dir on the command line";
    return out;
  }

  const std::string scenario = g_data_dir + "/duality_small.json";
  const std::vector<std::string> jobs{
      " duality-check --scenario " + scenario + " --name f --flavor luxemburg",
      " convexity falsify --scenario " + g_data_dir + "/l1_module.json --flavor orlicz",
      " harness remark58 --scenario " + scenario +
          " --eps-list 0.5,1.0 --budget 4000",
  };

  bool identical = true;
  bool nonempty = true;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const std::string a = "acceptance_rep_a" + std::to_string(i) + ".json";
    const std::string b = "acceptance_rep_b" + std::to_string(i) + ".json";
    const std::string base = g_cli_path + jobs[i];
    if (std::system((base + " --out " + a + " > /dev/null").c_str()) < 0 ||
        std::system((base + " --out " + b + " > /dev/null").c_str()) < 0) {
      out.pass = false;
      out.detail = "could not spawn the cli";
      return out;
    }
    const std::string ra = slurp(a), rb = slurp(b);
    identical = identical && ra == rb;
    nonempty = nonempty && !ra.empty();
    std::remove(a.c_str());
    std::remove(b.c_str());
  }

  out.pass = identical && nonempty;
  out.detail = std::string(identical ? "3 report pairs identical" : "byte DRIFT") +
               (nonempty ? "" : ", EMPTY report");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "power-family conjugates in closed form", 1.0, c01},
      {2, "biconjugation returns every family", 5.0, c02},
      {3, "norm identities against the p-mean", 10.0, c03},
      {4, "amemiya norm against the oracle", 60.0, c04},
      {5, "holder and two-sided comparisons", 30.0, c05},
      {6, "duality isometry grid", 300.0, c06},
      {7, "kernel recovery round trip", 30.0, c07},
      {8, "truncation density and cauchy tails", 10.0, c08},
      {9, "strict convexity quadrants", 180.0, c09},
      {10, "moduli of convexity", 300.0, c10},
      {11, "byte-identical reports", 60.0, c11},
  };

  int selected = 0;
  if (argc > 1) selected = std::atoi(argv[1]);
  if (argc > 2) g_cli_path = argv[2];
  if (argc > 3) g_data_dir = argv[3];

  bool all_pass = true;
  for (const auto& c : criteria) {
    if (selected != 0 && c.id != selected) continue;
    if (selected == 0 && c.id == 11 && g_cli_path.empty()) {
      std::printf("[SKIP] %02d %s (pass the cli path and data dir to run)\n", c.id,
                  c.label);
      continue;
    }
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool timely = secs <= c.cap_seconds;
    const bool pass = out.pass && timely;
    all_pass = all_pass && pass;
    std::printf("[%s] %02d %s (%s, %.2fs%s)\n", pass ? "PASS" : "FAIL", c.id,
                c.label, out.detail.c_str(), secs,
                timely ? "" : " OVER BUDGET");
  }
  return all_pass ? 0 : 1;
}
