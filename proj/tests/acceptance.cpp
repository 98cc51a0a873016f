// Acceptance gate: one PASS/FAIL line per criterion, tolerances fixed here.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ringcat/cat_metrics.hpp"
#include "ringcat/effective.hpp"
#include "ringcat/hamiltonian.hpp"
#include "ringcat/loop_model.hpp"
#include "ringcat/solver.hpp"

using namespace ringcat;

namespace {

constexpr double kPi = std::numbers::pi;

constexpr double kSpectralTol = 1e-9;
constexpr double kSectorTol = 1e-14;
constexpr double kZeroCoupling = 1e-12;
constexpr double kBalanceTol = 1e-8;
constexpr double kCaptured3 = 0.994;  // exact diagonalization gives 0.99486
constexpr double kCaptured6 = 0.981;  // 0.98181
constexpr double kCaptured9 = 0.974;  // 0.97466
constexpr double kFitTol = 0.05;
constexpr double kGroundTol = 1e-12;
constexpr double kGapTol = 0.05;
constexpr double kTermTol = 1e-12;
constexpr double kBarrierGapTol = 0.02;
constexpr double kRuntimeSpectral = 5.0;
constexpr double kRuntimeScan = 10.0;

int failures = 0;

void report(int id, bool ok, const std::string& what, const std::string& detail) {
  std::printf("%s criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", id, what.c_str(), detail.c_str());
  if (!ok) ++failures;
}

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, a, b, c);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

ModelParams contact(int n, double u, double phi = kPi) {
  ModelParams p;
  p.n = n;
  p.u = u;
  p.phi = phi;
  return p;
}

RealVector all_eigenvalues(const ComplexMatrix& m) {
  return Eigen::SelfAdjointEigenSolver<ComplexMatrix>(m, Eigen::EigenvaluesOnly).eigenvalues();
}

double relative_spectral_gap(const ComplexMatrix& a, const ComplexMatrix& b) {
  const RealVector ea = all_eigenvalues(a), eb = all_eigenvalues(b);
  return (ea - eb).cwiseAbs().maxCoeff() / std::max(1.0, ea.cwiseAbs().maxCoeff());
}

std::array<std::size_t, 2> targets(const FockBasis& b) {
  return {b.index({b.particles(), 0, 0}), b.index({0, b.particles(), 0})};
}

void spectral_equivalence() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (int n = 2; n <= 8; ++n)
    for (double u : {0.0, 0.1, 1.0})
      for (double phi : {0.0, kPi / 2.0, kPi}) {
        const ModelParams p = contact(n, u, phi);
        worst = std::max(worst, relative_spectral_gap(build_site_hamiltonian(p).matrix(),
                                                      build_flow_hamiltonian(p).matrix()));
      }
  const double elapsed = seconds_since(t0);
  report(1, worst < kSpectralTol && elapsed < kRuntimeSpectral,
         "site and flow spectra agree for N=2..8",
         fmt("max relative deviation %.2e, %.2f s", worst, elapsed));
}

void block_structure() {
  double worst = 0.0;
  bool sectors_ok = true;
  for (int n = 1; n <= 6; ++n) {
    for (double phi : {0.0, 1.0, kPi}) {
      const auto h = build_flow_hamiltonian(contact(n, 0.5, phi));
      const auto basis = h.basis();
      for (Eigen::Index r = 0; r < h.dimension(); ++r)
        for (Eigen::Index c = 0; c < h.dimension(); ++c)
          if (quasimomentum_sector(basis[static_cast<std::size_t>(r)]) !=
              quasimomentum_sector(basis[static_cast<std::size_t>(c)]))
            worst = std::max(worst, std::abs(h(r, c)));
    }
    const bool shared = quasimomentum_sector({n, 0, 0}) == quasimomentum_sector({0, n, 0});
    sectors_ok = sectors_ok && (shared == (n % 3 == 0));
  }
  report(2, worst < kSectorTol && sectors_ok, "flow Hamiltonian is block diagonal in quasi-momentum",
         fmt("largest cross-sector element %.1e, commensurate sharing ", worst) +
             (sectors_ok ? "ok" : "wrong"));
}

void commensurability() {
  bool ok = true;
  std::string detail;
  for (int n : {4, 5}) {
    const auto h = build_flow_hamiltonian(contact(n, 0.1));
    const auto [a, b] = targets(h.basis());
    const CouplingGraph g(h);
    std::size_t paths = 0;
    for (int order = 1; order <= 8; ++order) paths += path_coupling(g, a, b, h(0, 0).real(), order).path_count;
    const double v = std::abs(lowdin_coupling(h, a, b).v01);
    ok = ok && paths == 0 && v < kZeroCoupling;
    detail += fmt("N=%.0f paths %.0f |V01| %.1e; ", n, static_cast<double>(paths), v);
  }
  for (int n : {3, 6}) {
    const auto h = build_flow_hamiltonian(contact(n, 0.1));
    const auto [a, b] = targets(h.basis());
    const double v = std::abs(lowdin_coupling(h, a, b).v01);
    ok = ok && v > 0.0;
    detail += fmt("N=%.0f |V01| %.3e; ", n, v);
  }
  detail.resize(detail.size() - 2);
  report(3, ok, "single-flow coupling only for commensurate N", detail);
}

void degeneracy_cat() {
  bool ok = true;
  std::string detail;
  const double thresholds[] = {kCaptured3, kCaptured6, kCaptured9};
  int i = 0;
  for (int n : {3, 6, 9}) {
    const auto row = catscan(contact(n, 0.1), {0.0}).rows.front();
    const double imbalance = std::abs(std::abs(row.exact.a0) - std::abs(row.exact.a1));
    ok = ok && imbalance < kBalanceTol && row.exact.captured_norm > thresholds[i];
    detail += fmt("N=%.0f ||a0|-|a1|| %.1e captured %.5f; ", n, imbalance, row.exact.captured_norm);
    ++i;
  }
  detail.resize(detail.size() - 2);
  report(4, ok, "balanced cat with high captured norm at the crossing", detail);
}

void ratio_scan() {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<double> grid;
  for (int i = -20; i <= 20; ++i) grid.push_back(0.01 * i);
  double worst[4] = {0, 0, 0, 0};
  double at_005[4] = {0, 0, 0, 0};
  const int ns[] = {3, 6, 9, 12};
  for (int k = 0; k < 4; ++k) {
    const auto table = catscan(contact(ns[k], 0.1), grid);
    for (const auto& row : table.rows) {
      const double dev = std::abs(row.ratio_analytic - row.exact.ratio) / row.exact.ratio;
      worst[k] = std::max(worst[k], dev);
      if (std::abs(row.dphi - 0.05) < 1e-12) at_005[k] = row.exact.ratio;
    }
  }
  const double elapsed = seconds_since(t0);
  const bool fit = worst[0] <= kFitTol;
  const bool degrade = worst[3] > worst[0];
  const bool ordered = at_005[0] > at_005[1] && at_005[1] > at_005[2] && at_005[2] > at_005[3];
  report(5, fit && degrade && ordered && elapsed < kRuntimeScan,
         "two-level ratio follows the exact ratio and degrades with N",
         fmt("max deviation N=3 %.2f%%, N=12 %.2f%%; ", 100 * worst[0], 100 * worst[3]) +
             fmt("ratio at 0.05: %.4g %.4g %.4g", at_005[0], at_005[1], at_005[2]) +
             fmt(" %.4g; %.2f s", at_005[3], elapsed));
}

void free_ground_energy() {
  // Claim under test: at U = 0 the ground energy is −2JN cos(φ/3) on all of [0, 2π).
  double worst_full = 0.0, worst_lower = 0.0, worst_envelope = 0.0;
  double worst_phi = 0.0;
  const int points = 240;
  for (int n = 1; n <= 10; ++n) {
    for (int i = 0; i < points; ++i) {
      const double phi = 2.0 * kPi * i / points;
      const double e0 = eigensolve(build_site_hamiltonian(contact(n, 0.0, phi)), 1).energies[0];
      const double claimed = -2.0 * n * std::cos(phi / 3.0);
      const double dev = std::abs(e0 - claimed);
      if (dev > worst_full) {
        worst_full = dev;
        worst_phi = phi;
      }
      if (phi <= kPi) worst_lower = std::max(worst_lower, dev);
      double envelope = claimed;
      for (int k = 1; k < 3; ++k) envelope = std::min(envelope, -2.0 * n * std::cos((phi - 2.0 * kPi * k) / 3.0));
      worst_envelope = std::max(worst_envelope, std::abs(e0 - envelope));
    }
  }
  report(6, worst_full < kGroundTol, "free ground energy is -2JN cos(phi/3) on [0, 2pi), N<=10",
         fmt("max deviation %.3g at phi=%.3f; ", worst_full, worst_phi) +
             fmt("on [0, pi] %.1e; vs lowest single-flow level over all k %.1e", worst_lower,
                 worst_envelope));
}

void gap_vs_coupling() {
  bool ok = true;
  std::string detail;
  double previous = 1.0;
  for (double u : {0.1, 0.01}) {
    const auto h = build_flow_hamiltonian(contact(3, u));
    const auto [a, b] = targets(h.basis());
    const double v = std::abs(lowdin_coupling(h, a, b).v01);
    const auto e = eigensolve(build_site_hamiltonian(contact(3, u)), 2).energies;
    const double gap = e[1] - e[0];
    const double rel = std::abs(2.0 * v - gap) / gap;
    // Exact elimination leaves only rounding at both strengths; "tighter" is judged
    // above a 1e-10 rounding floor.
    ok = ok && rel < kGapTol && rel <= std::max(previous, 1e-10);
    previous = rel;
    detail += fmt("U/J=%.2f gap %.6e rel %.1e; ", u, gap, rel);
  }
  detail.resize(detail.size() - 2);
  report(7, ok, "lowest gap equals 2|V01| for N=3", detail);
}

void four_state_terms() {
  std::mt19937 rng(20061);
  std::uniform_real_distribution<double> coupling(-0.4, 0.4);
  std::uniform_real_distribution<double> high(2.0, 8.0);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    ComplexMatrix m = ComplexMatrix::Zero(6, 6);
    const double e1 = coupling(rng), e4 = coupling(rng), e2 = high(rng), e3 = high(rng);
    m(0, 0) = e1;
    m(1, 1) = e2;
    m(2, 2) = e3;
    m(3, 3) = e4;
    m(4, 4) = high(rng);
    m(5, 5) = high(rng);
    auto link = [&](int i, int j) {
      const Complex v(coupling(rng), coupling(rng));
      m(i, j) = v;
      m(j, i) = std::conj(v);
      return v;
    };
    const Complex v14 = link(0, 3), v12 = link(0, 1), v13 = link(0, 2), v24 = link(1, 3),
                  v34 = link(2, 3), v23 = link(1, 2);
    const Complex v32 = std::conj(v23);
    ModelParams tag = contact(2, 0.0);
    tag.tunnelling = {1.0, 1.1, 1.0};
    const CouplingGraph g(HermitianOperator(m, BasisKind::flow, tag));
    const double lambda = std::min(e1, e4) - 0.1;
    const double d2 = lambda - e2, d3 = lambda - e3;
    const Complex terms = v14 - v14 * v23 * v32 / (d2 * d3) + v12 * v24 / d2 + v13 * v34 / d3 +
                          v12 * v23 * v34 / (d2 * d3) + v13 * v32 * v24 / (d2 * d3);
    const Complex series = path_coupling(g, 0, 3, lambda, 2).value;
    worst = std::max(worst, std::abs(series - terms) / std::max(1.0, std::abs(terms)));
  }
  report(8, worst < kTermTol, "four-state path series reproduces the six combined-coupling terms",
         fmt("50 random systems, max deviation %.1e", worst));
}

void loop_checks() {
  using namespace ringcat::loop;
  LoopParams free;
  const double c = free.energy_scale();
  double worst_free = 0.0;
  for (double phi : {0.0, 1.0, kPi, 4.0}) {
    std::vector<double> expected;
    for (int k = -8; k <= 8; ++k) expected.push_back(c * (k - phi / (2.0 * kPi)) * (k - phi / (2.0 * kPi)));
    std::sort(expected.begin(), expected.end());
    const auto e = loop_spectrum_with_barrier(phi, free, 8, 6);
    for (int i = 0; i < 6; ++i) worst_free = std::max(worst_free, std::abs(e[i] - expected[static_cast<std::size_t>(i)]));
  }
  const bool free_ok = worst_free <= 1e-13 * c;

  double worst_gap = 0.0;
  bool min_at_pi = true;
  for (double b : {1e-4, 1e-3, 1e-2}) {
    LoopParams p;
    p.barrier = b * c * p.length;
    auto gap = [&](double phi) {
      const auto e = loop_spectrum_with_barrier(phi, p, 16, 2);
      return e[1] - e[0];
    };
    const int points = 120;
    double best = 1e300, best_phi = 0.0;
    for (int i = 0; i < points; ++i) {
      const double phi = 2.0 * kPi * i / points;
      if (gap(phi) < best) {
        best = gap(phi);
        best_phi = phi;
      }
    }
    min_at_pi = min_at_pi && std::abs(best_phi - kPi) <= 0.5 * 2.0 * kPi / points;
    worst_gap = std::max(worst_gap, std::abs(gap(kPi) / (2.0 * p.barrier / p.length) - 1.0));
  }
  const double v = 1.0;
  const bool delta_ok = std::abs(delta_interaction_expectation({0, 0}, v) - v) < 1e-15 &&
                        std::abs(delta_interaction_expectation({0, 1}, v) - 2 * v) < 1e-15 &&
                        std::abs(delta_interaction_expectation({0, 1, 2}, v) - 6 * v) < 1e-15;
  report(9, free_ok && min_at_pi && worst_gap < kBarrierGapTol && delta_ok,
         "loop parabolas, barrier anti-crossing and delta-interaction shifts",
         fmt("free deviation %.1e C; gap vs 2b/L worst %.2f%%; ", worst_free / c, 100 * worst_gap) +
             (min_at_pi ? "minimum at pi" : "minimum off pi") + (delta_ok ? "; V/2V/6V ok" : "; V/2V/6V wrong"));
}

void dipolar_consistency() {
  double entrywise = 0.0;
  double conj_vs_site = 0.0;
  double printed_vs_conj = 0.0;
  for (int n : {2, 3, 5}) {
    ModelParams c = contact(n, 0.2, 2.1);
    ModelParams d = c;
    d.interaction = Interaction::dipolar;
    d.u0 = 0.2;
    d.u1 = 0.0;
    entrywise = std::max(entrywise, (build_site_hamiltonian(c).matrix() - build_site_hamiltonian(d).matrix())
                                        .cwiseAbs()
                                        .maxCoeff());
    for (double u1 : {0.0, 0.05}) {
      d.u1 = u1;
      const auto site = build_site_hamiltonian(d);
      const auto conj = flow_hamiltonian_by_conjugation(d);
      conj_vs_site = std::max(conj_vs_site, relative_spectral_gap(site.matrix(), conj.matrix()));
      printed_vs_conj = std::max(printed_vs_conj,
                                 (build_flow_hamiltonian(d).matrix() - conj.matrix()).cwiseAbs().maxCoeff());
    }
  }
  report(10, entrywise == 0.0 && conj_vs_site < kSpectralTol,
         "dipolar model reduces to contact and its conjugated flow form is exact",
         fmt("entrywise %.1e; conjugated vs site %.1e; printed flow form differs by up to %.3g",
             entrywise, conj_vs_site, printed_vs_conj));
}

}  // namespace

int main() {
  spectral_equivalence();
  block_structure();
  commensurability();
  degeneracy_cat();
  ratio_scan();
  free_ground_energy();
  gap_vs_coupling();
  four_state_terms();
  loop_checks();
  dipolar_consistency();
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
