// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
// Usage: acceptance_test [path-to-canonphase-binary]

#include <Eigen/Eigenvalues>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "canonphase/canonphase.hpp"
#include "oracle.hpp"

using namespace canonphase;

namespace {

struct Verdict {
  bool passed = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double budget_s;
  std::function<Verdict()> body;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

constexpr std::array<double, 4> kThetas = {0.1, 0.7, std::numbers::pi / 2, 2.5};

Verdict lossless_anchor() {
  double worst = 0.0;
  for (int n = 1; n <= 100; ++n) {
    const double s = sharpness_closed(optimal_amplitudes(n), channel_from_loss(0.0));
    const double got = holevo(s).holevo_variance;
    const double t = std::tan(std::numbers::pi / (n + 2));
    const double want = t * t;
    worst = std::max(worst, std::abs(got - want) / want);
  }
  return {worst <= 1e-9, "max rel err " + fmt("%.3g", worst) + " vs tan^2(pi/(N+2)) (tol 1e-9, N=1..100)"};
}

Verdict dual_path() {
  double worst = 0.0;
  for (double loss : {0.0, 0.1, 0.3, 0.5}) {
    const auto ch = channel_from_loss(loss);
    for (int n = 1; n <= 20; ++n) {
      const auto psi = optimal_amplitudes(n);
      const double closed = sharpness_closed(psi, ch);
      const double dens = sharpness(distribution_from_density(reduced_density(psi, ch)));
      worst = std::max(worst, std::abs(closed - dens));
    }
  }
  return {worst <= 1e-10, "max |S_closed - S_density| " + fmt("%.3g", worst) + " (tol 1e-10)"};
}

Verdict wigner_oracle() {
  double worst_mag = 0.0;
  double worst_row = 0.0;
  for (int tj = 0; tj <= 12; ++tj) {
    const HalfInt j = HalfInt::from_twice(tj);
    for (double theta : kThetas) {
      const Eigen::MatrixXcd u = oracle::bs_unitary(j, theta);
      const SpinRange range(j);
      for (std::size_t r = 0; r < range.size(); ++r) {
        double row = 0.0;
        for (std::size_t c = 0; c < range.size(); ++c) {
          const double d = d_element(j, range[r], range[c], theta);
          row += d * d;
          worst_mag = std::max(worst_mag, std::abs(std::abs(d) - std::abs(u(r, c))));
        }
        worst_row = std::max(worst_row, std::abs(row - 1.0));
      }
    }
  }
  return {worst_mag <= 1e-8 && worst_row <= 1e-10,
          "max |d| err " + fmt("%.3g", worst_mag) + " (tol 1e-8), row norm err " + fmt("%.3g", worst_row) +
              " (tol 1e-10), 2j<=12"};
}

Verdict density_physicality() {
  double trace_err = 0.0;
  double sym = 0.0;
  double min_eig = 0.0;
  double trace_out = 0.0;
  for (double loss : {0.1, 0.3, 0.7}) {
    const auto ch = channel_from_loss(loss);
    for (int n = 1; n <= 10; ++n) {
      const auto psi = optimal_amplitudes(n);
      const auto rho = reduced_density(psi, ch);
      trace_err = std::max(trace_err, std::abs(rho.trace() - 1.0));
      sym = std::max(sym, rho.symmetry_defect());
      const auto dim = static_cast<Eigen::Index>(rho.dimension());
      const Eigen::MatrixXd dense =
          Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(
              rho.to_dense().data(), dim, dim);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense, Eigen::EigenvaluesOnly);
      min_eig = std::min(min_eig, es.eigenvalues().minCoeff());
      {
        const auto explicit_rho = oracle::trace_out_explicit(oracle::lossy_state_from_unitary(psi, ch.theta()), loss);
        const auto basis = explicit_rho.basis();
        const Eigen::MatrixXd diff = oracle::dense_over(rho, basis) - oracle::dense_over(explicit_rho, basis);
        trace_out = std::max(trace_out, diff.cwiseAbs().maxCoeff());
      }
    }
  }
  const bool ok = trace_err <= 1e-10 && sym <= 1e-12 && min_eig >= -1e-10 && trace_out <= 1e-12;
  return {ok, "trace err " + fmt("%.3g", trace_err) + ", asym " + fmt("%.3g", sym) + ", min eig " +
                  fmt("%.3g", min_eig) + ", trace-out err " + fmt("%.3g", trace_out) +
                  " (N<=10, L in {0.1,0.3,0.7})"};
}

Verdict sub_normalization() {
  double worst = 0.0;
  for (double loss : {0.0, 0.1, 0.3, 0.5, 0.9}) {
    for (int n = 1; n <= 20; ++n) {
      const auto dist = distribution(optimal_amplitudes(n), channel_from_loss(loss));
      const auto psi = optimal_amplitudes(n);
      double want = 0.0;
      for (HalfInt mu : psi.range()) {
        want += psi[mu] * psi[mu] * std::pow(1.0 - loss, (psi.j() + mu).value());
      }
      worst = std::max(worst, std::abs(dist.integral() - want));
      worst = std::max(worst, std::abs(oracle::quadrature_integral(dist, 8 * (n + 1)) - want));
    }
  }
  const double anchor = distribution(optimal_amplitudes(1), channel_from_loss(0.3)).integral();
  worst = std::max(worst, std::abs(anchor - 0.85));
  return {worst <= 1e-10, "max err " + fmt("%.3g", worst) + " (tol 1e-10), N=1 L=0.3 integral " +
                              fmt("%.15g", anchor)};
}

Verdict curve_shape() {
  SweepOptions opts;
  opts.jobs = 0;
  constexpr int kScanMax = 500;
  const auto heavy = curve(0.3, 1, kScanMax, opts);
  const auto light = curve(1e-3, 1, kScanMax, opts);

  bool interior = heavy.n_opt.found() && heavy.n_opt.n > 1;
  bool rises = interior;
  for (std::size_t i = static_cast<std::size_t>(heavy.n_opt.n); rises && i < heavy.points.size(); ++i) {
    rises = heavy.points[i].delta_phi > heavy.points[i - 1].delta_phi;
  }

  std::vector<int> sub;
  for (const auto& p : light.points) {
    if (p.sub_shot_noise()) sub.push_back(p.n);
  }
  bool contiguous = !sub.empty();
  for (std::size_t i = 1; contiguous && i < sub.size(); ++i) contiguous = sub[i] == sub[i - 1] + 1;

  // An absent bound means no photon number beats shot noise, i.e. an effective bound of 0.
  const int heavy_bound = heavy.n_subshot_max.found() ? heavy.n_subshot_max.n : 0;
  const int light_bound = light.n_subshot_max.found() ? light.n_subshot_max.n : 0;
  const bool ordered = light.n_subshot_max.found() && light_bound > heavy_bound;

  std::ostringstream d;
  d << "L=0.3 n_opt=" << (heavy.n_opt.found() ? std::to_string(heavy.n_opt.n) : "none")
    << (rises ? " then rising" : " NOT rising") << "; L=1e-3 sub-shot N=";
  if (sub.empty()) {
    d << "{}";
  } else {
    d << sub.front() << ".." << sub.back() << (contiguous ? "" : " (gaps)");
  }
  d << "; bound(1e-3)=" << light_bound << " vs bound(0.3)="
    << (heavy.n_subshot_max.found() ? std::to_string(heavy_bound) : "none(0)");
  return {interior && rises && contiguous && ordered, d.str()};
}

Verdict nopt_monotone() {
  SweepOptions opts;
  opts.jobs = 0;
  const auto grid = make_loss_grid(1e-4, 0.5, 20, true);
  const auto rows = nopt_vs_loss(grid, kDefaultScanMax, opts);
  bool ok = rows.size() == 20;
  int prev = kDefaultScanMax + 1;
  for (const auto& r : rows) {
    if (!r.n_opt.found() || r.n_opt.n > prev) ok = false;
    if (r.n_opt.found()) prev = r.n_opt.n;
  }
  std::ostringstream d;
  d << "N_opt over 20 log points in [1e-4,0.5]: ";
  if (!rows.empty()) {
    d << (rows.front().n_opt.found() ? std::to_string(rows.front().n_opt.n) : "none") << " -> "
      << (rows.back().n_opt.found() ? std::to_string(rows.back().n_opt.n) : "none");
  }
  d << (ok ? ", non-increasing" : ", NOT non-increasing");
  return {ok, d.str()};
}

struct Captured {
  int status = -1;
  std::string out;
};

Captured capture(const std::string& cmd) {
  Captured c;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return c;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) c.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  c.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return c;
}

Verdict cli_end_to_end(const std::string& binary) {
  if (binary.empty()) return {false, "no canonphase binary given"};
  const std::string cmd = "'" + binary + "' curve --loss 0 --n-range 1:100";
  const auto first = capture(cmd);
  const auto second = capture(cmd);
  const auto validate = capture("'" + binary + "' validate > /dev/null");

  bool ok = first.status == 0 && second.status == 0 && first.out == second.out;
  int rows = 0;
  double worst = 0.0;
  bool header = false;
  std::istringstream in(first.out);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header) {
      header = line == "n,delta_phi,shot_noise,heisenberg";
      continue;
    }
    int n = 0;
    double dphi = 0.0;
    if (std::sscanf(line.c_str(), "%d,%lf", &n, &dphi) != 2) {
      ok = false;
      break;
    }
    const double want = std::tan(std::numbers::pi / (n + 2));
    worst = std::max(worst, std::abs(dphi - want) / want);
    ++rows;
  }
  ok = ok && header && rows == 100 && worst <= 1e-9 && validate.status == 0;
  std::ostringstream d;
  d << "curve exit " << first.status << "/" << second.status << ", "
    << (first.out == second.out ? "byte-identical" : "outputs differ") << ", " << rows
    << " rows, max rel err " << fmt("%.3g", worst) << "; validate exit " << validate.status;
  return {ok, d.str()};
}

}  // namespace

int main(int argc, char** argv) {
  const std::string binary = argc > 1 ? argv[1] : "";
  const std::vector<Criterion> criteria = {
      {1, "lossless anchor", 1.0, lossless_anchor},
      {2, "closed form vs density matrix", 30.0, dual_path},
      {3, "wigner oracle", 10.0, wigner_oracle},
      {4, "density physicality", 60.0, density_physicality},
      {5, "sub-normalization", 10.0, sub_normalization},
      {6, "delta-phi curve shape", 10.0, curve_shape},
      {7, "n_opt monotone in loss", 60.0, nopt_monotone},
      {8, "cli end to end", 120.0, [&] { return cli_end_to_end(binary); }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.body();
    } catch (const std::exception& e) {
      v = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= c.budget_s;
    const bool passed = v.passed && in_time;
    if (!passed) ++failures;
    std::printf("%s criterion %d (%s): %s [%.2fs / %.0fs budget]%s\n", passed ? "PASS" : "FAIL", c.id,
                c.title.c_str(), v.detail.c_str(), secs, c.budget_s, in_time ? "" : " over budget");
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
