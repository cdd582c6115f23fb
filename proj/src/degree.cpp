#include "hopfcert/degree.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace hopfcert {

namespace {

constexpr double kSlideTol = 1e-9;

std::vector<DPoly> to_double_selector(const Selector& sel) {
  std::vector<DPoly> out;
  out.reserve(sel.coeffs.size());
  for (const auto& q : sel.coeffs) out.push_back(to_double_poly(q));
  return out;
}

std::complex<double> eval_at(const std::vector<DPoly>& coeffs, double alpha,
                             std::complex<double> lambda) {
  std::complex<double> acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
    acc = acc * lambda + it->eval(alpha);
  return acc;
}

std::vector<std::complex<double>> roots_at(const std::vector<DPoly>& coeffs,
                                           double alpha) {
  int n = static_cast<int>(coeffs.size()) - 1;
  std::vector<std::complex<double>> out;
  double lead = coeffs.back().eval(alpha);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k < n; ++k) m(k, n - 1) = -coeffs[static_cast<size_t>(k)].eval(alpha) / lead;
  for (int k = 1; k < n; ++k) m(k, k - 1) = 1.0;
  Eigen::EigenSolver<Eigen::MatrixXd> solver(m, false);
  for (int k = 0; k < n; ++k) out.push_back(solver.eigenvalues()(k));
  // canonical order keeps everything deterministic
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return out;
}

// match `next` onto `prev` by nearest neighbor; false when ambiguous
bool match_roots(const std::vector<std::complex<double>>& prev,
                 const std::vector<std::complex<double>>& next,
                 std::vector<std::complex<double>>& matched) {
  size_t n = prev.size();
  matched.assign(n, 0.0);
  std::vector<bool> used(n, false);
  for (size_t b = 0; b < n; ++b) {
    double best = 1e300, second = 1e300;
    size_t pick = n;
    for (size_t j = 0; j < n; ++j) {
      if (used[j]) continue;
      double d = std::abs(next[j] - prev[b]);
      if (d < best) {
        second = best;
        best = d;
        pick = j;
      } else if (d < second) {
        second = d;
      }
    }
    if (pick == n) return false;
    // ambiguity guard: the winner must be clearly closer than the runner-up
    if (best > 0 && second < 2 * best) return false;
    used[pick] = true;
    matched[b] = next[pick];
  }
  return true;
}

double vieta_residual(const std::vector<DPoly>& coeffs, double alpha,
                      const std::vector<std::complex<double>>& roots) {
  // rebuild the monic coefficients from the roots
  std::vector<std::complex<double>> c{1.0};
  for (const auto& r : roots) {
    c.insert(c.begin(), 0.0);
    for (size_t k = 0; k + 1 < c.size(); ++k) c[k] -= r * c[k + 1];
  }
  double lead = coeffs.back().eval(alpha);
  double worst = 0.0, scale = 1.0;
  for (size_t k = 0; k < c.size(); ++k)
    scale = std::max(scale, std::abs(coeffs[k].eval(alpha) / lead));
  for (size_t k = 0; k + 1 < c.size(); ++k) {
    double want = coeffs[k].eval(alpha) / lead;
    worst = std::max(worst, std::abs(c[k].real() - want) / scale);
    worst = std::max(worst, std::abs(c[k].imag()) / scale);
  }
  return worst;
}

}  // namespace

WindingResult winding_number(const Selector& sel, const PolygonDisk& boundary) {
  std::vector<DPoly> coeffs = to_double_selector(sel);
  WindingResult out;
  out.min_modulus = 1e300;
  double total = 0.0;
  double scale = 0.0;
  const double pi = std::numbers::pi;

  for (const auto& e : boundary.edges()) {
    double ax = to_double(e.a.x), ay = to_double(e.a.y);
    double bx = to_double(e.b.x), by = to_double(e.b.y);
    auto point = [&](double t) {
      return std::pair<double, double>{ax + t * (bx - ax), ay + t * (by - ay)};
    };
    auto value = [&](double t) {
      auto [x, y] = point(t);
      return eval_at(coeffs, x, {0.0, y});
    };
    // Adaptive subdivision. A step is accepted when its endpoints turn by
    // less than pi/2 and the midpoint agrees with that turn; the agreement
    // check exposes hidden full loops between samples.
    struct Seg {
      double t0, t1;
      std::complex<double> z0, z1;
      int depth;
    };
    auto arg_step = [](std::complex<double> z0, std::complex<double> z1) {
      std::complex<double> rot = z1 * std::conj(z0);
      return std::atan2(rot.imag(), rot.real());
    };
    std::complex<double> za = value(0.0), zb = value(1.0);
    std::vector<Seg> stack{{0.0, 1.0, za, zb, 0}};
    while (!stack.empty()) {
      Seg s = stack.back();
      stack.pop_back();
      out.min_modulus = std::min({out.min_modulus, std::abs(s.z0), std::abs(s.z1)});
      scale = std::max({scale, std::abs(s.z0), std::abs(s.z1)});
      double tm = (s.t0 + s.t1) / 2;
      std::complex<double> zm = value(tm);
      out.min_modulus = std::min(out.min_modulus, std::abs(zm));
      bool nonzero = std::abs(s.z0) > 0 && std::abs(s.z1) > 0 && std::abs(zm) > 0;
      if (nonzero) {
        double a_full = arg_step(s.z0, s.z1);
        double a0 = arg_step(s.z0, zm);
        double a1 = arg_step(zm, s.z1);
        if (std::abs(a_full) < 1.5 && std::abs(a0) < 1.5 && std::abs(a1) < 1.5 &&
            std::abs(a0 + a1 - a_full) < 1e-9) {
          total += a0 + a1;
          continue;
        }
      }
      if (s.depth >= 40 || std::abs(zm) < 1e-13 * std::max(scale, 1.0))
        throw std::runtime_error("zero too close to boundary; refine the disk");
      out.refinement_depth = std::max(out.refinement_depth, s.depth + 1);
      stack.push_back({tm, s.t1, zm, s.z1, s.depth + 1});
      stack.push_back({s.t0, tm, s.z0, zm, s.depth + 1});
    }
  }
  if (out.min_modulus < 1e-11 * std::max(scale, 1.0))
    throw std::runtime_error("zero too close to boundary; refine the disk");
  double turns = total / (2 * pi);
  out.winding = static_cast<int>(std::lround(turns));
  if (std::abs(turns - out.winding) > 0.05)
    throw std::runtime_error("winding accumulation failed to close up");
  return out;
}

CrossingIdentity crossing_identity_check(const Selector& sel,
                                         const RationalInterval& alpha_range,
                                         const std::vector<PolygonDisk>& disks) {
  CrossingIdentity out;
  RootCount lo = root_count(sel.at(alpha_range.lo));
  RootCount hi = root_count(sel.at(alpha_range.hi));
  if (lo.n_imag != 0 || hi.n_imag != 0)
    throw std::invalid_argument("selector must be hyperbolic at the endpoints");
  out.t_minus = lo.n_pos;
  out.t_plus = hi.n_pos;
  if ((out.t_minus - out.t_plus) % 2 != 0)
    throw std::runtime_error("parity violation: uncovered real-axis crossing");
  for (const auto& d : disks) {
    out.per_disk.push_back(winding_number(sel, d));
    out.winding_sum += out.per_disk.back().winding;
  }
  out.holds = out.winding_sum == (out.t_minus - out.t_plus) / 2;
  return out;
}

RootPath track_roots(const Selector& sel, const RationalInterval& alpha_range,
                     int grid_size) {
  if (grid_size < 2) throw std::invalid_argument("grid_size must be at least 2");
  std::vector<DPoly> coeffs = to_double_selector(sel);
  int n = sel.degree();
  RootPath path;

  double alo = to_double(alpha_range.lo);
  double ahi = to_double(alpha_range.hi);
  double step = (ahi - alo) / (grid_size - 1);

  std::vector<std::complex<double>> prev = roots_at(coeffs, alo);
  path.alphas.push_back(alo);
  path.branches.assign(static_cast<size_t>(n), {});
  for (int b = 0; b < n; ++b) path.branches[static_cast<size_t>(b)].push_back(prev[static_cast<size_t>(b)]);
  path.max_vieta_residual = vieta_residual(coeffs, alo, prev);

  for (int i = 1; i < grid_size; ++i) {
    double target = alo + i * step;
    double cur = path.alphas.back();
    // step-halving on ambiguous matches
    while (cur < target) {
      double attempt = target;
      std::vector<std::complex<double>> matched;
      int halvings = 0;
      while (true) {
        std::vector<std::complex<double>> cand = roots_at(coeffs, attempt);
        if (match_roots(prev, cand, matched) || halvings >= 12) {
          if (halvings >= 12) {
            // accept the greedy assignment anyway: validator-grade output
            std::vector<std::complex<double>> forced(prev.size());
            std::vector<bool> used(prev.size(), false);
            for (size_t b = 0; b < prev.size(); ++b) {
              double best = 1e300;
              size_t pick = 0;
              for (size_t j = 0; j < cand.size(); ++j) {
                if (used[j]) continue;
                double d = std::abs(cand[j] - prev[b]);
                if (d < best) {
                  best = d;
                  pick = j;
                }
              }
              used[pick] = true;
              forced[b] = cand[pick];
            }
            matched = forced;
          }
          break;
        }
        attempt = cur + (attempt - cur) / 2;
        ++halvings;
      }
      cur = attempt;
      prev = matched;
      if (std::abs(cur - target) < step * 1e-9) cur = target;
      path.alphas.push_back(cur);
      for (int b = 0; b < n; ++b)
        path.branches[static_cast<size_t>(b)].push_back(prev[static_cast<size_t>(b)]);
      path.max_vieta_residual =
          std::max(path.max_vieta_residual, vieta_residual(coeffs, cur, prev));
    }
  }

  // axis events per branch: sign changes of Re, plus touch points found by
  // minimizing |Re| around interior local minima
  size_t samples = path.alphas.size();
  for (int b = 0; b < n; ++b) {
    const auto& br = path.branches[static_cast<size_t>(b)];
    auto refine_branch_root = [&](double a, std::complex<double> guess) {
      std::vector<std::complex<double>> all = roots_at(coeffs, a);
      std::complex<double> best = all[0];
      for (const auto& z : all)
        if (std::abs(z - guess) < std::abs(best - guess)) best = z;
      return best;
    };
    for (size_t i = 0; i + 1 < samples; ++i) {
      double r0 = br[i].real(), r1 = br[i + 1].real();
      if (r0 == 0.0 && std::abs(br[i].imag()) > 0) continue;  // handled as slide
      if ((r0 < 0 && r1 > 0) || (r0 > 0 && r1 < 0)) {
        double a0 = path.alphas[i], a1 = path.alphas[i + 1];
        std::complex<double> z0 = br[i];
        for (int it = 0; it < 60 && a1 - a0 > 1e-14; ++it) {
          double am = (a0 + a1) / 2;
          std::complex<double> zm = refine_branch_root(am, z0);
          if ((zm.real() < 0) == (r0 < 0)) {
            a0 = am;
            z0 = zm;
          } else {
            a1 = am;
          }
        }
        RootPath::AxisEvent ev;
        ev.branch = b;
        ev.alpha = (a0 + a1) / 2;
        ev.beta = std::abs(refine_branch_root(ev.alpha, z0).imag());
        ev.crossing = true;
        path.events.push_back(ev);
      }
    }
    // touch events: interior local minima of |Re| that reach the axis
    for (size_t i = 1; i + 1 < samples; ++i) {
      double m0 = std::abs(br[i - 1].real());
      double m1 = std::abs(br[i].real());
      double m2 = std::abs(br[i + 1].real());
      bool crossing_nearby = (br[i - 1].real() < 0) != (br[i + 1].real() < 0);
      if (crossing_nearby || m1 > m0 || m1 > m2) continue;
      // golden-section descent on |Re| of the tracked branch
      double a0 = path.alphas[i - 1], a1 = path.alphas[i + 1];
      std::complex<double> guess = br[i];
      for (int it = 0; it < 80 && a1 - a0 > 1e-13; ++it) {
        double l = a0 + (a1 - a0) / 3, r = a1 - (a1 - a0) / 3;
        double fl = std::abs(refine_branch_root(l, guess).real());
        double fr = std::abs(refine_branch_root(r, guess).real());
        if (fl < fr)
          a1 = r;
        else
          a0 = l;
      }
      double am = (a0 + a1) / 2;
      std::complex<double> zm = refine_branch_root(am, guess);
      if (std::abs(zm.real()) < kSlideTol && std::abs(zm.imag()) > kSlideTol) {
        RootPath::AxisEvent ev;
        ev.branch = b;
        ev.alpha = am;
        ev.beta = std::abs(zm.imag());
        ev.crossing = false;
        path.events.push_back(ev);
      }
    }
    // sliding: runs of consecutive on-axis samples
    size_t run_start = samples;
    for (size_t i = 0; i <= samples; ++i) {
      bool on_axis = i < samples && std::abs(br[i].real()) < kSlideTol;
      if (on_axis && run_start == samples) run_start = i;
      if (!on_axis && run_start < samples) {
        if (i - run_start >= 2)
          path.sliding.push_back(
              {b, path.alphas[run_start], path.alphas[i - 1]});
        run_start = samples;
      }
    }
  }
  std::sort(path.events.begin(), path.events.end(),
            [](const RootPath::AxisEvent& a, const RootPath::AxisEvent& b) {
              if (a.alpha != b.alpha) return a.alpha < b.alpha;
              return a.beta < b.beta;
            });
  return path;
}

std::vector<Resonance> find_resonances(const RootPath& path, int max_ratio) {
  std::vector<Resonance> out;
  const double rel_tol = 1e-6;
  auto push_unique = [&](const Resonance& r) {
    for (const auto& o : out)
      if (o.j == r.j && std::abs(o.alpha - r.alpha) < 1e-5 &&
          std::abs(o.beta_small - r.beta_small) < 1e-5)
        return;
    out.push_back(r);
  };

  // isolated events from distinct branches at the same alpha
  for (size_t i = 0; i < path.events.size(); ++i) {
    for (size_t k = 0; k < path.events.size(); ++k) {
      if (i == k) continue;
      const auto& small = path.events[i];
      const auto& large = path.events[k];
      if (small.branch == large.branch) continue;
      if (std::abs(small.alpha - large.alpha) > 1e-8) continue;
      if (small.beta <= 0) continue;
      for (int j = 2; j <= max_ratio; ++j) {
        if (std::abs(large.beta - j * small.beta) <= rel_tol * large.beta) {
          push_unique({(small.alpha + large.alpha) / 2, small.beta, j});
        }
      }
    }
  }

  // overlapping sliding intervals: bisection on the frequency-ratio defect
  size_t samples = path.alphas.size();
  for (size_t b1 = 0; b1 < path.branches.size(); ++b1) {
    for (size_t b2 = 0; b2 < path.branches.size(); ++b2) {
      if (b1 == b2) continue;
      for (int j = 2; j <= max_ratio; ++j) {
        auto defect = [&](size_t i) {
          return std::abs(path.branches[b2][i].imag()) -
                 j * std::abs(path.branches[b1][i].imag());
        };
        auto on_axis = [&](size_t i) {
          return std::abs(path.branches[b1][i].real()) < kSlideTol &&
                 std::abs(path.branches[b2][i].real()) < kSlideTol;
        };
        for (size_t i = 0; i + 1 < samples; ++i) {
          if (!on_axis(i) || !on_axis(i + 1)) continue;
          double d0 = defect(i), d1 = defect(i + 1);
          if (d0 == 0.0) {
            push_unique({path.alphas[i],
                         std::abs(path.branches[b1][i].imag()), j});
            continue;
          }
          if ((d0 < 0) == (d1 < 0)) continue;
          // sign change inside an on-axis overlap: linear-interpolation
          // bisection on the sampled defect
          double a0 = path.alphas[i], a1 = path.alphas[i + 1];
          double beta_small = std::abs(path.branches[b1][i].imag());
          double t = d0 / (d0 - d1);
          push_unique({a0 + t * (a1 - a0), beta_small, j});
        }
      }
    }
  }
  return out;
}

std::string root_path_to_csv(const RootPath& path) {
  std::ostringstream os;
  os << "alpha,re,im,branch_id\n";
  char buf[160];
  for (size_t b = 0; b < path.branches.size(); ++b) {
    for (size_t i = 0; i < path.alphas.size(); ++i) {
      snprintf(buf, sizeof(buf), "%.12g,%.12g,%.12g,%zu\n", path.alphas[i],
               path.branches[b][i].real(), path.branches[b][i].imag(), b);
      os << buf;
    }
  }
  return os.str();
}

}  // namespace hopfcert
