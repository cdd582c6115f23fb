#pragma once

#include <complex>
#include <string>

#include "hopfcert/polygon.hpp"
#include "hopfcert/selector.hpp"
#include "hopfcert/stability.hpp"

namespace hopfcert {

// Validator-grade computations on representative selectors: winding numbers
// of P(alpha)(i beta) along disk boundaries, eigenvalue paths, resonance
// detection. Adaptive floating point with explicit tolerances; never part of
// the certification chain.

struct WindingResult {
  int winding = 0;
  int refinement_depth = 0;
  double min_modulus = 0.0;
};

// Total argument change / 2 pi of P(alpha(s))(i beta(s)) along the positively
// oriented polygon boundary. Throws when the map nearly vanishes on it.
WindingResult winding_number(const Selector& sel, const PolygonDisk& boundary);

struct CrossingIdentity {
  int t_minus = 0;  // open right-half-plane roots at alpha_-
  int t_plus = 0;
  int winding_sum = 0;
  bool holds = false;
  std::vector<WindingResult> per_disk;
};

// Eq-level crossing-number identity: sum of disk windings = (t_- - t_+)/2.
CrossingIdentity crossing_identity_check(const Selector& sel,
                                         const RationalInterval& alpha_range,
                                         const std::vector<PolygonDisk>& disks);

struct RootPath {
  std::vector<double> alphas;
  // branches[b][i]: root of branch b at alphas[i], continuity-matched
  std::vector<std::vector<std::complex<double>>> branches;

  struct AxisEvent {
    int branch = -1;
    double alpha = 0.0;
    double beta = 0.0;   // |Im| at the event
    bool crossing = false;  // real part changes sign (vs touching the axis)
  };
  std::vector<AxisEvent> events;

  struct SlidingInterval {
    int branch = -1;
    double alpha_begin = 0.0;
    double alpha_end = 0.0;
  };
  std::vector<SlidingInterval> sliding;

  double max_vieta_residual = 0.0;
};

RootPath track_roots(const Selector& sel, const RationalInterval& alpha_range,
                     int grid_size);

struct Resonance {
  double alpha = 0.0;
  double beta_small = 0.0;
  int j = 0;
};

// (alpha, beta, j) with two branches on the axis and frequencies in ratio j,
// within relative tolerance 1e-6.
std::vector<Resonance> find_resonances(const RootPath& path, int max_ratio);

std::string root_path_to_csv(const RootPath& path);

}  // namespace hopfcert
