#pragma once

#include <optional>
#include <string>

#include "hopfcert/polygon.hpp"
#include "hopfcert/stability.hpp"

namespace hopfcert {

struct BnbReport {
  enum class Verdict { certified_empty, nonempty_with_witness, inconclusive };
  Verdict verdict = Verdict::inconclusive;
  std::optional<Point2> witness;   // exact rational point satisfying all constraints
  std::vector<Box2> unresolved;    // first few undecided boxes at the depth limit
  int max_depth_reached = 0;
  long boxes_processed = 0;
};

std::string to_string(BnbReport::Verdict v);

// Shared certified geometry of the family: a sound root-modulus bound and a
// certified empty strip below and above the set fR.
struct RegionContext {
  SignPair sp;
  Rational beta_bound;
  Rational beta_min;   // fR lies strictly above this height (0 if none found)
  Rational beta_max;   // fR lies strictly below this height (beta_bound worst case)
  int jmax_default = 0;
};

RegionContext make_region_context(const IntervalFamily& fam, int depth_limit);

struct R5ppResult {
  BnbReport report;  // verdict over all j (first witness wins)
  std::vector<std::pair<int, BnbReport>> per_j;  // only the nontrivial j
  int failed_j = -1;
  int jmax_used = 0;
  RegionContext context;
};

// (R5''): fR does not meet any of its frequency-divided shadows fS_j.
R5ppResult certify_R5pp(const IntervalFamily& fam, int j_max = 0, int depth_limit = 24);

struct EdgeIssue {
  int disk = -1;
  int edge = -1;
  int j = 0;
  bool witness = false;  // false: touching / inconclusive
  Point2 point;          // on-edge point with (alpha, j*beta) in fR when witness
  std::string note;
};

struct R5pResult {
  BnbReport coverage;                // clause (ii): fR subset of the disks
  CertVerdict boundary = CertVerdict::inconclusive;  // clause (iii)
  std::vector<EdgeIssue> boundary_issues;
  bool certified = false;
  int jmax_used = 0;
  RegionContext context;
};

// (R5'): the disks cover fR and their boundaries avoid fR and every fS_j.
R5pResult certify_R5p(const IntervalFamily& fam, const std::vector<PolygonDisk>& disks,
                      int j_max = 0, int depth_limit = 24);

// Searches for an axis-aligned rectangle [alpha range] x [lo, hi] satisfying
// (R5'); the first example admits none (the multiples of any horizontal line
// under fR sweep through fR), in which case nullopt is returned.
std::optional<PolygonDisk> search_rectangle(const IntervalFamily& fam, int j_max = 0,
                                            int depth_limit = 24);

struct RegionGrid {
  std::vector<double> alphas;  // cell centers
  std::vector<double> betas;
  // row-major [beta][alpha]: 0 outside, 1 in fR, j >= 2 in fS_j, -1 undecided
  std::vector<int> classes;
  int resolution_alpha = 0;
  int resolution_beta = 0;

  int at(int ia, int ib) const {
    return classes[static_cast<size_t>(ib) * resolution_alpha + ia];
  }
};

RegionGrid grid_sample(const IntervalFamily& fam, int resolution, int j_max = 0);

std::string grid_to_csv(const RegionGrid& grid);
std::string grid_to_svg(const RegionGrid& grid, const std::vector<PolygonDisk>& disks,
                        const IntervalFamily& fam);

}  // namespace hopfcert
