#pragma once

#include <json.hpp>

#include <string>

#include "hopfcert/polygon.hpp"
#include "hopfcert/selector.hpp"

namespace hopfcert {

enum class R5Mode { disks, non_resonance, descartes };

std::string to_string(R5Mode mode);

struct R5Payload {
  R5Mode mode = R5Mode::non_resonance;
  std::vector<PolygonDisk> disks;  // mode disks
  QPoly multiplier_q;              // mode descartes (the variable denotes omega)
  QPoly multiplier_r;
};

struct Limits {
  int depth_limit = 24;
  int jmax = 0;        // 0 = derive from the certified beta band
  int root_grid = 241; // validator sampling density
};

struct ProblemSpec {
  std::string name;
  IntervalFamily family;
  Selector representative;
  R5Payload r5;
  std::string nonlinearity;  // user-declared (R0)/(R1) assumption, recorded verbatim
  Limits limits;
};

ProblemSpec parse_problem(const nlohmann::json& doc);
ProblemSpec load_problem(const std::string& path);

}  // namespace hopfcert
