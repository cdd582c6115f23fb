#pragma once

#include "hopfcert/problem.hpp"
#include "hopfcert/stability.hpp"

namespace hopfcert {

struct Certificate {
  CertVerdict overall = CertVerdict::inconclusive;
  std::string text;  // stable-order JSON document
};

// Runs (R2), (R3), (R4) and the selected (R5) check, assembles the machine
// readable certificate and attaches the non-normative validator section.
// Nothing short-circuits: every condition is evaluated and reported.
Certificate verify(const ProblemSpec& spec);

// certificate text with the volatile wall-time section removed, for golden
// comparisons and reproducibility checks
std::string strip_volatile(const std::string& certificate_text);

int exit_code_for(CertVerdict v);  // 0 certified, 2 refuted, 3 inconclusive

}  // namespace hopfcert
