#pragma once

namespace hopfcert {

// Full command-line front end. Exit codes for `check` follow the certificate:
// 0 certified, 2 refuted, 3 inconclusive; 1 for usage or processing errors.
int run_cli(int argc, const char* const* argv);

}  // namespace hopfcert
