#include "hopfcert/cli.hpp"

int main(int argc, char** argv) { return hopfcert::run_cli(argc, argv); }
