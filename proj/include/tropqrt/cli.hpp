#pragma once

namespace tropqrt {

/// Command-line entry point. Subcommands:
///   validate <file>                      strict-chain report, cycle verdict
///   cycle <file>                         vertices, edge lengths, L, ccal, delta, period
///   orbit <file> [--steps N] [--csv PATH]
///   plot <file> [--svg PATH] [--orbit]
///   add <file> --p X,Y --q X,Y
///   neg <file> --p X,Y
/// Exit codes: 0 success, 1 domain error, 2 usage error. Errors print a
/// one-line diagnostic to stderr.
int run_cli(int argc, const char* const* argv);

}  // namespace tropqrt
