#pragma once

#include "fspace/group.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace fspace::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

/**
 * Group specification grammar:
 *   cyclic:N | dihedral:2N | symmetric:N | klein4
 *   perm:[[...],...]   one-line image notation, one list per generator
 *   @path.json         file holding such a list
 * Throws std::invalid_argument with a one-line message on bad input.
 */
FiniteGroup parse_group_spec(std::string_view spec);

/// Runs one subcommand. `args` excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace fspace::cli
