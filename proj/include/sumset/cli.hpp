#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "sumset/integer_set.hpp"

namespace sumset::cli {

enum ExitCode : int {
    ok = 0,
    internal_failure = 1,
    usage_error = 2,
    theorem_contradicted = 3,
    io_failure = 4,
};

/// "0,3,5" or "{0,3,5}". Throws MalformedSet on empty tokens, non-integers,
/// duplicates or fewer than two elements.
std::vector<Integer> parse_set_literal(std::string_view text);

/// Runs one command. args excludes the program name.
int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sumset::cli
