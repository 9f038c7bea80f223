#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace jmotive::cli {

enum class OutputMode { Text, Json };

// JMOTIVE_OUTPUT=json|text, read on first use.
OutputMode default_output_mode();

// Runs one command; args exclude the program name. Exit status 0 on success,
// 1 for domain errors, 2 for usage errors.
int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jmotive::cli
