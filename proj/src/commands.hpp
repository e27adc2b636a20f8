#pragma once

#include <string>

#include "report.hpp"

namespace ptx {

struct CommandResult {
  Report report;
  bool pass = true;  // verify checks; reduce always true unless an error threw
};

CommandResult cmd_build(const std::string& model);
CommandResult cmd_verify(const std::string& check, unsigned seed, int trials);
CommandResult cmd_transform(const std::string& rule, const std::string& class_spec);
CommandResult cmd_reduce(int genus, int points, const std::string& class_spec,
                         const std::string& table_text);

// Frozen pushforward of the model-identifying isomorphism on the curve basis
// (columns = images of h, e123, e124, e134, e234, f12, f13, f14, f23, f24,
// f34 in the cube-side basis). Used as the reference for the iso and tau
// verifications.
IMat tau_reference_table();

std::string default_table_text();

}  // namespace ptx
