#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "thinset/manifest.hpp"

namespace thinset {

// Executes a manifest. Exit codes are the machine contract:
//   0 every check passed
//   1 a verification failed (witness printed)
//   2 input error
int run(const RunManifest& manifest, std::ostream& out, std::ostream& err);

// argv-style front end; builds a manifest and runs it.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace thinset
