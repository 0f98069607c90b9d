#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "kacwreath/arrangement.hpp"

namespace kw {

/// Parses the face record {"group", "n", "k", "lambda"}; unknown keys and
/// malformed fields raise InputError naming the field.
ParameterFace parse_face(const nlohmann::json& j);
ParameterFace parse_face_text(const std::string& text);
nlohmann::json face_to_json(const ParameterFace& p);

struct CliResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// Runs `kacwreath <args...>` in-process. args excludes the program name.
CliResult run_cli(const std::vector<std::string>& args);

enum ExitCode { kExitOk = 0, kExitInput = 2, kExitUnsupported = 3, kExitWindow = 4 };

}  // namespace kw
