#pragma once

// Minimal helper to run the CLI binary and capture stdout plus exit code.
// The binary path comes in via the HELMERT_CLI_PATH compile definition.

#include <array>
#include <cstdio>
#include <stdexcept>
#include <string>

#include <sys/wait.h>

namespace testsupport {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

inline RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(HELMERT_CLI_PATH) + " " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    throw std::runtime_error("failed to spawn: " + cmd);
  }
  RunResult res;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    res.out.append(buf.data(), got);
  }
  const int status = pclose(pipe);
  if (WIFEXITED(status)) {
    res.exit_code = WEXITSTATUS(status);
  }
  return res;
}

// Drop the duration_ms line so two documents can be compared byte for byte.
inline std::string strip_duration(const std::string& doc) {
  std::string out;
  out.reserve(doc.size());
  std::size_t pos = 0;
  while (pos < doc.size()) {
    std::size_t eol = doc.find('\n', pos);
    if (eol == std::string::npos) eol = doc.size() - 1;
    const std::string line = doc.substr(pos, eol - pos + 1);
    if (line.find("\"duration_ms\"") == std::string::npos) {
      out += line;
    }
    pos = eol + 1;
  }
  return out;
}

}  // namespace testsupport
