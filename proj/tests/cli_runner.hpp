#pragma once

// Minimal subprocess harness for exercising the CLI binary from the test
// executables.  ARRINV_CLI_PATH is injected by the build.

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#ifndef ARRINV_CLI_PATH
#error "ARRINV_CLI_PATH must point at the built CLI binary"
#endif

namespace testsupport {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// Runs the CLI with stderr folded into stdout; exit_code is -1 when the
// process could not be launched or died on a signal.
inline RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(ARRINV_CLI_PATH) + " " + args + " 2>&1";
  RunResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return result;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) result.out.append(buf.data(), got);
  int status = pclose(pipe);
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  return result;
}

inline std::string write_temp(const std::string& name, const std::string& contents) {
  std::string path = "cli_test_" + name;
  std::ofstream out(path);
  out << contents;
  return path;
}

}  // namespace testsupport
