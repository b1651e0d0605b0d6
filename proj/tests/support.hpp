// Copyright 2026 The scq authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SCQ_TESTS_SUPPORT_HPP
#define SCQ_TESTS_SUPPORT_HPP

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <sys/wait.h>

namespace scq_test {

inline std::string cli_path() {
    if (const char* env = std::getenv("SCQ_CLI")) return env;
    return SCQ_CLI_PATH;
}

inline std::string fixtures_dir() {
    if (const char* env = std::getenv("SCQ_FIXTURES")) return env;
    return SCQ_FIXTURES_PATH;
}

struct CmdResult {
    int exit_code = -1;
    std::string out;
};

/// Runs a shell command, capturing stdout (stderr passes through).
inline CmdResult run_cmd(const std::string& command) {
    CmdResult result;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed for: " + command);
    char buffer[4096];
    std::size_t got = 0;
    while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
        result.out.append(buffer, got);
    }
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

inline CmdResult run_cli(const std::string& args) {
    return run_cmd(cli_path() + " " + args);
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/// Drops the volatile timing line so deterministic reports compare equal.
inline std::string strip_timing(const std::string& json_text) {
    std::string out;
    std::istringstream in(json_text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.find("\"timing_ms\"") != std::string::npos) continue;
        out += line;
        out += '\n';
    }
    return out;
}

}  // namespace scq_test

#endif
