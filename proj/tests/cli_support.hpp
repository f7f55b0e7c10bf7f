#pragma once

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "support.hpp"

namespace testing {

struct CliResult {
    int exit_code = -1;
    std::string err;
};

/// Runs the pubdebt binary with `args`, capturing stderr.
inline CliResult run_cli(const std::string& args, const std::filesystem::path& scratch) {
    const auto err_path = scratch / "stderr.txt";
    const std::string command =
        std::string("\"") + PUBDEBT_CLI_PATH + "\" " + args + " > /dev/null 2> \"" + err_path.string() + "\"";
    const int status = std::system(command.c_str());
    CliResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.err = read_file(err_path);
    return r;
}

/// Data rows of a CSV file: comment lines and the header are dropped.
inline std::vector<std::vector<std::string>> csv_rows(const std::filesystem::path& p) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(read_file(p));
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty() || line.front() == '#') continue;
        if (header) {
            header = false;
            continue;
        }
        std::vector<std::string> fields;
        std::string field;
        std::istringstream ls(line);
        while (std::getline(ls, field, ',')) fields.push_back(field);
        if (!line.empty() && line.back() == ',') fields.emplace_back();
        rows.push_back(std::move(fields));
    }
    return rows;
}

}  // namespace testing
