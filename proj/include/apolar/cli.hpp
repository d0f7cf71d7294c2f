#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace apolar::cli {

enum class Format { Json, Text };

struct JobConfig {
    std::string command;            // analyze | hf | gens | power | check
    std::string groups;             // e.g. "x:3,y:2"
    std::string polynomial;         // inline text, or empty when `file` is set
    std::string file;
    unsigned k = 1;
    std::uint64_t budget = 0;       // resolved: --budget, else APOLAR_BUDGET, else the default
    Format format = Format::Json;
    unsigned precision = 0;         // significant digits for roots
    bool lemmas = false;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitResource = 3;

// Entry point behind the `apolar` binary; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace apolar::cli
