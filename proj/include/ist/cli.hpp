#pragma once

// The `ist` command line: niven, mz, sg, chsh, ensemble, padic, snap, sweep.
// Exit codes: 0 success (OffSet verdicts included), 1 internal error,
// 2 invalid arguments, 3 library precondition violated.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ist/json_io.hpp"

namespace ist::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInvalidArgs = 2;
inline constexpr int kExitPrecondition = 3;

enum class Format { Text, Json, Csv };

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

struct CommandOutput {
    explicit CommandOutput(std::string name) : command(std::move(name)) {}

    std::string command;
    json params = json::object();
    json result = json::object();
    json verdicts = json::object();
    std::vector<std::pair<std::string, std::string>> summary;  ///< flat key/value fields
    std::vector<std::string> notes;                           ///< free text, text format only
    std::optional<Table> table;                               ///< sweeps
};

/// IST_DEFAULT_P, or 1009 when unset. Throws ParseError for a malformed value.
std::int64_t default_p();

std::string render(const CommandOutput& output, Format format);
std::string csv_escape(const std::string& field);

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ist::cli
