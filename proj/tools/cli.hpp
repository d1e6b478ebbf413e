#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "numsg/error.hpp"
#include "numsg/semigroup.hpp"

namespace numsg::cli {

enum class Command { Info, KPoly, Verify, VerifyComplex, Sweep };
enum class Format { Text, Json, Csv };

inline constexpr std::uint64_t kDefaultSeed = 7;

struct SweepParams {
    std::int64_t count = 500;
    std::int64_t m_min = 2;
    std::int64_t m_max = 6;
    std::int64_t d_max = 300;
};

struct RunConfig {
    Command command = Command::Info;
    std::vector<std::int64_t> generators;
    std::optional<std::string> input_path;
    Format format = Format::Text;
    std::optional<std::uint64_t> seed;
    Limits limits;
    bool oracle = false;
    bool auto_minimize = false;
    std::optional<std::int64_t> q;
    std::optional<std::int64_t> n;
    std::optional<std::string> betti_path;
    SweepParams sweep;
    /// Where identity-violation dumps are written; defaults to the system temp directory.
    std::optional<std::string> dump_dir;
};

struct RunResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

/// 0 pass, 2 input/precondition, 3 resource, 4 identity or consistency violation.
int exit_code_for(ErrorCode code) noexcept;

/// "4,7,9" -> {4, 7, 9}; whitespace around entries is ignored.
std::vector<std::int64_t> parse_generators(std::string_view text);

/// One semigroup per line, comma-separated; '#' comments and blank lines skipped.
std::vector<std::string> parse_batch(std::string_view text);

/// "2..6" -> {2, 6}; a single number means a one-point range.
std::pair<std::int64_t, std::int64_t> parse_range(std::string_view text);

/// Applies NUMSG_MAX_APERY_NODES / NUMSG_MAX_DEGREE when set.
Limits limits_from_environment(Limits base = {});

RunResult run(const RunConfig& config);

}  // namespace numsg::cli
