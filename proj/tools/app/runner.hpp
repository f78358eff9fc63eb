#pragma once

#include "config.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace electionpulse::app {

enum class Command {
    kIngest,
    kActors,
    kSentiment,
    kCompare,
    kTrainNbc,
    kCounts,
    kCloud,
    kTimeseries,
    kHeatmap,
    kTopics,
    kAll,
};

std::string_view to_string(Command command);
/// Also accepts "compare-classifiers" for kCompare.
std::optional<Command> parse_command(std::string_view name);

inline constexpr int kExitOk = 0;
inline constexpr int kExitPipeline = 1;
inline constexpr int kExitConfig = 2;

inline constexpr std::string_view kManifestName = "manifest.json";

struct RunOptions {
    /// Restricts the cloud command to one actor.
    std::string cloud_actor;
};

struct RunOutcome {
    int exit_code = kExitOk;
    /// Files in the output directory written by this run, manifest last.
    std::vector<std::string> artifacts;
    std::string error;
    std::vector<std::string> diagnostics;
};

/// Runs one command. Artifacts are staged and only moved into the output
/// directory when every stage succeeded; the manifest is written either way.
/// Never throws.
RunOutcome run(Command command, const RunConfig& config, const RunOptions& options = {},
               std::ostream* log = nullptr);

/// validate_config followed by run. Invalid configs give kExitConfig and a
/// failure manifest when the output directory is known.
RunOutcome run_config_file(Command command, const fs::path& config_path,
                           const Overrides& overrides = {}, const RunOptions& options = {},
                           const std::optional<std::string>& seed_env = std::nullopt,
                           std::ostream* log = nullptr);

}  // namespace electionpulse::app
