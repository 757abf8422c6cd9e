#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace agentizer {

enum class NetworkPolicy { allowed, denied };

// Every script execution and path-taking tool call runs under exactly one
// policy. Paths outside workdir are rejected before anything touches disk.
struct SandboxPolicy {
    std::filesystem::path workdir;
    double wall_clock_limit = 60.0; // seconds
    NetworkPolicy network = NetworkPolicy::denied;
    std::vector<std::string> env_allowlist; // PATH/HOME/LANG always pass through
};

// Resolves a user-supplied path against the policy workdir. Returns the
// absolute path when it stays inside workdir (lexically and after symlink
// resolution of existing prefixes), nullopt when it escapes.
std::optional<std::filesystem::path> confine_path(const SandboxPolicy& policy,
                                                  const std::string& user_path);

// Relative form of a confined path for durable records.
std::string workspace_relative(const SandboxPolicy& policy, const std::filesystem::path& abs);

struct CommandResult {
    int exit_code = -1;
    bool timed_out = false;
    std::string transcript; // merged stdout+stderr, capped
};

// /bin/sh -c <command> with cwd=workdir, filtered environment and a
// wall-clock kill (whole process group) at the policy limit.
CommandResult run_command(const SandboxPolicy& policy, const std::string& command);

void to_json(nlohmann::json& j, const SandboxPolicy& p);
void from_json(const nlohmann::json& j, SandboxPolicy& p);

} // namespace agentizer
