#pragma once

#include <filesystem>
#include <string>

namespace agentizer {

// Layout of everything the engine writes under <workspace>/.agentizer/.
class Workspace {
public:
    explicit Workspace(std::filesystem::path root) : root_(std::move(root)) {}

    const std::filesystem::path& root() const { return root_; }
    std::filesystem::path meta_dir() const { return root_ / ".agentizer"; }
    std::filesystem::path run_log_path() const { return meta_dir() / "run.log"; }
    std::filesystem::path env_state_path() const { return meta_dir() / "env-state"; }
    std::filesystem::path trajectories_dir() const { return meta_dir() / "trajectories"; }
    std::filesystem::path trajectory_path(const std::string& id) const {
        return trajectories_dir() / id;
    }
    std::filesystem::path todo_path() const { return meta_dir() / "todo"; }
    std::filesystem::path ckg_path() const { return meta_dir() / "ckg"; }
    std::filesystem::path usage_kb_path() const { return meta_dir() / "usage-kb"; }
    std::filesystem::path agent_card_path() const { return meta_dir() / "agent-card"; }
    std::filesystem::path envdir() const { return meta_dir() / "envdir"; }
    std::filesystem::path transcripts_dir() const { return meta_dir() / "transcripts"; }
    std::filesystem::path usage_report_path() const { return meta_dir() / "usage-report"; }
    std::filesystem::path inbox_dir() const { return meta_dir() / "inbox"; }

    void ensure_dirs() const;

private:
    std::filesystem::path root_;
};

} // namespace agentizer
