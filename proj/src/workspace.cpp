#include "agentizer/workspace.hpp"

namespace agentizer {

void Workspace::ensure_dirs() const {
    std::filesystem::create_directories(meta_dir());
    std::filesystem::create_directories(trajectories_dir());
    std::filesystem::create_directories(envdir());
    std::filesystem::create_directories(transcripts_dir());
}

} // namespace agentizer
