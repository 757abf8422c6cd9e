#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <string>
#include <vector>

namespace agentizer {

// Node lifecycle events plus auxiliary records (gate, resumed, warning, usage).
struct RunRecord {
    int64_t timestamp = 0; // epoch millis
    std::string node_id;
    std::string event;
    std::string detail;
};

int64_t now_millis();

// Append-only line-delimited JSON log at <workspace>/.agentizer/run.log.
// Safe for concurrent appends from worker threads.
class RunLog {
public:
    explicit RunLog(std::filesystem::path file);

    void append(const std::string& event, const std::string& node_id, const std::string& detail);

    const std::filesystem::path& path() const { return path_; }

    static std::vector<RunRecord> read(const std::filesystem::path& file);
    static size_t count(const std::vector<RunRecord>& records, const std::string& event);

private:
    std::filesystem::path path_;
    std::ofstream out_;
    std::mutex mu_;
};

} // namespace agentizer
