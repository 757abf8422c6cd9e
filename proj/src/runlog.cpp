#include "agentizer/runlog.hpp"

#include <chrono>

#include <json.hpp>

#include "agentizer/errors.hpp"

namespace agentizer {

int64_t now_millis() {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::system_clock::now().time_since_epoch())
        .count();
}

RunLog::RunLog(std::filesystem::path file) : path_(std::move(file)) {
    std::filesystem::create_directories(path_.parent_path());
    out_.open(path_, std::ios::app);
    if (!out_) {
        throw EngineError(Errc::io_error, "cannot open run log: " + path_.string());
    }
}

void RunLog::append(const std::string& event, const std::string& node_id, const std::string& detail) {
    nlohmann::json j{
        {"timestamp", now_millis()},
        {"node-id", node_id},
        {"event", event},
        {"detail", detail},
    };
    std::lock_guard<std::mutex> lock(mu_);
    out_ << j.dump() << '\n';
    out_.flush();
}

std::vector<RunRecord> RunLog::read(const std::filesystem::path& file) {
    std::vector<RunRecord> records;
    std::ifstream in(file);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line);
        RunRecord r;
        r.timestamp = j.value("timestamp", int64_t{0});
        r.node_id = j.value("node-id", "");
        r.event = j.value("event", "");
        r.detail = j.value("detail", "");
        records.push_back(std::move(r));
    }
    return records;
}

size_t RunLog::count(const std::vector<RunRecord>& records, const std::string& event) {
    size_t n = 0;
    for (const auto& r : records) {
        if (r.event == event) ++n;
    }
    return n;
}

} // namespace agentizer
