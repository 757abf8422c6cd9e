#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace agentizer {

// Closed matcher set keeps gates auditable and serializable.
enum class MatcherKind { exact_text, file_exists_nonempty, exit_code, digest };

const char* matcher_kind_name(MatcherKind k);
MatcherKind matcher_kind_from(const std::string& s);

struct Matcher {
    MatcherKind kind = MatcherKind::file_exists_nonempty;
    // exact-text with a path compares file content; without one it compares
    // the stdout of the case's input command.
    std::string path;
    std::string expected_text;
    int expected_exit = 0;
    std::string sha256;

    bool operator==(const Matcher&) const = default;
};

enum class CaseProvenance { repo_test_suite, repo_example, synthesized };

const char* provenance_name(CaseProvenance p);
CaseProvenance provenance_from(const std::string& s);

// One executable check: run `input` (may be empty), then apply the matcher.
struct ValidationCase {
    std::string id;
    std::string input;
    Matcher expected;
    CaseProvenance provenance = CaseProvenance::synthesized;
    std::optional<std::string> gates_goal; // required when synthesized

    bool operator==(const ValidationCase&) const = default;
};

struct ValidationSet {
    std::string trajectory;
    std::vector<ValidationCase> cases;

    bool operator==(const ValidationSet&) const = default;
};

enum class CaseOutcome { pass, fail };

struct CaseReport {
    std::string case_id;
    CaseOutcome outcome = CaseOutcome::fail;
    std::string transcript;

    bool operator==(const CaseReport&) const = default;
};

struct GateReport {
    bool passed = false;
    std::vector<CaseReport> per_case;
    int64_t evaluated_at = 0; // epoch millis

    bool operator==(const GateReport&) const = default;
};

void to_json(nlohmann::json& j, const Matcher& m);
void from_json(const nlohmann::json& j, Matcher& m);
void to_json(nlohmann::json& j, const ValidationCase& c);
void from_json(const nlohmann::json& j, ValidationCase& c);
void to_json(nlohmann::json& j, const ValidationSet& s);
void from_json(const nlohmann::json& j, ValidationSet& s);
void to_json(nlohmann::json& j, const CaseReport& r);
void from_json(const nlohmann::json& j, CaseReport& r);
void to_json(nlohmann::json& j, const GateReport& r);
void from_json(const nlohmann::json& j, GateReport& r);

} // namespace agentizer
