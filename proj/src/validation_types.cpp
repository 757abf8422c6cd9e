#include "agentizer/validation_types.hpp"

#include "agentizer/errors.hpp"

namespace agentizer {

const char* matcher_kind_name(MatcherKind k) {
    switch (k) {
    case MatcherKind::exact_text: return "exact-text";
    case MatcherKind::file_exists_nonempty: return "file-exists-nonempty";
    case MatcherKind::exit_code: return "exit-code";
    case MatcherKind::digest: return "digest";
    }
    return "?";
}

MatcherKind matcher_kind_from(const std::string& s) {
    if (s == "exact-text") return MatcherKind::exact_text;
    if (s == "file-exists-nonempty") return MatcherKind::file_exists_nonempty;
    if (s == "exit-code") return MatcherKind::exit_code;
    if (s == "digest") return MatcherKind::digest;
    throw EngineError(Errc::precondition, "unknown matcher kind: " + s);
}

const char* provenance_name(CaseProvenance p) {
    switch (p) {
    case CaseProvenance::repo_test_suite: return "repo-test-suite";
    case CaseProvenance::repo_example: return "repo-example";
    case CaseProvenance::synthesized: return "synthesized";
    }
    return "?";
}

CaseProvenance provenance_from(const std::string& s) {
    if (s == "repo-test-suite") return CaseProvenance::repo_test_suite;
    if (s == "repo-example") return CaseProvenance::repo_example;
    if (s == "synthesized") return CaseProvenance::synthesized;
    throw EngineError(Errc::precondition, "unknown provenance: " + s);
}

void to_json(nlohmann::json& j, const Matcher& m) {
    j = nlohmann::json{{"kind", matcher_kind_name(m.kind)}};
    switch (m.kind) {
    case MatcherKind::exact_text:
        j["path"] = m.path;
        j["expected-text"] = m.expected_text;
        break;
    case MatcherKind::file_exists_nonempty:
        j["path"] = m.path;
        break;
    case MatcherKind::exit_code:
        j["expected-exit"] = m.expected_exit;
        break;
    case MatcherKind::digest:
        j["path"] = m.path;
        j["sha256"] = m.sha256;
        break;
    }
}

void from_json(const nlohmann::json& j, Matcher& m) {
    m = Matcher{};
    m.kind = matcher_kind_from(j.at("kind").get<std::string>());
    if (j.contains("path")) m.path = j["path"].get<std::string>();
    if (j.contains("expected-text")) m.expected_text = j["expected-text"].get<std::string>();
    if (j.contains("expected-exit")) m.expected_exit = j["expected-exit"].get<int>();
    if (j.contains("sha256")) m.sha256 = j["sha256"].get<std::string>();
}

void to_json(nlohmann::json& j, const ValidationCase& c) {
    j = nlohmann::json{
        {"id", c.id},
        {"input", c.input},
        {"expected", c.expected},
        {"provenance", provenance_name(c.provenance)},
        {"gates-goal", c.gates_goal ? nlohmann::json(*c.gates_goal) : nlohmann::json()},
    };
}

void from_json(const nlohmann::json& j, ValidationCase& c) {
    c = ValidationCase{};
    c.id = j.at("id").get<std::string>();
    c.input = j.at("input").get<std::string>();
    c.expected = j.at("expected").get<Matcher>();
    c.provenance = provenance_from(j.at("provenance").get<std::string>());
    if (j.contains("gates-goal") && !j["gates-goal"].is_null()) {
        c.gates_goal = j["gates-goal"].get<std::string>();
    }
}

void to_json(nlohmann::json& j, const ValidationSet& s) {
    j = nlohmann::json{{"trajectory", s.trajectory}, {"cases", s.cases}};
}

void from_json(const nlohmann::json& j, ValidationSet& s) {
    s = ValidationSet{};
    s.trajectory = j.at("trajectory").get<std::string>();
    s.cases = j.at("cases").get<std::vector<ValidationCase>>();
}

void to_json(nlohmann::json& j, const CaseReport& r) {
    j = nlohmann::json{
        {"case", r.case_id},
        {"outcome", r.outcome == CaseOutcome::pass ? "pass" : "fail"},
        {"transcript", r.transcript},
    };
}

void from_json(const nlohmann::json& j, CaseReport& r) {
    r = CaseReport{};
    r.case_id = j.at("case").get<std::string>();
    r.outcome = j.at("outcome").get<std::string>() == "pass" ? CaseOutcome::pass : CaseOutcome::fail;
    r.transcript = j.at("transcript").get<std::string>();
}

void to_json(nlohmann::json& j, const GateReport& r) {
    j = nlohmann::json{
        {"passed", r.passed},
        {"per-case", r.per_case},
        {"evaluated-at", r.evaluated_at},
    };
}

void from_json(const nlohmann::json& j, GateReport& r) {
    r = GateReport{};
    r.passed = j.at("passed").get<bool>();
    r.per_case = j.at("per-case").get<std::vector<CaseReport>>();
    r.evaluated_at = j.at("evaluated-at").get<int64_t>();
}

} // namespace agentizer
