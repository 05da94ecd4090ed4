#include "abcpoly/report_json.hpp"

#include <json.hpp>

namespace abcpoly {

using ordered_json = nlohmann::ordered_json;

std::string fnv1a64_digest(const std::string& data) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

SystemSummary summarize(const VanishingSum& sum) {
    SystemSummary s;
    s.conductor = sum.context().conductor();
    s.n = sum.size();
    s.k = sum.constant_count();
    s.d = sum.span_dimension();
    s.univariate = sum.univariate();
    s.max_degree = sum.max_degree();
    for (const auto& f : sum.members()) s.members.push_back(f.to_string());
    return s;
}

namespace {

ordered_json tool_json(const ToolInfo& tool) {
    ordered_json j;
    j["name"] = tool.name;
    j["version"] = tool.version;
    j["seed"] = std::to_string(tool.seed);
    j["input_digest"] = tool.input_digest;
    return j;
}

ordered_json system_json(const SystemSummary& s) {
    ordered_json j;
    j["conductor"] = std::to_string(s.conductor);
    j["n"] = std::to_string(s.n);
    j["k"] = std::to_string(s.k);
    j["d"] = std::to_string(s.d);
    j["univariate"] = s.univariate;
    j["max_degree"] = std::to_string(s.max_degree);
    j["members"] = s.members;
    return j;
}

ordered_json hypothesis_json(const HypothesisCheckEntry& h) {
    ordered_json j;
    j["name"] = h.name;
    j["passed"] = h.passed;
    j["witness"] = h.witness;
    return j;
}

ordered_json entry_json(const BoundEntry& e) {
    ordered_json j;
    j["label"] = e.label;
    j["parameter"] = e.parameter;
    j["lhs"] = e.lhs.get_str();
    j["rhs"] = e.rhs.get_str();
    j["holds"] = e.holds;
    j["equality"] = e.equality;
    j["required"] = e.required;
    j["note"] = e.note;
    return j;
}

ordered_json report_json(const BoundReport& r) {
    ordered_json j;
    j["theorem"] = r.theorem;
    j["applicable"] = r.applicable;
    j["hypotheses"] = ordered_json::array();
    for (const auto& h : r.hypotheses) j["hypotheses"].push_back(hypothesis_json(h));
    j["entries"] = ordered_json::array();
    for (const auto& e : r.entries) j["entries"].push_back(entry_json(e));
    j["post_conditions"] = ordered_json::array();
    for (const auto& p : r.post_conditions) {
        j["post_conditions"].push_back(hypothesis_json(p));
    }
    j["trace"] = r.trace;
    return j;
}

}  // namespace

std::string render_verify_document(const VerifyDocument& doc) {
    ordered_json j;
    j["tool"] = tool_json(doc.tool);
    j["system"] = system_json(doc.system);
    j["reports"] = ordered_json::array();
    bool all_applicable = true, all_hold = true, any_eq = false;
    for (const auto& r : doc.reports) {
        j["reports"].push_back(report_json(r));
        all_applicable = all_applicable && r.applicable;
        all_hold = all_hold && r.all_required_hold();
        any_eq = any_eq || r.any_equality();
    }
    j["notes"] = doc.notes;
    ordered_json summary;
    summary["all_applicable"] = all_applicable;
    summary["all_hold"] = all_hold;
    summary["any_equality"] = any_eq;
    summary["exit_code"] = std::to_string(doc.exit_code);
    j["summary"] = summary;
    return j.dump(2) + "\n";
}

std::string render_analyze_document(const AnalyzeDocument& doc) {
    ordered_json j;
    j["tool"] = tool_json(doc.tool);
    j["system"] = system_json(doc.system);
    j["vanishing_subsums"] = ordered_json::array();
    for (const auto& s : doc.subsums) {
        ordered_json e;
        ordered_json idx = ordered_json::array();
        for (size_t i : s.indices) idx.push_back(std::to_string(i + 1));
        e["indices"] = idx;
        e["minimal"] = s.minimal;
        j["vanishing_subsums"].push_back(e);
    }
    j["hypotheses"] = ordered_json::array();
    for (const auto& h : doc.hypothesis_reports) {
        ordered_json e;
        switch (h.mode) {
            case HypothesisMode::StrictGcd: e["mode"] = "strict-gcd"; break;
            case HypothesisMode::DegBounded: e["mode"] = "deg-bounded"; break;
            case HypothesisMode::Pairwise: e["mode"] = "pairwise"; break;
        }
        e["passed"] = h.passed;
        ordered_json w = ordered_json::array();
        for (size_t i : h.witness) w.push_back(std::to_string(i + 1));
        e["witness"] = w;
        e["detail"] = h.detail;
        j["hypotheses"].push_back(e);
    }
    j["divisor_chain"] = doc.divisor_chain_texts;
    j["components"] = ordered_json::array();
    for (const auto& [text, m_b] : doc.component_counts) {
        ordered_json e;
        e["component"] = text;
        e["not_divisible"] = std::to_string(m_b);
        j["components"].push_back(e);
    }
    j["notes"] = doc.notes;
    return j.dump(2) + "\n";
}

std::string render_reduce_document(const ReduceDocument& doc) {
    ordered_json j;
    j["tool"] = tool_json(doc.tool);
    j["p"] = doc.p;
    j["q"] = doc.q;
    j["retries"] = std::to_string(doc.retries);
    j["reduced"] = doc.reduced_members;
    j["notes"] = doc.notes;
    return j.dump(2) + "\n";
}

std::string render_catalog_line(const CatalogEntry& entry) {
    ordered_json j;
    j["system"] = entry.members;
    ordered_json slack;
    for (const auto& [theorem, s] : entry.slack) slack[theorem] = s.get_str();
    j["slack"] = slack;
    j["equalities"] = entry.equalities;
    return j.dump();
}

std::string render_search_summary(const SearchSummaryDocument& doc) {
    ordered_json j;
    j["tool"] = tool_json(doc.tool);
    j["mode"] = doc.mode;
    j["enumerated"] = std::to_string(doc.enumerated);
    j["passing"] = std::to_string(doc.passing);
    j["violations"] = doc.violations;
    j["mismatches"] = doc.mismatches;
    j["solutions"] = doc.solutions;
    j["notes"] = doc.notes;
    return j.dump(2) + "\n";
}

std::string render_genfer_report(const ToolInfo& tool, const GenFerReport& report) {
    ordered_json j;
    j["tool"] = tool_json(tool);
    j["exponent"] = std::to_string(report.exponent);
    j["n"] = std::to_string(report.n);
    j["premise_met"] = report.premise_met;
    j["classes"] = ordered_json::array();
    for (size_t c = 0; c < report.classes.size(); ++c) {
        ordered_json e;
        ordered_json idx = ordered_json::array();
        for (size_t i : report.classes[c]) idx.push_back(std::to_string(i + 1));
        e["indices"] = idx;
        e["vanishes"] = static_cast<bool>(report.class_vanishes[c]);
        j["classes"].push_back(e);
    }
    j["decomposition_exists"] = report.decomposition_exists;
    j["theorem_violation"] = report.theorem_violation;
    j["note"] = report.note;
    return j.dump(2) + "\n";
}

}  // namespace abcpoly
