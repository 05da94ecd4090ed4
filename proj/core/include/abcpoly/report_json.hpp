// Deterministic JSON rendering of analysis documents. Every numeric value is
// an exact integer or rational serialized as a string; identical inputs and
// seeds produce byte-identical output.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "abcpoly/bounds.hpp"
#include "abcpoly/search.hpp"

namespace abcpoly {

// FNV-1a 64-bit content digest, hex, used to stamp reports with their input.
std::string fnv1a64_digest(const std::string& data);

struct ToolInfo {
    std::string name;
    std::string version;
    std::uint64_t seed = 1;
    std::string input_digest;
};

struct SystemSummary {
    unsigned conductor = 0;
    size_t n = 0, k = 0, d = 0;
    bool univariate = true;
    long max_degree = 0;
    std::vector<std::string> members;
};
SystemSummary summarize(const VanishingSum& sum);

struct VerifyDocument {
    ToolInfo tool;
    SystemSummary system;
    std::vector<BoundReport> reports;
    std::vector<std::string> notes;
    int exit_code = 0;
};
std::string render_verify_document(const VerifyDocument& doc);

struct AnalyzeDocument {
    ToolInfo tool;
    SystemSummary system;
    std::vector<Subsum> subsums;
    std::vector<HypothesisReport> hypothesis_reports;
    std::vector<std::string> divisor_chain_texts;
    std::vector<std::pair<std::string, size_t>> component_counts;  // text, m_b
    std::vector<std::string> notes;
};
std::string render_analyze_document(const AnalyzeDocument& doc);

struct ReduceDocument {
    ToolInfo tool;
    std::vector<std::string> p, q;
    unsigned retries = 0;
    std::vector<std::string> reduced_members;
    std::vector<std::string> notes;
};
std::string render_reduce_document(const ReduceDocument& doc);

// One catalog line (JSON object, no trailing newline).
std::string render_catalog_line(const CatalogEntry& entry);

struct SearchSummaryDocument {
    ToolInfo tool;
    std::string mode;  // "brute" or "fermat"
    std::uint64_t enumerated = 0;
    std::uint64_t passing = 0;
    std::vector<std::string> violations;
    std::vector<std::string> mismatches;
    std::vector<std::string> solutions;  // fermat mode
    std::vector<std::string> notes;
};
std::string render_search_summary(const SearchSummaryDocument& doc);

std::string render_genfer_report(const ToolInfo& tool, const GenFerReport& report);

}  // namespace abcpoly
