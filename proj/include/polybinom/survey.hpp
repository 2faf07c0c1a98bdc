#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polybinom/report.hpp"

namespace polybinom {

inline constexpr const char* kToolVersion = "polybinom 0.1.0";

enum class SurveyKind { Graphs, Posets, Flows };
enum class SurveyMode { Exhaustive, Sample };

struct SurveyOptions {
    SurveyKind kind = SurveyKind::Graphs;
    int max_size = 4;
    SurveyMode mode = SurveyMode::Exhaustive;
    std::uint64_t seed = 1;
    int samples = 50;
    int edge_cap = kDefaultOrientationEdgeCap;
    int xi_cap = 5;
    int jobs = 1;
    // When non-empty, these files replace the generated family.
    std::vector<std::string> inputs;
};

enum class InstanceStatus { Verified, Counterexample, Skipped };

struct InstanceOutcome {
    std::string certificate;
    std::string input_text;
    std::string input_hash;  // FNV-1a 64 of input_text, hex
    InstanceStatus status = InstanceStatus::Verified;
    // Skipped: "loop", "bridge", "cap" or "acyclic". Counterexample: failing
    // families, or the assertion message.
    std::string reason;
    Json result;  // full report of the instance, null when skipped
};

struct SurveyReport {
    SurveyOptions options;
    std::vector<InstanceOutcome> instances;  // sorted by certificate
    // Posets only: classes per size against the known sequence.
    std::vector<std::pair<int, int>> generator_counts;
    bool generator_ok = true;
    double elapsed_seconds = 0.0;

    std::size_t count(InstanceStatus s) const;
    bool ok() const { return generator_ok && count(InstanceStatus::Counterexample) == 0; }
};

std::string_view kind_name(SurveyKind kind);
std::string_view status_name(InstanceStatus status);

/// Canonical form of a simple graph under vertex relabeling: "n:" followed
/// by the smallest upper-triangle adjacency string. Loops and parallel
/// edges are kept as multiplicities. n <= 8.
std::string graph_certificate(const Multigraph& g);

/// One representative per isomorphism class of connected simple graphs on
/// n vertices, from edge-subset enumeration, sorted by certificate. n <= 6.
std::vector<Multigraph> connected_simple_graphs(int n);

/// Dipoles with 2..5 parallel edges (k = 3 is the theta graph), a subdivided
/// theta, K4 with a doubled edge.
std::vector<Multigraph> flow_fixture_graphs();

std::string fnv1a_hex(const std::string& text);

SurveyReport run_survey(const SurveyOptions& options);

// "timing" is the only nondeterministic field.
Json to_json(const SurveyReport& report);
std::string format_text(const SurveyReport& report);
std::string audit_csv(const SurveyReport& report);

}  // namespace polybinom
