// polybinom: chromatic, flow and order polynomials in binomial bases.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polybinom/errors.hpp"
#include "polybinom/io.hpp"
#include "polybinom/survey.hpp"

namespace pb = polybinom;

namespace {

struct Output {
    bool json = false;
    std::string csv;
};

void write_csv(const std::string& path, const std::string& body) {
    if (path.empty()) {
        return;
    }
    std::ofstream out(path);
    if (!out) {
        throw pb::InputError("cannot write " + path);
    }
    out << body;
}

pb::Json envelope(const std::string& command, const std::string& source, pb::Json result) {
    return pb::Json{{"schema", pb::kReportSchema},
                    {"tool_version", pb::kToolVersion},
                    {"command", command},
                    {"input", source},
                    {"result", std::move(result)}};
}

int emit(const Output& out, const std::string& command, const std::string& source, pb::Json json,
         const std::string& text, const std::vector<pb::AuditReport>& audits) {
    write_csv(out.csv, pb::audit_csv_header() + pb::audit_csv_rows(source, audits));
    if (out.json) {
        std::cout << envelope(command, source, std::move(json)).dump(2) << '\n';
    } else {
        std::cout << text;
    }
    return pb::all_ok(audits) ? 0 : 1;
}

int rejected(const Output& out, const std::string& command, const std::string& reason, const std::string& message) {
    if (out.json) {
        std::cout << pb::Json{{"schema", pb::kReportSchema},
                              {"tool_version", pb::kToolVersion},
                              {"command", command},
                              {"rejected", reason},
                              {"message", message}}
                         .dump(2)
                  << '\n';
    }
    std::cerr << "rejected (" << reason << "): " << message << '\n';
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Chromatic, flow and order polynomials in binomial-coefficient bases"};
    app.require_subcommand(1);
    app.set_version_flag("--version", pb::kToolVersion);

    Output out;
    std::string file;
    int cap_edges = pb::kDefaultOrientationEdgeCap;
    auto common = [&](CLI::App* sub, bool needs_file) {
        sub->add_flag("--json", out.json, "machine-readable JSON report");
        sub->add_option("--csv", out.csv, "write audit rows as CSV to this path");
        sub->add_option("--cap-edges", cap_edges, "edge cap for orientation enumeration")->check(CLI::Range(1, 63));
        if (needs_file) {
            sub->add_option("FILE", file, "input file")->required()->check(CLI::ExistingFile);
        }
    };

    auto* chromatic = app.add_subcommand("chromatic", "chromatic polynomial of a graph and its a/b split");
    common(chromatic, true);
    auto* flow = app.add_subcommand("flow", "modular and integral flow polynomials of a graph");
    int xi_cap = pb::kDefaultCyclomaticCap;
    common(flow, true);
    flow->add_option("--cap-xi", xi_cap, "cyclomatic number cap")->check(CLI::Range(1, 16));
    auto* order = app.add_subcommand("order", "order polynomial of a poset and its h* cross-checks");
    common(order, true);

    auto* survey = app.add_subcommand("survey", "verify all checks over a family of instances");
    pb::SurveyOptions sopt;
    std::string kind = "graphs";
    std::string mode = "exhaustive";
    common(survey, false);
    survey->add_option("kind", kind, "graphs | posets | flows")
        ->required()
        ->check(CLI::IsMember({"graphs", "posets", "flows"}));
    survey->add_option("--max-size", sopt.max_size, "largest vertex or element count");
    survey->add_option("--mode", mode, "exhaustive | sample")->check(CLI::IsMember({"exhaustive", "sample"}));
    survey->add_option("--seed", sopt.seed, "sampling seed");
    survey->add_option("--samples", sopt.samples, "instances drawn in sample mode");
    survey->add_option("--cap-xi", sopt.xi_cap, "cyclomatic number cap for flows");
    survey->add_option("--jobs", sopt.jobs, "worker threads")->check(CLI::Range(1, 256));
    survey->add_option("FILE", sopt.inputs, "instance files replacing the generated family")->check(CLI::ExistingFile);

    auto* table1 = app.add_subcommand("table1", "coefficient relations for d = 5, 6, 7");
    table1->add_flag("--json", out.json, "machine-readable JSON report");

    CLI11_PARSE(app, argc, argv);

    std::string command = app.get_subcommands().front()->get_name();
    try {
        if (*chromatic) {
            const pb::Multigraph g = pb::read_graph_file(file);
            const auto r = pb::theorem1_decomposition(g, pb::CheckMode::Explore,
                                                      std::max(pb::kDefaultChromaticVertexCap, g.vertex_count()),
                                                      cap_edges);
            return emit(out, command, file, pb::to_json(r), pb::format_text(r), r.audits);
        }
        if (*flow) {
            const pb::Multigraph g = pb::read_graph_file(file);
            const auto r = pb::flow_polynomials(g, pb::CheckMode::Explore, xi_cap, cap_edges);
            return emit(out, command, file, pb::to_json(r), pb::format_text(r), r.audits);
        }
        if (*order) {
            const pb::Poset p = pb::read_poset_file(file);
            const auto r = pb::analyze_poset(p, pb::CheckMode::Explore);
            return emit(out, command, file, pb::to_json(r), pb::format_text(r), r.audits);
        }
        if (*survey) {
            sopt.kind = kind == "posets" ? pb::SurveyKind::Posets
                        : kind == "flows" ? pb::SurveyKind::Flows
                                          : pb::SurveyKind::Graphs;
            sopt.mode = mode == "sample" ? pb::SurveyMode::Sample : pb::SurveyMode::Exhaustive;
            sopt.edge_cap = cap_edges;
            const pb::SurveyReport report = pb::run_survey(sopt);
            write_csv(out.csv, pb::audit_csv(report));
            if (out.json) {
                std::cout << pb::to_json(report).dump(2) << '\n';
            } else {
                std::cout << pb::format_text(report);
            }
            return report.ok() ? 0 : 1;
        }
        if (*table1) {
            const auto rows = [] {
                std::vector<pb::Table1Row> all;
                for (int d = 5; d <= 7; ++d) {
                    for (auto& r : pb::table1_forms(d)) {
                        all.push_back(std::move(r));
                    }
                }
                return all;
            }();
            const auto matches = pb::match_table1();
            pb::Json json = pb::to_json(rows, matches);
            const bool matched = json["all_matched"].get<bool>();
            if (out.json) {
                std::cout << pb::Json{{"schema", pb::kReportSchema},
                                      {"tool_version", pb::kToolVersion},
                                      {"command", command},
                                      {"result", std::move(json)}}
                                 .dump(2)
                          << '\n';
            } else {
                std::cout << pb::format_text(rows, matches);
            }
            return matched ? 0 : 1;
        }
    } catch (const pb::CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << '\n';
        return 3;
    } catch (const pb::InputError& e) {
        const std::string message = e.what();
        std::string reason = "input";
        for (const char* r : {"loop", "bridge", "acyclic"}) {
            if (message.rfind(std::string(r) + ":", 0) == 0) {
                reason = r;
            }
        }
        return rejected(out, command, reason, message);
    } catch (const pb::InvariantError& e) {
        std::cerr << "invariant violated: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
