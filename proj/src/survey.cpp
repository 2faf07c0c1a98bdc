#include "polybinom/survey.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "polybinom/errors.hpp"
#include "polybinom/io.hpp"

namespace polybinom {

namespace {

// Posets on d unlabeled elements, d = 0..6.
constexpr int kPosetCounts[] = {1, 1, 2, 5, 16, 63, 318};

struct Job {
    std::string certificate;
    std::string text;
    std::function<InstanceOutcome()> run;
};

std::string skip_reason(const std::string& message) {
    for (const char* reason : {"loop", "bridge", "acyclic"}) {
        if (message.rfind(std::string(reason) + ":", 0) == 0) {
            return reason;
        }
    }
    return "input";
}

InstanceOutcome guarded(const Job& job) {
    InstanceOutcome out;
    try {
        out = job.run();
    } catch (const CapExceeded& e) {
        out.status = InstanceStatus::Skipped;
        out.reason = "cap";
        out.result = nullptr;
    } catch (const InputError& e) {
        out.status = InstanceStatus::Skipped;
        out.reason = skip_reason(e.what());
        out.result = nullptr;
    } catch (const std::exception& e) {
        out.status = InstanceStatus::Counterexample;
        out.reason = e.what();
        out.result = nullptr;
    }
    out.certificate = job.certificate;
    out.input_text = job.text;
    out.input_hash = fnv1a_hex(job.text);
    return out;
}

InstanceOutcome from_audits(Json result, const std::vector<AuditReport>& audits) {
    InstanceOutcome out;
    out.result = std::move(result);
    std::string failing;
    for (const auto& a : audits) {
        if (!a.ok()) {
            failing += failing.empty() ? a.family : "," + a.family;
        }
    }
    out.status = failing.empty() ? InstanceStatus::Verified : InstanceStatus::Counterexample;
    out.reason = failing;
    return out;
}

InstanceOutcome analyze_graph(const Multigraph& g, const SurveyOptions& opt) {
    const int vertex_cap = std::max(kDefaultChromaticVertexCap, opt.max_size);
    ChromaticResult r = theorem1_decomposition(g, CheckMode::Explore, vertex_cap, opt.edge_cap);
    const StarVector via = chi_star_via_orders(g, opt.edge_cap);
    AuditReport sum;
    sum.family = "chi_star_via_orders";
    sum.relation = "==";
    const std::size_t len = std::max(via.size(), r.chi_star.size());
    for (std::size_t j = 0; j < len; ++j) {
        sum.rows.push_back({static_cast<int>(j), via[j], r.chi_star[j], via[j] == r.chi_star[j]});
    }
    r.audits.push_back(std::move(sum));
    Json result = to_json(r);
    result["chi_star_via_orders"] = to_json(via);
    return from_audits(std::move(result), r.audits);
}

InstanceOutcome analyze_flow(const Multigraph& g, const SurveyOptions& opt) {
    FlowResult r = flow_polynomials(g, CheckMode::Explore, opt.xi_cap, opt.edge_cap);
    return from_audits(to_json(r), r.audits);
}

InstanceOutcome analyze_order(const Poset& p) {
    OrderResult r = analyze_poset(p, CheckMode::Explore);
    return from_audits(to_json(r), r.audits);
}

Job graph_job(const Multigraph& g, SurveyKind kind, const SurveyOptions& opt) {
    Job job;
    job.text = to_text(g);
    try {
        job.certificate = graph_certificate(g);
    } catch (const CapExceeded&) {
        job.certificate = "~" + job.text;
    }
    if (kind == SurveyKind::Flows) {
        job.run = [g, &opt] { return analyze_flow(g, opt); };
    } else {
        job.run = [g, &opt] { return analyze_graph(g, opt); };
    }
    return job;
}

Job poset_job(const Poset& p) {
    Job job;
    job.text = to_text(p);
    try {
        job.certificate = p.certificate();
    } catch (const CapExceeded&) {
        job.certificate = "~" + job.text;
    }
    job.run = [p] { return analyze_order(p); };
    return job;
}

Multigraph random_connected_graph(int n, std::mt19937_64& rng) {
    while (true) {
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (rng() & 1U) {
                    edges.push_back({u, v});
                }
            }
        }
        Multigraph g(n, std::move(edges));
        if (g.is_connected()) {
            return g;
        }
    }
}

Poset random_poset(int d, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> rel;
    for (int a = 0; a < d; ++a) {
        for (int b = a + 1; b < d; ++b) {
            if (rng() & 1U) {
                rel.emplace_back(a, b);
            }
        }
    }
    std::vector<int> perm(static_cast<std::size_t>(d));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return Poset(d, rel).relabeled(perm);
}

void require_size(const SurveyOptions& opt, int limit) {
    if (opt.max_size < 1) {
        throw InputError("survey: --max-size must be at least 1");
    }
    if (opt.mode == SurveyMode::Exhaustive && opt.max_size > limit) {
        throw CapExceeded("survey: exhaustive " + std::string(kind_name(opt.kind)) + " limited to size " +
                          std::to_string(limit));
    }
}

std::vector<Job> build_jobs(const SurveyOptions& opt, SurveyReport& report) {
    std::vector<Job> jobs;
    if (!opt.inputs.empty()) {
        for (const auto& path : opt.inputs) {
            if (opt.kind == SurveyKind::Posets) {
                jobs.push_back(poset_job(read_poset_file(path)));
            } else {
                jobs.push_back(graph_job(read_graph_file(path), opt.kind, opt));
            }
        }
        return jobs;
    }
    if (opt.mode == SurveyMode::Sample) {
        require_size(opt, 0);
        if (opt.samples < 0) {
            throw InputError("survey: negative sample count");
        }
        std::mt19937_64 rng(opt.seed);
        std::uniform_int_distribution<int> size(1, opt.max_size);
        for (int i = 0; i < opt.samples; ++i) {
            const int n = size(rng);
            if (opt.kind == SurveyKind::Posets) {
                jobs.push_back(poset_job(random_poset(n, rng)));
            } else {
                jobs.push_back(graph_job(random_connected_graph(n, rng), opt.kind, opt));
            }
        }
        return jobs;
    }
    if (opt.kind == SurveyKind::Posets) {
        require_size(opt, 6);
        for (int d = 1; d <= opt.max_size; ++d) {
            const auto posets = enumerate_posets(d);
            report.generator_counts.emplace_back(d, static_cast<int>(posets.size()));
            report.generator_ok = report.generator_ok && static_cast<int>(posets.size()) == kPosetCounts[d];
            for (const auto& p : posets) {
                jobs.push_back(poset_job(p));
            }
        }
        return jobs;
    }
    require_size(opt, 6);
    for (int n = 1; n <= opt.max_size; ++n) {
        for (const auto& g : connected_simple_graphs(n)) {
            jobs.push_back(graph_job(g, opt.kind, opt));
        }
    }
    if (opt.kind == SurveyKind::Flows) {
        for (const auto& g : flow_fixture_graphs()) {
            jobs.push_back(graph_job(g, opt.kind, opt));
        }
    }
    return jobs;
}

std::string json_scalar(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

}  // namespace

std::size_t SurveyReport::count(InstanceStatus s) const {
    return static_cast<std::size_t>(
        std::count_if(instances.begin(), instances.end(), [s](const InstanceOutcome& o) { return o.status == s; }));
}

std::string_view kind_name(SurveyKind kind) {
    switch (kind) {
        case SurveyKind::Graphs:
            return "graphs";
        case SurveyKind::Posets:
            return "posets";
        case SurveyKind::Flows:
            return "flows";
    }
    return "?";
}

std::string_view status_name(InstanceStatus status) {
    switch (status) {
        case InstanceStatus::Verified:
            return "verified";
        case InstanceStatus::Counterexample:
            return "counterexample";
        case InstanceStatus::Skipped:
            return "skipped";
    }
    return "?";
}

std::string graph_certificate(const Multigraph& g) {
    const int n = g.vertex_count();
    if (n > 8) {
        throw CapExceeded("graph_certificate: more than 8 vertices");
    }
    std::vector<std::vector<int>> mult(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    for (const auto& e : g.edges()) {
        ++mult[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)];
        if (!e.is_loop()) {
            ++mult[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)];
        }
    }
    const bool loops = g.has_loop();
    auto encode = [&](const std::vector<int>& perm) {
        // perm[new] = old
        std::string s;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                const int m = mult[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])]
                                  [static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])];
                s += static_cast<char>(m < 10 ? '0' + m : 'a' + std::min(m - 10, 25));
            }
        }
        if (loops) {
            s += '/';
            for (int i = 0; i < n; ++i) {
                const auto x = static_cast<std::size_t>(perm[static_cast<std::size_t>(i)]);
                s += static_cast<char>('0' + std::min(mult[x][x], 9));
            }
        }
        return s;
    };
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::string best = encode(perm);
    while (std::next_permutation(perm.begin(), perm.end())) {
        best = std::min(best, encode(perm));
    }
    return std::to_string(n) + ":" + best;
}

std::vector<Multigraph> connected_simple_graphs(int n) {
    if (n < 1 || n > 6) {
        throw CapExceeded("connected_simple_graphs: n must be in 1..6");
    }
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            pairs.emplace_back(u, v);
        }
    }
    std::map<std::string, Multigraph> classes;
    const std::uint32_t total = std::uint32_t{1} << pairs.size();
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        // A connected graph has at least n-1 edges.
        if (std::popcount(mask) < n - 1) {
            continue;
        }
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if ((mask >> i) & 1U) {
                edges.push_back({pairs[i].first, pairs[i].second});
            }
        }
        Multigraph g(n, std::move(edges));
        if (g.is_connected()) {
            classes.try_emplace(graph_certificate(g), std::move(g));
        }
    }
    std::vector<Multigraph> out;
    for (auto& [cert, g] : classes) {
        out.push_back(std::move(g));
    }
    return out;
}

std::vector<Multigraph> flow_fixture_graphs() {
    std::vector<Multigraph> out;
    for (int k = 2; k <= 5; ++k) {
        out.emplace_back(2, std::vector<Edge>(static_cast<std::size_t>(k), Edge{0, 1}));
    }
    // The 3-edge dipole is the theta graph itself; add a subdivided theta too.
    out.emplace_back(4, std::vector<Edge>{{0, 1}, {1, 3}, {0, 2}, {2, 3}, {0, 3}});
    out.emplace_back(4, std::vector<Edge>{{0, 1}, {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    return out;
}

std::string fnv1a_hex(const std::string& text) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

SurveyReport run_survey(const SurveyOptions& options) {
    const auto started = std::chrono::steady_clock::now();
    SurveyReport report;
    report.options = options;
    std::vector<Job> jobs = build_jobs(options, report);

    std::vector<InstanceOutcome> outcomes(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) {
            outcomes[i] = guarded(jobs[i]);
        }
    };
    const int threads = std::max(1, options.jobs);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
        }
    }
    std::stable_sort(outcomes.begin(), outcomes.end(), [](const InstanceOutcome& a, const InstanceOutcome& b) {
        return std::tie(a.certificate, a.input_text) < std::tie(b.certificate, b.input_text);
    });
    report.instances = std::move(outcomes);
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return report;
}

Json to_json(const SurveyReport& report) {
    const auto& opt = report.options;
    Json scope{{"family", std::string(kind_name(opt.kind))},
               {"mode", opt.mode == SurveyMode::Exhaustive ? "exhaustive" : "sample"},
               {"max_size", opt.max_size},
               {"edge_cap", opt.edge_cap}};
    if (opt.kind == SurveyKind::Flows) {
        scope["xi_cap"] = opt.xi_cap;
    }
    if (opt.mode == SurveyMode::Sample) {
        scope["seed"] = opt.seed;
        scope["samples"] = opt.samples;
    }
    scope["inputs"] = opt.inputs;

    std::map<std::string, int> skipped;
    Json counterexamples = Json::array();
    Json instances = Json::array();
    for (const auto& o : report.instances) {
        if (o.status == InstanceStatus::Skipped) {
            ++skipped[o.reason];
        }
        if (o.status == InstanceStatus::Counterexample) {
            counterexamples.push_back(Json{{"certificate", o.certificate}, {"input", o.input_text}, {"reason", o.reason}});
        }
        instances.push_back(Json{{"certificate", o.certificate},
                                 {"input_hash", o.input_hash},
                                 {"status", std::string(status_name(o.status))},
                                 {"reason", o.reason},
                                 {"result", o.result}});
    }
    Json summary{{"instances", report.instances.size()},
                 {"verified", report.count(InstanceStatus::Verified)},
                 {"skipped", report.count(InstanceStatus::Skipped)},
                 {"counterexamples", report.count(InstanceStatus::Counterexample)},
                 {"skipped_by_reason", skipped}};
    Json out{{"schema", kReportSchema}, {"tool_version", kToolVersion}, {"command", "survey"}, {"scope", scope},
             {"summary", summary}};
    if (!report.generator_counts.empty()) {
        Json counts = Json::array();
        for (const auto& [d, c] : report.generator_counts) {
            counts.push_back(Json{{"d", d}, {"classes", c}, {"expected", kPosetCounts[d]}});
        }
        out["generator"] = Json{{"counts", counts}, {"ok", report.generator_ok}};
    }
    out["counterexamples"] = counterexamples;
    out["instances"] = instances;
    out["ok"] = report.ok();
    out["timing"] = Json{{"elapsed_seconds", report.elapsed_seconds}};
    return out;
}

std::string format_text(const SurveyReport& report) {
    std::ostringstream out;
    const auto& opt = report.options;
    out << "survey " << kind_name(opt.kind) << " (" << (opt.mode == SurveyMode::Exhaustive ? "exhaustive" : "sample")
        << ", max size " << opt.max_size << ")\n";
    for (const auto& [d, c] : report.generator_counts) {
        out << "  generator d=" << d << ": " << c << " classes (expected " << kPosetCounts[d] << ")\n";
    }
    out << "instances " << report.instances.size() << ", verified " << report.count(InstanceStatus::Verified)
        << ", skipped " << report.count(InstanceStatus::Skipped) << ", counterexamples "
        << report.count(InstanceStatus::Counterexample) << '\n';
    std::map<std::string, int> skipped;
    for (const auto& o : report.instances) {
        if (o.status == InstanceStatus::Skipped) {
            ++skipped[o.reason];
        }
    }
    for (const auto& [reason, n] : skipped) {
        out << "  skipped (" << reason << "): " << n << '\n';
    }
    for (const auto& o : report.instances) {
        if (o.status == InstanceStatus::Counterexample) {
            out << "counterexample " << o.certificate << ": " << o.reason << '\n' << o.input_text;
        }
    }
    out << "elapsed " << report.elapsed_seconds << " s\n";
    out << (report.ok() ? "PASS" : "FAIL") << '\n';
    return out.str();
}

std::string audit_csv(const SurveyReport& report) {
    std::ostringstream out;
    out << audit_csv_header();
    for (const auto& o : report.instances) {
        if (o.result.is_null()) {
            continue;
        }
        for (const auto& a : o.result["audits"]) {
            for (const auto& row : a["rows"]) {
                out << o.certificate << ',' << a["family"].get<std::string>() << ',' << row["j"].dump() << ','
                    << json_scalar(row["lhs"]) << ',' << a["relation"].get<std::string>() << ','
                    << json_scalar(row["rhs"]) << ',' << (row["holds"].get<bool>() ? "true" : "false") << '\n';
            }
        }
    }
    return out.str();
}

}  // namespace polybinom
