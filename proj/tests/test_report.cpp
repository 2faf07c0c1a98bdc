#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "helpers.hpp"
#include "polybinom/errors.hpp"
#include "polybinom/survey.hpp"

using namespace polybinom;

namespace {

struct Run {
    int code;
    std::string out;
};

Run cli(const std::string& args) {
    static int counter = 0;
    const std::string path = "cli_out_" + std::to_string(counter++) + ".txt";
    const std::string command = std::string(POLYBINOM_CLI) + " " + args + " > " + path + " 2>&1";
    const int status = std::system(command.c_str());
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::remove(path.c_str());
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, buf.str()};
}

Json strip_timing(Json j) {
    j.erase("timing");
    return j;
}

}  // namespace

TEST_CASE("integer serialization") {
    CHECK(to_json(Integer(5)) == Json(5));
    CHECK(to_json(Integer(-7)) == Json(-7));
    const Integer big = Integer(1) << 80;
    CHECK(to_json(big) == Json(big.str()));
    CHECK(to_json(StarVector(fixture::vec({0, 0, 1}), 1, SeriesStart::One)).dump() ==
          R"({"entries":[0,0,1],"D":1,"start":1})");
}

TEST_CASE("audit serialization") {
    const AuditReport a = audit_chain("chain", fixture::vec({1, 2, 3}), 2);
    const Json j = to_json(a);
    CHECK(j["family"] == "chain");
    CHECK(j["verdict"] == "holds");
    CHECK(j["rows"].size() == 2);
    CHECK(j["rows"][0]["holds"] == true);
    const std::string csv = audit_csv_rows("g", {a});
    CHECK(csv.find("g,chain,1,1,<=,2,true") != std::string::npos);
}

TEST_CASE("chromatic report") {
    const auto r = theorem1_decomposition(fixture::p3());
    const Json j = to_json(r);
    CHECK(j["a"] == Json::array({4, 6, 6, 4}));
    CHECK(j["chi_star"]["entries"] == Json::array({0, 0, 2, 4}));
    CHECK(j["ok"] == true);
    CHECK(format_text(r).find("a = (4, 6, 6, 4)") != std::string::npos);
}

TEST_CASE("survey of small graphs") {
    SurveyOptions opt;
    opt.kind = SurveyKind::Graphs;
    opt.max_size = 4;
    const SurveyReport report = run_survey(opt);
    CHECK(report.instances.size() == 10);
    CHECK(report.count(InstanceStatus::Verified) == 10);
    CHECK(report.ok());
}

TEST_CASE("survey of posets checks the generator") {
    SurveyOptions opt;
    opt.kind = SurveyKind::Posets;
    opt.max_size = 4;
    const SurveyReport report = run_survey(opt);
    CHECK(report.instances.size() == 1 + 2 + 5 + 16);
    CHECK(report.generator_ok);
    CHECK(report.ok());
}

TEST_CASE("flow survey skips trees with a reason") {
    SurveyOptions opt;
    opt.kind = SurveyKind::Flows;
    opt.inputs = {fixture::data_path("tree.graph"), fixture::data_path("p3.graph"), fixture::data_path("theta.graph")};
    const SurveyReport report = run_survey(opt);
    CHECK(report.count(InstanceStatus::Skipped) == 2);
    CHECK(report.count(InstanceStatus::Verified) == 1);
    for (const auto& o : report.instances) {
        if (o.status == InstanceStatus::Skipped) {
            CHECK(o.reason == "bridge");
        }
    }
}

TEST_CASE("survey reports are deterministic across seeds and worker counts") {
    SurveyOptions opt;
    opt.kind = SurveyKind::Graphs;
    opt.mode = SurveyMode::Sample;
    opt.max_size = 5;
    opt.samples = 12;
    opt.seed = 77;
    const Json one = strip_timing(to_json(run_survey(opt)));
    opt.jobs = 4;
    const Json four = strip_timing(to_json(run_survey(opt)));
    CHECK(one.dump() == four.dump());
    CHECK(one["schema"] == 1);
    opt.seed = 78;
    CHECK(strip_timing(to_json(run_survey(opt))).dump() != one.dump());
}

TEST_CASE("exhaustive survey caps") {
    SurveyOptions opt;
    opt.max_size = 7;
    CHECK_THROWS_AS(run_survey(opt), CapExceeded);
    opt.max_size = 0;
    CHECK_THROWS_AS(run_survey(opt), InputError);
}

TEST_CASE("fnv hash") {
    CHECK(fnv1a_hex("") == "cbf29ce484222325");
    CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
}

TEST_CASE("command line exit codes") {
    const auto k3 = cli("chromatic " + fixture::data_path("k3.graph"));
    CHECK(k3.code == 0);
    CHECK(k3.out.find("chi* = (0, 0, 0, 6)") != std::string::npos);

    const auto p3 = cli("chromatic --json " + fixture::data_path("p3.graph"));
    CHECK(p3.code == 0);
    const Json j = Json::parse(p3.out);
    CHECK(j["schema"] == 1);
    CHECK(j["result"]["a"] == Json::array({4, 6, 6, 4}));

    const auto loop = cli("chromatic " + fixture::data_path("loop.graph"));
    CHECK(loop.code == 2);
    CHECK(loop.out.find("loop") != std::string::npos);

    const auto tree = cli("flow " + fixture::data_path("tree.graph"));
    CHECK(tree.code == 2);
    CHECK(tree.out.find("bridge") != std::string::npos);

    const auto theta = cli("flow " + fixture::data_path("theta.graph"));
    CHECK(theta.code == 0);
    CHECK(theta.out.find("c = (6, 6, 6, 6)") != std::string::npos);

    const auto dbl = cli("flow --json " + fixture::data_path("double_edge.graph"));
    CHECK(Json::parse(dbl.out)["result"]["phi_star"]["entries"] == Json::array({0, 0, 1}));

    const auto chain = cli("order " + fixture::data_path("chain3.poset"));
    CHECK(chain.code == 0);
    CHECK(chain.out.find("Omega* = (0, 0, 0, 1)") != std::string::npos);
    CHECK(cli("order " + fixture::data_path("antichain2.poset")).out.find("a = (1, 2, 1)") != std::string::npos);
    CHECK(cli("order " + fixture::data_path("antichain4.poset")).out.find("Omega* = (0, 1, 11, 11, 1)") !=
          std::string::npos);
    CHECK(cli("order " + fixture::data_path("cyclic.poset")).code == 2);

    const auto bad = cli("chromatic " + fixture::data_path("bad_vertex.graph"));
    CHECK(bad.code == 2);
    CHECK(bad.out.find(":3:") != std::string::npos);

    CHECK(cli("survey graphs --max-size 7").code == 3);
    CHECK(cli("survey graphs --max-size 3").code == 0);
    CHECK(cli("table1").code == 0);
}
