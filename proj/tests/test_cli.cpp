#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lctkit/cli.hpp"
#include "lctkit/partition.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>

using namespace lctkit;
using nlohmann::json;

namespace {

json run_json(const std::vector<std::string>& args)
{
    const CliResult r = run_cli(args);
    INFO(r.err);
    REQUIRE(r.exit_code == 0);
    return json::parse(r.out);
}

json frac(const char* num, const char* den)
{
    return json{{"num", num}, {"den", den}};
}

int count_lines(const std::string& s, const std::string& needle)
{
    int c = 0;
    std::istringstream in(s);
    for (std::string line; std::getline(in, line);)
        c += line.find(needle) != std::string::npos;
    return c;
}

} // namespace

TEST_CASE("orbit-epsilon")
{
    json j = run_json({"orbit-epsilon", "--partition", "6,4"});
    CHECK(j["command"] == "orbit-epsilon");
    CHECK(j["version"] == kVersion);
    CHECK(j["inputs"]["partition"] == "6,4");
    CHECK(j["result"]["epsilon"] == frac("13", "41"));
    CHECK(j["result"]["witness"] == json{{"k", 2}});
    CHECK(j["result"]["formula_id"] == "thmC");

    j = run_json({"orbit-epsilon", "--partition", "1^10"});
    CHECK(j["result"]["epsilon"] == "inf");
    CHECK(j["result"]["witness"] == "zero-orbit");

    j = run_json({"orbit-epsilon", "--partition", "2^5"});
    CHECK(j["result"]["epsilon"] == frac("1", "1"));

    const CliResult csv = run_cli({"orbit-epsilon", "--partition", "4,4", "--format", "csv"});
    CHECK(csv.exit_code == 0);
    CHECK(csv.out == "partition,epsilon,witness\n4,4,11/24,k=2\n");

    CHECK(run_cli({"orbit-epsilon", "--partition", "4,x"}).exit_code == 2);
    CHECK(run_cli({"orbit-epsilon", "--partition", ""}).exit_code == 2);
    CHECK(run_cli({"orbit-epsilon"}).exit_code == 2);
    CHECK(run_cli({"orbit-epsilon", "--partition", "3", "--format", "dot"}).exit_code == 2);
}

TEST_CASE("orbit-poset")
{
    json j = run_json({"orbit-poset", "--n", "2"});
    CHECK(j["result"]["nodes"].size() == 2);
    CHECK(j["result"]["edges"].size() == 1);

    const CliResult dot = run_cli({"orbit-poset", "--n", "4", "--format", "dot"});
    REQUIRE(dot.exit_code == 0);
    CHECK(count_lines(dot.out, "[label=") == 5);
    CHECK(count_lines(dot.out, "->") == 4);
    CHECK(dot.out.find("\"4\" [label=\"4\\nε=1/2\"];") != std::string::npos);
    CHECK(dot.out.find("\"1,1,1,1\" [label=\"1,1,1,1\\nε=∞\"];") != std::string::npos);
    CHECK(dot.out.find("\"4\" -> \"3,1\";") != std::string::npos);

    const CliResult csv = run_cli({"orbit-poset", "--n", "10", "--format", "csv"});
    REQUIRE(csv.exit_code == 0);
    CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 43);
    CHECK(csv.out.find("\"6,4\",13/41\n") != std::string::npos);
    CHECK(csv.out.find("\"1,1,1,1,1,1,1,1,1,1\",inf\n") != std::string::npos);

    CHECK(run_cli({"orbit-poset", "--n", "16"}).exit_code == 3);
    CHECK(run_cli({"orbit-poset", "--n", "16", "--cap-n", "16"}).exit_code == 0);
    CHECK(run_cli({"orbit-poset", "--n", "0"}).exit_code == 2);
}

TEST_CASE("orbit-poset node values match the gl_10 table")
{
    std::ifstream in(std::string(LCTKIT_TEST_DATA_DIR) + "/gl10_orbit_table.json");
    REQUIRE(in);
    const json golden = json::parse(in);
    const json j = run_json({"orbit-poset", "--n", "10"});
    const json& nodes = j["result"]["nodes"];
    REQUIRE(nodes.size() == golden["nodes"].size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const json& g = golden["nodes"][i];
        CHECK(nodes[i]["partition"] == g["partition"]);
        const json& e = nodes[i]["epsilon"];
        const std::string text = e.is_string() ? e.get<std::string>()
                                 : e["den"] == "1" ? e["num"].get<std::string>()
                                                   : e["num"].get<std::string>() + "/" + e["den"].get<std::string>();
        CHECK(text == g["epsilon"]);
    }
    CHECK(j["result"]["edges"].size() == 62);
}

TEST_CASE("lct")
{
    json j = run_json({"lct", "--type", "A2"});
    CHECK(j["result"]["closed_form"]["epsilon"] == frac("2", "3"));
    CHECK(j["result"]["closed_form"]["formula_id"] == "prop3.5");

    j = run_json({"lct", "--type", "A", "--gl", "4", "--levi", "2,2", "--m", "1", "--oracle"});
    CHECK(j["result"]["agree"] == true);
    CHECK(j["result"]["closed_form"]["epsilon"] == frac("1", "1"));
    CHECK(j["result"]["oracle"]["epsilon"] == frac("1", "1"));

    j = run_json({"lct", "--type", "G2", "--m", "0"});
    CHECK(j["result"]["closed_form"]["epsilon"] == frac("1", "3"));

    j = run_json({"lct", "--type", "A4,D4"});
    CHECK(j["result"]["closed_form"]["epsilon"] == frac("1", "3"));
    CHECK(j["result"]["closed_form"]["formula_id"] == "cor3.6");

    j = run_json({"lct", "--type", "B3", "--levi", "1,2", "--m", "1", "--oracle"});
    CHECK(j["result"]["agree"] == true);

    j = run_json({"lct", "--gl", "5", "--oracle"});
    CHECK(j["result"]["closed_form"]["epsilon"] == frac("2", "5"));
    CHECK(j["result"]["agree"] == true);

    CHECK(run_cli({"lct", "--type", "E8", "--oracle"}).exit_code == 3);
    CHECK(run_cli({"lct", "--type", "B5", "--oracle", "--cap-rank", "5"}).exit_code == 0);
    CHECK(run_cli({"lct", "--type", "A"}).exit_code == 2);
    CHECK(run_cli({"lct", "--type", "Q3"}).exit_code == 2);
    CHECK(run_cli({"lct", "--gl", "4", "--levi", "2,1"}).exit_code == 2);
    CHECK(run_cli({"lct", "--type", "B3", "--levi", "4"}).exit_code == 2);
    CHECK(run_cli({"lct", "--type", "A2", "--format", "dot"}).exit_code == 2);
}

TEST_CASE("coxeter")
{
    const json j = run_json({"coxeter", "--type", "E8,G2"});
    CHECK(j["result"][0]["h"] == 30);
    CHECK(j["result"][0]["num_roots"] == 240);
    CHECK(j["result"][0]["lct"] == frac("1", "15"));
    CHECK(j["result"][1]["h"] == 6);
}

TEST_CASE("compact application commands")
{
    CHECK(run_json({"power-measure", "--n", "10", "--ell", "3"})["result"]["epsilon"] == frac("1", "3"));
    CHECK(run_json({"power-measure", "--n", "10", "--ell", "3"})["result"]["levi_partition"] == "4,3,3");
    CHECK(run_json({"power-measure", "--n", "4", "--ell", "1"})["result"]["epsilon"] == "inf");
    CHECK(run_cli({"power-measure", "--n", "1", "--ell", "3"}).exit_code == 2);
    CHECK(run_json({"rep-bound", "--factors", "A5,D4"})["result"]["epsilon_lower_bound"] == frac("1", "3"));
    CHECK(run_json({"mult-exponent", "--epsilon", "2/5"})["result"]["exponent"] == frac("3", "7"));
    CHECK(run_json({"mult-exponent", "--epsilon", "inf"})["result"]["exponent"] == frac("-1", "1"));
    CHECK(run_cli({"mult-exponent", "--epsilon", "-1/2"}).exit_code == 2);
    CHECK(run_json({"homogeneous", "--lambda", "3,3,2"})["result"]["epsilon"] == frac("1", "3"));

    json f = run_json({"fourier-exponent", "--n", "10", "--ell", "3"});
    CHECK(f["result"] == json{{"kind", "exponent"}, {"value", frac("1", "2")}});
    f = run_json({"fourier-exponent", "--n", "5", "--ell", "2"});
    CHECK(f["result"]["kind"] == "absolute_bound");

    const json c = run_json({"convolution", "--n", "10", "--ell", "3"});
    CHECK(c["result"] == json{{"k_all_q", 4}, {"k_bounded", 5}});

    json p = run_json({"pseudo-levi", "--type", "G2", "--levi", "2"});
    CHECK(p["result"]["epsilon"] == frac("2", "5"));
    CHECK(p["result"]["formula_id"] == "thmF");
    p = run_json({"pseudo-levi", "--gl", "6", "--levi", "3,2,1"});
    CHECK(p["result"]["epsilon"] == frac("1", "3"));
    CHECK(run_cli({"pseudo-levi", "--type", "A1,A1"}).exit_code == 2);
}

TEST_CASE("global behaviour")
{
    const std::vector<std::string> args{"orbit-poset", "--n", "7", "--format", "dot"};
    CHECK(run_cli(args).out == run_cli(args).out);
    CHECK(run_cli({}).exit_code == 2);
    CHECK(run_cli({"--help"}).exit_code == 0);
    CHECK(run_cli({"--version"}).out.find(kVersion) != std::string::npos);
    CHECK(run_cli({"no-such-command"}).exit_code == 2);
    CHECK(run_cli({"--format", "csv", "orbit-poset", "--n", "3"}).exit_code == 0);
}
