#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "corpus.hpp"
#include "stablerev/cli.hpp"

using namespace stablerev;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("stablerev_cli_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter()++));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    static int& counter() {
        static int c = 0;
        return c;
    }
    std::string file(const std::string& name, const std::string& content) const {
        std::filesystem::path p = path / name;
        std::ofstream out(p);
        out << content;
        return p.string();
    }
};

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

std::string urn_doc() {
    return R"({"weights":{"R":"4/10","G":"3/10","B":"3/10"}})";
}

std::string council_sigma_doc() {
    WeightedGame game = corpus::college_council();
    SelectionFunction sigma = revision_operator(game.normalized(), game.t);
    Json doc = selection_to_json(sigma);
    doc["atoms"] = game.players.atoms();
    return doc.dump();
}

} // namespace

TEST_CASE("stable-set matches the documented output") {
    TempDir dir;
    std::string urn = dir.file("urn.json", urn_doc());
    RunResult r = run_cli({"stable-set", "--measure", urn, "--t", "1/2"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"tau\":[\"R\",\"G\",\"B\"]}\n");
}

TEST_CASE("runs are byte-for-byte deterministic") {
    TempDir dir;
    std::string urn = dir.file("urn.json", urn_doc());
    RunResult a = run_cli({"revise", "--measure", urn, "--t", "1/2"});
    RunResult b = run_cli({"revise", "--measure", urn, "--t", "1/2"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("revise a single event") {
    TempDir dir;
    std::string urn = dir.file("urn.json", urn_doc());
    RunResult r = run_cli({"revise", "--measure", urn, "--t", "1/2", "--event",
                           R"(["R","B"])"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"in\":[\"R\",\"B\"],\"out\":[\"R\"]}\n");
}

TEST_CASE("chain output") {
    TempDir dir;
    std::string m = dir.file("m.json", R"({"weights":{"w1":"8/20","w2":"7/20","w3":"5/20"}})");
    RunResult r = run_cli({"chain", "--measure", m, "--t", "1/2"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"chain\":[[\"w1\",\"w2\"],[\"w1\",\"w2\",\"w3\"]]}\n");
}

TEST_CASE("equivalence exit codes") {
    TempDir dir;
    std::string a = dir.file("a.json", R"({"weights":{"w1":"8/20","w2":"7/20","w3":"5/20"}})");
    std::string b = dir.file("b.json", R"({"weights":{"w1":"41/100","w2":"36/100","w3":"23/100"}})");
    std::string u = dir.file("u.json", R"({"weights":{"w1":"1/3","w2":"1/3","w3":"1/3"}})");
    CHECK(run_cli({"equivalent", "--measure", a, "--other", b, "--t", "1/2"}).code == 0);
    RunResult diff = run_cli({"equivalent", "--measure", a, "--other", u, "--t", "1/2"});
    CHECK(diff.code == 1);
    CHECK(diff.out == "{\"equivalent\":false}\n");
}

TEST_CASE("interval output") {
    TempDir dir;
    std::string m = dir.file("m.json", R"({"weights":{"w1":"8/20","w2":"7/20","w3":"5/20"}})");
    RunResult r = run_cli({"interval", "--measure", m, "--t", "1/2"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"lower\":\"7/8\",\"upper\":\"8/7\",\"units\":\"odds-ratio\"}\n");
}

TEST_CASE("represent and certify round-trip") {
    TempDir dir;
    std::string sigma_path = dir.file("council.json", council_sigma_doc());

    RunResult ok = run_cli({"represent", "--sigma", sigma_path, "--t", "1/2"});
    CHECK(ok.code == 0);
    std::string result_path = dir.file("result.json", ok.out);
    CHECK(run_cli({"certify", "--problem", sigma_path, "--result", result_path}).code == 0);

    RunResult refused = run_cli({"represent", "--sigma", sigma_path, "--t", "2/3"});
    CHECK(refused.code == 1);
    Json doc = parse_json_text(refused.out);
    CHECK(doc["status"] == "witness");
    CHECK(doc["witness"]["kind"] == "balance");
    std::string witness_path = dir.file("witness.json", refused.out);
    CHECK(run_cli({"certify", "--problem", sigma_path, "--result", witness_path}).code == 0);

    // tampering with the witness invalidates it
    Json tampered = doc;
    tampered["witness"]["A"].erase(0);
    tampered["witness"]["B"].erase(0);
    tampered["witness"]["rel"].erase(0);
    std::string bad_path = dir.file("bad.json", tampered.dump());
    CHECK(run_cli({"certify", "--problem", sigma_path, "--result", bad_path}).code == 1);
}

TEST_CASE("find-threshold") {
    TempDir dir;
    Space s = Space::create({"a", "b", "c"});
    SelectionFunction sigma =
        revision_operator(corpus::ints_measure(s, {1, 2, 4}), corpus::two_thirds());
    std::string path = dir.file("sigma.json", selection_to_json(sigma).dump());
    RunResult r = run_cli({"find-threshold", "--sigma", path, "--max-denominator", "12"});
    CHECK(r.code == 0);
    Json doc = parse_json_text(r.out);
    CHECK(doc["found"] == true);
    CHECK(parse_rational(doc["t"].get<std::string>()) > Rational(1, 2));
    std::string result_path = dir.file("ft.json", r.out);
    CHECK(run_cli({"certify", "--problem", path, "--result", result_path}).code == 0);
}

TEST_CASE("order deciders through the CLI") {
    TempDir dir;
    std::string rel = dir.file("rel.json", R"({"atoms":["a","b"],
        "strict":[[[],["a","b"]]], "weak":[[["a"],["b"]]]})");
    RunResult r = run_cli({"joint", "--relations", rel});
    CHECK(r.code == 0);
    std::string result = dir.file("res.json", r.out);
    CHECK(run_cli({"certify", "--problem", rel, "--result", result}).code == 0);

    std::string bad = dir.file("bad.json", R"({"atoms":["a","b"],
        "strict":[[["a","b"],[]]], "weak":[]})");
    RunResult refused = run_cli({"joint", "--relations", bad});
    CHECK(refused.code == 1);
    std::string refusal = dir.file("refusal.json", refused.out);
    CHECK(run_cli({"certify", "--problem", bad, "--result", refusal}).code == 0);

    std::string weak_only = dir.file("weak.json", R"({"atoms":["a","b"],
        "weak":[[["a","b"],[]]]})");
    CHECK(run_cli({"almost", "--relations", weak_only}).code == 1);

    std::string chain = dir.file("chain.json", R"({"atoms":["a","b"],
        "strict":[[["a"],["b"]],[["b"],["a","b"]]]})");
    CHECK(run_cli({"partial", "--relations", chain}).code == 0);
}

TEST_CASE("ratio representability through the CLI") {
    TempDir dir;
    // b1 > b2 > b3 > c1, c2, c3 at ratio 2 cannot be realized
    Json doc;
    doc["atoms"] = {"b1", "b2", "b3", "c1", "c2", "c3"};
    doc["strict"] = Json::array();
    auto pair = [&](std::vector<std::string> a, std::vector<std::string> b) {
        doc["strict"].push_back(Json::array({a, b}));
    };
    pair({"b1"}, {"b2"});
    pair({"b2"}, {"b3"});
    for (const char* c : {"c1", "c2", "c3"})
        pair({"b3"}, {c});
    std::string rel = dir.file("chain.json", doc.dump());
    RunResult r = run_cli({"k-represent", "--relations", rel, "--k", "2"});
    CHECK(r.code == 1);
    std::string result = dir.file("kres.json", r.out);
    CHECK(run_cli({"certify", "--problem", rel, "--result", result}).code == 0);
}

TEST_CASE("axioms and rules subcommands") {
    TempDir dir;
    std::string urn = dir.file("urn.json", urn_doc());
    SelectionFunction sigma = revision_operator(corpus::urn(), corpus::half());
    std::string sig = dir.file("sigma.json", selection_to_json(sigma).dump());
    CHECK(run_cli({"axioms", "--sigma", sig}).code == 0);

    // a broken table exits 1 with the failing axioms reported
    Json broken = selection_to_json(sigma);
    broken["map"][3]["out"] = Json::array(); // empty a nonempty selection
    std::string bad = dir.file("bad_sigma.json", broken.dump());
    RunResult axiom_fail = run_cli({"axioms", "--sigma", bad});
    CHECK(axiom_fail.code == 1);
    CHECK(parse_json_text(axiom_fail.out)["axioms"]["S1"]["status"] == "fail");

    RunResult or_rule = run_cli({"rules", "--measure", urn, "--t", "1/2", "--rule", "Or"});
    CHECK(or_rule.code == 1);
    Json doc = parse_json_text(or_rule.out);
    CHECK(doc["status"] == "fails");
    CHECK(doc["counterexample"].contains("A"));

    CHECK(run_cli({"rules", "--measure", urn, "--t", "1/2", "--rule", "RM"}).code == 0);
    CHECK(run_cli({"rules", "--measure", urn, "--t", "1/2", "--all"}).code == 1);
    CHECK(run_cli({"rules", "--measure", urn, "--t", "1/2", "--rule", "Nope"}).code == 2);

    RunResult region = run_cli({"rules", "--measure", urn, "--t", "1/2", "--or-region",
                                "--grid", "12"});
    CHECK(region.code == 0);
    CHECK(parse_json_text(region.out)["failures"].get<long long>() > 0);
}

TEST_CASE("voting subcommands") {
    TempDir dir;
    Json game = weighted_game_to_json(corpus::college_council());
    std::string game_path = dir.file("council.json", game.dump());

    RunResult core = run_cli({"voting", "--game", game_path});
    CHECK(core.code == 0);
    CHECK(parse_json_text(core.out)["core"] == Json::array({"c", "m"}));

    RunResult humanities =
        run_cli({"voting", "--game", game_path, "--core", R"(["e","h","a"])"});
    CHECK(parse_json_text(humanities.out)["core"] == Json::array({"e"}));

    CHECK(run_cli({"voting", "--game", game_path, "--decisive", R"(["c","m"])"}).code == 0);
    CHECK(run_cli({"voting", "--game", game_path, "--decisive", R"(["m"])", "--committee",
                   R"(["c","m"])"})
              .code == 1);

    RunResult projected = run_cli({"voting", "--game", game_path, "--project", "c"});
    CHECK(projected.code == 0);

    // simultaneous representation of the projected games
    WeightedGame council = corpus::college_council();
    Json sim;
    sim["players"] = council.players.atoms();
    sim["games"] = Json::array();
    for (int i = 0; i < council.players.size(); ++i) {
        SimpleGame g = projected_game(council, i);
        Json entry;
        entry["player"] = council.players.atom(i);
        entry["winning"] = simple_game_to_json(g)["winning"];
        sim["games"].push_back(std::move(entry));
    }
    std::string sim_path = dir.file("sim.json", sim.dump());
    RunResult simres = run_cli({"voting", "--simultaneous", "--games", sim_path});
    CHECK(simres.code == 0);
    std::string sim_result = dir.file("simres.json", simres.out);
    CHECK(run_cli({"certify", "--problem", sim_path, "--result", sim_result}).code == 0);
}

TEST_CASE("choice subcommand") {
    TempDir dir;
    Measure mu = Measure::normalized(Space::create({"a", "b", "c"}),
                                     {Rational(1), Rational(3, 2), Rational(2)});
    SelectionFunction sigma = revision_operator(mu, corpus::half());
    std::string sig = dir.file("sigma.json", selection_to_json(sigma).dump());
    CHECK(run_cli({"choice", "--sigma", sig, "--property", "beta"}).code == 0);
    RunResult alpha = run_cli({"choice", "--sigma", sig, "--property", "alpha"});
    CHECK(alpha.code == 1);
    CHECK(parse_json_text(alpha.out)["counterexample"]["X"] == Json::array({"b", "c"}));
    CHECK(run_cli({"choice", "--sigma", sig, "--all"}).code == 1);
}

TEST_CASE("generate-separator") {
    TempDir dir;
    RunResult r = run_cli({"generate-separator", "--t", "1/2", "--m", "2", "--n", "3",
                           "--eps", "1/4"});
    CHECK(r.code == 0);
    Json doc = parse_json_text(r.out);
    CHECK(doc["space"]["atoms"].size() == 5);
    // feed the generated table back through represent
    Json sigma_doc = doc["sigma"];
    sigma_doc["atoms"] = doc["space"]["atoms"];
    std::string sig = dir.file("sep.json", sigma_doc.dump());
    CHECK(run_cli({"represent", "--sigma", sig, "--t", "1/2"}).code == 0);
    CHECK(run_cli({"represent", "--sigma", sig, "--t", "3/4"}).code == 1);
}

TEST_CASE("certify re-verifies raw feasibility documents") {
    TempDir dir;
    LinearSystem sys;
    sys.dimension = 2;
    sys.weak_rows = {{Rational(-1), Rational(1)}};
    sys.strict_rows = {{Rational(1), Rational(-1)}};
    std::string problem = dir.file("sys.json", system_to_json(sys).dump());
    Json result = outcome_to_json(solve(sys));
    result["task"] = "solve";
    std::string result_path = dir.file("out.json", result.dump());
    CHECK(run_cli({"certify", "--problem", problem, "--result", result_path}).code == 0);
    Json tampered = result;
    tampered["beta"][0] = "0";
    std::string bad = dir.file("bad.json", tampered.dump());
    CHECK(run_cli({"certify", "--problem", problem, "--result", bad}).code == 1);
}

TEST_CASE("error exit codes") {
    TempDir dir;
    std::string garbage = dir.file("broken.json", "{not json");
    CHECK(run_cli({"stable-set", "--measure", garbage, "--t", "1/2"}).code == 2);
    CHECK(run_cli({"stable-set", "--measure", dir.file("missing_opt.json", "{}"),
                   "--t", "1/2"})
              .code == 2);
    CHECK(run_cli({"unknown-subcommand"}).code == 2);
    CHECK(run_cli({"stable-set"}).code == 2); // missing required option

    // budget errors exit 3: six atoms exceed the rule scan budget
    Space big = corpus::generic_space(6);
    Json doc = measure_to_json(corpus::ints_measure(big, {1, 1, 1, 1, 1, 1}));
    std::string m = dir.file("big.json", doc.dump());
    CHECK(run_cli({"rules", "--measure", m, "--t", "1/2", "--rule", "Or"}).code == 3);
}

TEST_CASE("table format renders") {
    TempDir dir;
    std::string urn = dir.file("urn.json", urn_doc());
    RunResult r = run_cli({"stable-set", "--measure", urn, "--t", "1/2", "--format", "table"});
    CHECK(r.code == 0);
    CHECK(r.out.find("tau") != std::string::npos);
}

TEST_CASE("output file option") {
    TempDir dir;
    std::string urn = dir.file("urn.json", urn_doc());
    std::string out_path = (dir.path / "result.json").string();
    RunResult r = run_cli({"stable-set", "--measure", urn, "--t", "1/2", "--out", out_path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(out_path);
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(content == "{\"tau\":[\"R\",\"G\",\"B\"]}\n");
}
