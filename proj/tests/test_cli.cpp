#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "json.hpp"

using nlohmann::json;

namespace {

std::string cli_path() {
    const char* p = std::getenv("FLAGCONES_CLI");
    REQUIRE(p != nullptr);
    return p;
}

struct RunResult {
    int status;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = cli_path() + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int rc = pclose(pipe);
    return RunResult{WEXITSTATUS(rc), out};
}

}  // namespace

TEST_CASE("towertype then corners round trip") {
    auto tt = run("towertype --tower 4");
    CHECK(tt.status == 0);
    json t = json::parse(tt.out);
    CHECK(t["n"] == 4);
    {
        std::ofstream f("cli_t4.json");
        f << tt.out;
    }
    auto cs = run("corners --type cli_t4.json");
    CHECK(cs.status == 0);
    json c = json::parse(cs.out);
    std::set<std::pair<int, int>> got;
    for (const auto& pr : c["corners"]) got.emplace(pr[0].get<int>(), pr[1].get<int>());
    CHECK(got == std::set<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}});
    std::remove("cli_t4.json");
}

TEST_CASE("hrep output") {
    run("towertype --tower 4 -o cli_t4.json");
    auto h = run("hrep --type cli_t4.json");
    CHECK(h.status == 0);
    json hh = json::parse(h.out);
    CHECK(hh["dim"] == 3);
    CHECK(hh["ineqs"].size() == 5);
    std::remove("cli_t4.json");
}

TEST_CASE("flagtype of a flag file") {
    json flag{{"group", {{"cyclic_orders", {2, 3}}}},
              {"sequence", {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {0, 2}, {1, 2}}}};
    {
        std::ofstream f("cli_flag.json");
        f << flag.dump();
    }
    auto res = run("flagtype --flag cli_flag.json");
    CHECK(res.status == 0);
    json t = json::parse(res.out);
    CHECK(t["n"] == 6);
    // T(2,3): first row of the upper triangle is T(1,1..5) = 1,3,3,5,5
    CHECK(t["table"][0] == 1);
    CHECK(t["table"][1] == 3);
    std::remove("cli_flag.json");
}

TEST_CASE("minimal --n 6 finds exactly two types") {
    auto res = run("minimal --n 6");
    CHECK(res.status == 0);
    json m = json::parse(res.out);
    CHECK(m["count"] == 2);
    CHECK(m["minimal"].size() == 2);
}

TEST_CASE("verify subcommands exit zero on pass") {
    CHECK(run("verify classification --n 6").status == 0);
    CHECK(run("verify prop12").status == 0);
    CHECK(run("verify corners --n 5").status == 0);
    CHECK(run("verify realizability --n 6").status == 0);
    CHECK(run("verify tower-minimality --tower 2,3").status == 0);
    CHECK(run("verify kneser --samples 300 --seed 1 --n 16").status == 0);
    CHECK(run("verify bsz --samples 40 --seed 1").status == 0);
}

TEST_CASE("witness fourp emits the certificate") {
    auto res = run("witness fourp --primes 5");
    CHECK(res.status == 0);
    json cert = json::parse(res.out);
    CHECK(cert["n"] == 20);
    CHECK(cert["point"][14] == "51/10");
    CHECK(cert["exclusions"].size() == 3);
    for (const auto& e : cert["exclusions"]) {
        std::string margin = e["margin"];
        CHECK(margin[0] == '-');
    }
}

TEST_CASE("escape: feasible and infeasible exits") {
    run("towertype --tower 2,3 -o cli_t23.json");
    run("towertype --tower 3,2 -o cli_t32.json");
    auto ok = run("escape --type cli_t23.json --exclude cli_t32.json");
    CHECK(ok.status == 0);
    json esc = json::parse(ok.out);
    CHECK(esc["feasible"] == true);
    // excluding the cone itself is infeasible and exits 1
    auto self = run("escape --type cli_t23.json --exclude cli_t23.json");
    CHECK(self.status == 1);
    CHECK(json::parse(self.out)["feasible"] == false);
    std::remove("cli_t23.json");
    std::remove("cli_t32.json");
}

TEST_CASE("lift a point") {
    run("towertype --tower 2,3 -o cli_t23.json");
    {
        std::ofstream f("cli_pt.json");
        f << R"(["1","2","3","4","5"])";
    }
    auto res = run("lift --point cli_pt.json --type cli_t23.json --prime 2");
    CHECK(res.status == 0);
    json lifted = json::parse(res.out);
    CHECK(lifted["epsilon"] == "1/1");
    CHECK(lifted["point"].size() == 11);
    CHECK(lifted["point"][0] == "1/4");
    std::remove("cli_t23.json");
    std::remove("cli_pt.json");
}

TEST_CASE("degree-18 pipeline: witness type escapes the three prime cones") {
    auto w = run("witness pqr --primes 2,3,3");
    REQUIRE(w.status == 0);
    json cert = json::parse(w.out);
    {
        std::ofstream f("cli_t18.json");
        f << cert["flag_type"].dump();
    }
    run("towertype --tower 2,3,3 -o cli_a.json");
    run("towertype --tower 3,2,3 -o cli_b.json");
    run("towertype --tower 3,3,2 -o cli_c.json");
    auto esc = run("escape --type cli_t18.json --exclude cli_a.json,cli_b.json,cli_c.json");
    CHECK(esc.status == 0);
    json res = json::parse(esc.out);
    CHECK(res["feasible"] == true);
    CHECK(res["point"].size() == 17);
    for (const char* f : {"cli_t18.json", "cli_a.json", "cli_b.json", "cli_c.json"}) std::remove(f);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("flagtype").status == 2);
    CHECK(run("nonsense").status == 2);
    CHECK(run("verify unknown-target --n 4").status == 2);
    CHECK(run("witness fourp --primes 6").status == 2);  // 6 is not prime
}

TEST_CASE("byte-identical reruns") {
    auto a = run("witness fourp --primes 5");
    auto b = run("witness fourp --primes 5");
    CHECK(a.out == b.out);
    auto c = run("verify kneser --samples 200 --seed 9 --n 12 -o cli_rep1.json");
    auto d = run("verify kneser --samples 200 --seed 9 --n 12 -o cli_rep2.json");
    CHECK(c.status == 0);
    CHECK(d.status == 0);
    std::ifstream f1("cli_rep1.json"), f2("cli_rep2.json");
    std::string s1((std::istreambuf_iterator<char>(f1)), std::istreambuf_iterator<char>());
    std::string s2((std::istreambuf_iterator<char>(f2)), std::istreambuf_iterator<char>());
    CHECK(s1 == s2);
    std::remove("cli_rep1.json");
    std::remove("cli_rep2.json");
}
