#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(THUEQ_BIN) + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p);
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    int st = pclose(p);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

}  // namespace

TEST_CASE("verify-all exit codes") {
    Run a = run("verify-all");
    CHECK(a.code == 0);
    auto j = nlohmann::json::parse(a.out);
    CHECK(j["schema"] == "thueq-report/1");
    CHECK(j["verdict"] == "proven");
    CHECK(j["modules"]["assembly"]["kappa_hi"]["exact"] == "283/100");
    CHECK_FALSE(j.contains("timing"));

    Run b = run("verify-all --tmin 80");
    CHECK(b.code == 1);
    auto jb = nlohmann::json::parse(b.out);
    CHECK(jb["verdict"] == "inconclusive");
    bool named = false;
    for (const auto& g : jb["modules"]["assembly"]["gates"])
        if (g["name"] == "kappa") named = !g["ok"].get<bool>();
    CHECK(named);

    Run c = run("verify-all --kmax 5");
    CHECK(c.code == 1);
    auto jc = nlohmann::json::parse(c.out);
    CHECK(jc["modules"]["assembly"]["descent_lower_3"]["approx"] == "2.032e6");
}

TEST_CASE("reports are deterministic") {
    CHECK(run("verify-all").out == run("verify-all").out);
    CHECK(run("--json descent --type 3").out == run("--json descent --type 3").out);
}

TEST_CASE("usage errors exit 64") {
    CHECK(run("").code == 64);
    CHECK(run("no-such-command").code == 64);
    CHECK(run("verify-all --tmin abc").code == 64);
    CHECK(run("descent --type 2").code == 64);
    CHECK(run("corollary-lin --C -1").code == 64);
    CHECK(run("corollary-eps --eps 1").code == 64);
    CHECK(run("small-solutions --tmin x").code == 64);
}

TEST_CASE("list subcommands") {
    auto irr = nlohmann::json::parse(run("--json irreducible-list").out);
    CHECK(irr.size() == 27);
    auto en = nlohmann::json::parse(run("--json enumerate --max-abs 3").out);
    CHECK(en.size() == 76);
    auto sm = nlohmann::json::parse(run("--json small-solutions --tmin 100").out);
    CHECK(sm["solutions"].empty());
    Run rc = run("rouche-certs");
    CHECK(rc.code == 0);
    Run rc2 = run("rouche-certs --tmin 50");
    CHECK(rc2.code == 1);
}

TEST_CASE("module subcommands") {
    auto d = nlohmann::json::parse(run("--json descent --type 0").out);
    CHECK(d["steps"][0]["c_out"]["exact"] == "2103/100");
    CHECK(d["ok"] == true);
    auto c = nlohmann::json::parse(run("--json constants --type 3").out);
    CHECK(c["stated"]["c_coeff"]["exact"] == "387/25");
    CHECK(c["ok"] == true);
    auto l = nlohmann::json::parse(run("--json corollary-lin --C 1").out);
    CHECK(l["t0"]["exact"] == "524");
    auto e = nlohmann::json::parse(run("--json corollary-eps --eps 1/2").out);
    CHECK(e["at_2t0"]["iii"] == true);
}
