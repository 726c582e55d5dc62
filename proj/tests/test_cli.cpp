#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <gtest/gtest.h>
#include <json.hpp>

#include <germlab/germ_file.hpp>
#include <germlab/report.hpp>

using namespace germlab;

namespace
{

struct run_result {
    int status;
    std::string out;
};

run_result run(const std::string &args, bool with_stderr = false)
{
    const std::string cmd = std::string(GERMLAB_CLI) + " " + args + (with_stderr ? " 2>&1" : " 2>/dev/null");
    FILE *p = popen(cmd.c_str(), "r");
    std::string out;
    std::array<char, 4096> buf{};
    while (std::fgets(buf.data(), static_cast<int>(buf.size()), p)) {
        out += buf.data();
    }
    const int st = pclose(p);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::string fixture(const std::string &name)
{
    return (fixture_dir() / (name + ".json")).string();
}

std::filesystem::path write_temp(const std::string &name, const std::string &text)
{
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << text;
    return path;
}

} // namespace

TEST(GermFile, ParsesFields)
{
    const auto g = parse_germ_text(R"({"n":1,"p":2,"order":6,"components":["x1^2","x1^3"],"name":"c"})");
    EXPECT_EQ(g.n, 1u);
    EXPECT_EQ(g.p, 2u);
    EXPECT_EQ(g.germ.order(), 6u);
    EXPECT_EQ(g.name, "c");
    EXPECT_FALSE(g.exact_germ);
}

TEST(GermFile, ErrorsNameTheProblem)
{
    auto message = [](const std::string &text) {
        try {
            parse_germ_text(text, "f.json");
        } catch (const user_error &e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    EXPECT_NE(message(R"({"n":1,"p":2,"order":6,"components":["x1^2","x1^ 3 + z"]})").find("component 2"),
              std::string::npos);
    EXPECT_NE(message(R"({"n":1,"p":2,"order":6,"components":["x1^2","x1 + q"]})").find("column 6"),
              std::string::npos);
    EXPECT_NE(message("{\"n\":1,\n\"p\":2,,}").find("line 2"), std::string::npos);
    EXPECT_NE(message(R"({"n":1,"p":2,"order":6,"components":["x1^2"]})").find("expected 2 components"),
              std::string::npos);
    EXPECT_NE(message(R"({"n":1,"p":1,"order":6,"components":["1+x1"]})").find("constant"), std::string::npos);
    EXPECT_NE(message(R"({"p":1,"order":6,"components":["x1"]})").find("\"n\""), std::string::npos);
}

TEST(GermFile, FixturesLoadSorted)
{
    const auto fx = load_fixtures();
    ASSERT_GE(fx.size(), 15u);
    for (std::size_t i = 1; i < fx.size(); ++i) {
        EXPECT_LT(fx[i - 1].name, fx[i].name);
    }
    for (const auto &f : fx) {
        EXPECT_FALSE(f.note.empty()) << f.name;
    }
}

TEST(GermFile, PaddingIsReported)
{
    const auto g = parse_germ_text(R"({"n":1,"p":2,"order":4,"components":["x1^2","x1^3"]})");
    bool padded = false;
    EXPECT_EQ(germ_for_order(g, 5, &padded).order(), 6u);
    EXPECT_TRUE(padded);
    germ_for_order(g, 3, &padded);
    EXPECT_FALSE(padded);
}

TEST(Report, TableFlattensNestedJson)
{
    report_json j;
    j["a"] = 1;
    j["rows"] = report_json::array({{{"d", 1}, {"dim", 3}}});
    j["nested"]["b"] = "x";
    std::ostringstream os;
    emit(os, j, output_format::table);
    EXPECT_NE(os.str().find("a: 1"), std::string::npos);
    EXPECT_NE(os.str().find("nested.b: x"), std::string::npos);
    EXPECT_NE(os.str().find("dim"), std::string::npos);
}

TEST(Cli, SpecialOrthogonalFields)
{
    const auto r = run("gfields --group so:3 --jet-order 4");
    ASSERT_EQ(r.status, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["total_dim"], 3);
    EXPECT_EQ(j["group"], "so:3");
    EXPECT_EQ(j["per_degree"][0]["d"], 1);
    EXPECT_EQ(j["per_degree"][0]["dim"], 3);
}

TEST(Cli, RingFlag)
{
    const auto r = run("gfields --group sl:2 --jet-order 4 --ring");
    ASSERT_EQ(r.status, 0);
    EXPECT_EQ(nlohmann::json::parse(r.out)["ring"]["dim"], 1);
}

TEST(Cli, CuspModuliVanishes)
{
    const auto r = run("moduli --germ " + fixture("cusp") + " --pair ag-vs-rxg --group so:2 --jet-order 5");
    ASSERT_EQ(r.status, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["dim"], 0);
    EXPECT_EQ(j["subspaces_equal"], true);
}

TEST(Cli, TangentReport)
{
    const auto r = run("tangent --germ " + fixture("cusp") + " --group gl:2 --eq ag --jet-order 5 --extended");
    ASSERT_EQ(r.status, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["codim"], 1);
    EXPECT_EQ(j["stabilized"], true);
}

TEST(Cli, OutputIsByteIdentical)
{
    const auto args = "tangent --germ " + fixture("plane_cusp") + " --group tstar:1,1 --eq rxg --jet-order 4";
    EXPECT_EQ(run(args).out, run(args).out);
    const auto nf = "normal-form --germ " + fixture("monge_generic") + " --kind monge";
    EXPECT_EQ(run(nf).out, run(nf).out);
}

TEST(Cli, TruncationWarning)
{
    const auto path = write_temp("germlab_short.json", R"({"n":1,"p":2,"order":3,"components":["x1^2","x1^3"]})");
    const auto warned = run("tangent --germ " + path.string() + " --group so:2 --jet-order 4", true);
    EXPECT_EQ(warned.status, 0);
    EXPECT_NE(warned.out.find("warning"), std::string::npos);
    const auto quiet = run("tangent --germ " + path.string() + " --group so:2 --jet-order 4 --exact-germ", true);
    EXPECT_EQ(quiet.out.find("warning"), std::string::npos);
}

TEST(Cli, ExitCodes)
{
    EXPECT_EQ(run("gfields --group so:0").status, 1);
    EXPECT_EQ(run("gfields --group nope:2").status, 1);
    EXPECT_EQ(run("frobnicate").status, 1);
    EXPECT_EQ(run("moduli --germ " + fixture("cusp") + " --pair ag-vs-ah --group sl:2 --subgroup gl:2").status, 1);
    EXPECT_EQ(run("tangent --germ " + fixture("cusp") + " --group so:3").status, 1);
    const auto bad = write_temp("germlab_bad.json", R"({"n":1,"p":2,"order":3,"components":["x1^2","x1^^3"]})");
    const auto r = run("tangent --germ " + bad.string() + " --group so:2", true);
    EXPECT_EQ(r.status, 1);
    EXPECT_NE(r.out.find("column"), std::string::npos);
}

TEST(Cli, CurveCommands)
{
    const auto ak = run("normal-form --germ " + fixture("a2_curve") + " --kind ak");
    ASSERT_EQ(ak.status, 0);
    EXPECT_EQ(nlohmann::json::parse(ak.out)["k"], 2);
    const auto fr = run("invariants --germ " + fixture("a3_curve") + " --kind frontal");
    ASSERT_EQ(fr.status, 0);
    EXPECT_LT(nlohmann::json::parse(fr.out)["frontal"]["frenet_residual"].get<double>(), 1e-9);
    const auto cv = run("invariants --germ " + fixture("parabola") + " --kind curvature");
    ASSERT_EQ(cv.status, 0);
    EXPECT_NEAR(nlohmann::json::parse(cv.out)["curvature"][0].get<double>(), 2.0, 1e-12);
    const auto cg = run("congruent --germ-a " + fixture("parabola") + " --germ-b " + fixture("parabola")
                        + " --mode euclidean --jet-order 4");
    ASSERT_EQ(cg.status, 0);
    EXPECT_EQ(nlohmann::json::parse(cg.out)["match"], true);
}

TEST(Cli, ReproduceSuite)
{
    const auto r = run("reproduce dims");
    ASSERT_EQ(r.status, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["total"], 7);
    for (const auto &c : j["criteria"]) {
        EXPECT_EQ(c["suite"], "dims");
        EXPECT_TRUE(c.contains("measured"));
        EXPECT_TRUE(c.contains("expected"));
        EXPECT_TRUE(c.contains("provenance"));
    }
    EXPECT_EQ(run("reproduce nonsense").status, 1);
}
