#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "relcr/cli.hpp"

using namespace relcr;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = cli::run_command(args, out, err);
    return {code, out.str(), err.str()};
}

std::string problem(const std::string& name) { return std::string(RELCR_SOURCE_DIR) + "/problems/" + name; }

class TempDir {
public:
    TempDir()
    {
        path_ = fs::temp_directory_path() / ("relcr_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                             "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }

    std::string write(const std::string& name, const std::string& text) const
    {
        auto p = path_ / name;
        std::ofstream(p) << text;
        return p.string();
    }

private:
    fs::path path_;
};

} // namespace

TEST(Cli, ExamplesPass)
{
    auto r = run({"examples"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("passed: 13/13"), std::string::npos) << r.out;
}

TEST(Cli, CheckJordan)
{
    for (const char* mode : {"module", "search"}) {
        auto r = run({"check", "--mode", mode, problem("jordan_gf3.json")});
        EXPECT_EQ(r.code, 0) << r.err;
        EXPECT_NE(r.out.find("verdict: NotRelCR"), std::string::npos) << r.out;
        EXPECT_NE(r.out.find("---cert---"), std::string::npos);
    }
    auto s = run({"check", problem("swap_gf3.json")});
    EXPECT_EQ(s.code, 0);
    EXPECT_NE(s.out.find("verdict: RelCR"), std::string::npos) << s.out;
}

TEST(Cli, AllProblemFilesRun)
{
    for (const auto& entry : fs::directory_iterator(std::string(RELCR_SOURCE_DIR) + "/problems")) {
        auto r = run({"check", entry.path().string()});
        EXPECT_EQ(r.code, 0) << entry.path() << "\n" << r.err;
        auto o = run({"optimal", entry.path().string()});
        EXPECT_EQ(o.code, 0) << entry.path() << "\n" << o.err;
        auto i = run({"irr", entry.path().string()});
        // relative irreducibility is decided through the module criterion only
        const bool levi = entry.path().filename().string().rfind("unipotent", 0) == 0;
        EXPECT_EQ(i.code, levi ? 2 : 0) << entry.path() << "\n" << i.err;
        EXPECT_EQ(o.code, 0) << entry.path() << "\n" << o.err;
    }
}

TEST(Cli, MissingFileIsInputError)
{
    auto r = run({"check", "/nonexistent/problem.json"});
    EXPECT_EQ(r.code, 2);
    EXPECT_FALSE(r.err.empty());
}

TEST(Cli, SyntaxErrorReportsPosition)
{
    TempDir d;
    auto f = d.write("bad.json", "{\n  \"field\": \"GF(3)\",\n  \"dim\": 2,\n  \"kind\": group\n}\n");
    auto r = run({"check", f});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("line 4"), std::string::npos) << r.err;
}

TEST(Cli, SemanticErrorReportsLocation)
{
    TempDir d;
    auto f = d.write("bad.json", "{\n  \"field\": \"GF(3)\",\n  \"dim\": 2,\n  \"kind\": \"group\",\n"
                                 "  \"generators\": [[[1, 1], [0, 1]]],\n  \"h\": {\"type\": \"glu\", \"u\": [7]}\n}\n");
    auto r = run({"check", f});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("line 6"), std::string::npos) << r.err;
    EXPECT_NE(r.err.find("/h/u/0"), std::string::npos) << r.err;

    auto g = d.write("shape.json", "{\"field\": \"GF(3)\", \"dim\": 2, \"kind\": \"group\",\n"
                                   " \"generators\": [[[1, 1, 0], [0, 1]]], \"h\": {\"type\": \"full_gl\"}}");
    auto s = run({"check", g});
    EXPECT_EQ(s.code, 2);
    EXPECT_NE(s.err.find("/generators/0/0"), std::string::npos) << s.err;

    auto sing = d.write("sing.json", "{\"field\": \"GF(3)\", \"dim\": 2, \"kind\": \"group\",\n"
                                     " \"generators\": [[[1, 1], [1, 1]]], \"h\": {\"type\": \"full_gl\"}}");
    EXPECT_EQ(run({"check", sing}).code, 2);
}

TEST(Cli, JsonFormatParses)
{
    auto r = run({"--format", "json", "semisimplify", problem("jordan5_gf3.json")});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_TRUE(j.contains("report"));
    EXPECT_TRUE(j.contains("cert"));
    EXPECT_EQ(j["report"]["steps"], 4);
}

TEST(Cli, OutputIsDeterministic)
{
    for (const char* cmd : {"check", "semisimplify", "optimal", "kraft", "irr"}) {
        auto a = run({cmd, problem("jordan5_gf3.json")});
        auto b = run({cmd, problem("jordan5_gf3.json")});
        EXPECT_EQ(a.out, b.out) << cmd;
        EXPECT_EQ(a.code, b.code);
    }
}

TEST(Cli, CertificatesReplay)
{
    TempDir d;
    std::vector<std::vector<std::string>> cmds{
        {"check", "--mode", "module", problem("jordan_gf3.json")},
        {"check", "--mode", "search", problem("unipotent_e12.json")},
        {"check", problem("swap_gf3.json")},
        {"semisimplify", problem("jordan5_gf3.json")},
        {"semisimplify", "--prefer", "ii", problem("jordan_gf3.json")},
        {"check", problem("unipotent_pair.json")},
        {"optimal", problem("kempf_e12.json")},
        {"irr", problem("swap_gf3.json")},
        {"kraft", problem("swap_gf2.json")},
        {"oracle", problem("jordan_gf3.json")},
    };
    int i = 0;
    for (auto& args : cmds) {
        for (const char* fmt : {"text", "json"}) {
            std::vector<std::string> full{"--format", fmt};
            full.insert(full.end(), args.begin(), args.end());
            auto r = run(full);
            ASSERT_EQ(r.code, 0) << args.back() << r.err;
            auto f = d.write("out" + std::to_string(i++), r.out);
            auto v = run({"verify-cert", f});
            EXPECT_EQ(v.code, 0) << args.front() << " " << args.back() << "\n" << v.out;
            EXPECT_NE(v.out.find("certificate: valid"), std::string::npos) << v.out;
        }
    }
}

TEST(Cli, TamperedCertificateFails)
{
    TempDir d;
    auto r = run({"check", "--mode", "module", problem("jordan_gf3.json")});
    ASSERT_EQ(r.code, 0);
    auto pos = r.out.find("---cert---");
    ASSERT_NE(pos, std::string::npos);
    auto cert = nlohmann::ordered_json::parse(r.out.substr(pos + 10));
    ASSERT_TRUE(cert.contains("destabilizer"));
    cert["destabilizer"]["weights"] = nlohmann::ordered_json::array({0, 1});
    auto f = d.write("tampered", cert.dump());
    auto v = run({"verify-cert", f});
    EXPECT_EQ(v.code, 1) << v.out;
    EXPECT_NE(v.out.find("certificate: invalid"), std::string::npos);

    auto s = run({"semisimplify", problem("jordan5_gf3.json")});
    auto j = nlohmann::ordered_json::parse(s.out.substr(s.out.find("---cert---") + 10));
    ASSERT_TRUE(j.contains("steps"));
    j["steps"].erase(j["steps"].begin());
    EXPECT_EQ(run({"verify-cert", d.write("short", j.dump())}).code, 1);
}

TEST(Cli, BudgetAndFieldRestrictions)
{
    EXPECT_EQ(run({"--max-dim-budget", "1", "check", problem("jordan_gf3.json")}).code, 3);
    EXPECT_EQ(run({"oracle", problem("unipotent_pair.json")}).code, 2);
    EXPECT_EQ(run({"check", "--mode", "bogus", problem("jordan_gf3.json")}).code, 2);
    EXPECT_EQ(run({}).code, 2);
}

TEST(Cli, PoolFile)
{
    TempDir d;
    auto pool = d.write("pool.json", "{\"pool\": [[[1, 1], [0, 1]]]}");
    auto r = run({"check", "--mode", "search", "--pool", pool, problem("swap_gf2.json")});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("verdict: NotRelCR"), std::string::npos) << r.out;
    auto bad = d.write("bad_pool.json", "[[[1, 0, 0], [0, 1, 0], [0, 0, 1]]]");
    EXPECT_EQ(run({"check", "--mode", "search", "--pool", bad, problem("swap_gf2.json")}).code, 2);
    auto pinned = d.write("pinned_pool.json", "[[[1, 0], [1, 1]]]");
    EXPECT_EQ(run({"check", "--mode", "search", "--pool", pinned, problem("jordan_gf3.json")}).code, 2);
}
