#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + (env.empty() ? "" : " ") + CRS_PLUCKER_BIN + std::string(" ") + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

struct TempPath {
    std::filesystem::path path;
    explicit TempPath(const std::string& name) : path(std::filesystem::temp_directory_path() / name) {
        std::filesystem::remove(path);
    }
    ~TempPath() { std::filesystem::remove(path); }
};

}  // namespace

TEST_CASE("class command") {
    const Run plain = run("class 2 --format plain");
    CHECK(plain.status == 0);
    CHECK(plain.out == "Y[2](d) = (d^2 - d) * s[1,0]\n");

    CHECK(run("class 2,1").status == 2);
    CHECK(run("class 0").status == 2);
    CHECK(run("class abc").status == 2);
    CHECK(run("class").status == 2);

    const Run j = run("class 2,2 --format json");
    CHECK(j.status == 0);
    const auto doc = nlohmann::json::parse(j.out);
    CHECK(doc.at("partition") == nlohmann::json::parse("[2,2]"));
    CHECK(doc.at("codim") == 2);
    CHECK(doc.at("terms")[0].at("coeff") == nlohmann::json::parse(R"(["0","-3","11/2","-3","1/2"])"));

    CHECK(run("class 2,3").out == run("class 3,2").out);
    CHECK(run("class 3,2 --pivot max").out == run("class 3,2").out);
    CHECK(run("class 3,2 --pivot 2,3").out == run("class 3,2").out);
    CHECK(run("class 3,2 --pivot 2,2").status == 2);
    CHECK(run("class 3,2 --format yaml").status == 2);
    CHECK(run("class 3 --format latex").out.find("\\left[\\overline{Y}_{3}(d)\\right]") == 0);
}

TEST_CASE("plucker command") {
    const Run bitangents = run("plucker 2,2 --codim 0 --eval 4");
    CHECK(bitangents.status == 0);
    CHECK(bitangents.out == "28\n");

    const Run table = run("plucker 3 --all");
    CHECK(table.status == 0);
    CHECK(table.out == "Pl[3;2] = d^3-3d^2+2d\nPl[3;0] = 3d^2-6d\n");
    CHECK(run("plucker 3").out == table.out);
    CHECK(run("plucker 3 --codim 0").out == "Pl[3;0] = 3d^2-6d\n");

    CHECK(run("plucker 2,2 --codim 1").status == 2);
    CHECK(run("plucker 2,2 --codim 0 --all").status == 2);
    CHECK(run("plucker 2,2 --codim 0 --eval 3").status == 4);
    CHECK(run("plucker 2,2 --eval 3").status == 4);
    CHECK(run("plucker 2,2 --eval x").status == 2);

    const Run all = run("plucker 2,2 --all --eval 5");
    CHECK(all.status == 0);
    CHECK(all.out == "Pl[2,2;2](5) = 60\nPl[2,2;0](5) = 120\n");

    const auto values = nlohmann::json::parse(run("plucker 2,2 --eval 4 --format json").out);
    CHECK(values.at("d") == 4);
    CHECK(values.at("values")[1].at("value") == "28");

    const auto rows = nlohmann::json::parse(run("plucker 10,2,2 --format json").out);
    std::vector<int> degrees;
    for (const auto& row : rows.at("rows")) {
        degrees.push_back(row.at("degree").get<int>());
        CHECK(row.at("verdict") == "match");
    }
    CHECK(degrees == std::vector<int>{14, 14, 14, 13, 12, 11});
    CHECK(run("plucker 3 --format latex").out.find("\\begin{align*}") == 0);
}

TEST_CASE("verify command") {
    const Run six = run("verify --max-weight 6");
    CHECK(six.status == 0);
    CHECK(six.out.find("10 partitions") != std::string::npos);
    CHECK(six.out.find("PASS") != std::string::npos);

    const Run all = run("verify --max-weight 4 --pivots all --format json");
    CHECK(all.status == 0);
    const auto doc = nlohmann::json::parse(all.out);
    CHECK(doc.at("ok") == true);
    CHECK(doc.at("pivots") == "all");
    CHECK(doc.at("partitions") == 4);

    CHECK(run("verify --max-weight 8 --threads 1").out == run("verify --max-weight 8 --threads 4").out);
    CHECK(run("verify").status == 2);
    CHECK(run("verify --max-weight 1").status == 2);
    CHECK(run("verify --max-weight 6 --pivots some").status == 2);
}

TEST_CASE("help and unknown commands") {
    CHECK(run("--help").status == 0);
    CHECK(run("class --help").status == 0);
    CHECK(run("frobnicate").status == 2);
    CHECK(run("").status == 2);
}

TEST_CASE("persistent cache") {
    TempPath cache("pluck_cli_cache.json");
    const std::string flag = " --cache " + cache.path.string();

    CHECK(run("class 3,2" + flag).status == 0);
    CHECK(std::filesystem::exists(cache.path));
    const auto saved = nlohmann::json::parse(std::ifstream(cache.path));
    CHECK(saved.contains("3,2"));
    CHECK(saved.contains("3"));

    const Run info = run("cache info" + flag);
    CHECK(info.status == 0);
    CHECK(info.out.find("3,2") != std::string::npos);

    CHECK(run("cache warm --max-weight 6" + flag).status == 0);
    CHECK(nlohmann::json::parse(std::ifstream(cache.path)).size() == 10);

    // tamper with an entry: it must be dropped and recomputed
    auto doc = nlohmann::json::parse(std::ifstream(cache.path));
    doc["2,2"]["terms"][0]["coeff"] = {"0", "1"};
    std::ofstream(cache.path) << doc.dump();
    CHECK(run("class 2,2" + flag).out == run("class 2,2").out);
    CHECK(run("plucker 2,2 --codim 0 --eval 4" + flag).out == "28\n");

    const Run env = run("cache info", "CRS_PLUCKER_CACHE=" + cache.path.string());
    CHECK(env.status == 0);
    CHECK(env.out.find(cache.path.string()) != std::string::npos);

    CHECK(run("cache clear" + flag).status == 0);
    CHECK(nlohmann::json::parse(std::ifstream(cache.path)).empty());
    CHECK(run("cache info", "CRS_PLUCKER_CACHE=").status == 2);

    std::ofstream(cache.path) << "{broken";
    CHECK(run("class 2" + flag).status == 2);
}
