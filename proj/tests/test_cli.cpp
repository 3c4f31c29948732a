/*
   Copyright 2026 The falg authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

std::string g_binary;

int run(const std::string& args, std::string* output = nullptr) {
    std::string out_file = "cli_test_output.tmp";
    std::string cmd = g_binary + " " + args + " >" + out_file + " 2>&1";
    int status = std::system(cmd.c_str());
    if (output) {
        std::ifstream f(out_file);
        std::stringstream ss;
        ss << f.rdbuf();
        *output = ss.str();
    }
    std::remove(out_file.c_str());
    if (status == -1) return -1;
    return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("counterexample scenario exits clean with the expected verdict vector") {
    std::string out;
    CHECK(run("run --scenario counterexample --degree 6 --window 6 --format json", &out) == 0);
    auto j = nlohmann::json::parse(out);
    REQUIRE(j.is_array());
    CHECK(j[0]["suite"] == "counterexample");
    CHECK(j[0]["exact"] == true);
    bool saw_expected_failure = false;
    for (const auto& c : j[0]["checks"])
        if (c["name"] == "counterexample-skewsymmetry") {
            CHECK(c["verdict"] == "fails");
            CHECK(c.contains("witness"));
            saw_expected_failure = true;
        }
    CHECK(saw_expected_failure);
}

TEST_CASE("json reports round-trip byte-identically") {
    std::string out;
    REQUIRE(run("run --scenario distributions --format json", &out) == 0);
    auto j = nlohmann::json::parse(out);
    CHECK(j.dump(2) + "\n" == out);
}

TEST_CASE("usage errors exit with the usage code") {
    CHECK(run("run --scenario free-boson --degree -1") == 2);
    CHECK(run("run --scenario bogus") == 2);
    CHECK(run("run") == 2);
    CHECK(run("bogus-subcommand") == 2);
}

TEST_CASE("write failures exit with the io code") {
    CHECK(run("run --scenario distributions --out /nonexistent-dir/report.txt") == 3);
}

TEST_CASE("explain prints statements and suggests on unknown names") {
    std::string out;
    CHECK(run("explain weak-locality", &out) == 0);
    CHECK(out.find("Res_z") != std::string::npos);
    CHECK(run("explain nope", &out) == 2);
    CHECK(out.find("did you mean") != std::string::npos);
}

TEST_CASE("the full scenario set lands on expectations in under a minute") {
    auto t0 = std::chrono::steady_clock::now();
    std::string out;
    CHECK(run("run --scenario all", &out) == 0);
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CHECK(dt < 60.0);
    CHECK(out.find("all checks landed on their expected verdicts") != std::string::npos);
}

TEST_CASE("reports land in the directory named by the environment override") {
    std::string out;
    std::remove("distributions.txt");
    CHECK(run("run --scenario distributions --format text", &out) == 0);
    // with FALG_OUT_DIR set, the same invocation writes a file instead
    std::string cmd = "FALG_OUT_DIR=. " + g_binary +
                      " run --scenario distributions --format text >/dev/null 2>&1";
    REQUIRE(std::system(cmd.c_str()) == 0);
    std::ifstream f("distributions.txt");
    CHECK(f.good());
    std::remove("distributions.txt");
}

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: test_cli <path-to-falg-binary>\n");
        return 1;
    }
    g_binary = argv[1];
    doctest::Context ctx;
    return ctx.run();
}
