#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(CCODE_BIN) + " " + args + " 2>&1";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

nlohmann::json run_json(const std::string& args) {
    const auto r = run(args + " --format json --no-timing");
    REQUIRE(r.code == 0);
    return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("count subcommand") {
    CHECK(run_json("count --code rm:m=4,r=3 --constraint rll:d=1")["result"]["count"] == "1292");
    CHECK(run_json("count --code hamming:m=4 --constraint rll:d=1")["result"]["count"] == "101");
    CHECK(run_json("count --code rm:m=4,r=2 --constraint even-strict")["result"]["count"] == "198");
    CHECK(run_json("count --code rm:m=8,r=6 --constraint 2charge")["result"]["count"] ==
          "1329227995784915872903807060280344576");

    const auto text = run("count --code rm:m=4,r=3 --constraint rll:d=1");
    CHECK(text.code == 0);
    CHECK(text.out.find("1292") != std::string::npos);

    const auto brute = run_json("count --code hamming:m=3 --constraint 2charge --method brute");
    CHECK(brute["result"]["count"] == "4");
    CHECK(brute["result"]["method"] == "brute");
}

TEST_CASE("bound subcommand") {
    const auto all = run_json("bound --n 13 --d 9 --constraint 2charge --lp all")["result"];
    CHECK(all["code_size_bound"].get<double>() == doctest::Approx(2.828).epsilon(2e-3));
    CHECK(all["gensph"].get<double>() == doctest::Approx(16.0));
    CHECK(all["delsarte"].get<double>() == doctest::Approx(3.333).epsilon(2e-3));

    const auto rll = run_json("bound --n 10 --d 5 --constraint rll:d=2")["result"];
    CHECK(rll["code_size_bound"].get<double>() == doctest::Approx(7.856).epsilon(1e-3));

    const auto del = run_json("bound --n 10 --d 3")["result"];
    CHECK(del["code_size_bound"].get<double>() == doctest::Approx(85.333).epsilon(1e-3));
}

TEST_CASE("LP dump") {
    const auto path = std::filesystem::temp_directory_path() / "ccode_cli_dump.lp";
    std::filesystem::remove(path);
    CHECK(run("bound --n 5 --d 3 --lp-dump " + path.string()).code == 0);
    std::ifstream f(path);
    REQUIRE(f.good());
    std::string head;
    std::getline(f, head);
    CHECK(head.rfind("# vars", 0) == 0);
    std::filesystem::remove(path);
}

TEST_CASE("weight-dist and fourier subcommands") {
    const auto w = run_json("weight-dist --n 17 --constraint even-strict")["result"]["counts"];
    const std::vector<std::string> expect = {"1", "9",   "0", "120", "0", "462", "0", "792", "0",
                                             "715", "0", "364", "0", "105", "0", "16", "0", "1"};
    CHECK(w.get<std::vector<std::string>>() == expect);

    const auto f = run("fourier --n 7 --constraint 2charge --s 0110000");
    CHECK(f.code == 0);
    CHECK(f.out.find("-8") != std::string::npos);
}

TEST_CASE("exact integers are strings in JSON") {
    const auto j = run_json("count --code rm:m=4,r=2 --constraint 2charge");
    CHECK(j["result"]["count"].is_string());
    CHECK(j.contains("inputs"));
    CHECK(j.contains("provenance"));
    CHECK(j["timing_ms"].is_null());
}

TEST_CASE("JSON and CSV output are byte-identical across runs") {
    for (const std::string args : {"count --code rm:m=5,r=3 --constraint 2charge", "table --id V",
                                   "bound --n 10 --d 4 --constraint rll:d=2 --lp all"}) {
        for (const std::string fmt : {"json", "csv"}) {
            const auto a = run(args + " --format " + fmt + " --no-timing");
            const auto b = run(args + " --format " + fmt + " --no-timing");
            CHECK(a.code == 0);
            CHECK(a.out == b.out);
        }
    }
}

TEST_CASE("table subcommand") {
    const auto t1 = run("table --id I");
    CHECK(t1.code == 0);
    for (const char* cell : {"16", "128", "2048", "6.711e7", "1.441e17", "1.329e36"})
        CHECK(t1.out.find(cell) != std::string::npos);

    const auto j = run_json("table --id V")["result"];
    CHECK(j["cells"].size() == 4);
    for (const auto& cell : j["cells"]) {
        CHECK(cell["status"] == "OK");
        CHECK_FALSE(cell["provenance"].get<std::string>().empty());
    }
}

TEST_CASE("verify subcommand") {
    const auto ok = run("verify --max-n 8 --suites fourier");
    CHECK(ok.code == 0);
    CHECK(ok.out.find("PASS fourier") != std::string::npos);
    CHECK(ok.out.find("charsum") == std::string::npos);

    const auto bad = run("verify --suites charsum --inject-fault");
    CHECK(bad.code == 1);
    CHECK(bad.out.find("counterexample") != std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(run("count --code rm:m=4 --constraint 2charge").code == 2);
    CHECK(run("count --code rm:m=4,r=2 --constraint dk:d=1").code == 2);
    CHECK(run("count --code golay --constraint 2charge").code == 2);
    CHECK(run("bound --n 5 --d 7").code == 2);
    CHECK(run("table --id VII").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("count --code rm:m=8,r=4 --constraint rll:d=1").code == 3);
    CHECK(run("bound --n 13 --d 3 --constraint rll:d=1 --lp del").code == 3);
    CHECK(run("table --id odd-counts").code == 1);
}
