#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "zc/hadamard.hpp"
#include "zc/io.hpp"
#include "zc/motive.hpp"

// End-to-end tests driving the installed binary. The build passes its path in
// via the ZC_CLI_PATH compile definition.

namespace {

struct run_result {
    int code;
    std::string out;
};

run_result run(const std::string& args, const std::string& env = "") {
    std::string cmd = env + (env.empty() ? "" : " ") + ZC_CLI_PATH " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    int status = pclose(p);
    REQUIRE(WIFEXITED(status));
    return {WEXITSTATUS(status), out};
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = "/tmp/zc_cli_" + name;
    std::ofstream f(path);
    f << content;
    return path;
}

const char* gm_json = R"({"p":3,"vars":["x","y"],"polys":[[[[1,1],1],[[0,0],-1]]]})";

}  // namespace

TEST_CASE("witt mul with --inverse-input reproduces the geometric rule") {
    run_result r = run("witt mul --a \"[1,-2]\" --b \"[1,-3]\" --inverse-input --order 6");
    CHECK(r.code == 0);
    CHECK(r.out == "1, 6, 36, 216, 1296, 7776, 46656\n");
}

TEST_CASE("motive f1-zeta expands exp(t/(1-t))") {
    run_result r = run("motive f1-zeta --tori 1 --order 6");
    CHECK(r.code == 0);
    CHECK(r.out == "1, 1, 3/2, 13/6, 73/24, 167/40, 4051/720\n");
}

TEST_CASE("variety zeta --detect recovers (1-t)/(1-3t) for G_m over F_3") {
    std::string path = write_temp("gm.json", gm_json);
    run_result r = run("variety zeta --file " + path + " --order 8 --detect",
                       "ZC_BUDGET=100000000");
    CHECK(r.code == 0);
    CHECK(r.out == "(1 - t)/(1 - 3*t)\n");
}

TEST_CASE("variety count respects the ZC_BUDGET override") {
    std::string path = write_temp("gm.json", gm_json);
    CHECK(run("variety count --file " + path + " --n 1").code == 0);
    CHECK(run("variety count --file " + path + " --n 1", "ZC_BUDGET=3").code == 3);
    run_result r = run("variety count --file " + path + " --n 2");
    CHECK(r.code == 0);
    CHECK(r.out == "8\n");
}

TEST_CASE("exit codes: 2 on input errors, 3 on order errors") {
    CHECK(run("witt mul --a \"[2,1]\" --b \"[1,1]\"").code == 2);
    CHECK(run("nonsense").code == 2);
    CHECK(run("witt add --a \"[1,1]\"").code == 2);  // missing --b
    CHECK(run("variety count --file /tmp/zc_no_such_file.json --n 1").code == 2);
    CHECK(run("witt adams --a \"[1,-1]\" --n 8").code == 3);
    CHECK(run("--help").code == 0);
}

TEST_CASE("json output round-trips through the library") {
    run_result r = run("witt mul --a \"[1,-2]\" --b \"[1,-3]\" --inverse-input --order 8 "
                       "--format json");
    CHECK(r.code == 0);
    zc::trunc_series s = zc::io::parse_series(nlohmann::json::parse(r.out));
    zc::witt_elem expect = zc::witt_mul(zc::witt_elem::geometric(zc::Rat(2), 8),
                                        zc::witt_elem::geometric(zc::Rat(3), 8));
    CHECK(s == expect.series());

    run_result h = run("hadamard mul --a '{\"init\":[1,1],\"charpoly\":[-1,-1,1]}' "
                       "--b '{\"init\":[1,1],\"charpoly\":[-1,-1,1]}' --format json");
    CHECK(h.code == 0);
    zc::lin_rec_seq got = zc::io::parse_lrs(nlohmann::json::parse(h.out));
    zc::lin_rec_seq fib({zc::Int(1), zc::Int(1)},
                        zc::int_poly({zc::Int(-1), zc::Int(-1), zc::Int(1)}));
    CHECK(got == zc::lrs_hadamard_mul(fib, fib));
}

TEST_CASE("identical invocations are byte-identical") {
    const char* cmds[] = {
        "witt ghost --a \"[1,1,2,3,5,8]\" --format json",
        "motive c-map --poly \"[-2,1]\" --c 1 --count 10",
        "dynsys zeta --map \"[1,2,0,4,3]\" --order 10 --format json",
    };
    for (const char* c : cmds) {
        run_result a = run(c), b = run(c);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
        CHECK_FALSE(a.out.empty());
    }
}

TEST_CASE("dynsys zeta detects the cycle-type product") {
    run_result r = run("dynsys zeta --map \"[1,2,0,4,3]\" --order 12 --detect --deg 5");
    CHECK(r.code == 0);
    // cycle type (3, 2): 1/((1-t^3)(1-t^2))
    CHECK(r.out == "(1)/(1 - t^2 - t^3 + t^5)\n");
}

TEST_CASE("w0 and hadamard pipelines agree with the library") {
    run_result r = run("w0 tr --num \"[1]\" --den \"[1,-1,-1]\" --count 6");
    CHECK(r.code == 0);
    CHECK(r.out.find("terms: 1, 3, 4, 7, 11, 18") != std::string::npos);

    run_result d = run("hadamard classify --a '{\"init\":[0,1],\"charpoly\":[1,-2,1]}'");
    CHECK(d.code == 0);
    CHECK(d.out == "counit: 0\nclass: primitive\n");
}
