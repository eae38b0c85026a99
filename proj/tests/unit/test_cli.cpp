#include "cli/run.hpp"

#include "qgspec/export.hpp"

#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <sstream>

using qgspec::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("bands writes CSV") {
    const auto r = call({"bands", "--kind", "kagome", "--c", "1", "--d", "3", "--ell", "1", "--k-max", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("side,band_index,type,k_lo,k_hi,E_lo,E_hi\npositive,0,continuous,0.525", 0) == 0);
}

TEST_CASE("identical configurations give identical bytes") {
    const std::vector<std::string> args{"negative", "--c", "0.8", "--d", "2.9", "--format", "json"};
    CHECK(call(args).out == call(args).out);
}

TEST_CASE("JSON output round-trips") {
    const auto r = call({"bands", "--kind", "triangular", "--d", "2", "--k-max", "5", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto back = qgspec::bands_from_json(r.out);
    REQUIRE(back.size() == 1);
    CHECK(qgspec::bands_json(back) == r.out);
}

TEST_CASE("output file") {
    const std::string path = "cli_test_torus.csv";
    const auto r = call({"torus-prob", "--c", "1", "--d", "2.618", "--grid", "200", "--out", path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    const std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    CHECK(text.rfind("kind,c,d,ell,P,method,K_or_grid\nkagome,1,2.618,1,", 0) == 0);
    std::remove(path.c_str());
}

TEST_CASE("every subcommand runs") {
    CHECK(call({"flatbands", "--kind", "equilateral", "--c", "1", "--k-max", "7"}).code == 0);
    CHECK(call({"probability", "--kind", "triangular", "--d", "1", "--method", "closed-form"}).code == 0);
    CHECK(call({"probability", "--kind", "equilateral", "--c", "1", "--K", "1e4"}).code == 0);
    CHECK(call({"sweep", "--d", "3", "--ratios", "0.3,0.6", "--K", "1e3"}).out.rfind("ratio,P,method,K_or_grid\n", 0) == 0);
    CHECK(call({"scattering", "--n", "6", "--limit", "--format", "json"}).code == 0);
    CHECK(call({"scattering", "--n", "4", "--k", "2.5"}).out.rfind("row,col,re,im\n", 0) == 0);
    CHECK(call({"asymptotics", "--kind", "triangular", "--d", "4", "--n", "10"}).out.rfind(
              "quantity,predicted,measured,relative_error\n", 0) == 0);
    const auto o = call({"oracle-check", "--k-min", "0.5", "--k-max", "1", "--samples", "3", "--theta-grid", "2"});
    CHECK(o.out.rfind("k,theta1,theta2,det_re,det_im,normalized\n", 0) == 0);
    CHECK(std::count(o.out.begin(), o.out.end(), '\n') == 1 + 3 * 4);
}

TEST_CASE("exit codes") {
    CHECK(call({"bands", "--c", "4", "--d", "3"}).code == 2);
    CHECK(call({"bands", "--bogus"}).code == 2);
    CHECK(call({}).code == 2);
    CHECK(call({"bands", "--format", "xml"}).code == 2);
    CHECK(call({"bands", "--kind", "hexagonal"}).code == 2);
    CHECK(call({"probability", "--kind", "kagome", "--method", "closed-form"}).code == 2);
    CHECK(call({"bands", "--k-max", "1", "--out", "/nonexistent/dir/x.csv"}).code == 2);
    CHECK(call({"--help"}).code == 0);
}
