#include "qgspec/errors.hpp"
#include "qgspec/export.hpp"

#include <doctest.h>

#include <sstream>

using namespace qgspec;

TEST_CASE("twelve significant digits") {
    CHECK(format_double(1.0 / 3.0) == "0.333333333333");
    CHECK(format_double(2.0) == "2");
    CHECK(format_double(-1.5e-20) == "-1.5e-20");
}

TEST_CASE("band CSV header and rows") {
    const auto bs = scan_bands(LatticeSpec::kagome(1, 3, 1), Side::positive, 2.0);
    const std::string csv = bands_csv({bs});
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "side,band_index,type,k_lo,k_hi,E_lo,E_hi");
    int rows = 0;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == static_cast<int>(bs.intervals.size()));
    CHECK(csv.find('\r') == std::string::npos);
}

TEST_CASE("band JSON round-trips exactly") {
    const auto a = scan_bands(LatticeSpec::kagome(1, 3, 1), Side::positive, 4.0);
    const auto b = scan_negative_bands(LatticeSpec::triangular(2, 1));
    const auto back = bands_from_json(bands_json({a, b}));
    REQUIRE(back.size() == 2);
    CHECK(bands_json(back) == bands_json({a, b}));
    REQUIRE(back[0].intervals.size() == a.intervals.size());
    for (std::size_t i = 0; i < a.intervals.size(); ++i) {
        CHECK(back[0].intervals[i].k_lo == a.intervals[i].k_lo);
        CHECK(back[0].intervals[i].edge_theta_hi == a.intervals[i].edge_theta_hi);
    }
    CHECK_THROWS_AS(bands_from_json("{\"nope\": 1}"), InvalidArgument);
}

TEST_CASE("other headers") {
    CHECK(sweep_csv({}).rfind("ratio,P,method,K_or_grid\n", 0) == 0);
    CHECK(asymptotics_csv({}).rfind("quantity,predicted,measured,relative_error\n", 0) == 0);
    CHECK(oracle_csv({}).rfind("k,theta1,theta2,det_re,det_im,normalized\n", 0) == 0);
    CHECK(flat_bands_csv({{1.0, FlatBandFamily::degenerate_point, "coincides with a, b", false}}) ==
          "k,E,family,embedded,note\n1,1,degenerate_point,false,\"coincides with a, b\"\n");
}

TEST_CASE("parsers") {
    CHECK(parse_band_type("flat") == BandType::flat);
    CHECK(parse_theta_extremum("k_minus") == ThetaExtremum::k_minus);
    CHECK_THROWS_AS(parse_band_type("wide"), InvalidArgument);
}
