#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "firefront/io/ascii_grid.hpp"
#include "firefront/io/calibration_csv.hpp"
#include "firefront/io/csv.hpp"
#include "firefront/io/fronts_csv.hpp"
#include "firefront/io/geojson.hpp"
#include "firefront/io/hotspots.hpp"
#include "firefront/io/svg.hpp"
#include "firefront/io/time.hpp"
#include "firefront/projection.hpp"
#include "support/oracles.hpp"

using namespace firefront;
using namespace firefront::io;

namespace {

template <class F>
ParseError expect_parse_error(F&& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no ParseError";
  return ParseError("none", 0);
}

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

const char* kHotspots =
    "latitude,longitude,acq_date,acq_time,frp,confidence\n"
    "40.35,-7.55,2022-08-08,1230,12.5,h\n"
    "40.36,-7.54,2022-08-08,1242,8.0,n\n"
    "40.34,-7.56,2022-08-08,1330,,l\n";

}  // namespace

TEST(Csv, QuotesBomAndCrlf) {
  auto t = parse_csv("\xEF\xBB\xBF" "a,\"b,c\",d\r\n1,\"x \"\"q\"\"\",3\r\n\r\n4,5,6\r\n");
  ASSERT_EQ(t.header.size(), 3u);
  EXPECT_EQ(t.header[1], "b,c");
  ASSERT_EQ(t.rows.size(), 2u);
  EXPECT_EQ(t.rows[0].fields[1], "x \"q\"");
  EXPECT_EQ(t.rows[1].line, 4u);
  EXPECT_EQ(t.column("D"), std::optional<std::size_t>(2));
}

TEST(Csv, StructuredErrors) {
  EXPECT_THROW(parse_csv(""), ParseError);
  auto t = parse_csv("a,b\n1,zz\n");
  auto e = expect_parse_error([&] { t.require("c"); });
  EXPECT_NE(std::string(e.what()).find("missing required column 'c'"), std::string::npos);
  auto e2 = expect_parse_error([&] { number_field(t, t.rows[0], 1); });
  EXPECT_EQ(e2.line(), 2u);
  EXPECT_EQ(e2.column(), 2u);
  EXPECT_FALSE(to_number("1.5x"));
  EXPECT_DOUBLE_EQ(*to_number("+2.5"), 2.5);
  EXPECT_FALSE(to_number(""));
}

TEST(Time, IsoAndHhmm) {
  EXPECT_DOUBLE_EQ(parse_date_minutes("1970-01-02"), 1440.0);
  EXPECT_DOUBLE_EQ(parse_iso8601_minutes("1970-01-01T01:30Z"), 90.0);
  EXPECT_DOUBLE_EQ(parse_iso8601_minutes("1970-01-01T00:00:30"), 0.5);
  EXPECT_DOUBLE_EQ(parse_hhmm_minutes("5"), 5.0);
  EXPECT_DOUBLE_EQ(parse_hhmm_minutes("1230"), 750.0);
  // 2000-03-01 is 11017 days after the epoch.
  EXPECT_DOUBLE_EQ(parse_date_minutes("2000-03-01"), 11017.0 * 1440);
  EXPECT_THROW(parse_date_minutes("2022-02-30"), ValidationError);
  EXPECT_THROW(parse_hhmm_minutes("1275"), ValidationError);
  EXPECT_THROW(parse_iso8601_minutes("2022-08-08T25:00"), ValidationError);
}

TEST(AsciiGrid, ParsesAndSamples) {
  const char* text =
      "ncols 3\nnrows 2\nxllcorner 100\nyllcorner 200\ncellsize 10\nNODATA_value -1\n"
      "1 2 3\n4 5 -1\n";
  ScalarGrid g = parse_ascii_grid(text);
  EXPECT_EQ(g.ncols(), 3u);
  EXPECT_EQ(g.nrows(), 2u);
  EXPECT_DOUBLE_EQ(g.at(0, 1), 4.0);
  // Southern row is 4 5 -1; center of the SW cell is (105, 205).
  EXPECT_DOUBLE_EQ(*sample_grid(g, {105, 205}), 4.0);
  EXPECT_DOUBLE_EQ(*sample_grid(g, {110, 210}), (1 + 2 + 4 + 5) / 4.0);
  EXPECT_FALSE(sample_grid(g, {125, 205}));  // nodata
  EXPECT_FALSE(sample_grid(g, {0, 0}));
}

TEST(AsciiGrid, CenterOriginAndRoundTrip) {
  ScalarGrid g = parse_ascii_grid("NCOLS 2\nNROWS 2\nXLLCENTER 5\nYLLCENTER 5\nCELLSIZE 10\n1 2\n3 4\n");
  EXPECT_DOUBLE_EQ(g.origin().x, 0.0);
  EXPECT_DOUBLE_EQ(g.nodata(), -9999.0);
  ScalarGrid back = parse_ascii_grid(write_ascii_grid(g));
  EXPECT_EQ(std::vector<double>(back.values().begin(), back.values().end()),
            std::vector<double>(g.values().begin(), g.values().end()));
  EXPECT_DOUBLE_EQ(back.origin().y, g.origin().y);
}

TEST(AsciiGrid, MalformedInputs) {
  const std::string head = "ncols 2\nnrows 2\nxllcorner 0\nyllcorner 0\ncellsize 1\n";
  auto trunc = expect_parse_error([&] { parse_ascii_grid(head + "1 2\n3\n"); });
  EXPECT_NE(std::string(trunc.what()).find("expected 4 values, found 3"), std::string::npos);
  auto bad = expect_parse_error([&] { parse_ascii_grid(head + "1 2\n3 x\n"); });
  EXPECT_EQ(bad.line(), 7u);
  EXPECT_EQ(bad.column(), 3u);
  EXPECT_THROW(parse_ascii_grid(head + "1 2 3 4 5\n"), ParseError);
  EXPECT_THROW(parse_ascii_grid("ncols 2\nnrows 2\n1 2 3 4\n"), ParseError);
  EXPECT_THROW(parse_ascii_grid("ncols 2\nwidth 3\n"), ParseError);
  EXPECT_THROW(parse_ascii_grid(""), ParseError);
  EXPECT_THROW(parse_ascii_grid("ncols 0\nnrows 2\nxllcorner 0\nyllcorner 0\ncellsize 1\n"), ValidationError);
}

TEST(Projection, RoundTripBelowNanodegree) {
  LocalProjection proj({-7.55, 40.35});
  EXPECT_NEAR(norm(proj.forward({-7.55, 40.35})), 0.0, 1e-9);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> d(-0.5, 0.5);
  for (int i = 0; i < 1000; ++i) {
    LonLat ll{-7.55 + d(rng), 40.35 + d(rng)};
    LonLat back = proj.inverse(proj.forward(ll));
    ASSERT_LT(std::fabs(back.lon - ll.lon), 1e-9);
    ASSERT_LT(std::fabs(back.lat - ll.lat), 1e-9);
  }
}

TEST(Projection, NorthwardDistanceIsArcLength) {
  LocalProjection proj({0, 0});
  Point2 p = proj.forward({0, 1});
  EXPECT_NEAR(p.x, 0.0, 1e-9);
  EXPECT_NEAR(p.y, 6371008.8 * std::numbers::pi / 180.0, 1e-6);
}

TEST(Hotspots, ParsesRows) {
  LocalProjection proj({-7.55, 40.35});
  const double epoch = parse_iso8601_minutes("2022-08-08T12:00Z");
  auto r = parse_hotspot_csv(kHotspots, proj, epoch);
  ASSERT_EQ(r.records.size(), 3u);
  EXPECT_TRUE(r.warnings.empty());
  EXPECT_DOUBLE_EQ(r.records[0].time, 30.0);
  EXPECT_DOUBLE_EQ(r.records[2].time, 90.0);
  EXPECT_EQ(*r.records[0].frp, 12.5);
  EXPECT_FALSE(r.records[2].frp);
  EXPECT_EQ(*r.records[1].confidence, "n");
  EXPECT_NEAR(norm(r.records[0].position), 0.0, 1e-9);
  EXPECT_GT(r.records[1].position.y, 1000.0);
}

TEST(Hotspots, BadRowsBecomeWarnings) {
  std::string text = std::string(kHotspots) + "91,-7.5,2022-08-08,1300,1,h\n40.3,-7.5,2022-08-08,9999,1,h\n";
  auto r = parse_hotspot_csv(text, LocalProjection({-7.55, 40.35}));
  EXPECT_EQ(r.records.size(), 3u);
  ASSERT_EQ(r.warnings.size(), 2u);
  EXPECT_EQ(r.warnings[0].line, 5u);
  EXPECT_NE(r.warnings[0].message.find("latitude"), std::string::npos);
}

TEST(Hotspots, MissingColumnAndNoValidRows) {
  auto e = expect_parse_error(
      [] { parse_hotspot_csv("latitude,longitude,acq_date\n1,2,2022-01-01\n", LocalProjection()); });
  EXPECT_NE(std::string(e.what()).find("acq_time"), std::string::npos);
  EXPECT_THROW(parse_hotspot_csv("latitude,longitude,acq_date,acq_time\n95,2,2022-01-01,0000\n", LocalProjection()),
               ParseError);
}

TEST(CalibrationCsv, Rows) {
  auto l = parse_lfmc_rows("stratum,ndvi,lst_k,doy,lfmc_pct\nshrub,0.5,300,120,90\n");
  ASSERT_EQ(l.size(), 1u);
  EXPECT_EQ(l[0].label, "shrub");
  EXPECT_DOUBLE_EQ(*l[0].obs.lfmc, 90.0);
  auto r = parse_ros_rows("ros_m_per_min,wind_m_per_s,moisture_pct\n2,4,8\n");
  ASSERT_EQ(r.size(), 1u);
  EXPECT_DOUBLE_EQ(r[0].wind, 4.0);
  EXPECT_THROW(parse_ros_rows("ros_m_per_min,wind_m_per_s\n2,4\n"), ParseError);
}

TEST(GeoJson, RoundTripBelowNanodegree) {
  LocalProjection proj({-118.1, 34.19});
  RunResult run;
  std::mt19937_64 rng(11);
  for (int k = 0; k < 3; ++k) run.fronts.emplace_back(oracle::random_star(rng, {0, 0}, 500 + 400 * k, 900 + 400 * k, 50), 60.0 * k);
  const std::string text = write_fronts_geojson(run, proj);
  auto parsed = parse_fronts_geojson(text);
  ASSERT_EQ(parsed.size(), 3u);
  for (std::size_t k = 0; k < 3; ++k) {
    EXPECT_EQ(parsed[k].step_index, k);
    EXPECT_DOUBLE_EQ(parsed[k].time_minutes, 60.0 * k);
    EXPECT_NEAR(parsed[k].area_m2, run.fronts[k].area(), 1e-6 * run.fronts[k].area());
    ASSERT_EQ(parsed[k].ring.size(), run.fronts[k].size());
    for (std::size_t i = 0; i < parsed[k].ring.size(); ++i) {
      LonLat expect = proj.inverse(run.fronts[k].ring()[i]);
      ASSERT_LT(std::fabs(parsed[k].ring[i].lon - expect.lon), 1e-9);
      ASSERT_LT(std::fabs(parsed[k].ring[i].lat - expect.lat), 1e-9);
    }
  }
  auto planar = fronts_from_geojson(parsed, proj);
  EXPECT_LT(distance(planar[2].ring()[7], run.fronts[2].ring()[7]), 1e-6);
}

TEST(GeoJson, MalformedInputs) {
  auto e = expect_parse_error([] { parse_fronts_geojson("{\n  \"type\": \"FeatureCollection\",\n  \"features\": [,]\n}"); });
  EXPECT_EQ(e.line(), 3u);
  EXPECT_THROW(parse_fronts_geojson("[1,2]"), ParseError);
  EXPECT_THROW(parse_fronts_geojson(R"({"type":"Feature"})"), ParseError);
  const std::string pre = R"({"type":"FeatureCollection","features":[{"type":"Feature","geometry":)";
  EXPECT_THROW(parse_fronts_geojson(pre + R"({"type":"Point","coordinates":[0,0]}}]})"), ParseError);
  EXPECT_THROW(parse_fronts_geojson(pre + R"({"type":"Polygon","coordinates":[[[0,0],[1,0],[0,0]]]}}]})"), ParseError);
  EXPECT_THROW(parse_fronts_geojson(pre + R"({"type":"Polygon","coordinates":[[[0,0],[1,0],[1,1],[0,1]]]}}]})"),
               ParseError);
  EXPECT_THROW(parse_fronts_geojson(pre + R"({"type":"Polygon","coordinates":[[[0,"a"],[1,0],[1,1],[0,0]]]}}]})"),
               ParseError);
  EXPECT_THROW(parse_fronts_geojson(pre + R"({"type":"Polygon"}}]})"), ParseError);
}

TEST(FrontsCsv, OneRowPerVertex) {
  RunResult run;
  run.fronts.emplace_back(oracle::regular_polygon({0, 0}, 10, 5), 0);
  run.fronts.emplace_back(oracle::regular_polygon({0, 0}, 20, 7), 30);
  const std::string csv = write_fronts_csv(run, LocalProjection());
  auto t = parse_csv(csv);
  EXPECT_EQ(t.rows.size(), 12u);
  EXPECT_TRUE(t.column("lon") && t.column("x_m") && t.column("step_index"));
}

TEST(Svg, DeterministicWithOnePathPerFront) {
  std::vector<FireFront> fronts;
  for (int k = 1; k <= 4; ++k) fronts.emplace_back(oracle::regular_polygon({0, 0}, 100.0 * k, 40), 60.0 * k);
  const std::string a = render_fronts_svg(fronts, {}, "demo");
  EXPECT_EQ(a, render_fronts_svg(fronts, {}, "demo"));
  EXPECT_EQ(count(a, "data-step="), 4u);
  EXPECT_NE(a.find("step 3: t = 240.0 min"), std::string::npos);
  // Outermost front is drawn first so inner fronts stay visible.
  EXPECT_LT(a.find("data-step=\"3\""), a.find("data-step=\"0\""));
  EXPECT_THROW(render_fronts_svg({}), ValidationError);
}

TEST(Svg, PanelsSideBySide) {
  std::vector<FireFront> f{FireFront(oracle::regular_polygon({0, 0}, 10, 8), 0)};
  const std::string s = render_panels_svg({{"a", f}, {"b", f}, {"c <&>", f}});
  EXPECT_EQ(count(s, "data-step="), 3u);
  EXPECT_NE(s.find("c &lt;&amp;&gt;"), std::string::npos);
}
