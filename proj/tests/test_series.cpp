#include <cstdio>
#include <sstream>
#include <string>

#include <catch2/catch_amalgamated.hpp>

#include "thompsonf/series.hpp"

using namespace thompsonf;

TEST_CASE("b-file output format is exact", "[series]") {
  std::ostringstream out;
  write_bfile({Int(1), Int(4), Int(12), Int(36)}, out);
  REQUIRE(out.str() == "0 1\n1 4\n2 12\n3 36\n");

  std::ostringstream empty;
  write_bfile(std::vector<Int>{}, empty);
  REQUIRE(empty.str().empty());

  std::ostringstream two;
  write_bfile({Int(1), Int(4)}, two);
  REQUIRE(two.str() == "0 1\n1 4\n");
}

TEST_CASE("b-file reader round-trips and defaults", "[series]") {
  std::istringstream in("0 1\n1 4\n2 12\n");
  GrowthSeries s = read_bfile(in, SeriesKind::geodesics);
  REQUIRE(s.values.size() == 3);
  REQUIRE(s.values[0] == 1);
  REQUIRE(s.values[1] == 4);
  REQUIRE(s.values[2] == 12);
  REQUIRE(s.kind == SeriesKind::geodesics);
  REQUIRE(s.source == SeriesSource::file);
  REQUIRE(s.size() == 3);
  REQUIRE(s[2] == 12);
  REQUIRE_THROWS_AS(s[3], std::out_of_range);
}

TEST_CASE("b-file reader rejects malformed input", "[series]") {
  auto reject = [](const std::string& text) {
    std::istringstream in(text);
    REQUIRE_THROWS_AS(read_bfile(in), std::runtime_error);
  };
  reject("1 4\n");           // must start at n = 0
  reject("0 1\n2 12\n");     // gap in the index
  reject("0 1\n\n1 4\n");    // blank line
  reject("0 1\n1 4 9\n");    // trailing token
  reject("0 1\n1 x\n");      // non-numeric value
  reject("0 -1\n");          // negative value
}

TEST_CASE("b-file path round trip", "[series]") {
  const std::string path = "series_roundtrip_test.bfile";
  GrowthSeries s;
  s.values = {Int(1), Int(4), Int("6015840076078706884412")};
  s.kind = SeriesKind::elements;
  write_bfile(s, path);
  GrowthSeries back = read_bfile(path);
  REQUIRE(back.values == s.values);
  std::remove(path.c_str());

  REQUIRE_THROWS_AS(read_bfile("no_such_directory/nope.bfile"), std::runtime_error);
}
