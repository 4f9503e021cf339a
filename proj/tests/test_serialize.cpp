#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <random>
#include <sstream>

#include "e6/serialize.hpp"

using namespace e6;

TEST_CASE("rationals and octonions round-trip") {
  CHECK(to_json(make_rational(-3, 6)) == "-1/2");
  CHECK(rational_from_json(Json("-0.25")) == make_rational(-1, 4));
  CHECK(rational_from_json(Json(7)) == 7);
  Octonion x;
  x[Unit::jl] = make_rational(5, 3);
  CHECK(octonion_from_json(to_json(x)) == x);
  CHECK_THROWS_AS(octonion_from_json(Json::array({1, 2})), std::invalid_argument);
}

TEST_CASE("Jordan elements round-trip") {
  std::mt19937_64 rng(1);
  for (int n = 0; n < 10; ++n) {
    const auto x = random_jordan(rng);
    CHECK(jordan_from_json(Json::parse(to_json(x).dump())) == x);
  }
}

TEST_CASE("structure table round-trips and dumps deterministically") {
  const auto t = structure_constants(preferred_basis());
  const Json j = to_json(t);
  CHECK(j.at("basis").size() == 78);
  const auto back = table_from_json(Json::parse(j.dump()));
  CHECK(back.upper == t.upper);
  CHECK(to_json(back).dump() == j.dump());

  std::ostringstream csv;
  write_csv(csv, t);
  std::size_t lines = 0;
  for (char c : csv.str()) lines += c == '\n';
  CHECK(lines == 1 + j.at("constants").size());

  Json bad = j;
  bad["constants"][0]["k"] = 200;
  CHECK_THROWS_AS(table_from_json(bad), std::invalid_argument);
}

TEST_CASE("cache file is written and reused") {
  const auto path = std::filesystem::temp_directory_path() / "e6kit-test-cache.json";
  std::filesystem::remove(path);
  ::setenv("E6KIT_CACHE", path.c_str(), 1);
  const auto first = cached_structure_constants(1);
  CHECK(std::filesystem::exists(path));
  const auto second = cached_structure_constants(1);
  CHECK(first.upper == second.upper);
  ::unsetenv("E6KIT_CACHE");
  std::filesystem::remove(path);
}

TEST_CASE("weight diagrams serialize") {
  const auto d = dynkin("B3");
  const auto w = weights_from_highest(d, {1, 0, 0});
  const auto s = slice(w, fundamental_weight(d, 0));
  const Json j = to_json(w, &s);
  CHECK(j.at("weights").size() == 7);
  CHECK(j.at("edges").size() == 18);
  CHECK(j.at("weights")[0].at("mark") == Json::array({1, 0, 0}));
  CHECK(j.at("slices").at("levels").size() == 3);
  CHECK(j.dump() == to_json(weights_from_highest(d, {1, 0, 0}), &s).dump());
  std::ostringstream csv;
  write_csv(csv, w);
  CHECK(csv.str().rfind("m1,m2,m3,x1,x2,x3\n", 0) == 0);
}
