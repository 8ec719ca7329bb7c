#include <doctest.h>

#include <cmath>

#include "iconrate/config.hpp"
#include "iconrate/error.hpp"

using namespace iconrate;

TEST_CASE("defaults carry the published constants") {
  const PipelineConfig cfg = parse_config("{}");
  CHECK(cfg.assign.tau == 0.3);
  CHECK(cfg.assign.rounds.handshape_prefilter == 0.8);
  REQUIRE(cfg.assign.rounds.bands.size() == 2);
  CHECK(cfg.assign.rounds.bands[0].lower == 2.4);
  CHECK(std::isinf(cfg.assign.rounds.bands[0].upper));
  CHECK(cfg.assign.rounds.bands[1].lower == 1.7);
  CHECK(cfg.assign.rounds.bands[1].upper == 2.4);
  CHECK(cfg.assign.clamp_floor == 1.0);
  CHECK(cfg.extract.resample_len == 32);
  CHECK_FALSE(cfg.wordvec_path.has_value());
}

TEST_CASE("overrides and rejections") {
  const PipelineConfig cfg = parse_config(R"({"tau": 0.9, "bands": [[2.5, null], [2.0, 2.5], [1.5, 2.0]],
                                             "resample_len": 16, "wordvec_path": "glove.txt"})");
  CHECK(cfg.assign.tau == 0.9);
  CHECK(cfg.assign.rounds.bands.size() == 3);
  CHECK(cfg.extract.resample_len == 16);
  CHECK(cfg.wordvec_path->string() == "glove.txt");

  CHECK_THROWS_AS(parse_config(R"({"threshold": 0.3})"), Error);
  CHECK_THROWS_AS(parse_config(R"({"tau": "high"})"), Error);
  CHECK_THROWS_AS(parse_config(R"({"bands": [[1.7, 2.4], [2.4, null]]})"), Error);
  CHECK_THROWS_AS(parse_config(R"({"resample_len": 0})"), Error);
  CHECK_THROWS_AS(parse_config(R"({"clamp_floor": 2})"), Error);
  CHECK_THROWS_AS(parse_config("[1]"), Error);
}
