#include <doctest.h>

#include <cmath>

#include "iconrate/error.hpp"
#include "iconrate/wordvec.hpp"

using namespace iconrate;

namespace {

ErrorCode parse_error(std::string_view text) {
  try {
    WordVectorTable::parse(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected a parse error");
  return ErrorCode::Io;
}

}  // namespace

TEST_CASE("load_table") {
  const WordVectorTable t = WordVectorTable::parse("alpha 1 0 0\nBeta 0 1 0.5\n");
  CHECK(t.size() == 2);
  CHECK(t.dimension() == 3);
  REQUIRE(t.find("beta") != nullptr);
  CHECK((*t.find("BETA"))[2] == 0.5);

  CHECK(parse_error("a 1 2 3\nb 1 2 3 4\n") == ErrorCode::InconsistentDimension);
  CHECK(parse_error("") == ErrorCode::EmptyTable);
  CHECK(parse_error("\n\n") == ErrorCode::EmptyTable);
  CHECK(parse_error("lonely\n") == ErrorCode::MalformedLine);
  CHECK(parse_error("a 1 x\n") == ErrorCode::MalformedLine);
  CHECK_THROWS_AS(WordVectorTable::load("/nonexistent/glove.txt"), Error);
}

TEST_CASE("duplicates keep the last vector") {
  const WordVectorTable t = WordVectorTable::parse("a 1 0\nA 0 1\r\n");
  CHECK(t.size() == 1);
  CHECK((*t.find("a"))[1] == 1.0);
}

TEST_CASE("word_similarity") {
  const WordVectorTable t = WordVectorTable::parse("alpha 1 0\nbeta 0 1\ngamma 2 3\ndelta 1 2\n");
  CHECK(word_similarity(t, "alpha", "alpha") == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(word_similarity(t, "alpha", "beta") == 0.0);
  CHECK(word_similarity(t, "delta", "gamma") == doctest::Approx(0.99228).epsilon(1e-5));
  CHECK(word_similarity(t, "Delta", "GAMMA") == word_similarity(t, "gamma", "delta"));
  try {
    word_similarity(t, "alpha", "virus");
    FAIL("expected OOV");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OutOfVocabulary);
    CHECK(std::string(e.what()).find("virus") != std::string::npos);
  }
  CHECK_FALSE(try_word_similarity(t, "virus", "alpha").has_value());
}
