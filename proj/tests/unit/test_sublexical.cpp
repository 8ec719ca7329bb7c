#include <doctest.h>

#include <cmath>
#include <numbers>

#include "iconrate/error.hpp"
#include "iconrate/sublexical.hpp"
#include "test_support.hpp"

using namespace iconrate;
using iconrate::testing::lm;

namespace {

// Brute force over explicit index lists.
Keyframes keyframes_by_enumeration(std::size_t n) {
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  const std::size_t m = n / 2;
  std::vector<std::size_t> second(idx.begin() + static_cast<long>(m), idx.end());
  std::vector<std::size_t> first(idx.begin(), idx.begin() + static_cast<long>(m));
  std::vector<std::size_t> first_second(first.begin() + static_cast<long>(first.size() / 2), first.end());
  auto lower_median = [](const std::vector<std::size_t>& v) { return v[(v.size() - 1) / 2]; };
  if (first_second.empty()) return {0, lower_median(second)};
  return {lower_median(first_second), lower_median(second)};
}

NormalizedSequence wrist_path(const std::vector<std::pair<double, double>>& points) {
  NormalizedSequence seq{"t", "path", std::nullopt, {}};
  for (auto [x, y] : points) {
    PoseFrame f = iconrate::testing::basic_frame();
    f.at(BodyPoint::RightWrist) = lm(x, y);
    seq.frames.push_back(f);
  }
  return seq;
}

}  // namespace

TEST_CASE("select_keyframes table") {
  CHECK(select_keyframes(1) == Keyframes{0, 0});
  CHECK(select_keyframes(2) == Keyframes{0, 1});
  CHECK(select_keyframes(8) == Keyframes{2, 5});
  CHECK(select_keyframes(9) == Keyframes{2, 6});
}

TEST_CASE("select_keyframes matches enumeration for n in [1, 1000]") {
  for (std::size_t n = 1; n <= 1000; ++n) {
    const Keyframes k = select_keyframes(n);
    REQUIRE(k == keyframes_by_enumeration(n));
    REQUIRE(k.initial <= k.final);
    REQUIRE(k.final < n);
  }
}

TEST_CASE("bucket_location quadrants") {
  CHECK(bucket_location(0.0, 0.0).value() == 1);
  CHECK(bucket_location(-0.3, -0.8).value() == 2);
  CHECK(bucket_location(0.5, 0.2).value() == 1);
  CHECK(bucket_location(-0.1, 0.1).value() == 0);
  CHECK(bucket_location(0.1, -0.1).value() == 3);
  CHECK(bucket_location(-0.0, -1e-300).value() == 3);  // -0.0 >= 0
  CHECK_THROWS_AS(BucketId(4), Error);
}

TEST_CASE("hand_descriptor") {
  iconrate::testing::Rng rng(5);
  const HandLandmarks hand = iconrate::testing::random_hand(rng);
  const HandshapeDescriptor d = hand_descriptor(hand);
  REQUIRE(d.values.size() == 210);
  CHECK(*std::max_element(d.values.begin(), d.values.end()) == 1.0);
  CHECK(std::all_of(d.values.begin(), d.values.end(), [](double v) { return v >= 0.0; }));
  // Ordering: component 0 is the (0, 1) pair.
  const double d01 = std::hypot(hand[0].x - hand[1].x, hand[0].y - hand[1].y);
  const double longest = d01 / d.values[0];
  CHECK(d.values[20] == doctest::Approx(std::hypot(hand[1].x - hand[2].x, hand[1].y - hand[2].y) / longest));

  SUBCASE("rotation by 90 degrees about a point") {
    HandLandmarks rotated = hand;
    for (auto& p : rotated) p = lm(0.3 - (p.y - 0.2), 0.2 + (p.x - 0.3));
    const HandshapeDescriptor r = hand_descriptor(rotated);
    for (std::size_t i = 0; i < 210; ++i) CHECK(std::abs(r.values[i] - d.values[i]) < 1e-9);
  }
  SUBCASE("degenerate hand") {
    HandLandmarks flat;
    flat.fill(lm(0.2, 0.2));
    CHECK_THROWS_AS(hand_descriptor(flat), Error);
  }
}

TEST_CASE("extract_trajectory") {
  SUBCASE("stationary wrist") {
    const MovementDescriptor m = extract_trajectory(wrist_path({{0.2, 0.4}, {0.2, 0.4}, {0.2, 0.4}}), Hand::Right);
    REQUIRE(m.values.size() == 64);
    CHECK(std::all_of(m.values.begin(), m.values.end(), [](double v) { return v == 0.0; }));
  }
  SUBCASE("straight segment") {
    const MovementDescriptor m = extract_trajectory(wrist_path({{0.0, 0.0}, {1.0, 0.0}}), Hand::Right);
    REQUIRE(m.values.size() == 64);
    for (std::size_t k = 0; k < 32; ++k) {
      CHECK(m.values[2 * k] == doctest::Approx(-0.5 + static_cast<double>(k) / 31.0).epsilon(1e-12));
      CHECK(std::abs(m.values[2 * k + 1]) < 1e-15);
    }
  }
  SUBCASE("mean is zero per axis") {
    const MovementDescriptor m =
        extract_trajectory(wrist_path({{0.0, 0.3}, {0.4, -0.2}, {0.9, 0.8}, {-0.5, 1.0}}), Hand::Right, {17});
    REQUIRE(m.values.size() == 34);
    double sx = 0, sy = 0;
    for (std::size_t k = 0; k < 17; ++k) {
      sx += m.values[2 * k];
      sy += m.values[2 * k + 1];
    }
    CHECK(std::abs(sx / 17) < 1e-9);
    CHECK(std::abs(sy / 17) < 1e-9);
  }
  SUBCASE("frame duplication leaves the descriptor unchanged") {
    iconrate::testing::Rng rng(9);
    std::vector<std::pair<double, double>> pts, doubled;
    for (int i = 0; i < 12; ++i) {
      pts.push_back({iconrate::testing::uniform(rng, -1, 1), iconrate::testing::uniform(rng, -1, 1)});
      doubled.push_back(pts.back());
      doubled.push_back(pts.back());
    }
    const auto a = extract_trajectory(wrist_path(pts), Hand::Right);
    const auto b = extract_trajectory(wrist_path(doubled), Hand::Right);
    for (std::size_t i = 0; i < a.values.size(); ++i) CHECK(std::abs(a.values[i] - b.values[i]) < 1e-6);
  }
  SUBCASE("wrist never tracked") {
    NormalizedSequence seq = wrist_path({{0.0, 0.0}, {1.0, 0.0}});
    for (auto& f : seq.frames) f.at(BodyPoint::LeftWrist).reset();
    CHECK_THROWS_AS(extract_trajectory(seq, Hand::Left), Error);
  }
}

TEST_CASE("extract_profile presence and symmetry") {
  iconrate::testing::Rng rng(21);
  NormalizedSequence seq = wrist_path({{0.2, 0.5}, {0.3, 0.1}, {0.1, -0.4}, {0.2, 0.5}});
  const HandLandmarks hand = iconrate::testing::random_hand(rng, 0.2, 0.5);
  for (auto& f : seq.frames) f.right_hand = hand;

  SUBCASE("right hand only") {
    const SubLexicalProfile p = extract_profile(seq);
    CHECK_FALSE(p.left.has_value());
    REQUIRE(p.right.has_value());
    CHECK(p.right->movement.values.size() == 64);
  }
  SUBCASE("identical keyframes give equal buckets and handshapes") {
    // n = 4: keyframes (1, 2); make them identical.
    seq.frames[2] = seq.frames[1];
    const SubLexicalProfile p = extract_profile(seq);
    CHECK(p.right->start_bucket == p.right->end_bucket);
    CHECK(p.right->initial_handshape == p.right->final_handshape);
  }
  SUBCASE("buckets come from the wrist at the keyframes") {
    const SubLexicalProfile p = extract_profile(seq);  // keyframes (1, 2)
    CHECK(p.right->start_bucket.value() == 1);          // (0.3, 0.1)
    CHECK(p.right->end_bucket.value() == 3);            // (0.1, -0.4)
  }
  SUBCASE("no hands at keyframes") {
    for (auto& f : seq.frames) f.right_hand.reset();
    CHECK_THROWS_AS(extract_profile(seq), Error);
  }
  SUBCASE("hand missing at one keyframe is absent") {
    seq.frames[2].right_hand.reset();
    for (auto& f : seq.frames) f.left_hand = hand;
    const SubLexicalProfile p = extract_profile(seq);
    CHECK(p.left.has_value());
    CHECK_FALSE(p.right.has_value());
  }
}
