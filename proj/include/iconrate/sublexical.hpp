#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "iconrate/keypoints.hpp"

namespace iconrate {

/// Quadrant of the shoulder frame: 0 upper-left, 1 upper-right,
/// 2 lower-left, 3 lower-right.
class BucketId {
 public:
  BucketId() = default;
  explicit BucketId(int value);

  int value() const noexcept { return value_; }
  bool operator==(const BucketId&) const = default;

 private:
  int value_ = 0;
};

enum class Provenance { NativeGeometric, Imported };

std::string_view to_string(Provenance p) noexcept;
Provenance provenance_from_string(std::string_view s);

// Tagged so handshape and movement vectors cannot be swapped by accident.
template <class Tag>
struct Descriptor {
  std::vector<double> values;
  Provenance provenance = Provenance::NativeGeometric;

  std::span<const double> view() const noexcept { return values; }
  bool operator==(const Descriptor&) const = default;
};

struct HandshapeTag {};
struct MovementTag {};
using HandshapeDescriptor = Descriptor<HandshapeTag>;
using MovementDescriptor = Descriptor<MovementTag>;

struct HandProfile {
  BucketId start_bucket;
  BucketId end_bucket;
  HandshapeDescriptor initial_handshape;
  HandshapeDescriptor final_handshape;
  MovementDescriptor movement;

  bool operator==(const HandProfile&) const = default;
};

enum class Hand { Left, Right };

struct SubLexicalProfile {
  std::optional<HandProfile> left;
  std::optional<HandProfile> right;

  const std::optional<HandProfile>& hand(Hand h) const { return h == Hand::Left ? left : right; }
  std::optional<HandProfile>& hand(Hand h) { return h == Hand::Left ? left : right; }

  bool operator==(const SubLexicalProfile&) const = default;
};

struct ExtractOptions {
  std::size_t resample_len = 32;
};

struct Keyframes {
  std::size_t initial = 0;
  std::size_t final = 0;

  bool operator==(const Keyframes&) const = default;
};

/// Final keyframe is the lower median of the second half [m, n) with
/// m = n / 2; the initial keyframe is the lower median of [m / 2, m),
/// the second half of the first half. Both are 0 when n == 1.
Keyframes select_keyframes(std::size_t n_frames);

/// Points on an axis go to the right column / upper row.
BucketId bucket_location(double x, double y) noexcept;

/// 210 pairwise 2-D distances in (i, j) lexicographic order, scaled so the
/// largest is exactly 1.
HandshapeDescriptor hand_descriptor(const HandLandmarks& landmarks);

/// Wrist path resampled uniformly by arc length, flattened as
/// x0, y0, x1, y1, ... and mean-centered per axis.
MovementDescriptor extract_trajectory(const NormalizedSequence& seq, Hand hand, const ExtractOptions& opts = {});

SubLexicalProfile extract_profile(const NormalizedSequence& seq, const ExtractOptions& opts = {});

}  // namespace iconrate
