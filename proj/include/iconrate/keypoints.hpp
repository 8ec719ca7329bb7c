#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace iconrate {

// Upper-body points carried by every frame. Anchors (nose and shoulders)
// must be tracked; the rest may be reported as null for a frame.
enum class BodyPoint : std::size_t {
  Nose,
  LeftEye,
  RightEye,
  LeftShoulder,
  RightShoulder,
  LeftElbow,
  RightElbow,
  LeftWrist,
  RightWrist,
};

inline constexpr std::size_t kBodyPointCount = 9;
inline constexpr std::size_t kHandLandmarkCount = 21;

std::string_view body_point_name(BodyPoint p) noexcept;
std::optional<BodyPoint> body_point_from_name(std::string_view name) noexcept;

struct Landmark {
  double x = 0.0;
  double y = 0.0;
  std::optional<double> z;
  std::optional<double> visibility;

  bool operator==(const Landmark&) const = default;
};

using HandLandmarks = std::array<Landmark, kHandLandmarkCount>;

struct PoseFrame {
  std::array<std::optional<Landmark>, kBodyPointCount> pose;
  std::optional<HandLandmarks> left_hand;
  std::optional<HandLandmarks> right_hand;

  const std::optional<Landmark>& at(BodyPoint p) const { return pose[static_cast<std::size_t>(p)]; }
  std::optional<Landmark>& at(BodyPoint p) { return pose[static_cast<std::size_t>(p)]; }

  bool operator==(const PoseFrame&) const = default;
};

struct FrameSequence {
  std::string gesture_id;
  std::string word;
  std::optional<double> fps;
  std::vector<PoseFrame> frames;

  bool operator==(const FrameSequence&) const = default;
};

/// Keypoints re-expressed in the signer's shoulder frame: origin at the
/// shoulder midpoint, +X from left to right shoulder, +Y toward the head,
/// one unit per shoulder width. Only `normalize` produces these.
struct NormalizedSequence {
  std::string gesture_id;
  std::string word;
  std::optional<double> fps;
  std::vector<PoseFrame> frames;

  /// Reinterpret the normalized coordinates as raw keypoints.
  FrameSequence as_raw() const { return {gesture_id, word, fps, frames}; }

  bool operator==(const NormalizedSequence&) const = default;
};

FrameSequence parse_sequence(std::string_view text);
FrameSequence load_sequence(const std::filesystem::path& path);
std::string serialize_sequence(const FrameSequence& seq);

/// Per-frame shoulder normalization. z and visibility pass through untouched.
NormalizedSequence normalize(const FrameSequence& seq);
PoseFrame normalize_frame(const PoseFrame& frame);

}  // namespace iconrate
