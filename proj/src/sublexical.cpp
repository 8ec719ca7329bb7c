#include "iconrate/sublexical.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "iconrate/error.hpp"

namespace iconrate {

namespace {

std::size_t lower_median(std::size_t begin, std::size_t end) { return begin + (end - begin - 1) / 2; }

struct Point {
  double x;
  double y;
};

BodyPoint wrist_of(Hand hand) { return hand == Hand::Left ? BodyPoint::LeftWrist : BodyPoint::RightWrist; }

const char* hand_name(Hand hand) { return hand == Hand::Left ? "left" : "right"; }

}  // namespace

BucketId::BucketId(int value) : value_(value) {
  if (value < 0 || value > 3) throw Error(ErrorCode::MalformedInput, "bucket id out of range: " + std::to_string(value));
}

std::string_view to_string(Provenance p) noexcept {
  return p == Provenance::NativeGeometric ? "native-geometric" : "imported";
}

Provenance provenance_from_string(std::string_view s) {
  if (s == "native-geometric") return Provenance::NativeGeometric;
  if (s == "imported") return Provenance::Imported;
  throw Error(ErrorCode::MalformedInput, "unknown descriptor provenance '" + std::string(s) + "'");
}

Keyframes select_keyframes(std::size_t n_frames) {
  if (n_frames <= 1) return {0, 0};
  const std::size_t mid = n_frames / 2;
  return {lower_median(mid / 2, mid), lower_median(mid, n_frames)};
}

BucketId bucket_location(double x, double y) noexcept {
  const int column = x >= 0.0 ? 1 : 0;
  const int row = y >= 0.0 ? 0 : 1;
  return BucketId(row * 2 + column);
}

HandshapeDescriptor hand_descriptor(const HandLandmarks& landmarks) {
  HandshapeDescriptor out;
  out.values.reserve(kHandLandmarkCount * (kHandLandmarkCount - 1) / 2);
  double longest = 0.0;
  for (std::size_t i = 0; i < kHandLandmarkCount; ++i) {
    for (std::size_t j = i + 1; j < kHandLandmarkCount; ++j) {
      const double d = std::hypot(landmarks[i].x - landmarks[j].x, landmarks[i].y - landmarks[j].y);
      longest = std::max(longest, d);
      out.values.push_back(d);
    }
  }
  if (longest == 0.0) throw Error(ErrorCode::DegenerateHand, "all hand landmarks coincide");
  for (double& d : out.values) d /= longest;
  return out;
}

MovementDescriptor extract_trajectory(const NormalizedSequence& seq, Hand hand, const ExtractOptions& opts) {
  if (opts.resample_len == 0) throw Error(ErrorCode::BadConfig, "resample_len must be positive");

  std::vector<Point> path;
  for (const auto& frame : seq.frames)
    if (const auto& w = frame.at(wrist_of(hand))) path.push_back({w->x, w->y});
  if (path.empty())
    throw Error(ErrorCode::NoWristData, seq.gesture_id + ": " + hand_name(hand) + " wrist never tracked");

  std::vector<double> arc(path.size(), 0.0);
  for (std::size_t i = 1; i < path.size(); ++i)
    arc[i] = arc[i - 1] + std::hypot(path[i].x - path[i - 1].x, path[i].y - path[i - 1].y);
  const double total = arc.back();

  const std::size_t n = opts.resample_len;
  // A stationary wrist centers to exactly zero; summing 32 copies of the
  // same point would leave rounding residue.
  if (total == 0.0 || n == 1) return MovementDescriptor{std::vector<double>(2 * n, 0.0), Provenance::NativeGeometric};

  std::vector<Point> samples;
  samples.reserve(n);
  std::size_t seg = 0;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const double target = total * static_cast<double>(k) / static_cast<double>(n - 1);
    // Advance to the segment [arc[seg], arc[seg + 1]] holding target; zero-length
    // segments are skipped so repeated frames do not change the result.
    while (seg + 2 < path.size() && (arc[seg + 1] < target || arc[seg + 1] == arc[seg])) ++seg;
    const double len = arc[seg + 1] - arc[seg];
    const double t = len > 0.0 ? std::clamp((target - arc[seg]) / len, 0.0, 1.0) : 0.0;
    samples.push_back({path[seg].x + t * (path[seg + 1].x - path[seg].x),
                       path[seg].y + t * (path[seg + 1].y - path[seg].y)});
  }
  samples.push_back(path.back());

  double mean_x = 0.0;
  double mean_y = 0.0;
  for (const auto& p : samples) {
    mean_x += p.x;
    mean_y += p.y;
  }
  mean_x /= static_cast<double>(n);
  mean_y /= static_cast<double>(n);

  MovementDescriptor out;
  out.values.reserve(2 * n);
  for (const auto& p : samples) {
    out.values.push_back(p.x - mean_x);
    out.values.push_back(p.y - mean_y);
  }
  return out;
}

SubLexicalProfile extract_profile(const NormalizedSequence& seq, const ExtractOptions& opts) {
  if (seq.frames.empty()) throw Error(ErrorCode::EmptySequence, seq.gesture_id + " has no frames");
  const Keyframes keys = select_keyframes(seq.frames.size());
  const PoseFrame& first = seq.frames[keys.initial];
  const PoseFrame& last = seq.frames[keys.final];

  auto landmarks = [](const PoseFrame& f, Hand h) -> const std::optional<HandLandmarks>& {
    return h == Hand::Left ? f.left_hand : f.right_hand;
  };
  // The tracked pose wrist locates the hand; landmark 0 of the hand model
  // (also the wrist) stands in when the pose point is missing in that frame.
  auto wrist_bucket = [&](const PoseFrame& f, Hand h) {
    if (const auto& w = f.at(wrist_of(h))) return bucket_location(w->x, w->y);
    const Landmark& lm = (*landmarks(f, h))[0];
    return bucket_location(lm.x, lm.y);
  };

  SubLexicalProfile profile;
  for (Hand h : {Hand::Left, Hand::Right}) {
    if (!landmarks(first, h) || !landmarks(last, h)) continue;
    HandProfile hp;
    hp.start_bucket = wrist_bucket(first, h);
    hp.end_bucket = wrist_bucket(last, h);
    try {
      hp.initial_handshape = hand_descriptor(*landmarks(first, h));
      hp.final_handshape = hand_descriptor(*landmarks(last, h));
    } catch (const Error& e) {
      throw Error(e.code(), seq.gesture_id + " " + hand_name(h) + " hand: " + e.detail());
    }
    hp.movement = extract_trajectory(seq, h, opts);
    profile.hand(h) = std::move(hp);
  }
  if (!profile.left && !profile.right)
    throw Error(ErrorCode::NoHands, seq.gesture_id + ": no hand tracked at both keyframes");
  return profile;
}

}  // namespace iconrate
