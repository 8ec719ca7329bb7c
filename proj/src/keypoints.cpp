#include "iconrate/keypoints.hpp"

#include <cmath>
#include <json.hpp>

#include "iconrate/error.hpp"
#include "file_io.hpp"

namespace iconrate {

using nlohmann::json;

namespace {

constexpr std::array<std::string_view, kBodyPointCount> kNames = {
    "nose",           "left_eye",   "right_eye",  "left_shoulder", "right_shoulder",
    "left_elbow",     "right_elbow", "left_wrist", "right_wrist",
};

bool is_anchor(BodyPoint p) {
  return p == BodyPoint::Nose || p == BodyPoint::LeftShoulder || p == BodyPoint::RightShoulder;
}

Landmark parse_landmark(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() < 2 || j.size() > 4)
    throw Error(ErrorCode::MalformedInput, where + ": coordinate must be [x, y], [x, y, z] or [x, y, z, visibility]");
  for (const auto& v : j)
    if (!v.is_number()) throw Error(ErrorCode::MalformedInput, where + ": coordinate components must be numbers");
  Landmark lm;
  lm.x = j[0].get<double>();
  lm.y = j[1].get<double>();
  if (!std::isfinite(lm.x) || !std::isfinite(lm.y))
    throw Error(ErrorCode::MalformedInput, where + ": non-finite coordinate");
  if (j.size() >= 3) lm.z = j[2].get<double>();
  if (j.size() == 4) {
    double vis = j[3].get<double>();
    if (!(vis >= 0.0 && vis <= 1.0)) throw Error(ErrorCode::MalformedInput, where + ": visibility outside [0,1]");
    lm.visibility = vis;
  }
  return lm;
}

json landmark_to_json(const Landmark& lm) {
  json j = json::array({lm.x, lm.y});
  if (lm.z || lm.visibility) j.push_back(lm.z.value_or(0.0));
  if (lm.visibility) j.push_back(*lm.visibility);
  return j;
}

std::optional<HandLandmarks> parse_hand(const json& frame, const char* key, const std::string& where) {
  auto it = frame.find(key);
  if (it == frame.end() || it->is_null()) return std::nullopt;
  if (!it->is_array()) throw Error(ErrorCode::MalformedInput, where + ": " + key + " must be an array");
  if (it->size() != kHandLandmarkCount)
    throw Error(ErrorCode::BadHandArity,
                where + ": " + key + " has " + std::to_string(it->size()) + " landmarks, expected 21");
  HandLandmarks hand;
  for (std::size_t i = 0; i < kHandLandmarkCount; ++i)
    hand[i] = parse_landmark((*it)[i], where + "." + key + "[" + std::to_string(i) + "]");
  return hand;
}

PoseFrame parse_frame(const json& j, std::size_t index) {
  const std::string where = "frame " + std::to_string(index);
  if (!j.is_object()) throw Error(ErrorCode::MalformedInput, where + ": frame must be an object");
  auto pose = j.find("pose");
  if (pose == j.end() || !pose->is_object()) throw Error(ErrorCode::MalformedInput, where + ": missing pose object");

  PoseFrame frame;
  for (std::size_t k = 0; k < kBodyPointCount; ++k) {
    const auto point = static_cast<BodyPoint>(k);
    const std::string name(kNames[k]);
    auto it = pose->find(name);
    if (it == pose->end() || (it->is_null() && is_anchor(point)))
      throw Error(ErrorCode::MissingPosePoint, where + ": pose point '" + name + "' absent");
    if (!it->is_null()) frame.pose[k] = parse_landmark(*it, where + ".pose." + name);
  }
  frame.left_hand = parse_hand(j, "left_hand", where);
  frame.right_hand = parse_hand(j, "right_hand", where);
  return frame;
}

struct Vec2 {
  double x;
  double y;
};

}  // namespace

std::string_view body_point_name(BodyPoint p) noexcept { return kNames[static_cast<std::size_t>(p)]; }

std::optional<BodyPoint> body_point_from_name(std::string_view name) noexcept {
  for (std::size_t k = 0; k < kBodyPointCount; ++k)
    if (kNames[k] == name) return static_cast<BodyPoint>(k);
  return std::nullopt;
}

FrameSequence parse_sequence(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::MalformedInput, e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::MalformedInput, "gesture document must be an object");

  FrameSequence seq;
  auto id = doc.find("gesture_id");
  auto word = doc.find("word");
  auto frames = doc.find("frames");
  if (id == doc.end() || !id->is_string() || id->get<std::string>().empty())
    throw Error(ErrorCode::MalformedInput, "gesture_id must be a nonempty string");
  if (word == doc.end() || !word->is_string() || word->get<std::string>().empty())
    throw Error(ErrorCode::MalformedInput, "word must be a nonempty string");
  if (frames == doc.end() || !frames->is_array()) throw Error(ErrorCode::MalformedInput, "frames must be an array");
  seq.gesture_id = id->get<std::string>();
  seq.word = word->get<std::string>();
  for (unsigned char c : seq.word)
    if (std::isupper(c) || std::isspace(c))
      throw Error(ErrorCode::MalformedInput, "word must be a lowercase single token: '" + seq.word + "'");
  if (auto fps = doc.find("fps"); fps != doc.end() && !fps->is_null()) {
    if (!fps->is_number()) throw Error(ErrorCode::MalformedInput, "fps must be a number");
    seq.fps = fps->get<double>();
  }
  if (frames->empty()) throw Error(ErrorCode::EmptySequence, seq.gesture_id + " has no frames");
  seq.frames.reserve(frames->size());
  for (std::size_t i = 0; i < frames->size(); ++i) seq.frames.push_back(parse_frame((*frames)[i], i));
  return seq;
}

FrameSequence load_sequence(const std::filesystem::path& path) { return parse_sequence(detail::read_file(path)); }

std::string serialize_sequence(const FrameSequence& seq) {
  json doc;
  doc["gesture_id"] = seq.gesture_id;
  doc["word"] = seq.word;
  if (seq.fps) doc["fps"] = *seq.fps;
  json frames = json::array();
  for (const auto& f : seq.frames) {
    json pose = json::object();
    for (std::size_t k = 0; k < kBodyPointCount; ++k)
      pose[std::string(kNames[k])] = f.pose[k] ? landmark_to_json(*f.pose[k]) : json(nullptr);
    json jf;
    jf["pose"] = std::move(pose);
    for (auto [key, hand] : {std::pair{"left_hand", &f.left_hand}, std::pair{"right_hand", &f.right_hand}}) {
      if (!*hand) continue;
      json arr = json::array();
      for (const auto& lm : **hand) arr.push_back(landmark_to_json(lm));
      jf[key] = std::move(arr);
    }
    frames.push_back(std::move(jf));
  }
  doc["frames"] = std::move(frames);
  return doc.dump(2) + "\n";
}

PoseFrame normalize_frame(const PoseFrame& frame) {
  const Landmark& left = *frame.at(BodyPoint::LeftShoulder);
  const Landmark& right = *frame.at(BodyPoint::RightShoulder);
  const Landmark& nose = *frame.at(BodyPoint::Nose);

  const Vec2 origin{(left.x + right.x) / 2.0, (left.y + right.y) / 2.0};
  const double dx = right.x - left.x;
  const double dy = right.y - left.y;
  const double width = std::hypot(dx, dy);
  if (width == 0.0) throw Error(ErrorCode::DegenerateShoulders, "shoulders coincide");
  const Vec2 ex{dx / width, dy / width};
  const Vec2 ey{-ex.y, ex.x};

  auto project = [&](double px, double py) {
    const double rx = px - origin.x;
    const double ry = py - origin.y;
    return Vec2{(rx * ex.x + ry * ex.y) / width, (rx * ey.x + ry * ey.y) / width};
  };

  const double nose_y = project(nose.x, nose.y).y;
  if (nose_y == 0.0) throw Error(ErrorCode::NoseOnAxis, "nose lies on the shoulder line");
  const double flip = nose_y > 0.0 ? 1.0 : -1.0;

  auto map = [&](const Landmark& lm) {
    Vec2 p = project(lm.x, lm.y);
    Landmark out = lm;
    out.x = p.x;
    out.y = flip * p.y;
    return out;
  };

  PoseFrame out = frame;
  for (auto& p : out.pose)
    if (p) p = map(*p);
  for (auto* hand : {&out.left_hand, &out.right_hand})
    if (*hand)
      for (auto& lm : **hand) lm = map(lm);

  // Pin the anchors exactly; the projection above is only accurate to rounding.
  out.at(BodyPoint::LeftShoulder)->x = -0.5;
  out.at(BodyPoint::LeftShoulder)->y = 0.0;
  out.at(BodyPoint::RightShoulder)->x = 0.5;
  out.at(BodyPoint::RightShoulder)->y = 0.0;
  return out;
}

NormalizedSequence normalize(const FrameSequence& seq) {
  NormalizedSequence out{seq.gesture_id, seq.word, seq.fps, {}};
  out.frames.reserve(seq.frames.size());
  for (std::size_t i = 0; i < seq.frames.size(); ++i) {
    try {
      out.frames.push_back(normalize_frame(seq.frames[i]));
    } catch (const Error& e) {
      throw Error(e.code(), seq.gesture_id + " frame " + std::to_string(i) + ": " + e.detail());
    }
  }
  return out;
}

}  // namespace iconrate
