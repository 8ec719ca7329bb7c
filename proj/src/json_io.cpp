#include "iconrate/json_io.hpp"

#include <cmath>
#include <string>

#include "iconrate/error.hpp"

namespace iconrate::json_io {

using nlohmann::json;

namespace {

template <class Tag>
json descriptor_to_json(const Descriptor<Tag>& d) {
  return json{{"provenance", std::string(to_string(d.provenance))}, {"values", d.values}};
}

const json& field(const json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) throw Error(ErrorCode::MalformedInput, where + ": missing '" + key + "'");
  return *it;
}

template <class Tag>
Descriptor<Tag> descriptor_from_json(const json& j, const std::string& where) {
  if (!j.is_object()) throw Error(ErrorCode::MalformedInput, where + ": descriptor must be an object");
  Descriptor<Tag> d;
  const json& prov = field(j, "provenance", where);
  if (!prov.is_string()) throw Error(ErrorCode::MalformedInput, where + ": provenance must be a string");
  d.provenance = provenance_from_string(prov.get<std::string>());
  const json& values = field(j, "values", where);
  if (!values.is_array() || values.empty())
    throw Error(ErrorCode::MalformedInput, where + ": values must be a nonempty array");
  d.values.reserve(values.size());
  for (const auto& v : values) {
    if (!v.is_number() || !std::isfinite(v.get<double>()))
      throw Error(ErrorCode::MalformedInput, where + ": descriptor components must be finite numbers");
    d.values.push_back(v.get<double>());
  }
  return d;
}

BucketId bucket_from_json(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw Error(ErrorCode::MalformedInput, where + ": bucket must be an integer 0..3");
  return BucketId(j.get<int>());
}

json hand_to_json(const std::optional<HandProfile>& hp) {
  if (!hp) return nullptr;
  return json{{"start_bucket", hp->start_bucket.value()},
              {"end_bucket", hp->end_bucket.value()},
              {"initial_handshape", descriptor_to_json(hp->initial_handshape)},
              {"final_handshape", descriptor_to_json(hp->final_handshape)},
              {"movement", descriptor_to_json(hp->movement)}};
}

std::optional<HandProfile> hand_from_json(const json& j, const std::string& where) {
  if (j.is_null()) return std::nullopt;
  if (!j.is_object()) throw Error(ErrorCode::MalformedInput, where + ": hand must be an object or null");
  HandProfile hp;
  hp.start_bucket = bucket_from_json(field(j, "start_bucket", where), where + ".start_bucket");
  hp.end_bucket = bucket_from_json(field(j, "end_bucket", where), where + ".end_bucket");
  hp.initial_handshape =
      descriptor_from_json<HandshapeTag>(field(j, "initial_handshape", where), where + ".initial_handshape");
  hp.final_handshape = descriptor_from_json<HandshapeTag>(field(j, "final_handshape", where), where + ".final_handshape");
  hp.movement = descriptor_from_json<MovementTag>(field(j, "movement", where), where + ".movement");
  return hp;
}

}  // namespace

json to_json(const SubLexicalProfile& profile) {
  return json{{"left", hand_to_json(profile.left)}, {"right", hand_to_json(profile.right)}};
}

SubLexicalProfile profile_from_json(const json& j, const std::string& where) {
  if (!j.is_object()) throw Error(ErrorCode::MalformedInput, where + ": profile must be an object");
  SubLexicalProfile p;
  if (auto it = j.find("left"); it != j.end()) p.left = hand_from_json(*it, where + ".left");
  if (auto it = j.find("right"); it != j.end()) p.right = hand_from_json(*it, where + ".right");
  if (!p.left && !p.right) throw Error(ErrorCode::MalformedInput, where + ": profile has no hands");
  return p;
}

}  // namespace iconrate::json_io
