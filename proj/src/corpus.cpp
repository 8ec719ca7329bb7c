#include "iconrate/corpus.hpp"

#include <cctype>
#include <cmath>

#include "iconrate/error.hpp"
#include "iconrate/json_io.hpp"
#include "file_io.hpp"

namespace iconrate {

using nlohmann::json;

namespace {

// Dimension seen so far for each descriptor slot.
struct SlotDims {
  std::optional<std::size_t> initial;
  std::optional<std::size_t> final;
  std::optional<std::size_t> movement;

  void check(std::optional<std::size_t>& slot, std::size_t dim, const char* name, const std::string& id) {
    if (!slot) slot = dim;
    else if (*slot != dim)
      throw Error(ErrorCode::MalformedCorpus, id + ": " + name + " dimension " + std::to_string(dim) +
                                                  " differs from corpus dimension " + std::to_string(*slot));
  }

  void add(const GestureRecord& r) {
    for (const auto* hp : {&r.profile.left, &r.profile.right}) {
      if (!*hp) continue;
      check(initial, (*hp)->initial_handshape.values.size(), "initial handshape", r.id);
      check(final, (*hp)->final_handshape.values.size(), "final handshape", r.id);
      check(movement, (*hp)->movement.values.size(), "movement", r.id);
    }
  }
};

void validate_record(const GestureRecord& r) {
  if (r.id.empty()) throw Error(ErrorCode::MalformedCorpus, "record id must be nonempty");
  if (!is_valid_gloss(r.word))
    throw Error(ErrorCode::MalformedCorpus, r.id + ": word must be a lowercase single token, got '" + r.word + "'");
  if (!r.profile.left && !r.profile.right) throw Error(ErrorCode::MalformedCorpus, r.id + ": profile has no hands");
  if (r.iconicity_rating) {
    const double v = *r.iconicity_rating;
    if (!std::isfinite(v) || v < 1.0 || v > 7.0)
      throw Error(ErrorCode::RatingOutOfRange, r.id + ": rating " + std::to_string(v) + " outside [1, 7]");
  }
}

json parse_json(std::string_view text, ErrorCode code) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(code, e.what());
  }
}

std::string string_field(const json& j, const char* key, const std::string& where, ErrorCode code) {
  auto it = j.find(key);
  if (it == j.end() || !it->is_string()) throw Error(code, where + ": '" + key + "' must be a string");
  return it->get<std::string>();
}

}  // namespace

bool is_valid_gloss(std::string_view word) noexcept {
  if (word.empty()) return false;
  for (unsigned char c : word)
    if (std::isspace(c) || std::isupper(c)) return false;
  return true;
}

const GestureRecord* Corpus::find(std::string_view id) const {
  auto it = records_.find(std::string(id));
  return it == records_.end() ? nullptr : &it->second;
}

Corpus Corpus::from_records(std::vector<GestureRecord> records) {
  Corpus c;
  SlotDims dims;
  for (auto& r : records) {
    validate_record(r);
    dims.add(r);
    if (c.records_.count(r.id)) throw Error(ErrorCode::DuplicateId, "duplicate record id '" + r.id + "'");
    std::string id = r.id;
    c.records_.emplace(std::move(id), std::move(r));
  }
  return c;
}

Corpus add_record(const Corpus& corpus, GestureRecord record) {
  if (corpus.find(record.id)) throw Error(ErrorCode::DuplicateId, "record id '" + record.id + "' already present");
  std::vector<GestureRecord> all;
  all.reserve(corpus.size() + 1);
  for (const auto& [_, r] : corpus.records()) all.push_back(r);
  all.push_back(std::move(record));
  return Corpus::from_records(std::move(all));
}

Corpus parse_corpus(std::string_view json_text) {
  const json doc = parse_json(json_text, ErrorCode::MalformedCorpus);
  if (!doc.is_array()) throw Error(ErrorCode::MalformedCorpus, "corpus must be an array of records");
  std::vector<GestureRecord> records;
  records.reserve(doc.size());
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const json& j = doc[i];
    const std::string where = "record " + std::to_string(i);
    if (!j.is_object()) throw Error(ErrorCode::MalformedCorpus, where + " must be an object");
    GestureRecord r;
    r.id = string_field(j, "id", where, ErrorCode::MalformedCorpus);
    r.word = string_field(j, "word", where, ErrorCode::MalformedCorpus);
    if (auto it = j.find("source"); it != j.end() && !it->is_null()) {
      if (!it->is_string()) throw Error(ErrorCode::MalformedCorpus, where + ": 'source' must be a string");
      r.source = it->get<std::string>();
    }
    if (auto it = j.find("rating"); it != j.end() && !it->is_null()) {
      if (!it->is_number()) throw Error(ErrorCode::MalformedCorpus, where + ": 'rating' must be a number or null");
      r.iconicity_rating = it->get<double>();
    }
    auto prof = j.find("profile");
    if (prof == j.end()) throw Error(ErrorCode::MalformedCorpus, where + ": missing 'profile'");
    try {
      r.profile = json_io::profile_from_json(*prof, r.id);
    } catch (const Error& e) {
      throw Error(ErrorCode::MalformedCorpus, e.detail());
    }
    records.push_back(std::move(r));
  }
  return Corpus::from_records(std::move(records));
}

std::string serialize_corpus(const Corpus& corpus) {
  json doc = json::array();
  for (const auto& [id, r] : corpus.records()) {
    json j{{"id", r.id},
           {"word", r.word},
           {"rating", r.iconicity_rating ? json(*r.iconicity_rating) : json(nullptr)},
           {"source", r.source},
           {"profile", json_io::to_json(r.profile)}};
    doc.push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

Corpus load_corpus(const std::filesystem::path& path) { return parse_corpus(detail::read_file(path)); }

void save_corpus(const Corpus& corpus, const std::filesystem::path& path) {
  detail::write_file(path, serialize_corpus(corpus));
}

std::vector<ProfileEntry> parse_profiles(std::string_view json_text) {
  const json doc = parse_json(json_text, ErrorCode::MalformedInput);
  if (!doc.is_array()) throw Error(ErrorCode::MalformedInput, "profile file must be an array");
  std::vector<ProfileEntry> out;
  out.reserve(doc.size());
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const json& j = doc[i];
    const std::string where = "entry " + std::to_string(i);
    if (!j.is_object()) throw Error(ErrorCode::MalformedInput, where + " must be an object");
    ProfileEntry e;
    e.gesture_id = string_field(j, "gesture_id", where, ErrorCode::MalformedInput);
    e.word = string_field(j, "word", where, ErrorCode::MalformedInput);
    if (e.gesture_id.empty()) throw Error(ErrorCode::MalformedInput, where + ": empty gesture_id");
    if (!is_valid_gloss(e.word))
      throw Error(ErrorCode::MalformedInput, where + ": word must be a lowercase single token");
    auto prof = j.find("profile");
    if (prof == j.end()) throw Error(ErrorCode::MalformedInput, where + ": missing 'profile'");
    e.profile = json_io::profile_from_json(*prof, e.gesture_id);
    out.push_back(std::move(e));
  }
  return out;
}

std::string serialize_profiles(const std::vector<ProfileEntry>& entries) {
  json doc = json::array();
  for (const auto& e : entries)
    doc.push_back(json{{"gesture_id", e.gesture_id}, {"word", e.word}, {"profile", json_io::to_json(e.profile)}});
  return doc.dump(2) + "\n";
}

std::vector<ProfileEntry> load_profiles(const std::filesystem::path& path) {
  return parse_profiles(detail::read_file(path));
}

void save_profiles(const std::vector<ProfileEntry>& entries, const std::filesystem::path& path) {
  detail::write_file(path, serialize_profiles(entries));
}

}  // namespace iconrate
