#include "iconrate/assigner.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

namespace iconrate {

using nlohmann::json;

void AssignConfig::validate() const {
  if (!(tau >= -1.0 && tau <= 1.0)) throw Error(ErrorCode::BadConfig, "tau must lie in [-1, 1]");
  if (clamp_floor != kRatingMin) throw Error(ErrorCode::BadConfig, "clamp_floor must equal the scale minimum 1");
  rounds.validate();
}

AssignmentResult assign(const SubLexicalProfile& target_profile, const std::string& target_word, const Corpus& corpus,
                        const WordVectorTable& table, const AssignConfig& cfg) {
  std::size_t tested = 0;
  for (std::size_t round = 0; round < cfg.rounds.bands.size(); ++round) {
    const NeighborList list = find_neighbors(target_profile, corpus, round, cfg.rounds);
    for (const Neighbor& n : list.entries) {
      ++tested;
      const GestureRecord& donor = *corpus.find(n.record_id);
      const auto s = try_word_similarity(table, target_word, donor.word);
      if (!s || *s < cfg.tau) continue;
      const double rating =
          std::clamp(*donor.iconicity_rating - static_cast<double>(round), cfg.clamp_floor, kRatingMax);
      return Assigned{rating, n.record_id, round, *s, n.congruency.total};
    }
  }
  return Unassigned{cfg.rounds.bands.size(), tested};
}

std::vector<BatchItem> assign_batch(const std::vector<ProfileEntry>& targets, const Corpus& corpus,
                                    const WordVectorTable& table, const AssignConfig& cfg) {
  std::vector<BatchItem> out;
  out.reserve(targets.size());
  for (const auto& t : targets) {
    try {
      out.push_back({t.gesture_id, t.word, assign(t.profile, t.word, corpus, table, cfg)});
    } catch (const Error& e) {
      out.push_back({t.gesture_id, t.word, e});
    }
  }
  return out;
}

std::string serialize_assignments(const std::vector<BatchItem>& items) {
  json doc = json::array();
  for (const auto& item : items) {
    json j{{"gesture_id", item.gesture_id}, {"word", item.word}};
    if (const auto* err = std::get_if<Error>(&item.result)) {
      j["outcome"] = "error";
      j["error"] = err->what();
    } else if (const auto* a = std::get_if<Assigned>(&std::get<AssignmentResult>(item.result))) {
      j["outcome"] = "assigned";
      j["rating"] = a->rating;
      j["neighbor_id"] = a->neighbor_id;
      j["round"] = a->round_index;
      j["S"] = a->word_similarity;
      j["congruency"] = a->congruency_total;
    } else {
      const auto& u = std::get<Unassigned>(std::get<AssignmentResult>(item.result));
      j["outcome"] = "unassigned";
      j["rounds_exhausted"] = u.rounds_exhausted;
      j["candidates_tested"] = u.candidates_tested;
    }
    doc.push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

std::vector<AssignmentRecord> parse_assignments(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::MalformedInput, e.what());
  }
  if (!doc.is_array()) throw Error(ErrorCode::MalformedInput, "assignment file must be an array");
  std::vector<AssignmentRecord> out;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const json& j = doc[i];
    const std::string where = "assignment " + std::to_string(i);
    try {
      AssignmentRecord r;
      r.gesture_id = j.at("gesture_id").get<std::string>();
      r.word = j.value("word", std::string());
      const auto outcome = j.at("outcome").get<std::string>();
      if (outcome == "assigned") {
        Assigned a;
        a.rating = j.at("rating").get<double>();
        a.neighbor_id = j.value("neighbor_id", std::string());
        a.round_index = j.value("round", std::size_t{0});
        a.word_similarity = j.value("S", 0.0);
        a.congruency_total = j.value("congruency", 0.0);
        if (!std::isfinite(a.rating) || a.rating < kRatingMin || a.rating > kRatingMax)
          throw Error(ErrorCode::RatingOutOfRange, where + ": rating outside [1, 7]");
        r.result = a;
      } else if (outcome == "unassigned") {
        r.result = Unassigned{j.value("rounds_exhausted", std::size_t{0}), j.value("candidates_tested", std::size_t{0})};
      } else if (outcome != "error") {
        throw Error(ErrorCode::MalformedInput, where + ": unknown outcome '" + outcome + "'");
      }
      out.push_back(std::move(r));
    } catch (const json::exception& e) {
      throw Error(ErrorCode::MalformedInput, where + ": " + e.what());
    }
  }
  return out;
}

}  // namespace iconrate
