#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include <optional>
#include <string_view>

#include "iconrate/corpus.hpp"
#include "iconrate/error.hpp"
#include "iconrate/neighbors.hpp"
#include "iconrate/wordvec.hpp"

namespace iconrate {

inline constexpr double kRatingMin = 1.0;
inline constexpr double kRatingMax = 7.0;

struct AssignConfig {
  double tau = 0.3;
  RoundConfig rounds;
  double clamp_floor = kRatingMin;

  void validate() const;
};

struct Assigned {
  double rating = 0.0;
  std::string neighbor_id;
  std::size_t round_index = 0;
  double word_similarity = 0.0;
  double congruency_total = 0.0;

  bool operator==(const Assigned&) const = default;
};

struct Unassigned {
  std::size_t rounds_exhausted = 0;
  std::size_t candidates_tested = 0;

  bool operator==(const Unassigned&) const = default;
};

using AssignmentResult = std::variant<Assigned, Unassigned>;

/// Scans rounds in order and each round's neighbors in rank order; the first
/// neighbor whose gloss similarity reaches tau donates its rating minus the
/// round index, floored at clamp_floor. Out-of-vocabulary glosses never qualify.
AssignmentResult assign(const SubLexicalProfile& target_profile, const std::string& target_word, const Corpus& corpus,
                        const WordVectorTable& table, const AssignConfig& cfg);

struct BatchItem {
  std::string gesture_id;
  std::string word;
  std::variant<AssignmentResult, Error> result;
};

/// Element-wise assign; a failing target is recorded and the rest proceed.
std::vector<BatchItem> assign_batch(const std::vector<ProfileEntry>& targets, const Corpus& corpus,
                                    const WordVectorTable& table, const AssignConfig& cfg);

/// Canonical JSON for batch output. Failed items are written with outcome "error".
std::string serialize_assignments(const std::vector<BatchItem>& items);

/// One parsed row of an assignment file.
struct AssignmentRecord {
  std::string gesture_id;
  std::string word;
  std::optional<AssignmentResult> result;  // empty for "error" rows
};

std::vector<AssignmentRecord> parse_assignments(std::string_view json_text);

}  // namespace iconrate
