#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "iconrate/assigner.hpp"

namespace iconrate {

struct EvalItem {
  std::string gesture_id;
  double manual = 0.0;
  std::optional<double> automatic;  // none when unassigned
  std::optional<bool> correct;      // none when excluded

  bool operator==(const EvalItem&) const = default;
};

struct EvalReport {
  std::size_t n_targets = 0;
  std::size_t n_unassigned = 0;
  std::size_t n_scored = 0;
  std::size_t n_correct = 0;
  std::optional<double> accuracy;  // undefined when nothing was scored
  std::vector<EvalItem> per_item;
};

using ManualRatings = std::map<std::string, double>;

/// Lines of "gesture_id rating"; '#' starts a comment line.
ManualRatings parse_manual_ratings(std::string_view text);
ManualRatings load_manual_ratings(const std::filesystem::path& path);

/// Unassigned targets are excluded; an assigned target is correct when
/// |auto - manual| <= tolerance.
EvalReport score(const std::vector<AssignmentRecord>& assignments, const ManualRatings& manual, double tolerance = 1.0);

std::string report_to_json(const EvalReport& report);
std::string report_to_table(const EvalReport& report);

}  // namespace iconrate
