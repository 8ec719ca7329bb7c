#include "iconrate/eval.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "iconrate/error.hpp"
#include "file_io.hpp"

namespace iconrate {

ManualRatings parse_manual_ratings(std::string_view text) {
  ManualRatings out;
  std::istringstream in{std::string(text)};
  std::size_t lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string id;
    double rating = 0.0;
    std::string extra;
    if (!(fields >> id >> rating) || (fields >> extra))
      throw Error(ErrorCode::MalformedLine, "manual ratings line " + std::to_string(lineno) + ": expected 'gesture_id rating'");
    if (!std::isfinite(rating) || rating < kRatingMin || rating > kRatingMax)
      throw Error(ErrorCode::RatingOutOfRange, id + ": manual rating outside [1, 7]");
    if (!out.emplace(id, rating).second) throw Error(ErrorCode::DuplicateId, "manual rating for '" + id + "' given twice");
  }
  return out;
}

ManualRatings load_manual_ratings(const std::filesystem::path& path) {
  return parse_manual_ratings(detail::read_file(path));
}

EvalReport score(const std::vector<AssignmentRecord>& assignments, const ManualRatings& manual, double tolerance) {
  EvalReport report;
  report.n_targets = assignments.size();
  for (const auto& a : assignments) {
    auto it = manual.find(a.gesture_id);
    if (it == manual.end()) throw Error(ErrorCode::MissingManualRating, "no manual rating for '" + a.gesture_id + "'");
    if (!a.result)
      throw Error(ErrorCode::MalformedInput, "assignment for '" + a.gesture_id + "' failed; nothing to score");
    EvalItem item{a.gesture_id, it->second, std::nullopt, std::nullopt};
    if (const auto* as = std::get_if<Assigned>(&*a.result)) {
      item.automatic = as->rating;
      item.correct = std::abs(as->rating - it->second) <= tolerance;
      ++report.n_scored;
      if (*item.correct) ++report.n_correct;
    } else {
      ++report.n_unassigned;
    }
    report.per_item.push_back(std::move(item));
  }
  if (report.n_scored > 0)
    report.accuracy = static_cast<double>(report.n_correct) / static_cast<double>(report.n_scored);
  return report;
}

std::string report_to_json(const EvalReport& report) {
  using nlohmann::json;
  json items = json::array();
  for (const auto& it : report.per_item) {
    items.push_back(json{{"gesture_id", it.gesture_id},
                         {"manual", it.manual},
                         {"auto", it.automatic ? json(*it.automatic) : json(nullptr)},
                         {"correct", it.correct ? json(*it.correct) : json("excluded")}});
  }
  json doc{{"n_targets", report.n_targets},
           {"n_unassigned", report.n_unassigned},
           {"n_scored", report.n_scored},
           {"n_correct", report.n_correct},
           {"accuracy", report.accuracy ? json(*report.accuracy) : json("undefined")},
           {"per_item", std::move(items)}};
  return doc.dump(2) + "\n";
}

std::string report_to_table(const EvalReport& report) {
  std::ostringstream out;
  char buf[128];
  std::snprintf(buf, sizeof buf, "%-24s %8s %8s  %s\n", "gesture_id", "manual", "auto", "result");
  out << buf;
  for (const auto& it : report.per_item) {
    const std::string automatic = it.automatic ? std::to_string(*it.automatic).substr(0, 6) : "-";
    const char* verdict = !it.correct ? "excluded" : (*it.correct ? "correct" : "incorrect");
    std::snprintf(buf, sizeof buf, "%-24s %8.3f %8s  %s\n", it.gesture_id.c_str(), it.manual, automatic.c_str(), verdict);
    out << buf;
  }
  out << "targets: " << report.n_targets << "  unassigned: " << report.n_unassigned << "  scored: " << report.n_scored
      << "  correct: " << report.n_correct << "\n";
  if (report.accuracy) {
    std::snprintf(buf, sizeof buf, "accuracy: %.4f%% (%zu/%zu)\n", *report.accuracy * 100.0, report.n_correct,
                  report.n_scored);
    out << buf;
  } else {
    out << "accuracy: undefined (no scored items)\n";
  }
  return out.str();
}

}  // namespace iconrate
