#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "iconrate/sublexical.hpp"

namespace iconrate {

struct GestureRecord {
  std::string id;
  std::string word;
  SubLexicalProfile profile;
  std::optional<double> iconicity_rating;  // 1..7, fractional when averaged over raters
  std::string source;

  bool operator==(const GestureRecord&) const = default;
};

/// Immutable id-keyed collection; iteration is in id order. Every
/// descriptor slot (initial handshape, final handshape, movement) has a
/// single dimension across the corpus.
class Corpus {
 public:
  Corpus() = default;

  static Corpus from_records(std::vector<GestureRecord> records);

  const std::map<std::string, GestureRecord>& records() const noexcept { return records_; }
  std::size_t size() const noexcept { return records_.size(); }
  bool empty() const noexcept { return records_.empty(); }
  const GestureRecord* find(std::string_view id) const;

  bool operator==(const Corpus&) const = default;

 private:
  std::map<std::string, GestureRecord> records_;
};

Corpus add_record(const Corpus& corpus, GestureRecord record);

Corpus parse_corpus(std::string_view json_text);
std::string serialize_corpus(const Corpus& corpus);
Corpus load_corpus(const std::filesystem::path& path);
void save_corpus(const Corpus& corpus, const std::filesystem::path& path);

/// One extracted gesture: the unit of the profile files written by
/// `iconrate extract` and read as assignment targets.
struct ProfileEntry {
  std::string gesture_id;
  std::string word;
  SubLexicalProfile profile;

  bool operator==(const ProfileEntry&) const = default;
};

std::vector<ProfileEntry> parse_profiles(std::string_view json_text);
std::string serialize_profiles(const std::vector<ProfileEntry>& entries);
std::vector<ProfileEntry> load_profiles(const std::filesystem::path& path);
void save_profiles(const std::vector<ProfileEntry>& entries, const std::filesystem::path& path);

/// Lowercase, nonempty, no whitespace.
bool is_valid_gloss(std::string_view word) noexcept;

}  // namespace iconrate
