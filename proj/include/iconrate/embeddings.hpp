#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "iconrate/corpus.hpp"

namespace iconrate {

enum class DescriptorSlot { Initial, Final, Movement };

/// Externally computed descriptors, read from lines of the form
///   <gesture_id> <L|R> <initial|final|movement> v1 v2 ... vD
/// Each slot has one dimension D across the whole file. Blank lines and
/// lines starting with '#' are skipped.
class EmbeddingTable {
 public:
  using Key = std::tuple<std::string, Hand, DescriptorSlot>;

  static EmbeddingTable parse(std::string_view text);
  static EmbeddingTable load(const std::filesystem::path& path);

  const std::map<Key, std::vector<double>>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }

 private:
  std::map<Key, std::vector<double>> entries_;
};

/// Overrides matching descriptors, marking them imported. Returns the number
/// of descriptors replaced. An embedding for a hand the profile lacks is an error.
std::size_t apply_embeddings(SubLexicalProfile& profile, std::string_view gesture_id, const EmbeddingTable& table);

}  // namespace iconrate
