#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace iconrate {

/// GloVe-style text vectors: one "token v1 ... vD" per line. Tokens are
/// lowercased on load and on lookup; a repeated token keeps its last vector.
class WordVectorTable {
 public:
  static WordVectorTable parse(std::string_view text);
  static WordVectorTable load(const std::filesystem::path& path);

  std::size_t dimension() const noexcept { return dimension_; }
  std::size_t size() const noexcept { return entries_.size(); }
  const std::vector<double>* find(std::string_view word) const;

 private:
  std::size_t dimension_ = 0;
  std::unordered_map<std::string, std::vector<double>> entries_;
};

/// Cosine of the two word vectors. Throws OutOfVocabulary naming the missing word.
double word_similarity(const WordVectorTable& table, std::string_view w1, std::string_view w2);

/// Same as word_similarity but an out-of-vocabulary word yields nullopt.
std::optional<double> try_word_similarity(const WordVectorTable& table, std::string_view w1, std::string_view w2);

std::string to_lower(std::string_view s);

}  // namespace iconrate
