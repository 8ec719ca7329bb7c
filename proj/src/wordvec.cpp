#include "iconrate/wordvec.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

#include "iconrate/error.hpp"
#include "iconrate/similarity.hpp"
#include "file_io.hpp"

namespace iconrate {

namespace {

// Splits on runs of spaces/tabs; GloVe files use single spaces but stray
// trailing blanks are common.
std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

std::string to_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

WordVectorTable WordVectorTable::parse(std::string_view text) {
  WordVectorTable table;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;

    const auto fields = split_fields(line);
    const std::string where = "line " + std::to_string(lineno);
    if (fields.size() < 2) throw Error(ErrorCode::MalformedLine, where + ": expected a token followed by numbers");
    std::vector<double> vec;
    vec.reserve(fields.size() - 1);
    for (std::size_t k = 1; k < fields.size(); ++k) {
      double v = 0.0;
      auto [ptr, ec] = std::from_chars(fields[k].data(), fields[k].data() + fields[k].size(), v);
      if (ec != std::errc() || ptr != fields[k].data() + fields[k].size() || !std::isfinite(v))
        throw Error(ErrorCode::MalformedLine, where + ": bad number '" + std::string(fields[k]) + "'");
      vec.push_back(v);
    }
    if (table.dimension_ == 0) table.dimension_ = vec.size();
    else if (vec.size() != table.dimension_)
      throw Error(ErrorCode::InconsistentDimension, where + ": dimension " + std::to_string(vec.size()) +
                                                        " differs from " + std::to_string(table.dimension_));
    table.entries_[to_lower(fields[0])] = std::move(vec);
  }
  if (table.entries_.empty()) throw Error(ErrorCode::EmptyTable, "word vector table has no entries");
  return table;
}

WordVectorTable WordVectorTable::load(const std::filesystem::path& path) { return parse(detail::read_file(path)); }

const std::vector<double>* WordVectorTable::find(std::string_view word) const {
  auto it = entries_.find(to_lower(word));
  return it == entries_.end() ? nullptr : &it->second;
}

std::optional<double> try_word_similarity(const WordVectorTable& table, std::string_view w1, std::string_view w2) {
  const auto* a = table.find(w1);
  const auto* b = table.find(w2);
  if (!a || !b) return std::nullopt;
  return cosine(*a, *b);
}

double word_similarity(const WordVectorTable& table, std::string_view w1, std::string_view w2) {
  for (auto w : {w1, w2})
    if (!table.find(w)) throw Error(ErrorCode::OutOfVocabulary, "'" + std::string(w) + "' not in word vector table");
  return cosine(*table.find(w1), *table.find(w2));
}

}  // namespace iconrate
