#include "iconrate/embeddings.hpp"

#include <cmath>
#include <optional>
#include <sstream>

#include "iconrate/error.hpp"
#include "file_io.hpp"

namespace iconrate {

namespace {

std::optional<DescriptorSlot> slot_from(std::string_view s) {
  if (s == "initial") return DescriptorSlot::Initial;
  if (s == "final") return DescriptorSlot::Final;
  if (s == "movement") return DescriptorSlot::Movement;
  return std::nullopt;
}

}  // namespace

EmbeddingTable EmbeddingTable::parse(std::string_view text) {
  EmbeddingTable table;
  std::map<DescriptorSlot, std::size_t> dims;
  std::istringstream in{std::string(text)};
  std::size_t lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    const std::string where = "embeddings line " + std::to_string(lineno);
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[line.find_first_not_of(" \t")] == '#') continue;

    std::istringstream fields(line);
    std::string id, hand_tok, slot_tok;
    if (!(fields >> id >> hand_tok >> slot_tok)) throw Error(ErrorCode::MalformedLine, where + ": too few fields");
    Hand hand;
    if (hand_tok == "L") hand = Hand::Left;
    else if (hand_tok == "R") hand = Hand::Right;
    else throw Error(ErrorCode::MalformedLine, where + ": hand must be L or R");
    auto slot = slot_from(slot_tok);
    if (!slot) throw Error(ErrorCode::MalformedLine, where + ": slot must be initial, final or movement");

    std::vector<double> values;
    for (std::string tok; fields >> tok;) {
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size() || !std::isfinite(v)) throw Error(ErrorCode::MalformedLine, where + ": bad number '" + tok + "'");
      values.push_back(v);
    }
    if (values.empty()) throw Error(ErrorCode::MalformedLine, where + ": no vector components");
    auto [it, fresh] = dims.emplace(*slot, values.size());
    if (!fresh && it->second != values.size())
      throw Error(ErrorCode::InconsistentDimension, where + ": dimension " + std::to_string(values.size()) +
                                                        " differs from " + std::to_string(it->second) + " for slot " +
                                                        slot_tok);
    table.entries_[{id, hand, *slot}] = std::move(values);
  }
  return table;
}

EmbeddingTable EmbeddingTable::load(const std::filesystem::path& path) { return parse(detail::read_file(path)); }

std::size_t apply_embeddings(SubLexicalProfile& profile, std::string_view gesture_id, const EmbeddingTable& table) {
  std::size_t replaced = 0;
  for (const auto& [key, values] : table.entries()) {
    const auto& [id, hand, slot] = key;
    if (id != gesture_id) continue;
    auto& hp = profile.hand(hand);
    if (!hp)
      throw Error(ErrorCode::MalformedInput, std::string(gesture_id) + ": embedding given for a hand the gesture lacks");
    switch (slot) {
      case DescriptorSlot::Initial:
        hp->initial_handshape = {values, Provenance::Imported};
        break;
      case DescriptorSlot::Final:
        hp->final_handshape = {values, Provenance::Imported};
        break;
      case DescriptorSlot::Movement:
        hp->movement = {values, Provenance::Imported};
        break;
    }
    ++replaced;
  }
  return replaced;
}

}  // namespace iconrate
