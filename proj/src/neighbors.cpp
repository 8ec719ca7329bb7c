#include "iconrate/neighbors.hpp"

#include <algorithm>
#include <cmath>

#include "iconrate/error.hpp"

namespace iconrate {

namespace {

bool ranks_before(const Neighbor& a, const Neighbor& b) {
  if (a.congruency.total != b.congruency.total) return a.congruency.total > b.congruency.total;
  return a.record_id < b.record_id;
}

// Candidates with their band, in corpus (id) order.
std::vector<std::pair<std::size_t, Neighbor>> score_corpus(const SubLexicalProfile& target, const Corpus& corpus,
                                                            const RoundConfig& cfg) {
  std::vector<std::pair<std::size_t, Neighbor>> out;
  for (const auto& [id, record] : corpus.records()) {
    if (!record.iconicity_rating) continue;
    CongruencyScore score;
    try {
      score = congruency(target, record.profile);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::NoSharedHands) continue;
      throw Error(e.code(), id + ": " + e.detail());
    }
    if (score.handshape_sim < cfg.handshape_prefilter) continue;
    if (auto band = band_index(score.total, cfg)) out.push_back({*band, Neighbor{id, score}});
  }
  return out;
}

}  // namespace

void RoundConfig::validate() const {
  if (!(handshape_prefilter >= -1.0 && handshape_prefilter <= 1.0))
    throw Error(ErrorCode::BadConfig, "handshape_prefilter must lie in [-1, 1]");
  if (bands.empty()) throw Error(ErrorCode::BadConfig, "at least one congruency band is required");
  for (std::size_t i = 0; i < bands.size(); ++i) {
    const Band& b = bands[i];
    if (std::isnan(b.lower) || std::isnan(b.upper) || !(b.lower < b.upper))
      throw Error(ErrorCode::BadConfig, "band " + std::to_string(i) + " is empty or invalid");
    if (i > 0 && b.upper > bands[i - 1].lower)
      throw Error(ErrorCode::BadConfig, "band " + std::to_string(i) + " overlaps or is above band " + std::to_string(i - 1));
  }
}

std::optional<std::size_t> band_index(double total, const RoundConfig& cfg) noexcept {
  for (std::size_t i = 0; i < cfg.bands.size(); ++i)
    if (cfg.bands[i].contains(total)) return i;
  return std::nullopt;
}

NeighborList find_neighbors(const SubLexicalProfile& target, const Corpus& corpus, std::size_t round_index,
                            const RoundConfig& cfg) {
  if (round_index >= cfg.bands.size())
    throw Error(ErrorCode::BadRound, "round " + std::to_string(round_index) + " but only " +
                                         std::to_string(cfg.bands.size()) + " bands configured");
  NeighborList list{round_index, {}};
  for (auto& [band, n] : score_corpus(target, corpus, cfg))
    if (band == round_index) list.entries.push_back(std::move(n));
  std::sort(list.entries.begin(), list.entries.end(), ranks_before);
  return list;
}

std::vector<NeighborList> rank_all(const SubLexicalProfile& target, const Corpus& corpus, const RoundConfig& cfg) {
  std::vector<NeighborList> lists(cfg.bands.size());
  for (std::size_t r = 0; r < lists.size(); ++r) lists[r].round_index = r;
  for (auto& [band, n] : score_corpus(target, corpus, cfg)) lists[band].entries.push_back(std::move(n));
  for (auto& l : lists) std::sort(l.entries.begin(), l.entries.end(), ranks_before);
  return lists;
}

}  // namespace iconrate
