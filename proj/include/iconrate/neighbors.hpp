#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "iconrate/corpus.hpp"
#include "iconrate/similarity.hpp"

namespace iconrate {

/// Half-open congruency interval [lower, upper).
struct Band {
  double lower = 0.0;
  double upper = std::numeric_limits<double>::infinity();

  bool contains(double total) const noexcept { return total >= lower && total < upper; }
  bool operator==(const Band&) const = default;
};

struct RoundConfig {
  double handshape_prefilter = 0.8;
  std::vector<Band> bands{{2.4, std::numeric_limits<double>::infinity()}, {1.7, 2.4}};

  /// Bands must be nonempty intervals, strictly descending and disjoint;
  /// the prefilter must lie in [-1, 1]. Throws BadConfig.
  void validate() const;
};

/// Index of the band containing total, if any.
std::optional<std::size_t> band_index(double total, const RoundConfig& cfg) noexcept;

struct Neighbor {
  std::string record_id;
  CongruencyScore congruency;

  bool operator==(const Neighbor&) const = default;
};

/// Sorted by congruency total descending, then record id ascending.
struct NeighborList {
  std::size_t round_index = 0;
  std::vector<Neighbor> entries;

  bool operator==(const NeighborList&) const = default;
};

/// Rated corpus records passing the handshape prefilter whose congruency
/// total falls in bands[round_index]. Records sharing no hand with the
/// target are skipped.
NeighborList find_neighbors(const SubLexicalProfile& target, const Corpus& corpus, std::size_t round_index,
                            const RoundConfig& cfg);

/// One list per band, scoring each record once.
std::vector<NeighborList> rank_all(const SubLexicalProfile& target, const Corpus& corpus, const RoundConfig& cfg);

}  // namespace iconrate
