#pragma once

#include <span>

#include "iconrate/sublexical.hpp"

namespace iconrate {

struct CongruencyScore {
  double location_sim = 0.0;
  double handshape_sim = 0.0;
  double movement_sim = 0.0;
  double total = 0.0;  // location_sim + handshape_sim + movement_sim, summed in that order

  bool operator==(const CongruencyScore&) const = default;
};

/// dot(u, v) / (|u| |v|), clamped to [-1, 1].
double cosine(std::span<const double> u, std::span<const double> v);

/// Cosine of the (start, end) one-hot encodings, i.e. matches / 2.
double location_similarity(const HandProfile& a, const HandProfile& b) noexcept;

/// Mean of the initial and final handshape cosines.
double handshape_similarity(const HandProfile& a, const HandProfile& b);

/// Cosine of the movement vectors, except: both zero -> 1, exactly one zero -> 0.
double movement_similarity(const HandProfile& a, const HandProfile& b);

/// Each property is averaged over the hands present in both profiles.
/// Throws NoSharedHands when the profiles have no hand in common.
CongruencyScore congruency(const SubLexicalProfile& a, const SubLexicalProfile& b);

}  // namespace iconrate
