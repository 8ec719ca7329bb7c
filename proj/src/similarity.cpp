#include "iconrate/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "iconrate/error.hpp"

namespace iconrate {

namespace {

double dot(std::span<const double> u, std::span<const double> v) {
  double s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

bool all_zero(std::span<const double> v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0; });
}

void check_dims(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size())
    throw Error(ErrorCode::DimensionMismatch,
                "vector dimensions differ: " + std::to_string(u.size()) + " vs " + std::to_string(v.size()));
}

}  // namespace

double cosine(std::span<const double> u, std::span<const double> v) {
  check_dims(u, v);
  const double nu = std::sqrt(dot(u, u));
  const double nv = std::sqrt(dot(v, v));
  if (nu == 0.0 || nv == 0.0) throw Error(ErrorCode::ZeroVector, "cosine of a zero vector is undefined");
  return std::clamp(dot(u, v) / (nu * nv), -1.0, 1.0);
}

double location_similarity(const HandProfile& a, const HandProfile& b) noexcept {
  int matches = 0;
  if (a.start_bucket == b.start_bucket) ++matches;
  if (a.end_bucket == b.end_bucket) ++matches;
  return static_cast<double>(matches) / 2.0;
}

double handshape_similarity(const HandProfile& a, const HandProfile& b) {
  return (cosine(a.initial_handshape.view(), b.initial_handshape.view()) +
          cosine(a.final_handshape.view(), b.final_handshape.view())) /
         2.0;
}

double movement_similarity(const HandProfile& a, const HandProfile& b) {
  const auto u = a.movement.view();
  const auto v = b.movement.view();
  check_dims(u, v);
  const bool zu = all_zero(u);
  const bool zv = all_zero(v);
  if (zu && zv) return 1.0;
  if (zu || zv) return 0.0;
  return cosine(u, v);
}

CongruencyScore congruency(const SubLexicalProfile& a, const SubLexicalProfile& b) {
  CongruencyScore s;
  int shared = 0;
  for (Hand h : {Hand::Left, Hand::Right}) {
    const auto& ha = a.hand(h);
    const auto& hb = b.hand(h);
    if (!ha || !hb) continue;
    ++shared;
    s.location_sim += location_similarity(*ha, *hb);
    s.handshape_sim += handshape_similarity(*ha, *hb);
    s.movement_sim += movement_similarity(*ha, *hb);
  }
  if (shared == 0) throw Error(ErrorCode::NoSharedHands, "profiles share no hand");
  s.location_sim /= shared;
  s.handshape_sim /= shared;
  s.movement_sim /= shared;
  s.total = s.location_sim + s.handshape_sim + s.movement_sim;
  return s;
}

}  // namespace iconrate
