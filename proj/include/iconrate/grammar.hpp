#pragma once

#include <filesystem>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <variant>

#include "iconrate/sublexical.hpp"

namespace iconrate {

/// Symbol inventories for handshapes, locations and movements. The three
/// sets must be nonempty and pairwise disjoint; "empty" and "∅" are reserved.
class Alphabets {
 public:
  Alphabets(std::set<std::string> handshapes, std::set<std::string> locations, std::set<std::string> movements);

  /// Locations b0..b3 (one per bucket) and the given opaque handshape and
  /// movement symbols.
  static Alphabets with_bucket_locations(std::set<std::string> handshapes, std::set<std::string> movements);
  static Alphabets load(const std::filesystem::path& path);
  static Alphabets parse(std::string_view json_text);

  const std::set<std::string>& handshapes() const noexcept { return handshapes_; }
  const std::set<std::string>& locations() const noexcept { return locations_; }
  const std::set<std::string>& movements() const noexcept { return movements_; }

 private:
  std::set<std::string> handshapes_;
  std::set<std::string> locations_;
  std::set<std::string> movements_;
};

namespace expr {

struct Empty {
  bool operator==(const Empty&) const = default;
};
struct H {
  std::string handshape;
  bool operator==(const H&) const = default;
};
struct HL {
  std::string handshape;
  std::string location;
  bool operator==(const HL&) const = default;
};
struct HLMHL {
  std::string initial_handshape;
  std::string initial_location;
  std::string movement;
  std::string final_handshape;
  std::string final_location;
  bool operator==(const HLMHL&) const = default;
};

}  // namespace expr

using HandExpression = std::variant<expr::Empty, expr::H, expr::HL, expr::HLMHL>;

struct GestureExpression {
  HandExpression left;
  HandExpression right;

  bool operator==(const GestureExpression&) const = default;
};

/// Grammar:  GE -> GE_left "|" GE_right ;  GE_x -> empty | H | H L | H L M H L
GestureExpression parse_expression(std::string_view text, const Alphabets& alphabets);

std::string render_expression(const GestureExpression& e);

std::string location_symbol(BucketId bucket);

using HandshapeLabeler = std::function<std::string(const HandshapeDescriptor&)>;
using MovementLabeler = std::function<std::string(const MovementDescriptor&)>;

/// Each present hand becomes H L M H L; labeler exceptions propagate.
GestureExpression expression_of(const SubLexicalProfile& profile, const Alphabets& alphabets,
                                const HandshapeLabeler& handshape_labeler, const MovementLabeler& movement_labeler);

}  // namespace iconrate
