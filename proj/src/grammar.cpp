#include "iconrate/grammar.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "iconrate/error.hpp"
#include "file_io.hpp"

namespace iconrate {

namespace {

constexpr std::string_view kEmptyWord = "empty";
constexpr std::string_view kEmptySet = "\xE2\x88\x85";  // U+2205

bool reserved(std::string_view s) { return s == kEmptyWord || s == kEmptySet || s == "|"; }

void check_symbols(const std::set<std::string>& set, const char* what) {
  if (set.empty()) throw Error(ErrorCode::BadConfig, std::string(what) + " alphabet is empty");
  for (const auto& s : set) {
    if (s.empty() || reserved(s) || s.find_first_of(" \t\r\n|") != std::string::npos)
      throw Error(ErrorCode::BadConfig, std::string("invalid ") + what + " symbol '" + s + "'");
  }
}

void check_disjoint(const std::set<std::string>& a, const std::set<std::string>& b) {
  for (const auto& s : a)
    if (b.count(s)) throw Error(ErrorCode::BadConfig, "symbol '" + s + "' appears in two alphabets");
}

// "empty" inside a longer token run is a known word but fits no production.
enum class Kind { Handshape, Location, Movement, Reserved };

std::vector<std::string> split_ws(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

HandExpression parse_hand(const std::vector<std::string>& tokens, const Alphabets& a, const char* side) {
  if (tokens.size() == 1 && (tokens[0] == kEmptyWord || tokens[0] == kEmptySet)) return expr::Empty{};

  std::vector<Kind> kinds;
  for (const auto& t : tokens) {
    if (a.handshapes().count(t)) kinds.push_back(Kind::Handshape);
    else if (a.locations().count(t)) kinds.push_back(Kind::Location);
    else if (a.movements().count(t)) kinds.push_back(Kind::Movement);
    else if (reserved(t)) kinds.push_back(Kind::Reserved);
    else throw Error(ErrorCode::UnknownSymbol, std::string(side) + " hand: unknown symbol '" + t + "'");
  }
  auto matches = [&](std::initializer_list<Kind> shape) {
    return shape.size() == kinds.size() && std::equal(shape.begin(), shape.end(), kinds.begin());
  };
  using K = Kind;
  if (matches({K::Handshape})) return expr::H{tokens[0]};
  if (matches({K::Handshape, K::Location})) return expr::HL{tokens[0], tokens[1]};
  if (matches({K::Handshape, K::Location, K::Movement, K::Handshape, K::Location}))
    return expr::HLMHL{tokens[0], tokens[1], tokens[2], tokens[3], tokens[4]};
  throw Error(ErrorCode::MalformedProduction, std::string(side) + " hand: no production matches");
}

std::string render_hand(const HandExpression& h) {
  struct Visitor {
    std::string operator()(const expr::Empty&) const { return std::string(kEmptyWord); }
    std::string operator()(const expr::H& e) const { return e.handshape; }
    std::string operator()(const expr::HL& e) const { return e.handshape + " " + e.location; }
    std::string operator()(const expr::HLMHL& e) const {
      return e.initial_handshape + " " + e.initial_location + " " + e.movement + " " + e.final_handshape + " " +
             e.final_location;
    }
  };
  return std::visit(Visitor{}, h);
}

std::set<std::string> string_set(const nlohmann::json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end() || !it->is_array()) throw Error(ErrorCode::BadConfig, std::string("alphabet key '") + key + "' must be a list");
  std::set<std::string> out;
  for (const auto& v : *it) {
    if (!v.is_string()) throw Error(ErrorCode::BadConfig, std::string("alphabet '") + key + "' holds a non-string");
    out.insert(v.get<std::string>());
  }
  return out;
}

}  // namespace

Alphabets::Alphabets(std::set<std::string> handshapes, std::set<std::string> locations, std::set<std::string> movements)
    : handshapes_(std::move(handshapes)), locations_(std::move(locations)), movements_(std::move(movements)) {
  check_symbols(handshapes_, "handshape");
  check_symbols(locations_, "location");
  check_symbols(movements_, "movement");
  check_disjoint(handshapes_, locations_);
  check_disjoint(handshapes_, movements_);
  check_disjoint(locations_, movements_);
}

Alphabets Alphabets::with_bucket_locations(std::set<std::string> handshapes, std::set<std::string> movements) {
  return Alphabets(std::move(handshapes), {"b0", "b1", "b2", "b3"}, std::move(movements));
}

Alphabets Alphabets::parse(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text.begin(), json_text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::BadConfig, e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::BadConfig, "alphabet config must be an object");
  for (const auto& [key, _] : doc.items())
    if (key != "handshapes" && key != "locations" && key != "movements")
      throw Error(ErrorCode::BadConfig, "unknown alphabet key '" + key + "'");
  return Alphabets(string_set(doc, "handshapes"), string_set(doc, "locations"), string_set(doc, "movements"));
}

Alphabets Alphabets::load(const std::filesystem::path& path) { return parse(detail::read_file(path)); }

GestureExpression parse_expression(std::string_view text, const Alphabets& alphabets) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos || text.find('|', bar + 1) != std::string_view::npos)
    throw Error(ErrorCode::MalformedProduction, "expected exactly one '|' separating the hands");
  GestureExpression e{parse_hand(split_ws(text.substr(0, bar)), alphabets, "left"),
                      parse_hand(split_ws(text.substr(bar + 1)), alphabets, "right")};
  if (std::holds_alternative<expr::Empty>(e.left) && std::holds_alternative<expr::Empty>(e.right))
    throw Error(ErrorCode::BothHandsEmpty, "a gesture needs at least one hand");
  return e;
}

std::string render_expression(const GestureExpression& e) { return render_hand(e.left) + " | " + render_hand(e.right); }

std::string location_symbol(BucketId bucket) { return "b" + std::to_string(bucket.value()); }

GestureExpression expression_of(const SubLexicalProfile& profile, const Alphabets& alphabets,
                                const HandshapeLabeler& handshape_labeler, const MovementLabeler& movement_labeler) {
  auto require = [](const std::set<std::string>& set, const std::string& sym, const char* what) {
    if (!set.count(sym)) throw Error(ErrorCode::UnknownSymbol, std::string(what) + " symbol '" + sym + "' not in alphabet");
    return sym;
  };
  auto hand = [&](const std::optional<HandProfile>& hp) -> HandExpression {
    if (!hp) return expr::Empty{};
    return expr::HLMHL{
        require(alphabets.handshapes(), handshape_labeler(hp->initial_handshape), "handshape"),
        require(alphabets.locations(), location_symbol(hp->start_bucket), "location"),
        require(alphabets.movements(), movement_labeler(hp->movement), "movement"),
        require(alphabets.handshapes(), handshape_labeler(hp->final_handshape), "handshape"),
        require(alphabets.locations(), location_symbol(hp->end_bucket), "location"),
    };
  };
  GestureExpression e{hand(profile.left), hand(profile.right)};
  if (std::holds_alternative<expr::Empty>(e.left) && std::holds_alternative<expr::Empty>(e.right))
    throw Error(ErrorCode::BothHandsEmpty, "profile has no hands");
  return e;
}

}  // namespace iconrate
