#include "iconrate/config.hpp"

#include <limits>
#include <string>

#include <json.hpp>

#include "iconrate/error.hpp"
#include "file_io.hpp"

namespace iconrate {

using nlohmann::json;

namespace {

double number(const json& j, const char* key) {
  if (!j.is_number()) throw Error(ErrorCode::BadConfig, std::string("'") + key + "' must be a number");
  return j.get<double>();
}

std::vector<Band> parse_bands(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::BadConfig, "'bands' must be a list of [lower, upper] pairs");
  std::vector<Band> bands;
  for (const auto& b : j) {
    if (!b.is_array() || b.size() != 2) throw Error(ErrorCode::BadConfig, "each band must be [lower, upper]");
    Band band;
    band.lower = number(b[0], "bands");
    band.upper = b[1].is_null() ? std::numeric_limits<double>::infinity() : number(b[1], "bands");
    bands.push_back(band);
  }
  return bands;
}

}  // namespace

PipelineConfig parse_config(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::BadConfig, e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::BadConfig, "config must be a JSON object");

  PipelineConfig cfg;
  for (const auto& [key, value] : doc.items()) {
    if (key == "tau") cfg.assign.tau = number(value, "tau");
    else if (key == "handshape_prefilter") cfg.assign.rounds.handshape_prefilter = number(value, "handshape_prefilter");
    else if (key == "bands") cfg.assign.rounds.bands = parse_bands(value);
    else if (key == "clamp_floor") cfg.assign.clamp_floor = number(value, "clamp_floor");
    else if (key == "resample_len") {
      if (!value.is_number_unsigned() || value.get<std::size_t>() == 0)
        throw Error(ErrorCode::BadConfig, "'resample_len' must be a positive integer");
      cfg.extract.resample_len = value.get<std::size_t>();
    } else if (key == "wordvec_path" || key == "corpus_path") {
      if (!value.is_string()) throw Error(ErrorCode::BadConfig, "'" + key + "' must be a string");
      (key == "wordvec_path" ? cfg.wordvec_path : cfg.corpus_path) = value.get<std::string>();
    } else {
      throw Error(ErrorCode::BadConfig, "unknown config key '" + key + "'");
    }
  }
  cfg.assign.validate();
  return cfg;
}

PipelineConfig load_config(const std::filesystem::path& path) {
  PipelineConfig cfg = parse_config(detail::read_file(path));
  // Relative data paths are taken relative to the config file.
  for (auto* p : {&cfg.wordvec_path, &cfg.corpus_path})
    if (*p && p->value().is_relative()) *p = path.parent_path() / p->value();
  return cfg;
}

}  // namespace iconrate
