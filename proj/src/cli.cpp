#include "iconrate/cli.hpp"

#include <cmath>
#include <cstdio>
#include <optional>
#include <set>

#include <CLI11.hpp>

#include "iconrate/assigner.hpp"
#include "iconrate/config.hpp"
#include "iconrate/corpus.hpp"
#include "iconrate/embeddings.hpp"
#include "iconrate/error.hpp"
#include "iconrate/eval.hpp"
#include "iconrate/keypoints.hpp"
#include "iconrate/neighbors.hpp"
#include "iconrate/sublexical.hpp"
#include "iconrate/wordvec.hpp"
#include "file_io.hpp"

namespace iconrate::cli {

namespace {

namespace fs = std::filesystem;

struct ExtractArgs {
  std::vector<std::string> inputs;
  std::string out;
  std::string config;
};

struct ImportArgs {
  std::string embeddings;
  std::string profiles;
  std::string corpus;
  std::string out;
};

struct CorpusAddArgs {
  std::string corpus;
  std::string profiles;
  std::string ratings;
  std::string source;
  std::string out;
};

struct NeighborsArgs {
  std::string corpus;
  std::string targets;
  std::string config;
  std::string id;
};

struct AssignArgs {
  std::string corpus;
  std::string wordvec;
  std::string targets;
  std::string config;
  std::string out;
};

struct EvaluateArgs {
  std::string assignments;
  std::string manual;
  double tolerance = 1.0;
  std::string json_out;
};

PipelineConfig config_or_default(const std::string& path) {
  return path.empty() ? PipelineConfig{} : load_config(path);
}

fs::path resolve(const std::string& flag, const std::optional<fs::path>& from_config, const char* what) {
  if (!flag.empty()) return flag;
  if (from_config) return *from_config;
  throw Error(ErrorCode::BadConfig, std::string("no ") + what + " given (flag or config key)");
}

std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

int cmd_extract(const ExtractArgs& a, std::ostream& out, std::ostream& err) {
  const PipelineConfig cfg = config_or_default(a.config);
  std::vector<ProfileEntry> entries;
  std::set<std::string> seen;
  std::size_t failures = 0;
  for (const auto& path : a.inputs) {
    try {
      const FrameSequence seq = load_sequence(path);
      if (seen.count(seq.gesture_id)) throw Error(ErrorCode::DuplicateId, "gesture_id '" + seq.gesture_id + "' repeated");
      entries.push_back({seq.gesture_id, seq.word, extract_profile(normalize(seq), cfg.extract)});
      seen.insert(seq.gesture_id);
    } catch (const Error& e) {
      ++failures;
      err << path << ": " << e.what() << "\n";
    }
  }
  save_profiles(entries, a.out);
  out << "extracted " << entries.size() << " profile(s), " << failures << " failure(s)\n";
  return failures == 0 ? kExitOk : kExitFailure;
}

int cmd_import_embeddings(const ImportArgs& a, std::ostream& out, std::ostream&) {
  if (a.profiles.empty() == a.corpus.empty())
    throw Error(ErrorCode::BadConfig, "give exactly one of --profiles or --corpus");
  const EmbeddingTable table = EmbeddingTable::load(a.embeddings);
  std::size_t replaced = 0;
  if (!a.profiles.empty()) {
    auto entries = load_profiles(a.profiles);
    for (auto& e : entries) replaced += apply_embeddings(e.profile, e.gesture_id, table);
    save_profiles(entries, a.out);
  } else {
    const Corpus corpus = load_corpus(a.corpus);
    std::vector<GestureRecord> records;
    for (const auto& [id, r] : corpus.records()) {
      records.push_back(r);
      replaced += apply_embeddings(records.back().profile, id, table);
    }
    save_corpus(Corpus::from_records(std::move(records)), a.out);
  }
  out << "replaced " << replaced << " of " << table.size() << " imported descriptor(s)\n";
  return kExitOk;
}

int cmd_corpus_add(const CorpusAddArgs& a, std::ostream& out, std::ostream&) {
  Corpus corpus = a.corpus.empty() ? Corpus{} : load_corpus(a.corpus);
  const ManualRatings ratings = a.ratings.empty() ? ManualRatings{} : load_manual_ratings(a.ratings);
  std::size_t added = 0;
  for (auto& e : load_profiles(a.profiles)) {
    GestureRecord r{e.gesture_id, e.word, std::move(e.profile), std::nullopt, a.source};
    if (auto it = ratings.find(r.id); it != ratings.end()) r.iconicity_rating = it->second;
    corpus = add_record(corpus, std::move(r));
    ++added;
  }
  save_corpus(corpus, a.out);
  out << "added " << added << " record(s); corpus size " << corpus.size() << "\n";
  return kExitOk;
}

int cmd_neighbors(const NeighborsArgs& a, std::ostream& out, std::ostream&) {
  const PipelineConfig cfg = config_or_default(a.config);
  const Corpus corpus = load_corpus(resolve(a.corpus, cfg.corpus_path, "corpus"));
  const RoundConfig& rounds = cfg.assign.rounds;
  for (const auto& t : load_profiles(a.targets)) {
    if (!a.id.empty() && t.gesture_id != a.id) continue;
    out << "target " << t.gesture_id << " (" << t.word << ")\n";
    for (const auto& list : rank_all(t.profile, corpus, rounds)) {
      const Band& band = rounds.bands[list.round_index];
      out << "  round " << list.round_index << " [" << format_double(band.lower) << ", " << format_double(band.upper)
          << "): " << list.entries.size() << " neighbor(s)\n";
      std::size_t rank = 0;
      for (const auto& n : list.entries) {
        const GestureRecord& r = *corpus.find(n.record_id);
        out << "    " << ++rank << ". " << n.record_id << " '" << r.word << "' rating "
            << format_double(*r.iconicity_rating) << " total " << format_double(n.congruency.total) << " (loc "
            << format_double(n.congruency.location_sim) << ", hs " << format_double(n.congruency.handshape_sim)
            << ", mov " << format_double(n.congruency.movement_sim) << ")\n";
      }
    }
  }
  return kExitOk;
}

int cmd_assign(const AssignArgs& a, std::ostream& out, std::ostream& err) {
  const PipelineConfig cfg = config_or_default(a.config);
  const Corpus corpus = load_corpus(resolve(a.corpus, cfg.corpus_path, "corpus"));
  const WordVectorTable table = WordVectorTable::load(resolve(a.wordvec, cfg.wordvec_path, "word vector table"));
  const auto targets = load_profiles(a.targets);
  const auto items = assign_batch(targets, corpus, table, cfg.assign);
  detail::write_file(a.out, serialize_assignments(items));

  std::size_t assigned = 0, failed = 0;
  for (const auto& item : items) {
    if (const auto* e = std::get_if<Error>(&item.result)) {
      ++failed;
      err << item.gesture_id << ": " << e->what() << "\n";
    } else if (std::holds_alternative<Assigned>(std::get<AssignmentResult>(item.result))) {
      ++assigned;
    }
  }
  out << "assigned " << assigned << " of " << items.size() << " target(s)";
  if (failed) out << ", " << failed << " failed";
  out << "\n";
  return failed == 0 ? kExitOk : kExitFailure;
}

int cmd_evaluate(const EvaluateArgs& a, std::ostream& out, std::ostream&) {
  const auto assignments = parse_assignments(detail::read_file(a.assignments));
  const ManualRatings manual = load_manual_ratings(a.manual);
  const EvalReport report = score(assignments, manual, a.tolerance);
  out << report_to_table(report);
  if (!a.json_out.empty()) detail::write_file(a.json_out, report_to_json(report));
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Iconicity rating assignment for technical sign-language gestures", "iconrate"};
  app.require_subcommand(1);

  ExtractArgs extract;
  auto* extract_cmd = app.add_subcommand("extract", "Extract sub-lexical profiles from gesture keypoint files");
  extract_cmd->add_option("files", extract.inputs, "Gesture files")->required();
  extract_cmd->add_option("--out", extract.out, "Profile file to write")->required();
  extract_cmd->add_option("--config", extract.config, "Pipeline config");

  ImportArgs import;
  auto* import_cmd = app.add_subcommand("import-embeddings", "Override descriptors with externally computed vectors");
  import_cmd->add_option("--embeddings", import.embeddings, "Embedding file")->required();
  import_cmd->add_option("--profiles", import.profiles, "Profile file to update");
  import_cmd->add_option("--corpus", import.corpus, "Corpus file to update");
  import_cmd->add_option("--out", import.out, "Where to write the updated file")->required();

  CorpusAddArgs corpus_add;
  auto* corpus_cmd = app.add_subcommand("corpus-add", "Add extracted profiles to a corpus");
  corpus_cmd->add_option("--corpus", corpus_add.corpus, "Existing corpus (omit to start empty)");
  corpus_cmd->add_option("--profiles", corpus_add.profiles, "Profile file")->required();
  corpus_cmd->add_option("--ratings", corpus_add.ratings, "Iconicity ratings, lines of 'gesture_id rating'");
  corpus_cmd->add_option("--source", corpus_add.source, "Source tag for the new records");
  corpus_cmd->add_option("--out", corpus_add.out, "Corpus file to write")->required();

  NeighborsArgs neighbors;
  auto* neighbors_cmd = app.add_subcommand("neighbors", "Show round-banded neighbor lists");
  neighbors_cmd->add_option("--corpus", neighbors.corpus, "Corpus file");
  neighbors_cmd->add_option("--targets", neighbors.targets, "Profile file of targets")->required();
  neighbors_cmd->add_option("--config", neighbors.config, "Pipeline config");
  neighbors_cmd->add_option("--id", neighbors.id, "Only this target");

  AssignArgs assign_args;
  auto* assign_cmd = app.add_subcommand("assign", "Assign iconicity ratings to target gestures");
  assign_cmd->add_option("--corpus", assign_args.corpus, "Corpus file");
  assign_cmd->add_option("--wordvec", assign_args.wordvec, "GloVe-format word vectors");
  assign_cmd->add_option("--targets", assign_args.targets, "Profile file of targets")->required();
  assign_cmd->add_option("--config", assign_args.config, "Pipeline config");
  assign_cmd->add_option("--out", assign_args.out, "Assignment file to write")->required();

  EvaluateArgs evaluate;
  auto* evaluate_cmd = app.add_subcommand("evaluate", "Score assignments against manual ratings");
  evaluate_cmd->add_option("--assignments", evaluate.assignments, "Assignment file")->required();
  evaluate_cmd->add_option("--manual", evaluate.manual, "Manual ratings file")->required();
  evaluate_cmd->add_option("--tolerance", evaluate.tolerance, "Allowed |auto - manual|")->capture_default_str();
  evaluate_cmd->add_option("--json", evaluate.json_out, "Also write the report as JSON");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*extract_cmd) return cmd_extract(extract, out, err);
    if (*import_cmd) return cmd_import_embeddings(import, out, err);
    if (*corpus_cmd) return cmd_corpus_add(corpus_add, out, err);
    if (*neighbors_cmd) return cmd_neighbors(neighbors, out, err);
    if (*assign_cmd) return cmd_assign(assign_args, out, err);
    if (*evaluate_cmd) return cmd_evaluate(evaluate, out, err);
  } catch (const Error& e) {
    err << "iconrate: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace iconrate::cli
