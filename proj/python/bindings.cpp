#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "iconrate/assigner.hpp"
#include "iconrate/cli.hpp"
#include "iconrate/corpus.hpp"
#include "iconrate/error.hpp"
#include "iconrate/eval.hpp"
#include "iconrate/json_io.hpp"
#include "iconrate/keypoints.hpp"
#include "iconrate/neighbors.hpp"
#include "iconrate/similarity.hpp"
#include "iconrate/sublexical.hpp"
#include "iconrate/wordvec.hpp"

namespace py = pybind11;
using namespace iconrate;

namespace {

py::object g_error_type;

template <class Tag>
Descriptor<Tag> descriptor(std::vector<double> values, const std::string& provenance) {
  return Descriptor<Tag>{std::move(values), provenance_from_string(provenance)};
}

HandLandmarks landmarks_from(const std::vector<std::pair<double, double>>& points) {
  if (points.size() != kHandLandmarkCount)
    throw Error(ErrorCode::BadHandArity, "expected 21 landmarks, got " + std::to_string(points.size()));
  HandLandmarks out;
  for (std::size_t i = 0; i < points.size(); ++i) out[i] = Landmark{points[i].first, points[i].second, {}, {}};
  return out;
}

py::object result_to_py(const AssignmentResult& r) {
  return std::visit([](const auto& v) { return py::cast(v); }, r);
}

}  // namespace

PYBIND11_MODULE(_iconrate, m) {
  m.doc() = "Bindings for the iconrate C++ core";

  g_error_type = py::reinterpret_borrow<py::object>(PyErr_NewException("iconrate.IconrateError", PyExc_ValueError, nullptr));
  m.attr("IconrateError") = g_error_type;
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object inst = g_error_type(e.what());
      inst.attr("code") = std::string(to_string(e.code()));
      inst.attr("detail") = e.detail();
      PyErr_SetObject(g_error_type.ptr(), inst.ptr());
    }
  });

  py::class_<FrameSequence>(m, "Sequence")
      .def_readonly("gesture_id", &FrameSequence::gesture_id)
      .def_readonly("word", &FrameSequence::word)
      .def_readonly("fps", &FrameSequence::fps)
      .def("__len__", [](const FrameSequence& s) { return s.frames.size(); })
      .def("to_json", &serialize_sequence);
  m.def("parse_sequence", &parse_sequence, py::arg("text"));
  m.def("load_sequence", &load_sequence, py::arg("path"));

  py::class_<HandProfile>(m, "HandProfile")
      .def(py::init([](int start, int end, std::vector<double> initial, std::vector<double> final_,
                       std::vector<double> movement, const std::string& provenance) {
             return HandProfile{BucketId(start), BucketId(end), descriptor<HandshapeTag>(std::move(initial), provenance),
                                descriptor<HandshapeTag>(std::move(final_), provenance),
                                descriptor<MovementTag>(std::move(movement), provenance)};
           }),
           py::arg("start_bucket"), py::arg("end_bucket"), py::arg("initial_handshape"), py::arg("final_handshape"),
           py::arg("movement"), py::arg("provenance") = "native-geometric")
      .def_property_readonly("start_bucket", [](const HandProfile& h) { return h.start_bucket.value(); })
      .def_property_readonly("end_bucket", [](const HandProfile& h) { return h.end_bucket.value(); })
      .def_property_readonly("initial_handshape", [](const HandProfile& h) { return h.initial_handshape.values; })
      .def_property_readonly("final_handshape", [](const HandProfile& h) { return h.final_handshape.values; })
      .def_property_readonly("movement", [](const HandProfile& h) { return h.movement.values; })
      .def("__eq__", [](const HandProfile& a, const HandProfile& b) { return a == b; });

  py::class_<SubLexicalProfile>(m, "Profile")
      .def(py::init([](std::optional<HandProfile> left, std::optional<HandProfile> right) {
             return SubLexicalProfile{std::move(left), std::move(right)};
           }),
           py::arg("left") = py::none(), py::arg("right") = py::none())
      .def_readwrite("left", &SubLexicalProfile::left)
      .def_readwrite("right", &SubLexicalProfile::right)
      .def("to_json", [](const SubLexicalProfile& p) { return json_io::to_json(p).dump(); })
      .def_static("from_json",
                  [](const std::string& text) {
                    nlohmann::json j;
                    try {
                      j = nlohmann::json::parse(text);
                    } catch (const nlohmann::json::parse_error& e) {
                      throw Error(ErrorCode::MalformedInput, e.what());
                    }
                    return json_io::profile_from_json(j, "profile");
                  })
      .def("__eq__", [](const SubLexicalProfile& a, const SubLexicalProfile& b) { return a == b; });

  m.def("select_keyframes",
        [](std::size_t n) {
          const Keyframes k = select_keyframes(n);
          return std::pair{k.initial, k.final};
        },
        py::arg("n_frames"));
  m.def("bucket_location", [](double x, double y) { return bucket_location(x, y).value(); }, py::arg("x"),
        py::arg("y"));
  m.def("hand_descriptor",
        [](const std::vector<std::pair<double, double>>& points) { return hand_descriptor(landmarks_from(points)).values; },
        py::arg("landmarks"));
  m.def("extract_profile",
        [](const FrameSequence& seq, std::size_t resample_len) {
          return extract_profile(normalize(seq), ExtractOptions{resample_len});
        },
        py::arg("sequence"), py::arg("resample_len") = 32, "Normalize a raw sequence and extract its profile.");

  m.def("cosine", [](const std::vector<double>& u, const std::vector<double>& v) { return cosine(u, v); });
  py::class_<CongruencyScore>(m, "CongruencyScore")
      .def_readonly("location", &CongruencyScore::location_sim)
      .def_readonly("handshape", &CongruencyScore::handshape_sim)
      .def_readonly("movement", &CongruencyScore::movement_sim)
      .def_readonly("total", &CongruencyScore::total);
  m.def("congruency", &congruency, py::arg("a"), py::arg("b"));

  py::class_<GestureRecord>(m, "GestureRecord")
      .def(py::init([](std::string id, std::string word, SubLexicalProfile profile, std::optional<double> rating,
                       std::string source) {
             return GestureRecord{std::move(id), std::move(word), std::move(profile), rating, std::move(source)};
           }),
           py::arg("id"), py::arg("word"), py::arg("profile"), py::arg("rating") = py::none(), py::arg("source") = "")
      .def_readonly("id", &GestureRecord::id)
      .def_readonly("word", &GestureRecord::word)
      .def_readonly("profile", &GestureRecord::profile)
      .def_readonly("rating", &GestureRecord::iconicity_rating)
      .def_readonly("source", &GestureRecord::source);

  py::class_<Corpus>(m, "Corpus")
      .def(py::init([](std::vector<GestureRecord> records) { return Corpus::from_records(std::move(records)); }),
           py::arg("records") = std::vector<GestureRecord>{})
      .def("__len__", &Corpus::size)
      .def("__contains__", [](const Corpus& c, const std::string& id) { return c.find(id) != nullptr; })
      .def("__getitem__",
           [](const Corpus& c, const std::string& id) {
             const GestureRecord* r = c.find(id);
             if (!r) throw py::key_error(id);
             return *r;
           })
      .def("ids",
           [](const Corpus& c) {
             std::vector<std::string> ids;
             for (const auto& [id, _] : c.records()) ids.push_back(id);
             return ids;
           })
      .def("add", [](const Corpus& c, GestureRecord r) { return add_record(c, std::move(r)); })
      .def("to_json", &serialize_corpus)
      .def_static("from_json", &parse_corpus);
  m.def("load_corpus", &load_corpus, py::arg("path"));

  py::class_<WordVectorTable>(m, "WordVectorTable")
      .def_static("parse", &WordVectorTable::parse, py::arg("text"))
      .def_static("load", &WordVectorTable::load, py::arg("path"))
      .def_property_readonly("dimension", &WordVectorTable::dimension)
      .def("__len__", &WordVectorTable::size)
      .def("__contains__", [](const WordVectorTable& t, const std::string& w) { return t.find(w) != nullptr; })
      .def("vector", [](const WordVectorTable& t, const std::string& w) -> std::optional<std::vector<double>> {
        const auto* v = t.find(w);
        if (!v) return std::nullopt;
        return *v;
      });
  m.def("word_similarity", &word_similarity, py::arg("table"), py::arg("a"), py::arg("b"));

  py::class_<AssignConfig>(m, "AssignConfig")
      .def(py::init([](double tau, double prefilter, std::optional<std::vector<std::pair<double, double>>> bands) {
             AssignConfig cfg;
             cfg.tau = tau;
             cfg.rounds.handshape_prefilter = prefilter;
             if (bands) {
               cfg.rounds.bands.clear();
               for (auto [lo, hi] : *bands) cfg.rounds.bands.push_back({lo, hi});
             }
             cfg.validate();
             return cfg;
           }),
           py::arg("tau") = 0.3, py::arg("handshape_prefilter") = 0.8, py::arg("bands") = py::none())
      .def_readonly("tau", &AssignConfig::tau)
      .def_property_readonly("handshape_prefilter", [](const AssignConfig& c) { return c.rounds.handshape_prefilter; })
      .def_property_readonly("bands", [](const AssignConfig& c) {
        std::vector<std::pair<double, double>> out;
        for (const Band& b : c.rounds.bands) out.emplace_back(b.lower, b.upper);
        return out;
      });

  py::class_<Neighbor>(m, "Neighbor")
      .def_readonly("record_id", &Neighbor::record_id)
      .def_readonly("congruency", &Neighbor::congruency);
  m.def("find_neighbors",
        [](const SubLexicalProfile& target, const Corpus& corpus, std::size_t round, const AssignConfig& cfg) {
          return find_neighbors(target, corpus, round, cfg.rounds).entries;
        },
        py::arg("target"), py::arg("corpus"), py::arg("round"), py::arg("config") = AssignConfig{});

  py::class_<Assigned>(m, "Assigned")
      .def_readonly("rating", &Assigned::rating)
      .def_readonly("neighbor_id", &Assigned::neighbor_id)
      .def_readonly("round", &Assigned::round_index)
      .def_readonly("word_similarity", &Assigned::word_similarity)
      .def_readonly("congruency_total", &Assigned::congruency_total);
  py::class_<Unassigned>(m, "Unassigned")
      .def_readonly("rounds_exhausted", &Unassigned::rounds_exhausted)
      .def_readonly("candidates_tested", &Unassigned::candidates_tested);
  m.def("assign",
        [](const SubLexicalProfile& target, const std::string& word, const Corpus& corpus,
           const WordVectorTable& table, const AssignConfig& cfg) {
          return result_to_py(assign(target, word, corpus, table, cfg));
        },
        py::arg("target"), py::arg("word"), py::arg("corpus"), py::arg("table"), py::arg("config") = AssignConfig{});

  py::class_<EvalReport>(m, "EvalReport")
      .def_readonly("n_targets", &EvalReport::n_targets)
      .def_readonly("n_unassigned", &EvalReport::n_unassigned)
      .def_readonly("n_scored", &EvalReport::n_scored)
      .def_readonly("n_correct", &EvalReport::n_correct)
      .def_readonly("accuracy", &EvalReport::accuracy)
      .def("to_json", &report_to_json)
      .def("table", &report_to_table);
  m.def("score",
        [](const std::map<std::string, std::optional<double>>& automatic, const ManualRatings& manual,
           double tolerance) {
          std::vector<AssignmentRecord> rows;
          for (const auto& [id, rating] : automatic) {
            AssignmentRecord r{id, "", {}};
            if (rating) r.result = Assigned{*rating, "", 0, 0.0, 0.0};
            else r.result = Unassigned{};
            rows.push_back(std::move(r));
          }
          return score(rows, manual, tolerance);
        },
        py::arg("automatic"), py::arg("manual"), py::arg("tolerance") = 1.0,
        "automatic maps gesture id to an assigned rating, or None when unassigned.");

  m.def("run_cli",
        [](std::vector<std::string> args) {
          args.insert(args.begin(), "iconrate");
          std::ostringstream out, err;
          const int code = cli::run(args, out, err);
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
