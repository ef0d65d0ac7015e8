#ifndef CHORDSPACE_IO_HPP
#define CHORDSPACE_IO_HPP

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "chordspace/algebra.hpp"
#include "chordspace/diagram.hpp"
#include "chordspace/linalg.hpp"
#include "chordspace/realisability.hpp"
#include "chordspace/relations.hpp"
#include "chordspace/weights.hpp"

namespace chordspace {

using json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.3.0";
inline constexpr const char* kFramingConvention = "fixed across the four 4T terms";

// Diagrams: { "n", "pairing", "framing" } with framing omitted when unframed.
json diagram_record(const MatchingWord& d);
ChordDiagram chord_diagram_from_record(const json& record);

// Relations: { "terms": [{ "diagram", "coeff" }], "origin": {...} }.
template <class Diagram>
json relation_record(const RelationVector<Diagram>& r);
template <class Diagram>
json relation_records(const std::vector<RelationVector<Diagram>>& relations);

// Schema file: { "name", "signs": { "i,fc,fd": +-1 } }.
json schema_record(const SignSchema& schema);
SignSchema schema_from_record(const json& record);
/// "uniform", "mask-XYZ"/hex mask, or a path to a schema JSON file.
SignSchema resolve_schema(const std::string& text);

/// "trivial", "single-class", or a path to { "mode": ... }.
std::unique_ptr<RealisabilityModel> resolve_model(const std::string& text);

// Weight tables: { "n", "framed", "domain", "model", "values": { "WORD|FRAMING": "p/q" } }.
json weight_table_record(const WeightTable& table);
WeightTable weight_table_from_record(const json& record);

json report_record(const WellDefinedReport& report);
json report_record(const CommutatorReport& report);
json report_record(const PhiReport& report);
json report_record(const SchemaSearchReport& report);
json report_record(const LemmaReport& report);
json report_record(const ValidationReport& report);
json report_record(const RestrictedDimension& dims);

/*
 * Provenance block attached to every report. Everything in it is a function of
 * the inputs, so equal parameters give byte-identical output; wall-clock timing
 * is kept out of the JSON on purpose and reported separately.
 */
struct RunManifest {
  std::string command;
  json parameters = json::object();
  json fingerprints = json::object();
  std::string version = kToolVersion;

  /// Adds "manifest" (with "result_digest" over `result`) to `result`.
  json attach(json result) const;
};

/// Stable text rendering of a JSON document (two-space indent, trailing newline).
std::string dump(const json& doc);

// Basis cache: one JSON file per (order, relation fingerprint, field).
struct BasisCacheKey {
  std::size_t order = 0;
  bool framed = false;
  std::string fingerprint;
  Field field = Field::rational;

  std::string file_name() const;
};

void save_basis(const std::filesystem::path& dir, const BasisCacheKey& key,
                const QuotientBasis<ChordDiagram>& basis);
/// Empty if the file is missing or was written for a different key or version.
std::optional<QuotientBasis<ChordDiagram>> load_basis(const std::filesystem::path& dir,
                                                      const BasisCacheKey& key);

enum class RenderFormat { dot, tikz, svg };
RenderFormat parse_render_format(std::string_view text);

/// Circle with 2n marked points; framing-1 chords dashed, framing-0 solid.
std::string render_dot(const ChordDiagram& d);
std::string render_tikz(const ChordDiagram& d);
/// Pipes render_dot through Graphviz `dot -Tsvg`. Throws std::runtime_error when unavailable.
std::string render_svg(const ChordDiagram& d);

}  // namespace chordspace

#endif  // CHORDSPACE_IO_HPP
