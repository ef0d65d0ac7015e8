#include "chordspace/io.hpp"

#include <fstream>
#include <sstream>

#include "chordspace/digest.hpp"

namespace chordspace {

namespace {

constexpr int kCacheVersion = 1;

json origin_record(const RelationOrigin& o) {
  json out = {{"kind", to_string(o.kind)}, {"base", o.base}};
  if (o.kind == RelationKind::four_term) {
    out["moving_point"] = o.moving_point;
    out["fixed_chord"] = o.fixed_chord;
    out["framings"] = {o.moving_framing, o.fixed_framing};
  }
  return out;
}

std::string sign_key(int term, int moving, int fixed) {
  return std::to_string(term) + "," + std::to_string(moving) + "," + std::to_string(fixed);
}

json mask_list(const std::vector<unsigned>& masks) {
  json out = json::array();
  for (unsigned m : masks) out.push_back(SignSchema::from_flip_mask(m, m == 0 ? "uniform" : "").name());
  return out;
}

}  // namespace

json diagram_record(const MatchingWord& d) {
  json out = {{"n", d.order()}, {"pairing", d.pairing()}};
  if (d.framed()) {
    json bits = json::array();
    for (Bit b : d.framing()) bits.push_back(static_cast<int>(b));
    out["framing"] = std::move(bits);
  }
  out["word"] = d.encode();
  return out;
}

ChordDiagram chord_diagram_from_record(const json& record) {
  try {
    const auto pairing = record.at("pairing").get<std::vector<int>>();
    std::vector<Bit> framing;
    const bool framed = record.contains("framing");
    if (framed) {
      for (int b : record.at("framing").get<std::vector<int>>()) {
        if (b != 0 && b != 1) throw StructuralError("framing entries must be 0 or 1");
        framing.push_back(static_cast<Bit>(b));
      }
    }
    ChordDiagram d = ChordDiagram::from_pairing(pairing, framing, framed);
    if (record.contains("n") && record.at("n").get<std::size_t>() != d.order()) {
      throw StructuralError("record order does not match its pairing");
    }
    return d;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed diagram record: ") + e.what());
  }
}

template <class Diagram>
json relation_record(const RelationVector<Diagram>& r) {
  json terms = json::array();
  for (const auto& [d, c] : r.terms.terms()) {
    terms.push_back({{"diagram", d.encode()}, {"coeff", c.get_str()}});
  }
  return {{"terms", std::move(terms)}, {"origin", origin_record(r.origin)}};
}

template <class Diagram>
json relation_records(const std::vector<RelationVector<Diagram>>& relations) {
  json out = json::array();
  for (const auto& r : relations) out.push_back(relation_record(r));
  return out;
}

template json relation_record(const CircleRelation&);
template json relation_record(const ArcRelation&);
template json relation_records(const std::vector<CircleRelation>&);
template json relation_records(const std::vector<ArcRelation>&);

json schema_record(const SignSchema& schema) {
  json signs = json::object();
  for (int term = 1; term <= SignSchema::kTerms; ++term) {
    for (int moving = 0; moving <= 1; ++moving) {
      for (int fixed = 0; fixed <= 1; ++fixed) {
        signs[sign_key(term, moving, fixed)] =
            schema.sign(term, static_cast<Bit>(moving), static_cast<Bit>(fixed));
      }
    }
  }
  return {{"name", schema.name()}, {"signs", std::move(signs)}};
}

SignSchema schema_from_record(const json& record) {
  try {
    std::array<int, 16> table{};
    const json& signs = record.at("signs");
    for (int term = 1; term <= SignSchema::kTerms; ++term) {
      for (int moving = 0; moving <= 1; ++moving) {
        for (int fixed = 0; fixed <= 1; ++fixed) {
          table[static_cast<std::size_t>((term - 1) * 4 + moving * 2 + fixed)] =
              signs.at(sign_key(term, moving, fixed)).get<int>();
        }
      }
    }
    return SignSchema::from_table(record.value("name", std::string("custom")), table);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed schema record: ") + e.what());
  }
}

std::unique_ptr<RealisabilityModel> resolve_model(const std::string& text) {
  if (text == "trivial" || text == "single-class") return make_model(text);
  std::ifstream in(text);
  if (!in) throw StructuralError("unknown model \"" + text + "\" (not a mode or file)");
  try {
    return make_model(json::parse(in).at("mode").get<std::string>());
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed model file: ") + e.what());
  }
}

SignSchema resolve_schema(const std::string& text) {
  if (text == "uniform") return SignSchema::uniform();
  std::string hex;
  if (text.rfind("mask-", 0) == 0) hex = text.substr(5);
  if (text.rfind("0x", 0) == 0) hex = text.substr(2);
  if (!hex.empty()) {
    std::size_t used = 0;
    unsigned long mask = 0;
    try {
      mask = std::stoul(hex, &used, 16);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != hex.size()) throw StructuralError("malformed schema mask \"" + text + "\"");
    return mask == 0 ? SignSchema::uniform() : SignSchema::from_flip_mask(static_cast<unsigned>(mask));
  }
  std::ifstream in(text);
  if (!in) throw StructuralError("unknown schema \"" + text + "\" (not a name, mask or file)");
  try {
    return schema_from_record(json::parse(in));
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("schema file is not valid JSON: ") + e.what());
  }
}

json weight_table_record(const WeightTable& table) {
  json values = json::object();
  for (const auto& [d, v] : table.values) values[d.encode()] = v.get_str();
  json out = {{"n", table.order}, {"framed", table.framed}, {"domain", table.domain()}};
  out["model"] = table.model ? json(table.model->mode()) : json(nullptr);
  out["values"] = std::move(values);
  return out;
}

WeightTable weight_table_from_record(const json& record) {
  try {
    WeightTable table;
    table.order = record.at("n").get<std::size_t>();
    const std::string domain = record.value("domain", std::string("all"));
    if (domain == "realisable") {
      if (!record.contains("model") || record.at("model").is_null()) {
        throw StructuralError("realisable-only tables need a model");
      }
      table.model = make_model(record.at("model").get<std::string>());
    } else if (domain != "all") {
      throw StructuralError("unknown weight table domain \"" + domain + "\"");
    }
    bool framed_seen = false;
    for (const auto& [key, value] : record.at("values").items()) {
      ChordDiagram d = parse_chord_diagram(key);
      if (!framed_seen) {
        table.framed = d.framed();
        framed_seen = true;
      }
      if (d.order() != table.order || d.framed() != table.framed) {
        throw StructuralError("weight table key " + key + " has the wrong order or framing");
      }
      const Rational v = value.is_number_integer() ? Rational(value.get<long>())
                                                   : parse_rational(value.get<std::string>());
      table.values[d] += v;
    }
    if (record.contains("framed")) {
      const bool framed = record.at("framed").get<bool>();
      if (framed_seen && framed != table.framed) {
        throw StructuralError("weight table \"framed\" flag contradicts its keys");
      }
      table.framed = framed;
    }
    return table;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed weight table: ") + e.what());
  }
}

json report_record(const WellDefinedReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures) {
    failures.push_back({{"a", f.a}, {"b", f.b}, {"break_a", f.break_a}, {"break_b", f.break_b},
                        {"product", f.product}, {"reference", f.reference}});
  }
  return {{"mode", r.framed ? "framed" : "unframed"},
          {"order_pair", {r.order_a, r.order_b}},
          {"relations", r.relations},
          {"field", to_string(r.field)},
          {"counts",
           {{"pairs", r.pairs},
            {"products", r.products},
            {"failing_pairs", r.failing_pairs},
            {"failures", r.failures.size()}}},
          {"failures", std::move(failures)}};
}

json report_record(const CommutatorReport& r) {
  json witnesses = json::array();
  for (const auto& w : r.witnesses) {
    witnesses.push_back({{"a", w.a}, {"b", w.b}, {"ab", w.ab}, {"ba", w.ba}});
  }
  return {{"mode", std::string(r.framed ? "framed" : "unframed") + " " + to_string(r.space)},
          {"order_pair", {r.order_a, r.order_b}},
          {"relations", r.relations},
          {"field", to_string(r.field)},
          {"convention_dependent", r.convention_dependent},
          {"counts",
           {{"pairs", r.pairs}, {"commuting", r.commuting}, {"non_commuting", r.non_commuting}}},
          {"failures", std::move(witnesses)},
          {"note", "experimental evidence; not a proof either way"}};
}

json report_record(const PhiReport& r) {
  return {{"mode", "phi-iso"},
          {"order", r.order},
          {"schema_a", r.schema_a},
          {"schema_b", r.schema_b},
          {"field", to_string(r.field)},
          {"counts",
           {{"generators", r.generators},
            {"rank_a", r.rank_a},
            {"rank_b", r.rank_b},
            {"outside_span", r.outside_span}}},
          {"framings", kFramingConvention},
          {"holds", r.holds}};
}

json report_record(const SchemaSearchReport& r) {
  json levels = json::array();
  for (std::size_t k = 0; k < r.levels.size(); ++k) {
    const auto& level = r.levels[k];
    json entry = {{"order", level.order}};
    if (k == 0) {
      entry["span_classes"] = level.span_classes;
      entry["intertwined_pairs"] = level.intertwined_pairs;
    }
    entry["survivors"] = level.with_uniform.size();
    entry["intertwined_with_uniform"] = mask_list(level.with_uniform);
    levels.push_back(std::move(entry));
  }
  return {{"mode", "schema-search"},
          {"field", to_string(r.field)},
          {"schemas", 1U << SignSchema::kFreeBits},
          {"levels", std::move(levels)},
          {"framings", kFramingConvention},
          {"stable", mask_list(r.stable)},
          {"all_stable", r.all_stable},
          {"starred", r.starred.empty() ? json(nullptr) : json(r.starred)}};
}

json report_record(const LemmaReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"origin", origin_record(v.origin)},
                          {"placements", v.placements},
                          {"realisable", v.realisable}});
  }
  return {{"mode", "lemma-4t"},
          {"model", r.model},
          {"model_note", "arc-labeling model of realisability"},
          {"schema", r.schema},
          {"order", r.order},
          {"counts",
           {{"quadruples", r.quadruples},
            {"all_realisable", r.all_realisable},
            {"none_realisable", r.none_realisable},
            {"violations", r.violations.size()}}},
          {"failures", std::move(violations)}};
}

json report_record(const ValidationReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"origin", origin_record(v.origin)},
                          {"relation", v.relation},
                          {"residual", v.residual.get_str()}});
  }
  return {{"mode", "validate"},
          {"order", r.order},
          {"relations", r.relations},
          {"domain", r.domain},
          {"counts",
           {{"checked", r.checked},
            {"skipped", r.skipped},
            {"partial_quadruples", r.partial_quadruples},
            {"violations", r.violations.size()}}},
          {"failures", std::move(violations)},
          {"passed", r.passed()}};
}

json report_record(const RestrictedDimension& d) {
  return {{"n", d.order},
          {"diagrams", d.columns},
          {"relations", d.relations},
          {"rank", d.rank},
          {"dim", d.dimension},
          {"lemma_holds", d.lemma_holds}};
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

json RunManifest::attach(json result) const {
  json manifest = {{"command", command},
                   {"parameters", parameters},
                   {"fingerprints", fingerprints},
                   {"tool_version", version},
                   {"result_digest", sha256_hex(result.dump())}};
  result["manifest"] = std::move(manifest);
  return result;
}

std::string BasisCacheKey::file_name() const {
  return "basis-n" + std::to_string(order) + (framed ? "-framed-" : "-unframed-") +
         to_string(field) + "-" + fingerprint.substr(0, 16) + ".json";
}

void save_basis(const std::filesystem::path& dir, const BasisCacheKey& key,
                const QuotientBasis<ChordDiagram>& basis) {
  json columns = json::array();
  for (const auto& d : basis.columns()) columns.push_back(d.encode());
  json rows = json::array();
  if (const auto* e = std::get_if<RationalEchelon>(&basis.echelon())) {
    for (const auto& [pivot, row] : e->rows()) {
      json entries = json::array();
      for (const auto& [c, v] : row) entries.push_back({c, v.get_str()});
      rows.push_back(std::move(entries));
    }
  } else {
    for (const auto& [pivot, row] : std::get<Gf2Echelon>(basis.echelon()).rows()) {
      json entries = json::array();
      for (std::size_t c = 0; c <= pivot; ++c) {
        if (row->test(c)) entries.push_back(c);
      }
      rows.push_back(std::move(entries));
    }
  }
  const json doc = {{"version", kCacheVersion},
                    {"order", key.order},
                    {"framed", key.framed},
                    {"field", to_string(key.field)},
                    {"fingerprint", key.fingerprint},
                    {"columns", std::move(columns)},
                    {"rank", basis.rank()},
                    {"rows", std::move(rows)}};
  std::filesystem::create_directories(dir);
  const auto target = dir / key.file_name();
  const auto temp = dir / (key.file_name() + ".tmp");
  {
    std::ofstream out(temp);
    out << doc.dump();
  }
  std::filesystem::rename(temp, target);
}

std::optional<QuotientBasis<ChordDiagram>> load_basis(const std::filesystem::path& dir,
                                                      const BasisCacheKey& key) {
  std::ifstream in(dir / key.file_name());
  if (!in) return std::nullopt;
  json doc;
  try {
    doc = json::parse(in);
    if (doc.at("version").get<int>() != kCacheVersion ||
        doc.at("order").get<std::size_t>() != key.order ||
        doc.at("framed").get<bool>() != key.framed ||
        doc.at("field").get<std::string>() != to_string(key.field) ||
        doc.at("fingerprint").get<std::string>() != key.fingerprint) {
      return std::nullopt;
    }
    std::vector<ChordDiagram> columns;
    for (const auto& text : doc.at("columns")) columns.push_back(parse_chord_diagram(text.get<std::string>()));
    QuotientBasis<ChordDiagram> basis(key.order, columns, key.field);
    for (const auto& row : doc.at("rows")) {
      LinearCombination<ChordDiagram> v;
      for (const auto& entry : row) {
        if (key.field == Field::rational) {
          v.add(columns.at(entry.at(0).get<std::size_t>()), parse_rational(entry.at(1).get<std::string>()));
        } else {
          v.add(columns.at(entry.get<std::size_t>()), 1);
        }
      }
      basis.add_relation(v);
    }
    if (basis.rank() != doc.at("rank").get<std::size_t>()) return std::nullopt;
    return basis;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace chordspace
