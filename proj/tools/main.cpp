#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chordspace/algebra.hpp"
#include "chordspace/digest.hpp"
#include "chordspace/io.hpp"
#include "chordspace/parallel.hpp"
#include "chordspace/realisability.hpp"
#include "chordspace/weights.hpp"

using namespace chordspace;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitViolated = 1;
constexpr int kExitInput = 2;
constexpr int kExitCapacity = 3;

struct Globals {
  unsigned jobs = 0;
  std::string cache_dir;
  std::uint64_t capacity = kDefaultCapacity;
  std::string output;
};

struct RelationOptions {
  bool framed = false;
  std::string relations = "4t";
  std::string schema = "uniform";
  std::string field = "q";
};

void add_relation_options(CLI::App* app, RelationOptions& o, bool with_framed = true) {
  if (with_framed) app->add_flag("--framed", o.framed, "Framed diagrams");
  app->add_option("--relations", o.relations, "Comma list of 4t, 1t, or none")->capture_default_str();
  app->add_option("--schema", o.schema, "uniform, mask-XYZ, 0xXYZ, starred, or a schema file")
      ->capture_default_str();
  app->add_option("--field", o.field, "q or gf2")->capture_default_str();
}

SignSchema schema_by_name(const std::string& name, unsigned jobs) {
  if (name != "starred") return resolve_schema(name);
  const auto search = schema_search({2, 3}, Field::rational, jobs);
  if (search.starred.empty()) throw StructuralError("the schema search found no starred schema");
  return resolve_schema(search.starred);
}

RelationSpec make_spec(const RelationOptions& o, unsigned jobs) {
  RelationSpec spec;
  spec.framed = o.framed;
  parse_relation_list(o.relations, spec);
  if (o.framed) spec.schema = schema_by_name(o.schema, jobs);
  return spec;
}

json relation_parameters(const RelationOptions& o, const RelationSpec& spec) {
  return {{"framed", o.framed},
          {"relations", spec.describe()},
          {"schema", o.framed ? json(spec.schema.name()) : json(nullptr)},
          {"field", to_string(parse_field(o.field))}};
}

// Verdict expectation for a check.
enum class Expect { pass, fail, any };

Expect parse_expect(const std::string& text) {
  if (text == "pass") return Expect::pass;
  if (text == "fail") return Expect::fail;
  if (text == "any") return Expect::any;
  throw StructuralError("unknown expectation \"" + text + "\"");
}

int verdict_exit(bool passed, Expect expect) {
  if (expect == Expect::any) return kExitPass;
  return passed == (expect == Expect::pass) ? kExitPass : kExitViolated;
}

class Runner {
 public:
  explicit Runner(const Globals& g) : g_(g), start_(std::chrono::steady_clock::now()) {}

  void emit(const std::string& text) const {
    if (g_.output.empty()) {
      std::cout << text;
      std::cout.flush();
      return;
    }
    std::ofstream out(g_.output);
    if (!out) throw StructuralError("cannot write " + g_.output);
    out << text;
  }

  void report(const RunManifest& manifest, json result) const { emit(dump(manifest.attach(std::move(result)))); }

  void summary(const std::string& line) const {
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    char buf[32];
    std::snprintf(buf, sizeof buf, " (%.2f s)", secs);
    std::cerr << line << buf << "\n";
  }

 private:
  const Globals& g_;
  std::chrono::steady_clock::time_point start_;
};

// --- enumerate ---------------------------------------------------------------

struct EnumerateOptions {
  std::size_t order = 0;
  bool framed = false;
  bool arc = false;
  std::string format = "text";
};

int run_enumerate(const Globals& g, const EnumerateOptions& o) {
  Runner run(g);
  std::vector<std::string> words;
  json records = json::array();
  if (o.arc) {
    for (const auto& d : enumerate_arc_diagrams(o.order, o.framed, g.capacity)) {
      words.push_back(d.encode());
      records.push_back(diagram_record(d));
    }
  } else {
    for (const auto& d : enumerate_diagrams(o.order, o.framed, g.capacity)) {
      words.push_back(d.encode());
      records.push_back(diagram_record(d));
    }
  }
  if (o.format == "json") {
    RunManifest manifest{"enumerate", {{"order", o.order}, {"framed", o.framed}, {"arc", o.arc}}};
    run.report(manifest, {{"mode", "enumerate"},
                          {"order", o.order},
                          {"framed", o.framed},
                          {"shape", o.arc ? "arc" : "circle"},
                          {"count", words.size()},
                          {"diagrams", std::move(records)}});
  } else {
    std::string text;
    for (const auto& w : words) text += w + "\n";
    run.emit(text);
  }
  return kExitPass;
}

// --- dims --------------------------------------------------------------------

struct DimsOptions {
  std::vector<std::size_t> orders{0};
  RelationOptions rel;
  std::string model;
  std::string format = "csv";
};

json dims_row(const Globals& g, std::size_t n, const RelationSpec& spec, Field field) {
  const auto relations = generate_relations(n, spec, g.jobs, g.capacity);
  const std::string fingerprint = relation_fingerprint(relations);
  const BasisCacheKey key{n, spec.framed, fingerprint, field};
  std::optional<QuotientBasis<ChordDiagram>> basis;
  if (!g.cache_dir.empty()) basis = load_basis(g.cache_dir, key);
  if (!basis) {
    basis = quotient_basis(n, spec.framed, relations, field, g.capacity);
    if (!g.cache_dir.empty()) save_basis(g.cache_dir, key, *basis);
  }
  return {{"n", n},
          {"diagrams", basis->columns().size()},
          {"relations", relations.size()},
          {"rank", basis->rank()},
          {"dim", basis->dimension()},
          {"fingerprint", fingerprint}};
}

int run_dims(const Globals& g, DimsOptions o) {
  Runner run(g);
  if (!o.model.empty()) o.rel.framed = true;
  const RelationSpec spec = make_spec(o.rel, g.jobs);
  const Field field = parse_field(o.rel.field);
  std::unique_ptr<RealisabilityModel> model;
  if (!o.model.empty()) model = resolve_model(o.model);

  json rows = json::array();
  for (std::size_t n : o.orders) {
    if (model) {
      json row = report_record(restricted_quotient_dim(n, spec, *model, field, g.jobs));
      rows.push_back(std::move(row));
    } else {
      rows.push_back(dims_row(g, n, spec, field));
    }
  }

  if (o.format == "json") {
    json params = relation_parameters(o.rel, spec);
    params["orders"] = o.orders;
    params["model"] = model ? json(model->mode()) : json(nullptr);
    RunManifest manifest{"dims", std::move(params)};
    for (const auto& row : rows) {
      if (row.contains("fingerprint")) {
        manifest.fingerprints[std::to_string(row["n"].get<std::size_t>())] = row["fingerprint"];
      }
    }
    run.report(manifest, {{"mode", "dims"},
                          {"relations", spec.describe()},
                          {"field", to_string(field)},
                          {"model", model ? json(model->mode()) : json(nullptr)},
                          {"rows", std::move(rows)}});
  } else {
    std::ostringstream out;
    out << "n,diagrams,relations,rank,dim\n";
    for (const auto& row : rows) {
      out << row["n"].get<std::size_t>() << "," << row["diagrams"].get<std::size_t>() << ","
          << row["relations"].get<std::size_t>() << "," << row["rank"].get<std::size_t>() << ","
          << row["dim"].get<std::size_t>() << "\n";
    }
    run.emit(out.str());
  }
  return kExitPass;
}

// --- relations ---------------------------------------------------------------

struct RelationsOptions {
  std::size_t order = 0;
  RelationOptions rel;
  bool arc = false;
  std::string format = "text";
};

template <class Diagram>
int emit_relations(const Runner& run, const RelationsOptions& o, const RelationSpec& spec,
                   const std::vector<RelationVector<Diagram>>& relations) {
  if (o.format != "json") {
    run.emit(relation_file(relations));
    return kExitPass;
  }
  const std::string fingerprint = relation_fingerprint(relations);
  json params = relation_parameters(o.rel, spec);
  params["order"] = o.order;
  params["arc"] = o.arc;
  RunManifest manifest{"relations", std::move(params), {{"relations", fingerprint}}};
  run.report(manifest, {{"mode", "relations"},
                        {"order", o.order},
                        {"shape", o.arc ? "arc" : "circle"},
                        {"relations", spec.describe()},
                        {"framings", spec.framed ? json(kFramingConvention) : json(nullptr)},
                        {"count", relations.size()},
                        {"fingerprint", fingerprint},
                        {"vectors", relation_records(relations)}});
  return kExitPass;
}

int run_relations(const Globals& g, const RelationsOptions& o) {
  Runner run(g);
  const RelationSpec spec = make_spec(o.rel, g.jobs);
  if (o.arc) return emit_relations(run, o, spec, generate_arc_relations(o.order, spec, g.jobs, g.capacity));
  return emit_relations(run, o, spec, generate_relations(o.order, spec, g.jobs, g.capacity));
}

// --- check -------------------------------------------------------------------

struct CheckOptions {
  std::size_t order = 3;
  std::vector<std::size_t> orders;
  RelationOptions rel;
  std::string schema_a = "uniform";
  std::string schema_b = "uniform";
  std::string model = "single-class";
  std::string space = "circle";
  bool arc = false;
  std::string expect;
};

std::pair<std::size_t, std::size_t> order_pair(const CheckOptions& o) {
  if (o.orders.size() != 2) throw StructuralError("--orders takes exactly two orders, e.g. 2,2");
  return {o.orders[0], o.orders[1]};
}

int run_phi(const Globals& g, const CheckOptions& o) {
  Runner run(g);
  const SignSchema a = schema_by_name(o.schema_a, g.jobs);
  const SignSchema b = schema_by_name(o.schema_b, g.jobs);
  const Field field = parse_field(o.rel.field);
  const PhiReport r = o.arc ? check_phi_intertwine_arc(a, b, o.order, field, g.jobs)
                            : check_phi_intertwine(a, b, o.order, field, g.jobs);
  RunManifest manifest{"check phi-iso",
                       {{"order", o.order},
                        {"schema_a", a.name()},
                        {"schema_b", b.name()},
                        {"field", to_string(field)},
                        {"arc", o.arc}}};
  run.report(manifest, report_record(r));
  const Expect expect = o.expect.empty() ? Expect::pass : parse_expect(o.expect);
  run.summary("phi-iso " + a.name() + " -> " + b.name() + " n=" + std::to_string(o.order) + ": " +
              (r.holds ? "intertwines" : "does not intertwine") + ", " +
              std::to_string(r.outside_span) + " generators outside the target span");
  return verdict_exit(r.holds, expect);
}

int run_well_defined(const Globals& g, const CheckOptions& o) {
  Runner run(g);
  const auto [na, nb] = order_pair(o);
  const RelationSpec spec = make_spec(o.rel, g.jobs);
  const Field field = parse_field(o.rel.field);
  const auto r = well_defined_check(na, nb, spec, field, g.jobs, g.capacity);
  json params = relation_parameters(o.rel, spec);
  params["orders"] = o.orders;
  RunManifest manifest{"check well-defined", std::move(params), {{"relations", r.fingerprint}}};
  run.report(manifest, report_record(r));
  const Expect expect = o.expect.empty() ? Expect::pass : parse_expect(o.expect);
  run.summary("well-defined " + std::to_string(na) + "," + std::to_string(nb) + " modulo " +
              spec.describe() + ": " + std::to_string(r.failures.size()) + " failures in " +
              std::to_string(r.products) + " products");
  return verdict_exit(r.failures.empty(), expect);
}

int run_commutativity(const Globals& g, const CheckOptions& o) {
  Runner run(g);
  const auto [na, nb] = order_pair(o);
  const RelationSpec spec = make_spec(o.rel, g.jobs);
  const Field field = parse_field(o.rel.field);
  SpaceShape space;
  if (o.space == "arc") {
    space = SpaceShape::arc;
  } else if (o.space == "circle") {
    space = SpaceShape::circle;
  } else {
    throw StructuralError("unknown space \"" + o.space + "\"");
  }
  const auto r = commutator_check(na, nb, spec, field, space, g.jobs, g.capacity);
  json params = relation_parameters(o.rel, spec);
  params["orders"] = o.orders;
  params["space"] = to_string(space);
  RunManifest manifest{"check commutativity", std::move(params), {{"relations", r.fingerprint}}};
  run.report(manifest, report_record(r));
  // Framed commutativity is an open question, so its default expectation is "any".
  const Expect expect =
      !o.expect.empty() ? parse_expect(o.expect) : (spec.framed ? Expect::any : Expect::pass);
  run.summary("commutativity " + std::string(spec.framed ? "framed " : "") + to_string(space) + " " +
              std::to_string(na) + "," + std::to_string(nb) + ": " + std::to_string(r.commuting) +
              " of " + std::to_string(r.pairs) + " pairs commute" +
              (r.convention_dependent ? " (convention dependent)" : ""));
  return verdict_exit(r.non_commuting == 0, expect);
}

int run_lemma(const Globals& g, const CheckOptions& o) {
  Runner run(g);
  const SignSchema schema = schema_by_name(o.rel.schema, g.jobs);
  const auto model = resolve_model(o.model);
  const auto r = lemma_4T_closure_check(o.order, schema, *model, g.jobs);
  RunManifest manifest{"check lemma-4t",
                       {{"order", o.order}, {"model", model->mode()}, {"schema", schema.name()}}};
  run.report(manifest, report_record(r));
  const Expect expect = o.expect.empty() ? Expect::pass : parse_expect(o.expect);
  run.summary("lemma-4t n=" + std::to_string(o.order) + " " + model->mode() + ": " +
              std::to_string(r.violations.size()) + " violations in " +
              std::to_string(r.quadruples) + " quadruples");
  return verdict_exit(r.violations.empty(), expect);
}

int run_schema_search(const Globals& g, const CheckOptions& o) {
  Runner run(g);
  const std::vector<std::size_t> orders = o.orders.empty() ? std::vector<std::size_t>{2, 3} : o.orders;
  const Field field = parse_field(o.rel.field);
  const auto r = schema_search(orders, field, g.jobs);
  RunManifest manifest{"check schema-search", {{"orders", orders}, {"field", to_string(field)}}};
  run.report(manifest, report_record(r));
  const Expect expect = o.expect.empty() ? Expect::pass : parse_expect(o.expect);
  std::string line = "schema-search:";
  for (const auto& level : r.levels) {
    line += " n=" + std::to_string(level.order) + " " + std::to_string(level.with_uniform.size()) +
            " survivors;";
  }
  line += " starred " + (r.starred.empty() ? std::string("none") : r.starred);
  run.summary(line);
  return verdict_exit(!r.starred.empty(), expect);
}

// --- render ------------------------------------------------------------------

struct RenderOptions {
  std::vector<std::string> diagrams;
  std::string file;
  std::string format = "dot";
};

int run_render(const Globals& g, const RenderOptions& o) {
  Runner run(g);
  const RenderFormat format = parse_render_format(o.format);
  std::vector<std::string> inputs = o.diagrams;
  if (!o.file.empty()) {
    std::ifstream in(o.file);
    if (!in) throw StructuralError("cannot read " + o.file);
    for (std::string line; std::getline(in, line);) {
      if (!line.empty()) inputs.push_back(line);
    }
  }
  if (inputs.empty()) throw StructuralError("nothing to render; pass a diagram or --file");
  std::string text;
  for (const auto& word : inputs) {
    const ChordDiagram d = parse_chord_diagram(word);
    switch (format) {
      case RenderFormat::dot: text += render_dot(d); break;
      case RenderFormat::tikz: text += render_tikz(d); break;
      case RenderFormat::svg: text += render_svg(d); break;
    }
  }
  run.emit(text);
  return kExitPass;
}

// --- validate / weights ------------------------------------------------------

struct ValidateOptions {
  std::string table;
  RelationOptions rel;
  std::string expect;
};

int run_validate(const Globals& g, ValidateOptions o) {
  Runner run(g);
  std::ifstream in(o.table);
  if (!in) throw StructuralError("cannot read " + o.table);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("weight table is not valid JSON: ") + e.what());
  }
  const WeightTable table = weight_table_from_record(doc);
  o.rel.framed = table.framed;
  const RelationSpec spec = make_spec(o.rel, g.jobs);
  const Field field = parse_field(o.rel.field);
  const auto r = validate(table, spec, field, g.jobs);
  json params = relation_parameters(o.rel, spec);
  params["order"] = table.order;
  params["domain"] = table.domain();
  params["table_digest"] = sha256_hex(weight_table_record(table).dump());
  RunManifest manifest{"validate", std::move(params)};
  run.report(manifest, report_record(r));
  const Expect expect = o.expect.empty() ? Expect::pass : parse_expect(o.expect);
  run.summary("validate n=" + std::to_string(table.order) + " " + spec.describe() + ": " +
              std::to_string(r.violations.size()) + " violations, " + std::to_string(r.checked) +
              " checked, " + std::to_string(r.skipped) + " skipped, " +
              std::to_string(r.partial_quadruples) + " partial");
  return verdict_exit(r.passed(), expect);
}

struct WeightsOptions {
  std::size_t order = 0;
  RelationOptions rel;
  std::string model;
  int functional = -1;
};

int run_weights(const Globals& g, WeightsOptions o) {
  Runner run(g);
  if (!o.model.empty()) o.rel.framed = true;
  const RelationSpec spec = make_spec(o.rel, g.jobs);
  const Field field = parse_field(o.rel.field);
  std::shared_ptr<const RealisabilityModel> model;
  if (!o.model.empty()) model = resolve_model(o.model);
  const WeightSpace space = weight_space(o.order, spec, field, model, g.jobs);

  json params = relation_parameters(o.rel, spec);
  params["order"] = o.order;
  params["model"] = model ? json(model->mode()) : json(nullptr);
  if (o.functional >= 0) {
    if (static_cast<std::size_t>(o.functional) >= space.dimension()) {
      throw StructuralError("functional index out of range (dimension " +
                            std::to_string(space.dimension()) + ")");
    }
    run.emit(dump(weight_table_record(space.functionals[static_cast<std::size_t>(o.functional)])));
    return kExitPass;
  }
  json basis = json::array();
  for (const auto& d : space.basis) basis.push_back(d.encode());
  json functionals = json::array();
  for (const auto& t : space.functionals) functionals.push_back(weight_table_record(t));
  RunManifest manifest{"weights", std::move(params)};
  run.report(manifest, {{"mode", "weights"},
                        {"order", o.order},
                        {"relations", spec.describe()},
                        {"field", to_string(field)},
                        {"model", model ? json(model->mode()) : json(nullptr)},
                        {"dimension", space.dimension()},
                        {"basis", std::move(basis)},
                        {"functionals", std::move(functionals)}});
  run.summary("weights n=" + std::to_string(o.order) + " " + spec.describe() + ": dimension " +
              std::to_string(space.dimension()));
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chord diagram spaces: enumeration, relations, quotients and checks"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  Globals g;
  app.add_option("--jobs,-j", g.jobs, "Worker threads (0 = all cores)");
  app.add_option("--cache-dir", g.cache_dir, "Basis cache directory")->envname("CHORDSPACE_CACHE_DIR");
  app.add_option("--capacity", g.capacity, "Largest matching count to enumerate")->capture_default_str();
  app.add_option("--output,-o", g.output, "Write the result here instead of stdout");

  int status = kExitPass;

  EnumerateOptions enumerate;
  auto* cmd = app.add_subcommand("enumerate", "List canonical diagrams of one order");
  cmd->add_option("--order,-n", enumerate.order)->required();
  cmd->add_flag("--framed", enumerate.framed);
  cmd->add_flag("--arc", enumerate.arc, "Arc diagrams instead of chord diagrams");
  cmd->add_option("--format", enumerate.format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  cmd->callback([&] { status = run_enumerate(g, enumerate); });

  DimsOptions dims;
  cmd = app.add_subcommand("dims", "Quotient dimensions");
  cmd->add_option("--order,-n", dims.orders, "Orders, comma separated")->delimiter(',')->required();
  add_relation_options(cmd, dims.rel);
  cmd->add_option("--model", dims.model, "Restrict to realisable diagrams: trivial or single-class");
  cmd->add_option("--format", dims.format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  cmd->callback([&] { status = run_dims(g, dims); });

  RelationsOptions relations;
  cmd = app.add_subcommand("relations", "Generate a relation file");
  cmd->add_option("--order,-n", relations.order)->required();
  add_relation_options(cmd, relations.rel);
  cmd->add_flag("--arc", relations.arc, "Arc-diagram relations");
  cmd->add_option("--format", relations.format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  cmd->callback([&] { status = run_relations(g, relations); });

  auto* check = app.add_subcommand("check", "Run a verification check");
  check->require_subcommand(1);
  CheckOptions c;
  auto add_expect = [&c](CLI::App* sub) {
    sub->add_option("--expect", c.expect, "Expected verdict: pass, fail or any");
  };

  cmd = check->add_subcommand("phi-iso", "phi maps one framed relation span onto another");
  cmd->add_option("--schema-a", c.schema_a)->capture_default_str();
  cmd->add_option("--schema-b", c.schema_b)->capture_default_str();
  cmd->add_option("--order,-n", c.order)->capture_default_str();
  cmd->add_option("--field", c.rel.field)->capture_default_str();
  cmd->add_flag("--arc", c.arc);
  add_expect(cmd);
  cmd->callback([&] { status = run_phi(g, c); });

  cmd = check->add_subcommand("well-defined", "Circle product independent of the breaking points");
  cmd->add_option("--orders", c.orders, "Two orders, e.g. 2,2")->delimiter(',')->required();
  add_relation_options(cmd, c.rel);
  add_expect(cmd);
  cmd->callback([&] { status = run_well_defined(g, c); });

  cmd = check->add_subcommand("commutativity", "ab - ba in the relation span");
  cmd->add_option("--orders", c.orders, "Two orders, e.g. 1,2")->delimiter(',')->required();
  cmd->add_option("--space", c.space, "circle or arc")->capture_default_str();
  add_relation_options(cmd, c.rel);
  add_expect(cmd);
  cmd->callback([&] { status = run_commutativity(g, c); });

  cmd = check->add_subcommand("lemma-4t", "Realisability is all-or-none on 4T quadruples");
  cmd->add_option("--order,-n", c.order)->capture_default_str();
  cmd->add_option("--model", c.model, "trivial or single-class")->capture_default_str();
  cmd->add_option("--schema", c.rel.schema)->capture_default_str();
  add_expect(cmd);
  cmd->callback([&] { status = run_lemma(g, c); });

  cmd = check->add_subcommand("schema-search", "Sign schemas phi-intertwined with uniform");
  cmd->add_option("--orders", c.orders, "Search order, then re-test orders (default 2,3)")->delimiter(',');
  cmd->add_option("--field", c.rel.field)->capture_default_str();
  add_expect(cmd);
  cmd->callback([&] { status = run_schema_search(g, c); });

  RenderOptions render;
  cmd = app.add_subcommand("render", "Draw diagrams as DOT, TikZ or SVG");
  cmd->add_option("diagram", render.diagrams, "Encoded diagrams, e.g. ABAB|01");
  cmd->add_option("--file", render.file, "One encoded diagram per line");
  cmd->add_option("--format", render.format, "dot, tikz or svg-via-dot")->capture_default_str();
  cmd->callback([&] { status = run_render(g, render); });

  ValidateOptions validate_opts;
  cmd = app.add_subcommand("validate", "Check a weight table against the relations");
  cmd->add_option("--table", validate_opts.table)->required();
  add_relation_options(cmd, validate_opts.rel, false);
  add_expect(cmd);
  cmd->callback([&] { status = run_validate(g, validate_opts); });

  WeightsOptions weights;
  cmd = app.add_subcommand("weights", "Basis of weight systems dual to the quotient");
  cmd->add_option("--order,-n", weights.order)->required();
  add_relation_options(cmd, weights.rel);
  cmd->add_option("--model", weights.model, "Realisable-only domain: trivial or single-class");
  cmd->add_option("--functional", weights.functional, "Emit only functional k as a weight table");
  cmd->callback([&] { status = run_weights(g, weights); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInput;
  } catch (const CapacityError& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const StructuralError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return status;
}
