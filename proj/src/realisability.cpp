#include "chordspace/realisability.hpp"

#include <algorithm>
#include <set>

#include "chordspace/parallel.hpp"

namespace chordspace {

namespace {

// Column 0 is the right-hand side, column k+1 is arc k.
Gf2Echelon labeling_system(const ChordDiagram& diagram, bool knot_trivial) {
  const std::size_t arcs = diagram.points();
  Gf2Echelon system(arcs + 1);
  const auto halves = half_incidence(diagram);
  for (std::size_t chord = 0; chord < halves.size(); ++chord) {
    BitRow row(arcs + 1);
    for (std::size_t k = 0; k < arcs; ++k) {
      if (halves[chord].test(k)) row.set(k + 1);
    }
    if (diagram.framing()[chord] != 0) row.set(0);
    system.insert(std::move(row));
  }
  if (knot_trivial) {
    BitRow total(arcs + 1);
    for (std::size_t k = 0; k < arcs; ++k) total.set(k + 1);
    system.insert(std::move(total));
  }
  return system;
}

}  // namespace

bool HomologyTrivialModel::realisable(const ChordDiagram& diagram) const {
  return diagram.odd_chords() == 0;
}

bool SingleClassModel::realisable(const ChordDiagram& diagram) const {
  return arc_labeling(diagram, knot_trivial_).has_value();
}

std::unique_ptr<RealisabilityModel> make_model(std::string_view mode) {
  if (mode == "trivial" || mode == "homology-trivial") return std::make_unique<HomologyTrivialModel>();
  if (mode == "single-class") return std::make_unique<SingleClassModel>();
  throw StructuralError("unknown realisability model \"" + std::string(mode) +
                        "\" (expected trivial or single-class)");
}

std::vector<BitRow> half_incidence(const ChordDiagram& diagram, bool complementary) {
  const std::size_t arcs = diagram.points();
  const auto partner = diagram.pairing();
  std::vector<BitRow> rows(diagram.order(), BitRow(arcs));
  for (std::size_t i = 0; i < arcs; ++i) {
    const auto j = static_cast<std::size_t>(partner[i]);
    if (j < i) continue;
    // Points i < j: the designated half is arcs i .. j-1.
    BitRow& row = rows[diagram.labels()[i]];
    for (std::size_t k = 0; k < arcs; ++k) {
      const bool inside = k >= i && k < j;
      if (inside != complementary) row.set(k);
    }
  }
  return rows;
}

std::optional<std::vector<Bit>> arc_labeling(const ChordDiagram& diagram, bool knot_trivial) {
  const Gf2Echelon system = labeling_system(diagram, knot_trivial);
  if (system.is_pivot(0)) return std::nullopt;
  std::vector<Bit> x(diagram.points(), 0);
  for (const auto& [pivot, row] : system.rows()) {
    Bit value = row->test(0) ? 1 : 0;
    for (std::size_t c = 1; c < pivot; ++c) {
      if (row->test(c)) value ^= x[c - 1];
    }
    x[pivot - 1] = value;
  }
  return x;
}

std::vector<ChordDiagram> realisable_set(std::size_t n, const RealisabilityModel& model,
                                         std::uint64_t capacity) {
  std::vector<ChordDiagram> out;
  for (ChordDiagram& d : enumerate_framed_diagrams(n, capacity)) {
    if (model.realisable(d)) out.push_back(std::move(d));
  }
  return out;
}

LemmaReport lemma_4T_closure_check(std::size_t n, const SignSchema& schema,
                                   const RealisabilityModel& model, unsigned jobs) {
  LemmaReport report;
  report.model = model.mode();
  report.schema = schema.name();
  report.order = n;
  // Quadruples do not depend on the signs, and generators whose signed vector
  // cancels still carry a quadruple, so the unsigned skeleton is scanned.
  std::vector<CircleRelation> generators;
  {
    std::set<std::vector<ChordDiagram>> seen;
    for (auto& g : four_term_skeleton(n, true, jobs)) {
      auto key = g.placements;
      std::sort(key.begin(), key.end());
      if (seen.insert(std::move(key)).second) generators.push_back(std::move(g));
    }
  }
  report.quadruples = generators.size();
  struct Verdict {
    int status = 0;  // 1 all, 0 none, -1 mixed
    std::vector<bool> flags;
  };
  const auto verdicts = parallel_map(generators.size(), jobs, [&](std::size_t i) {
    Verdict v;
    for (const auto& d : generators[i].placements) v.flags.push_back(model.realisable(d));
    const auto yes = std::count(v.flags.begin(), v.flags.end(), true);
    v.status = yes == static_cast<long>(v.flags.size()) ? 1 : (yes == 0 ? 0 : -1);
    return v;
  });
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const Verdict& v = verdicts[i];
    if (v.status == 1) {
      ++report.all_realisable;
    } else if (v.status == 0) {
      ++report.none_realisable;
    } else {
      QuadrupleViolation violation;
      violation.origin = generators[i].origin;
      for (const auto& d : generators[i].placements) violation.placements.push_back(d.encode());
      violation.realisable = v.flags;
      report.violations.push_back(std::move(violation));
    }
  }
  return report;
}

std::vector<CircleRelation> restrict_relations(const std::vector<CircleRelation>& relations,
                                               const RealisabilityModel& model) {
  std::vector<CircleRelation> out;
  for (const auto& r : relations) {
    const bool inside = std::all_of(r.placements.begin(), r.placements.end(),
                                    [&](const ChordDiagram& d) { return model.realisable(d); });
    if (inside) out.push_back(r);
  }
  return out;
}

RestrictedDimension restricted_quotient_dim(std::size_t n, const RelationSpec& spec,
                                            const RealisabilityModel& model, Field field,
                                            unsigned jobs) {
  if (!spec.framed) throw StructuralError("restricted quotients are taken over framed diagrams");
  RestrictedDimension out;
  out.order = n;
  auto columns = realisable_set(n, model);
  const auto relations = restrict_relations(generate_relations(n, spec, jobs), model);
  if (spec.four_term) {
    out.lemma_holds = lemma_4T_closure_check(n, spec.schema, model, jobs).violations.empty();
  }
  out.columns = columns.size();
  out.relations = relations.size();
  const QuotientBasis<ChordDiagram> q(n, std::move(columns), relations, field);
  out.rank = q.rank();
  out.dimension = q.dimension();
  return out;
}

}  // namespace chordspace
