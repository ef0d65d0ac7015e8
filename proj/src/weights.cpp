#include "chordspace/weights.hpp"

#include <algorithm>

#include "chordspace/parallel.hpp"

namespace chordspace {

Rational WeightTable::value(const ChordDiagram& d) const {
  auto it = values.find(d);
  return it == values.end() ? Rational(0) : it->second;
}

Rational WeightTable::evaluate(const LinearCombination<ChordDiagram>& v) const {
  Rational total = 0;
  for (const auto& [d, c] : v.terms()) total += c * value(d);
  return total;
}

ValidationReport validate(const WeightTable& table, const RelationSpec& spec, Field field,
                          unsigned jobs) {
  if (spec.framed != table.framed) {
    throw StructuralError("weight table and relations disagree on framing");
  }
  if (table.model && !table.framed) {
    throw StructuralError("realisable-only tables must be framed");
  }
  for (const auto& [d, v] : table.values) {
    if (d.order() != table.order || d.framed() != table.framed) {
      throw StructuralError("weight table key " + d.encode() + " does not match the table");
    }
    if (table.model && !table.model->realisable(d)) {
      throw StructuralError("weight table key " + d.encode() + " is outside the realisable domain");
    }
  }

  ValidationReport report;
  report.order = table.order;
  report.relations = spec.describe();
  report.domain = table.domain();
  const auto relations = generate_relations(table.order, spec, jobs);

  enum class Outcome { pass, fail, skip, partial };
  struct Checked {
    Outcome outcome = Outcome::pass;
    Rational residual;
  };
  const auto results = parallel_map(relations.size(), jobs, [&](std::size_t i) {
    const auto& r = relations[i];
    Checked c;
    if (table.model) {
      const auto inside = std::count_if(r.placements.begin(), r.placements.end(),
                                        [&](const ChordDiagram& d) { return table.model->realisable(d); });
      if (inside == 0) {
        c.outcome = Outcome::skip;
        return c;
      }
      if (inside != static_cast<long>(r.placements.size())) {
        c.outcome = Outcome::partial;
        return c;
      }
    }
    c.residual = table.evaluate(r.terms);
    const bool zero = field == Field::rational ? c.residual == 0 : to_gf2(c.residual) == 0;
    c.outcome = zero ? Outcome::pass : Outcome::fail;
    return c;
  });

  for (std::size_t i = 0; i < relations.size(); ++i) {
    switch (results[i].outcome) {
      case Outcome::pass:
        ++report.checked;
        break;
      case Outcome::fail:
        ++report.checked;
        report.violations.push_back(
            {relations[i].origin, format_combination(relations[i].terms), results[i].residual});
        break;
      case Outcome::skip:
        ++report.skipped;
        break;
      case Outcome::partial:
        ++report.partial_quadruples;
        break;
    }
  }
  return report;
}

WeightSpace weight_space(std::size_t n, const RelationSpec& spec, Field field,
                         std::shared_ptr<const RealisabilityModel> model, unsigned jobs) {
  auto relations = generate_relations(n, spec, jobs);
  std::vector<ChordDiagram> columns;
  if (model) {
    if (!spec.framed) throw StructuralError("realisable-only weight spaces must be framed");
    columns = realisable_set(n, *model);
    relations = restrict_relations(relations, *model);
  } else {
    columns = enumerate_diagrams(n, spec.framed);
  }
  const QuotientBasis<ChordDiagram> quotient(n, columns, relations, field);

  WeightSpace space;
  space.order = n;
  space.field = field;
  space.basis = quotient.basis();
  space.functionals.resize(space.basis.size());
  for (auto& f : space.functionals) {
    f.order = n;
    f.framed = spec.framed;
    f.model = model;
  }
  std::map<ChordDiagram, std::size_t> position;
  for (std::size_t k = 0; k < space.basis.size(); ++k) position.emplace(space.basis[k], k);
  for (const ChordDiagram& d : columns) {
    const auto normal = quotient.reduce(LinearCombination<ChordDiagram>(d));
    for (const auto& [b, c] : normal.terms()) {
      space.functionals[position.at(b)].values.emplace(d, c);
    }
  }
  return space;
}

WeightTable forget_framing(const WeightTable& unframed) {
  if (unframed.framed) throw StructuralError("forget_framing expects an unframed table");
  WeightTable out;
  out.order = unframed.order;
  out.framed = true;
  for (const ChordDiagram& d : enumerate_framed_diagrams(unframed.order)) {
    const Rational v = unframed.value(forget_framing(d));
    if (v != 0) out.values.emplace(d, v);
  }
  return out;
}

}  // namespace chordspace
