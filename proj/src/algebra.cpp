#include "chordspace/algebra.hpp"

#include <algorithm>
#include <map>

#include "chordspace/parallel.hpp"

namespace chordspace {

namespace {

std::size_t break_count(const MatchingWord& d) { return std::max<std::size_t>(1, d.points()); }

struct PairOutcome {
  std::size_t products = 0;
  std::vector<ProductFailure> failures;
};

// Canonical key of a relation span: its reduced row echelon form.
std::string span_key(const QuotientBasis<ChordDiagram>& q) {
  std::string key;
  if (const auto* e = std::get_if<RationalEchelon>(&q.echelon())) {
    for (const auto& [pivot, row] : e->rows()) {
      RationalEchelon::Row tail = row;
      tail.erase(pivot);
      key += std::to_string(pivot) + ":";
      for (const auto& [c, v] : e->reduce(std::move(tail))) {
        key += std::to_string(c) + "=" + v.get_str() + ",";
      }
      key += ";";
    }
  } else {
    const auto& g = std::get<Gf2Echelon>(q.echelon());
    for (const auto& [pivot, row] : g.rows()) {
      BitRow tail = *row;
      tail.flip(pivot);
      key += std::to_string(pivot) + ":";
      const BitRow reduced = g.reduce(std::move(tail));
      for (std::size_t c = 0; c < pivot; ++c) {
        if (reduced.test(c)) key += std::to_string(c) + ",";
      }
      key += ";";
    }
  }
  return key;
}

template <class Diagram>
std::vector<RelationVector<Diagram>> phi_image(const std::vector<RelationVector<Diagram>>& rels) {
  std::vector<RelationVector<Diagram>> out;
  out.reserve(rels.size());
  for (const auto& r : rels) out.push_back({phi(r.terms), r.origin, r.placements});
  return out;
}

template <class Diagram>
PhiReport phi_report(const SignSchema& a, const SignSchema& b, std::size_t n, Field field,
                     const QuotientBasis<Diagram>& qa, const QuotientBasis<Diagram>& qb,
                     const std::vector<RelationVector<Diagram>>& rels_a) {
  PhiReport report;
  report.schema_a = a.name();
  report.schema_b = b.name();
  report.order = n;
  report.field = field;
  report.generators = rels_a.size();
  report.rank_a = qa.rank();
  report.rank_b = qb.rank();
  for (const auto& r : rels_a) {
    if (!qb.in_span(phi(r.terms))) ++report.outside_span;
  }
  report.holds = report.outside_span == 0 && report.rank_a == report.rank_b;
  return report;
}

}  // namespace

std::string to_string(SpaceShape shape) { return shape == SpaceShape::arc ? "arc" : "circle"; }

ArcDiagram multiply_arc(const ArcDiagram& a, const ArcDiagram& b) {
  if (a.framed() != b.framed()) {
    throw StructuralError("cannot multiply framed and unframed arc diagrams");
  }
  RawWord raw;
  raw.framed = a.framed();
  const int shift = static_cast<int>(a.order());
  for (Label l : a.labels()) raw.labels.push_back(l);
  for (Label l : b.labels()) raw.labels.push_back(l + shift);
  raw.framing = a.framing();
  raw.framing.insert(raw.framing.end(), b.framing().begin(), b.framing().end());
  return ArcDiagram::from_word(raw);
}

LinearCombination<ArcDiagram> multiply_arc(const LinearCombination<ArcDiagram>& a,
                                           const LinearCombination<ArcDiagram>& b) {
  LinearCombination<ArcDiagram> out;
  for (const auto& [da, ca] : a.terms()) {
    for (const auto& [db, cb] : b.terms()) out.add(multiply_arc(da, db), ca * cb);
  }
  return out;
}

ChordDiagram multiply_circle(const ChordDiagram& a, const ChordDiagram& b, std::size_t break_a,
                             std::size_t break_b) {
  if (break_a >= break_count(a) || break_b >= break_count(b)) {
    throw StructuralError("break index out of range");
  }
  const auto sa = sections(a);
  const auto sb = sections(b);
  return closure(multiply_arc(sa[break_a], sb[break_b]));
}

WellDefinedReport well_defined_check(std::size_t order_a, std::size_t order_b,
                                     const RelationSpec& spec, Field field, unsigned jobs,
                                     std::uint64_t capacity) {
  const std::size_t total = order_a + order_b;
  const auto left = enumerate_diagrams(order_a, spec.framed, capacity);
  const auto right = enumerate_diagrams(order_b, spec.framed, capacity);
  const auto relations = generate_relations(total, spec, jobs, capacity);
  const auto quotient = quotient_basis(total, spec.framed, relations, field, capacity);

  WellDefinedReport report;
  report.order_a = order_a;
  report.order_b = order_b;
  report.relations = spec.describe();
  report.fingerprint = relation_fingerprint(relations);
  report.field = field;
  report.framed = spec.framed;
  report.pairs = left.size() * right.size();

  const auto outcomes = parallel_map(report.pairs, jobs, [&](std::size_t index) {
    const ChordDiagram& a = left[index / right.size()];
    const ChordDiagram& b = right[index % right.size()];
    const auto sa = sections(a);
    const auto sb = sections(b);
    PairOutcome outcome;
    const ChordDiagram reference = closure(multiply_arc(sa[0], sb[0]));
    for (std::size_t i = 0; i < sa.size(); ++i) {
      for (std::size_t j = 0; j < sb.size(); ++j) {
        ++outcome.products;
        const ChordDiagram product = closure(multiply_arc(sa[i], sb[j]));
        if (product == reference) continue;
        LinearCombination<ChordDiagram> diff(product);
        diff.add(reference, -1);
        if (!quotient.in_span(diff)) {
          outcome.failures.push_back({a.encode(), b.encode(), i, j, product.encode(),
                                      reference.encode()});
        }
      }
    }
    return outcome;
  });
  for (const auto& o : outcomes) {
    report.products += o.products;
    if (!o.failures.empty()) ++report.failing_pairs;
    report.failures.insert(report.failures.end(), o.failures.begin(), o.failures.end());
  }
  return report;
}

CommutatorReport commutator_check(std::size_t order_a, std::size_t order_b,
                                  const RelationSpec& spec, Field field, SpaceShape space,
                                  unsigned jobs, std::uint64_t capacity) {
  CommutatorReport report;
  report.space = space;
  report.order_a = order_a;
  report.order_b = order_b;
  report.relations = spec.describe();
  report.field = field;
  report.framed = spec.framed;
  const std::size_t total = order_a + order_b;

  auto pair_indices = [&](std::size_t na, std::size_t nb) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < na; ++i) {
      for (std::size_t j = order_a == order_b ? i : 0; j < nb; ++j) pairs.emplace_back(i, j);
    }
    return pairs;
  };

  auto tally = [&report](const std::vector<std::optional<CommutatorWitness>>& results) {
    for (const auto& w : results) {
      ++report.pairs;
      if (w) {
        ++report.non_commuting;
        report.witnesses.push_back(*w);
      } else {
        ++report.commuting;
      }
    }
  };

  if (space == SpaceShape::arc) {
    const auto left = enumerate_arc_diagrams(order_a, spec.framed, capacity);
    const auto right = enumerate_arc_diagrams(order_b, spec.framed, capacity);
    const auto relations = generate_arc_relations(total, spec, jobs, capacity);
    report.fingerprint = relation_fingerprint(relations);
    const auto quotient = arc_quotient_basis(total, spec.framed, relations, field, capacity);
    const auto pairs = pair_indices(left.size(), right.size());
    tally(parallel_map(pairs.size(), jobs, [&](std::size_t k) -> std::optional<CommutatorWitness> {
      const ArcDiagram& a = left[pairs[k].first];
      const ArcDiagram& b = right[pairs[k].second];
      const ArcDiagram ab = multiply_arc(a, b);
      const ArcDiagram ba = multiply_arc(b, a);
      LinearCombination<ArcDiagram> diff(ab);
      diff.add(ba, -1);
      if (quotient.in_span(diff)) return std::nullopt;
      return CommutatorWitness{a.encode(), b.encode(), ab.encode(), ba.encode()};
    }));
    return report;
  }

  const auto forward = well_defined_check(order_a, order_b, spec, field, jobs, capacity);
  const auto backward = well_defined_check(order_b, order_a, spec, field, jobs, capacity);
  report.convention_dependent = !forward.failures.empty() || !backward.failures.empty();
  report.fingerprint = forward.fingerprint;

  const auto left = enumerate_diagrams(order_a, spec.framed, capacity);
  const auto right = enumerate_diagrams(order_b, spec.framed, capacity);
  const auto relations = generate_relations(total, spec, jobs, capacity);
  const auto quotient = quotient_basis(total, spec.framed, relations, field, capacity);
  const auto pairs = pair_indices(left.size(), right.size());
  tally(parallel_map(pairs.size(), jobs, [&](std::size_t k) -> std::optional<CommutatorWitness> {
    const ChordDiagram& a = left[pairs[k].first];
    const ChordDiagram& b = right[pairs[k].second];
    const ChordDiagram ab = multiply_circle(a, b, 0, 0);
    const ChordDiagram ba = multiply_circle(b, a, 0, 0);
    LinearCombination<ChordDiagram> diff(ab);
    diff.add(ba, -1);
    if (quotient.in_span(diff)) return std::nullopt;
    return CommutatorWitness{a.encode(), b.encode(), ab.encode(), ba.encode()};
  }));
  return report;
}

PhiReport check_phi_intertwine(const SignSchema& schema_a, const SignSchema& schema_b,
                               std::size_t n, Field field, unsigned jobs) {
  RelationSpec spec_a{true, true, true, schema_a};
  RelationSpec spec_b{true, true, true, schema_b};
  const auto rels_a = generate_relations(n, spec_a, jobs);
  const auto rels_b = generate_relations(n, spec_b, jobs);
  const auto qa = quotient_basis(n, true, rels_a, field);
  const auto qb = quotient_basis(n, true, rels_b, field);
  return phi_report(schema_a, schema_b, n, field, qa, qb, rels_a);
}

PhiReport check_phi_intertwine_arc(const SignSchema& schema_a, const SignSchema& schema_b,
                                   std::size_t n, Field field, unsigned jobs) {
  RelationSpec spec_a{true, true, true, schema_a};
  RelationSpec spec_b{true, true, true, schema_b};
  const auto rels_a = generate_arc_relations(n, spec_a, jobs);
  const auto rels_b = generate_arc_relations(n, spec_b, jobs);
  const auto qa = arc_quotient_basis(n, true, rels_a, field);
  const auto qb = arc_quotient_basis(n, true, rels_b, field);
  return phi_report(schema_a, schema_b, n, field, qa, qb, rels_a);
}

SchemaSearchReport schema_search(const std::vector<std::size_t>& orders, Field field,
                                 unsigned jobs) {
  SchemaSearchReport report;
  report.field = field;
  if (orders.empty()) return report;
  const auto schemas = schema_space();
  const SignSchema& uniform = schemas.front();

  // First order: classify every schema by its relation span.
  {
    const std::size_t n = orders.front();
    const auto skeleton = four_term_skeleton(n, true, jobs);
    const auto one_term = generate_1T(n, true);
    const auto columns = enumerate_framed_diagrams(n);
    struct Keys {
      std::string span;
      std::string phi_span;
    };
    const auto keys = parallel_map(schemas.size(), jobs, [&](std::size_t s) {
      auto rels = apply_schema(skeleton, schemas[s]);
      rels.insert(rels.end(), one_term.begin(), one_term.end());
      const QuotientBasis<ChordDiagram> q(n, columns, rels, field);
      const QuotientBasis<ChordDiagram> qphi(n, columns, phi_image(rels), field);
      return Keys{span_key(q), span_key(qphi)};
    });

    SchemaSearchLevel level;
    level.order = n;
    std::map<std::string, std::size_t> span_count;
    std::map<std::string, std::size_t> phi_count;
    for (const auto& k : keys) {
      ++span_count[k.span];
      ++phi_count[k.phi_span];
    }
    level.span_classes = span_count.size();
    for (const auto& [key, count] : phi_count) {
      auto it = span_count.find(key);
      if (it != span_count.end()) level.intertwined_pairs += count * it->second;
    }
    // Candidates by span key, confirmed by the direct generator-by-generator check.
    std::vector<std::size_t> candidates;
    for (std::size_t s = 0; s < schemas.size(); ++s) {
      if (keys[s].span == keys.front().phi_span) candidates.push_back(s);
    }
    const auto confirmed = parallel_map(candidates.size(), jobs, [&](std::size_t i) {
      return check_phi_intertwine(uniform, schemas[candidates[i]], n, field).holds ? 1 : 0;
    });
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (confirmed[i] != 0) level.with_uniform.push_back(schemas[candidates[i]].flip_mask());
    }
    report.levels.push_back(std::move(level));
  }

  // Later orders: re-test the survivors of the previous order.
  for (std::size_t k = 1; k < orders.size(); ++k) {
    const auto& previous = report.levels.back().with_uniform;
    const std::size_t n = orders[k];
    const auto confirmed = parallel_map(previous.size(), jobs, [&](std::size_t i) {
      const SignSchema candidate = previous[i] == 0 ? uniform : SignSchema::from_flip_mask(previous[i]);
      return check_phi_intertwine(uniform, candidate, n, field).holds ? 1 : 0;
    });
    SchemaSearchLevel level;
    level.order = n;
    for (std::size_t i = 0; i < previous.size(); ++i) {
      if (confirmed[i] != 0) level.with_uniform.push_back(previous[i]);
    }
    report.levels.push_back(std::move(level));
  }

  report.stable = report.levels.back().with_uniform;
  report.all_stable = report.stable.size() == report.levels.front().with_uniform.size();
  for (unsigned mask : report.stable) {
    if (mask != 0) {
      report.starred = SignSchema::from_flip_mask(mask).name();
      break;
    }
  }
  return report;
}

}  // namespace chordspace
