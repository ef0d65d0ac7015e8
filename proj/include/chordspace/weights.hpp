#ifndef CHORDSPACE_WEIGHTS_HPP
#define CHORDSPACE_WEIGHTS_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "chordspace/diagram.hpp"
#include "chordspace/linalg.hpp"
#include "chordspace/realisability.hpp"
#include "chordspace/relations.hpp"

namespace chordspace {

/*
 * A candidate symbol: exact values on chord diagrams of one order. Missing keys
 * read as 0. With a model attached the declared domain is the realisable set of
 * that model and every key must lie in it.
 */
struct WeightTable {
  std::size_t order = 0;
  bool framed = true;
  std::map<ChordDiagram, Rational> values;
  std::shared_ptr<const RealisabilityModel> model;  // null: domain is all diagrams

  Rational value(const ChordDiagram& d) const;
  Rational evaluate(const LinearCombination<ChordDiagram>& v) const;
  std::string domain() const { return model ? "realisable" : "all"; }
};

struct RelationResidual {
  RelationOrigin origin;
  std::string relation;
  Rational residual;
};

struct ValidationReport {
  std::size_t order = 0;
  std::string relations;
  std::string domain;
  std::size_t checked = 0;
  std::size_t skipped = 0;           // generators outside a realisable-only domain
  std::size_t partial_quadruples = 0;  // generators only partly inside the domain
  std::vector<RelationResidual> violations;

  bool passed() const { return violations.empty() && partial_quadruples == 0; }
};

/// Evaluates every relation of `spec` on the table; residuals must vanish exactly
/// (over GF(2) when `field` is gf2). Throws StructuralError for keys outside the domain.
ValidationReport validate(const WeightTable& table, const RelationSpec& spec,
                          Field field = Field::rational, unsigned jobs = 1);

/// Weight systems: the dual of a quotient. Functional k is the coefficient of
/// basis()[k] in the normal form.
struct WeightSpace {
  std::size_t order = 0;
  Field field = Field::rational;
  std::vector<ChordDiagram> basis;
  std::vector<WeightTable> functionals;
  std::size_t dimension() const { return functionals.size(); }
};

/// Dual basis of the quotient of all (or realisable, with `model`) diagrams by `spec`.
WeightSpace weight_space(std::size_t n, const RelationSpec& spec, Field field,
                         std::shared_ptr<const RealisabilityModel> model = nullptr,
                         unsigned jobs = 1);

/// Pullback along the forgetful map: each framed diagram gets the value of its unframed image.
WeightTable forget_framing(const WeightTable& unframed);

}  // namespace chordspace

#endif  // CHORDSPACE_WEIGHTS_HPP
