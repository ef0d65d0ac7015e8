#ifndef CHORDSPACE_ALGEBRA_HPP
#define CHORDSPACE_ALGEBRA_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "chordspace/diagram.hpp"
#include "chordspace/linalg.hpp"
#include "chordspace/linear_combination.hpp"
#include "chordspace/relations.hpp"

namespace chordspace {

enum class SpaceShape { arc, circle };

std::string to_string(SpaceShape shape);

/// Head of `a` attached to the tail of `b`. Both must agree on framed().
ArcDiagram multiply_arc(const ArcDiagram& a, const ArcDiagram& b);

/// Bilinear extension of multiply_arc.
LinearCombination<ArcDiagram> multiply_arc(const LinearCombination<ArcDiagram>& a,
                                           const LinearCombination<ArcDiagram>& b);

/// closure(sections(a)[break_a] * sections(b)[break_b]). Break k opens the circle
/// just before point k; the empty diagram accepts only break 0.
ChordDiagram multiply_circle(const ChordDiagram& a, const ChordDiagram& b, std::size_t break_a,
                             std::size_t break_b);

/// (-1)^(number of framing-1 chords) on each framed diagram.
template <class Diagram>
LinearCombination<Diagram> phi(const LinearCombination<Diagram>& v) {
  LinearCombination<Diagram> out;
  for (const auto& [d, c] : v.terms()) {
    if (!d.framed()) throw StructuralError("phi is defined on framed diagrams only");
    out.add(d, d.odd_chords() % 2 == 0 ? c : Rational(-c));
  }
  return out;
}

struct ProductFailure {
  std::string a;
  std::string b;
  std::size_t break_a = 0;
  std::size_t break_b = 0;
  std::string product;    // at (break_a, break_b)
  std::string reference;  // at (0, 0)
};

struct WellDefinedReport {
  std::size_t order_a = 0;
  std::size_t order_b = 0;
  std::string relations;
  std::string fingerprint;
  Field field = Field::rational;
  bool framed = false;
  std::size_t pairs = 0;
  std::size_t products = 0;
  std::size_t failing_pairs = 0;
  std::vector<ProductFailure> failures;
};

/// For every pair of canonical diagrams and every pair of breakings, checks that
/// the product minus the (0,0) product lies in the relation span at order_a + order_b.
WellDefinedReport well_defined_check(std::size_t order_a, std::size_t order_b,
                                     const RelationSpec& spec, Field field, unsigned jobs = 1,
                                     std::uint64_t capacity = kDefaultCapacity);

struct CommutatorWitness {
  std::string a;
  std::string b;
  std::string ab;
  std::string ba;
};

struct CommutatorReport {
  SpaceShape space = SpaceShape::arc;
  std::size_t order_a = 0;
  std::size_t order_b = 0;
  std::string relations;
  std::string fingerprint;
  Field field = Field::rational;
  bool framed = false;
  std::size_t pairs = 0;
  std::size_t commuting = 0;
  std::size_t non_commuting = 0;
  /// Circle only: products taken at break 0 because well-definedness failed.
  bool convention_dependent = false;
  std::vector<CommutatorWitness> witnesses;
};

/// Tests a*b - b*a against the relation span for all pairs (unordered when the orders agree).
CommutatorReport commutator_check(std::size_t order_a, std::size_t order_b,
                                  const RelationSpec& spec, Field field, SpaceShape space,
                                  unsigned jobs = 1, std::uint64_t capacity = kDefaultCapacity);

struct PhiReport {
  std::string schema_a;
  std::string schema_b;
  std::size_t order = 0;
  Field field = Field::rational;
  std::size_t generators = 0;
  std::size_t rank_a = 0;
  std::size_t rank_b = 0;
  std::size_t outside_span = 0;
  bool holds = false;
};

/// phi maps span(4T(schema_a) + 1T) onto span(4T(schema_b) + 1T), framed, order n.
PhiReport check_phi_intertwine(const SignSchema& schema_a, const SignSchema& schema_b,
                               std::size_t n, Field field, unsigned jobs = 1);

/// Arc-diagram analogue of check_phi_intertwine.
PhiReport check_phi_intertwine_arc(const SignSchema& schema_a, const SignSchema& schema_b,
                                   std::size_t n, Field field, unsigned jobs = 1);

struct SchemaSearchLevel {
  std::size_t order = 0;
  // First order only: distinct relation spans among the 4096 schemas, and
  // intertwined ordered pairs (a, b) with a == b included.
  std::size_t span_classes = 0;
  std::size_t intertwined_pairs = 0;
  std::vector<unsigned> with_uniform;  // flip masks intertwined with uniform at this order
};

struct SchemaSearchReport {
  Field field = Field::rational;
  std::vector<SchemaSearchLevel> levels;
  /// Survivors of the first order that survive every later order.
  std::vector<unsigned> stable;
  /// Every first-order survivor survived every later order.
  bool all_stable = false;
  /// First non-uniform stable survivor, if any.
  std::string starred;
};

/// Classifies all 4096 schemas at orders[0] by phi-intertwining with uniform,
/// then re-tests the survivors at each later order in turn.
SchemaSearchReport schema_search(const std::vector<std::size_t>& orders, Field field,
                                 unsigned jobs = 1);

}  // namespace chordspace

#endif  // CHORDSPACE_ALGEBRA_HPP
