#ifndef CHORDSPACE_REALISABILITY_HPP
#define CHORDSPACE_REALISABILITY_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chordspace/diagram.hpp"
#include "chordspace/linalg.hpp"
#include "chordspace/relations.hpp"

namespace chordspace {

/// Which framed diagrams can come from a singular knot. A model, not ambient topology.
class RealisabilityModel {
 public:
  virtual ~RealisabilityModel() = default;
  virtual bool realisable(const ChordDiagram& diagram) const = 0;
  /// "trivial", "single-class", ...
  virtual std::string mode() const = 0;
};

/// H_1(M; Z2) = 0: every chord has framing 0.
class HomologyTrivialModel final : public RealisabilityModel {
 public:
  bool realisable(const ChordDiagram& diagram) const override;
  std::string mode() const override { return "trivial"; }
};

/*
 * One class alpha in H^1(M; Z2). The knot's circle is cut into 2n arcs by the
 * chord endpoints and each arc gets an unknown value x_k = alpha(arc k) in GF(2).
 * A chord's framing is the sum of x over its designated half. With
 * `knot_trivial` set, alpha[K] = sum of all x_k = 0 is imposed, which makes the
 * two halves of every chord agree.
 */
class SingleClassModel final : public RealisabilityModel {
 public:
  explicit SingleClassModel(bool knot_trivial = true) : knot_trivial_(knot_trivial) {}
  bool realisable(const ChordDiagram& diagram) const override;
  std::string mode() const override { return "single-class"; }
  bool knot_trivial() const { return knot_trivial_; }

 private:
  bool knot_trivial_;
};

/// "trivial" or "single-class".
std::unique_ptr<RealisabilityModel> make_model(std::string_view mode);

/// Rows = chords (by label), columns = arcs; arc k runs from point k to point k+1.
/// The designated half of a chord runs forward from its first endpoint; with
/// `complementary` set the other half is returned.
std::vector<BitRow> half_incidence(const ChordDiagram& diagram, bool complementary = false);

/// A solution x of the single-class system, if one exists.
std::optional<std::vector<Bit>> arc_labeling(const ChordDiagram& diagram, bool knot_trivial = true);

/// Realisable diagrams of order n, in canonical order.
std::vector<ChordDiagram> realisable_set(std::size_t n, const RealisabilityModel& model,
                                         std::uint64_t capacity = kDefaultCapacity);

struct QuadrupleViolation {
  RelationOrigin origin;
  std::vector<std::string> placements;
  std::vector<bool> realisable;
};

struct LemmaReport {
  std::string model;
  std::string schema;
  std::size_t order = 0;
  std::size_t quadruples = 0;
  std::size_t all_realisable = 0;
  std::size_t none_realisable = 0;
  std::vector<QuadrupleViolation> violations;
};

/// All-or-none realisability of every framed 4T quadruple at order n.
LemmaReport lemma_4T_closure_check(std::size_t n, const SignSchema& schema,
                                   const RealisabilityModel& model, unsigned jobs = 1);

struct RestrictedDimension {
  std::size_t order = 0;
  std::size_t columns = 0;    // realisable diagrams
  std::size_t relations = 0;  // generators supported on realisable diagrams
  std::size_t rank = 0;
  std::size_t dimension = 0;
  bool lemma_holds = true;
};

/// span(realisable diagrams) / span(relations whose placements are all realisable).
/// `spec` must be framed.
RestrictedDimension restricted_quotient_dim(std::size_t n, const RelationSpec& spec,
                                            const RealisabilityModel& model, Field field,
                                            unsigned jobs = 1);

/// The relations whose placements are all realisable.
std::vector<CircleRelation> restrict_relations(const std::vector<CircleRelation>& relations,
                                               const RealisabilityModel& model);

}  // namespace chordspace

#endif  // CHORDSPACE_REALISABILITY_HPP
