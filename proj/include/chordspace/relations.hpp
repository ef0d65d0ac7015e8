#ifndef CHORDSPACE_RELATIONS_HPP
#define CHORDSPACE_RELATIONS_HPP

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "chordspace/diagram.hpp"
#include "chordspace/linear_combination.hpp"

namespace chordspace {

/*
 * Signs of the four 4T terms as a function of the framings of the moving chord
 * and the fixed chord. Terms are numbered 1..4 in circular order starting just
 * after the fixed chord's first endpoint: after p, before q, after q, before p.
 * The (0,0) sector always carries the classical signs (+1, -1, +1, -1).
 *
 * The other three sectors are described by a 12-bit flip mask: bit
 * 4*sector + (term-1) negates that classical sign, with sector 0 = (0,1),
 * 1 = (1,0), 2 = (1,1) for (moving, fixed) framings.
 */
class SignSchema {
 public:
  static constexpr int kTerms = 4;
  static constexpr unsigned kFreeBits = 12;
  static constexpr int kClassical[kTerms] = {+1, -1, +1, -1};

  /// All sectors classical. Mask 0.
  static SignSchema uniform();
  static SignSchema from_flip_mask(unsigned mask, std::string name = {});
  /// Throws StructuralError unless the (0,0) sector is classical and all signs are +-1.
  static SignSchema from_table(std::string name, const std::array<int, 16>& signs);

  /// term in 1..4.
  int sign(int term, Bit moving, Bit fixed) const;
  unsigned flip_mask() const;
  const std::string& name() const { return name_; }
  const std::array<int, 16>& table() const { return signs_; }

  bool operator==(const SignSchema& other) const { return signs_ == other.signs_; }

 private:
  static std::size_t index(int term, Bit moving, Bit fixed) {
    return static_cast<std::size_t>((term - 1) * 4 + moving * 2 + fixed);
  }
  std::string name_;
  std::array<int, 16> signs_{};
};

/// The 4096 schemas with classical (0,0) sector, in flip-mask order, optionally filtered.
std::vector<SignSchema> schema_space(const std::function<bool(const SignSchema&)>& keep = {});

enum class RelationKind { one_term, four_term };

std::string to_string(RelationKind kind);

/// Which generator produced a relation vector.
struct RelationOrigin {
  RelationKind kind = RelationKind::one_term;
  std::string base;      // encoding of the generating diagram
  int moving_point = -1; // 4T: position of the sliding endpoint in `base`
  int fixed_chord = -1;  // 4T: label (in `base`) of the chord slid around
  Bit moving_framing = 0;
  Bit fixed_framing = 0;
};

template <class Diagram>
struct RelationVector {
  LinearCombination<Diagram> terms;
  RelationOrigin origin;
  /// 4T: the four placements in term order, before merging. 1T: the diagram itself.
  std::vector<Diagram> placements;
};

using CircleRelation = RelationVector<ChordDiagram>;
using ArcRelation = RelationVector<ArcDiagram>;

/// One relation D = 0 per diagram with a solitary chord (of framing 0 when framed).
std::vector<CircleRelation> generate_1T(std::size_t n, bool framed,
                                        std::uint64_t capacity = kDefaultCapacity);

/// Framed 4T under `schema`; unframed classical 4T when `schema` is empty.
std::vector<CircleRelation> generate_4T(std::size_t n, const std::optional<SignSchema>& schema,
                                        unsigned jobs = 1,
                                        std::uint64_t capacity = kDefaultCapacity);

/// 4T generators whose base is the circular word `base` read as given (not canonicalized).
/// Framing signs come from `schema` when the word is framed.
std::vector<CircleRelation> four_term_generators(const RawWord& base, const SignSchema& schema);

/// Every 4T generator of order n with uniform signs, in generation order: no
/// deduplication, vectors that cancel to zero kept. Input for apply_schema.
std::vector<CircleRelation> four_term_skeleton(std::size_t n, bool framed, unsigned jobs = 1,
                                               std::uint64_t capacity = kDefaultCapacity);

/// Re-signs skeleton generators under `schema`, then drops zero and duplicate vectors.
std::vector<CircleRelation> apply_schema(const std::vector<CircleRelation>& skeleton,
                                         const SignSchema& schema);

std::vector<ArcRelation> generate_arc_1T(std::size_t n, bool framed,
                                         std::uint64_t capacity = kDefaultCapacity);
std::vector<ArcRelation> generate_arc_4T(std::size_t n, const std::optional<SignSchema>& schema,
                                         unsigned jobs = 1,
                                         std::uint64_t capacity = kDefaultCapacity);

/// A relation family: which generators, framed or not, which schema.
struct RelationSpec {
  bool framed = false;
  bool four_term = true;
  bool one_term = false;
  SignSchema schema = SignSchema::uniform();

  /// "4t", "1t", "4t,1t", "none"; schema name appended when framed.
  std::string describe() const;
};

/// Parses "4t", "1t", "4t,1t", "none" into the generator flags of `spec`.
void parse_relation_list(std::string_view text, RelationSpec& spec);

std::vector<CircleRelation> generate_relations(std::size_t n, const RelationSpec& spec,
                                               unsigned jobs = 1,
                                               std::uint64_t capacity = kDefaultCapacity);
std::vector<ArcRelation> generate_arc_relations(std::size_t n, const RelationSpec& spec,
                                                unsigned jobs = 1,
                                                std::uint64_t capacity = kDefaultCapacity);

/// One line per relation, "coeff*WORD + ...".
template <class Diagram>
std::string relation_file(const std::vector<RelationVector<Diagram>>& relations) {
  std::string out;
  for (const auto& r : relations) {
    out += format_combination(r.terms);
    out.push_back('\n');
  }
  return out;
}

/// SHA-256 (hex) of the sorted relation file lines.
template <class Diagram>
std::string relation_fingerprint(const std::vector<RelationVector<Diagram>>& relations);

}  // namespace chordspace

#endif  // CHORDSPACE_RELATIONS_HPP
