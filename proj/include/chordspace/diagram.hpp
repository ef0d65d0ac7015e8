#ifndef CHORDSPACE_DIAGRAM_HPP
#define CHORDSPACE_DIAGRAM_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace chordspace {

using Bit = std::uint8_t;
using Label = std::uint16_t;

/// Malformed combinatorial input: bad involutions, mismatched orders, bad encodings.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Text that does not follow the diagram encoding grammar.
class ParseError : public StructuralError {
 public:
  using StructuralError::StructuralError;
};

/// A computation would exceed the configured enumeration budget.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Default budget, in raw objects visited, for the enumerators.
inline constexpr std::uint64_t kDefaultCapacity = 20'000'000;

/// Points in order along the circle (or line), each chord label used twice.
/// Labels must be 0..n-1; `framing` is indexed by raw label.
struct RawWord {
  std::vector<int> labels;
  std::vector<Bit> framing;
  bool framed = false;
};

/*
 * A perfect matching of 2n points written as a word: point i carries the label
 * of its chord, labels numbered 0,1,2,... by first occurrence. The framing of
 * chord k is framing()[k]. Unframed diagrams carry all-zero framing and
 * framed() == false; they live in a different space from framed ones.
 */
class MatchingWord {
 public:
  std::size_t order() const { return framing_.size(); }
  std::size_t points() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  bool framed() const { return framed_; }

  const std::vector<Label>& labels() const { return labels_; }
  const std::vector<Bit>& framing() const { return framing_; }

  /// partner[i] is the other endpoint of the chord through point i.
  std::vector<int> pairing() const;

  /// Number of chords with framing 1.
  int odd_chords() const;

  /// "ABAB", "ABAB|01", "()" or "()|"; bracketed indices above 26 chords.
  std::string encode() const;

  /// The word as a RawWord, read starting at point `start`.
  RawWord raw(std::size_t start = 0) const;

  auto operator<=>(const MatchingWord&) const = default;

 protected:
  MatchingWord() = default;
  MatchingWord(std::vector<Label> labels, std::vector<Bit> framing, bool framed)
      : labels_(std::move(labels)), framing_(std::move(framing)), framed_(framed) {}

  std::vector<Label> labels_;
  std::vector<Bit> framing_;
  bool framed_ = false;
};

/// Chord diagram on an oriented circle, stored in canonical rotational form.
class ChordDiagram : public MatchingWord {
 public:
  ChordDiagram() = default;

  /// Minimal (word, framing) over all rotations of the circular word.
  static ChordDiagram canonical(const RawWord& raw);

  /// From an involution; framing per chord in first-occurrence order.
  static ChordDiagram from_pairing(const std::vector<int>& pairing,
                                   const std::vector<Bit>& framing = {},
                                   bool framed = false);

  static ChordDiagram empty_diagram(bool framed = false);

  auto operator<=>(const ChordDiagram&) const = default;

 private:
  using MatchingWord::MatchingWord;
};

/// Arc diagram on an oriented line. No rotational identification.
class ArcDiagram : public MatchingWord {
 public:
  ArcDiagram() = default;

  static ArcDiagram from_word(const RawWord& raw);
  static ArcDiagram from_pairing(const std::vector<int>& pairing,
                                 const std::vector<Bit>& framing = {},
                                 bool framed = false);
  static ArcDiagram empty_diagram(bool framed = false);

  auto operator<=>(const ArcDiagram&) const = default;

 private:
  using MatchingWord::MatchingWord;
};

/// (2n-1)!!, saturating at UINT64_MAX.
std::uint64_t matching_count(std::size_t n);

/// One canonical representative per rotation orbit, sorted.
std::vector<ChordDiagram> enumerate_chord_diagrams(std::size_t n,
                                                   std::uint64_t capacity = kDefaultCapacity);
std::vector<ChordDiagram> enumerate_framed_diagrams(std::size_t n,
                                                    std::uint64_t capacity = kDefaultCapacity);
/// Framed or unframed, chosen by `framed`.
std::vector<ChordDiagram> enumerate_diagrams(std::size_t n, bool framed,
                                             std::uint64_t capacity = kDefaultCapacity);

/// Every arc diagram of order n (all matchings, times all framings if framed), sorted.
std::vector<ArcDiagram> enumerate_arc_diagrams(std::size_t n, bool framed,
                                               std::uint64_t capacity = kDefaultCapacity);

/// Joins the two ends of the line.
ChordDiagram closure(const ArcDiagram& arc);

/// Section k starts the line at point k; 2n sections with repeats, one for n = 0.
std::vector<ArcDiagram> sections(const ChordDiagram& diagram);

/// Canonical unframed image.
ChordDiagram forget_framing(const ChordDiagram& diagram);

/// Same chords with every framing 0 and framed() == true.
ChordDiagram zero_framed(const ChordDiagram& diagram);

ChordDiagram parse_chord_diagram(std::string_view text);
ArcDiagram parse_arc_diagram(std::string_view text);

}  // namespace chordspace

#endif  // CHORDSPACE_DIAGRAM_HPP
