#include "chordspace/diagram.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <utility>

namespace chordspace {

namespace {

constexpr std::size_t kLetterLimit = 26;

void check_raw(const RawWord& raw) {
  if (raw.labels.size() % 2 != 0) {
    throw StructuralError("diagram word has an odd number of points");
  }
  const std::size_t n = raw.labels.size() / 2;
  if (!raw.framing.empty() && raw.framing.size() != n) {
    throw StructuralError("framing length " + std::to_string(raw.framing.size()) +
                          " does not match order " + std::to_string(n));
  }
  std::vector<int> seen(n, 0);
  for (int label : raw.labels) {
    if (label < 0 || static_cast<std::size_t>(label) >= n) {
      throw StructuralError("chord label " + std::to_string(label) + " out of range");
    }
    if (++seen[label] > 2) {
      throw StructuralError("chord label " + std::to_string(label) + " used more than twice");
    }
  }
  for (Bit bit : raw.framing) {
    if (bit > 1) throw StructuralError("framing values must be 0 or 1");
    if (bit != 0 && !raw.framed) throw StructuralError("unframed diagram with nonzero framing");
  }
}

// Relabels by first occurrence, reading from `start` (cyclically).
std::pair<std::vector<Label>, std::vector<Bit>> relabel(const RawWord& raw, std::size_t start) {
  const std::size_t points = raw.labels.size();
  const std::size_t n = points / 2;
  std::vector<int> map(n, -1);
  std::vector<Label> labels(points);
  std::vector<Bit> framing(n, 0);
  int next = 0;
  for (std::size_t k = 0; k < points; ++k) {
    const int old = raw.labels[(start + k) % points];
    if (map[old] < 0) {
      map[old] = next;
      if (!raw.framing.empty()) framing[next] = raw.framing[old];
      ++next;
    }
    labels[k] = static_cast<Label>(map[old]);
  }
  return {std::move(labels), std::move(framing)};
}

RawWord raw_from_pairing(const std::vector<int>& pairing, const std::vector<Bit>& framing,
                         bool framed) {
  const std::size_t points = pairing.size();
  if (points % 2 != 0) throw StructuralError("pairing has an odd number of points");
  RawWord raw;
  raw.labels.assign(points, -1);
  raw.framed = framed;
  int next = 0;
  for (std::size_t i = 0; i < points; ++i) {
    const int j = pairing[i];
    if (j < 0 || static_cast<std::size_t>(j) >= points) {
      throw StructuralError("pairing target out of range at point " + std::to_string(i));
    }
    if (static_cast<std::size_t>(j) == i) {
      throw StructuralError("pairing has a fixed point at " + std::to_string(i));
    }
    if (static_cast<std::size_t>(pairing[j]) != i) {
      throw StructuralError("pairing is not an involution at point " + std::to_string(i));
    }
    if (raw.labels[i] < 0) {
      raw.labels[i] = next;
      raw.labels[j] = next;
      ++next;
    }
  }
  raw.framing = framing;
  return raw;
}

// Calls `visit(pairing)` for every fixed-point-free involution on 2n points.
template <class Visit>
void for_each_matching(std::vector<int>& partner, Visit&& visit) {
  auto first = std::find(partner.begin(), partner.end(), -1);
  if (first == partner.end()) {
    visit(partner);
    return;
  }
  const auto i = static_cast<int>(first - partner.begin());
  for (int j = i + 1; j < static_cast<int>(partner.size()); ++j) {
    if (partner[j] != -1) continue;
    partner[i] = j;
    partner[j] = i;
    for_each_matching(partner, visit);
    partner[i] = -1;
    partner[j] = -1;
  }
}

std::uint64_t framed_budget(std::size_t n) {
  const std::uint64_t m = matching_count(n);
  if (n >= 63 || m > (std::numeric_limits<std::uint64_t>::max() >> n)) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return m << n;
}

void require_capacity(std::uint64_t needed, std::uint64_t capacity, std::size_t n) {
  if (needed > capacity) {
    throw CapacityError("order " + std::to_string(n) + " needs " + std::to_string(needed) +
                        " objects, capacity is " + std::to_string(capacity));
  }
}

template <class Diagram>
Diagram parse_word(std::string_view text, Diagram (*build)(const RawWord&)) {
  RawWord raw;
  std::string_view word = text;
  std::string_view bits;
  const auto bar = text.find('|');
  if (bar != std::string_view::npos) {
    word = text.substr(0, bar);
    bits = text.substr(bar + 1);
    raw.framed = true;
  }
  if (word == "()") {
    if (!bits.empty()) throw ParseError("empty diagram cannot carry framings");
    return build(raw);
  }
  if (word.empty()) throw ParseError("empty diagram word (use \"()\")");

  // Labels as written, mapped to first-occurrence indices.
  std::vector<std::string> names;
  std::size_t pos = 0;
  while (pos < word.size()) {
    std::string name;
    const char c = word[pos];
    if (c >= 'A' && c <= 'Z') {
      name = std::string(1, c);
      ++pos;
    } else if (c == '[') {
      const auto close = word.find(']', pos);
      if (close == std::string_view::npos || close == pos + 1) {
        throw ParseError("unterminated bracketed label in \"" + std::string(text) + "\"");
      }
      name = std::string(word.substr(pos, close - pos + 1));
      for (std::size_t k = pos + 1; k < close; ++k) {
        if (word[k] < '0' || word[k] > '9') {
          throw ParseError("bracketed label must be an integer in \"" + std::string(text) + "\"");
        }
      }
      pos = close + 1;
    } else {
      throw ParseError("unexpected character '" + std::string(1, c) + "' in \"" +
                       std::string(text) + "\"");
    }
    const auto found = std::find(names.begin(), names.end(), name);
    if (found == names.end()) {
      raw.labels.push_back(static_cast<int>(names.size()));
      names.push_back(std::move(name));
    } else {
      raw.labels.push_back(static_cast<int>(found - names.begin()));
    }
  }
  const std::size_t n = names.size();
  if (raw.labels.size() != 2 * n) {
    throw ParseError("every chord label must occur exactly twice in \"" + std::string(text) + "\"");
  }
  if (raw.framed) {
    if (bits.size() != n) {
      throw ParseError("expected " + std::to_string(n) + " framing bits in \"" +
                       std::string(text) + "\"");
    }
    for (char b : bits) {
      if (b != '0' && b != '1') throw ParseError("framing bits must be 0 or 1");
      raw.framing.push_back(static_cast<Bit>(b - '0'));
    }
  }
  try {
    return build(raw);
  } catch (const ParseError&) {
    throw;
  } catch (const StructuralError& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

std::vector<int> MatchingWord::pairing() const {
  std::vector<int> partner(labels_.size(), -1);
  std::vector<int> first(order(), -1);
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    const Label l = labels_[i];
    if (first[l] < 0) {
      first[l] = static_cast<int>(i);
    } else {
      partner[i] = first[l];
      partner[first[l]] = static_cast<int>(i);
    }
  }
  return partner;
}

int MatchingWord::odd_chords() const {
  return static_cast<int>(std::count(framing_.begin(), framing_.end(), Bit{1}));
}

std::string MatchingWord::encode() const {
  std::string out;
  if (labels_.empty()) {
    out = "()";
  } else if (order() <= kLetterLimit) {
    for (Label l : labels_) out.push_back(static_cast<char>('A' + l));
  } else {
    for (Label l : labels_) out += "[" + std::to_string(l) + "]";
  }
  if (framed_) {
    out.push_back('|');
    for (Bit b : framing_) out.push_back(static_cast<char>('0' + b));
  }
  return out;
}

RawWord MatchingWord::raw(std::size_t start) const {
  RawWord raw;
  const std::size_t points = labels_.size();
  raw.labels.resize(points);
  for (std::size_t k = 0; k < points; ++k) raw.labels[k] = labels_[(start + k) % points];
  raw.framing = framing_;
  raw.framed = framed_;
  return raw;
}

ChordDiagram ChordDiagram::canonical(const RawWord& raw) {
  check_raw(raw);
  const std::size_t points = raw.labels.size();
  auto best = relabel(raw, 0);
  for (std::size_t start = 1; start < points; ++start) {
    auto candidate = relabel(raw, start);
    if (candidate < best) best = std::move(candidate);
  }
  return ChordDiagram(std::move(best.first), std::move(best.second), raw.framed);
}

ChordDiagram ChordDiagram::from_pairing(const std::vector<int>& pairing,
                                        const std::vector<Bit>& framing, bool framed) {
  return canonical(raw_from_pairing(pairing, framing, framed));
}

ChordDiagram ChordDiagram::empty_diagram(bool framed) { return ChordDiagram({}, {}, framed); }

ArcDiagram ArcDiagram::from_word(const RawWord& raw) {
  check_raw(raw);
  auto [labels, framing] = relabel(raw, 0);
  return ArcDiagram(std::move(labels), std::move(framing), raw.framed);
}

ArcDiagram ArcDiagram::from_pairing(const std::vector<int>& pairing,
                                    const std::vector<Bit>& framing, bool framed) {
  return from_word(raw_from_pairing(pairing, framing, framed));
}

ArcDiagram ArcDiagram::empty_diagram(bool framed) { return ArcDiagram({}, {}, framed); }

std::uint64_t matching_count(std::size_t n) {
  std::uint64_t count = 1;
  for (std::uint64_t odd = 1; odd + 1 <= 2 * n; odd += 2) {
    if (count > std::numeric_limits<std::uint64_t>::max() / odd) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    count *= odd;
  }
  return count;
}

std::vector<ChordDiagram> enumerate_chord_diagrams(std::size_t n, std::uint64_t capacity) {
  require_capacity(matching_count(n), capacity, n);
  std::vector<ChordDiagram> out;
  std::vector<int> partner(2 * n, -1);
  for_each_matching(partner, [&](const std::vector<int>& p) {
    out.push_back(ChordDiagram::from_pairing(p));
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<ChordDiagram> enumerate_framed_diagrams(std::size_t n, std::uint64_t capacity) {
  require_capacity(framed_budget(n), capacity, n);
  std::vector<ChordDiagram> out;
  for (const ChordDiagram& base : enumerate_chord_diagrams(n, capacity)) {
    RawWord raw = base.raw();
    raw.framed = true;
    raw.framing.assign(n, 0);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      for (std::size_t k = 0; k < n; ++k) raw.framing[k] = static_cast<Bit>((mask >> k) & 1U);
      out.push_back(ChordDiagram::canonical(raw));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<ChordDiagram> enumerate_diagrams(std::size_t n, bool framed, std::uint64_t capacity) {
  return framed ? enumerate_framed_diagrams(n, capacity) : enumerate_chord_diagrams(n, capacity);
}

std::vector<ArcDiagram> enumerate_arc_diagrams(std::size_t n, bool framed, std::uint64_t capacity) {
  require_capacity(framed ? framed_budget(n) : matching_count(n), capacity, n);
  std::vector<ArcDiagram> out;
  std::vector<int> partner(2 * n, -1);
  const std::uint64_t masks = framed ? (std::uint64_t{1} << n) : 1;
  std::vector<Bit> framing(framed ? n : 0, 0);
  for_each_matching(partner, [&](const std::vector<int>& p) {
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
      for (std::size_t k = 0; k < framing.size(); ++k) {
        framing[k] = static_cast<Bit>((mask >> k) & 1U);
      }
      out.push_back(ArcDiagram::from_pairing(p, framing, framed));
    }
  });
  std::sort(out.begin(), out.end());
  return out;
}

ChordDiagram closure(const ArcDiagram& arc) { return ChordDiagram::canonical(arc.raw()); }

std::vector<ArcDiagram> sections(const ChordDiagram& diagram) {
  if (diagram.empty()) return {ArcDiagram::empty_diagram(diagram.framed())};
  std::vector<ArcDiagram> out;
  out.reserve(diagram.points());
  for (std::size_t k = 0; k < diagram.points(); ++k) {
    out.push_back(ArcDiagram::from_word(diagram.raw(k)));
  }
  return out;
}

ChordDiagram forget_framing(const ChordDiagram& diagram) {
  RawWord raw = diagram.raw();
  raw.framed = false;
  raw.framing.clear();
  return ChordDiagram::canonical(raw);
}

ChordDiagram zero_framed(const ChordDiagram& diagram) {
  RawWord raw = diagram.raw();
  raw.framed = true;
  raw.framing.assign(diagram.order(), 0);
  return ChordDiagram::canonical(raw);
}

ChordDiagram parse_chord_diagram(std::string_view text) {
  return parse_word<ChordDiagram>(text, &ChordDiagram::canonical);
}

ArcDiagram parse_arc_diagram(std::string_view text) {
  return parse_word<ArcDiagram>(text, &ArcDiagram::from_word);
}

}  // namespace chordspace
