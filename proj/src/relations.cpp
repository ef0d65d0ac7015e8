#include "chordspace/relations.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>
#include <utility>

#include "chordspace/digest.hpp"
#include "chordspace/parallel.hpp"

namespace chordspace {

namespace {

constexpr std::size_t kSectors = 3;
// (moving, fixed) framings of the free sectors, in flip-mask order.
constexpr std::pair<Bit, Bit> kFreeSector[kSectors] = {{0, 1}, {1, 0}, {1, 1}};

// Keeps the first copy of every distinct term vector; drops vectors that cancel to zero.
template <class Diagram>
std::vector<RelationVector<Diagram>> dedupe(std::vector<RelationVector<Diagram>> relations) {
  std::set<LinearCombination<Diagram>> seen;
  std::vector<RelationVector<Diagram>> out;
  out.reserve(relations.size());
  for (auto& r : relations) {
    if (r.terms.empty()) continue;
    if (seen.insert(r.terms).second) out.push_back(std::move(r));
  }
  return out;
}

template <class Diagram>
std::vector<RelationVector<Diagram>> flatten(std::vector<std::vector<RelationVector<Diagram>>> parts) {
  std::vector<RelationVector<Diagram>> all;
  for (auto& part : parts) {
    for (auto& r : part) all.push_back(std::move(r));
  }
  return dedupe(std::move(all));
}

int term_sign(const SignSchema& schema, bool framed, int term, Bit moving, Bit fixed) {
  return framed ? schema.sign(term, moving, fixed) : SignSchema::kClassical[term - 1];
}

// Base word with the moving point removed, plus its label.
struct Surgery {
  std::vector<int> rest;
  int moving = 0;
};

RawWord with_inserted(const RawWord& base, const Surgery& s, std::size_t slot) {
  RawWord out;
  out.framed = base.framed;
  out.framing = base.framing;
  out.labels.reserve(s.rest.size() + 1);
  out.labels.insert(out.labels.end(), s.rest.begin(), s.rest.begin() + static_cast<long>(slot));
  out.labels.push_back(s.moving);
  out.labels.insert(out.labels.end(), s.rest.begin() + static_cast<long>(slot), s.rest.end());
  return out;
}

std::pair<std::size_t, std::size_t> endpoints(const std::vector<int>& rest, int chord) {
  std::size_t p = rest.size();
  std::size_t q = rest.size();
  for (std::size_t i = 0; i < rest.size(); ++i) {
    if (rest[i] != chord) continue;
    if (p == rest.size()) {
      p = i;
    } else {
      q = i;
    }
  }
  return {p, q};
}

std::string raw_encoding(const RawWord& raw) { return ArcDiagram::from_word(raw).encode(); }

std::vector<ArcRelation> arc_four_term_generators(const ArcDiagram& base, const SignSchema& schema) {
  std::vector<ArcRelation> out;
  const RawWord raw = base.raw();
  const std::size_t points = raw.labels.size();
  const std::size_t n = points / 2;
  const std::string base_text = base.encode();
  for (std::size_t x = 0; x < points; ++x) {
    Surgery s;
    s.moving = raw.labels[x];
    for (std::size_t k = 0; k < points; ++k) {
      if (k != x) s.rest.push_back(raw.labels[k]);
    }
    for (std::size_t d = 0; d < n; ++d) {
      if (static_cast<int>(d) == s.moving) continue;
      const auto [p, q] = endpoints(s.rest, static_cast<int>(d));
      // Line slots: slot k sits before rest[k].
      const std::size_t slots[SignSchema::kTerms] = {p + 1, q, q + 1, p};
      ArcRelation rel;
      rel.origin = {RelationKind::four_term, base_text, static_cast<int>(x), static_cast<int>(d),
                    raw.framing[s.moving], raw.framing[d]};
      for (int t = 0; t < SignSchema::kTerms; ++t) {
        ArcDiagram placed = ArcDiagram::from_word(with_inserted(raw, s, slots[t]));
        const int sign = term_sign(schema, raw.framed, t + 1, raw.framing[s.moving], raw.framing[d]);
        rel.terms.add(placed, sign);
        rel.placements.push_back(std::move(placed));
      }
      out.push_back(std::move(rel));
    }
  }
  return out;
}

}  // namespace

SignSchema SignSchema::uniform() { return from_flip_mask(0, "uniform"); }

SignSchema SignSchema::from_flip_mask(unsigned mask, std::string name) {
  if (mask >= (1U << kFreeBits)) throw StructuralError("sign schema mask out of range");
  SignSchema s;
  if (name.empty()) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "mask-%03x", mask);
    name = buf;
  }
  s.name_ = std::move(name);
  for (int term = 1; term <= kTerms; ++term) {
    s.signs_[index(term, 0, 0)] = kClassical[term - 1];
    for (std::size_t sector = 0; sector < kSectors; ++sector) {
      const auto [moving, fixed] = kFreeSector[sector];
      const bool flip = (mask >> (4 * sector + static_cast<unsigned>(term - 1))) & 1U;
      s.signs_[index(term, moving, fixed)] = flip ? -kClassical[term - 1] : kClassical[term - 1];
    }
  }
  return s;
}

SignSchema SignSchema::from_table(std::string name, const std::array<int, 16>& signs) {
  SignSchema s;
  s.name_ = std::move(name);
  s.signs_ = signs;
  for (int term = 1; term <= kTerms; ++term) {
    if (signs[index(term, 0, 0)] != kClassical[term - 1]) {
      throw StructuralError("sign schema must keep classical signs in the (0,0) sector");
    }
  }
  for (int v : signs) {
    if (v != 1 && v != -1) throw StructuralError("sign schema entries must be +1 or -1");
  }
  return s;
}

int SignSchema::sign(int term, Bit moving, Bit fixed) const {
  if (term < 1 || term > kTerms || moving > 1 || fixed > 1) {
    throw StructuralError("sign schema lookup out of range");
  }
  return signs_[index(term, moving, fixed)];
}

unsigned SignSchema::flip_mask() const {
  unsigned mask = 0;
  for (int term = 1; term <= kTerms; ++term) {
    for (std::size_t sector = 0; sector < kSectors; ++sector) {
      const auto [moving, fixed] = kFreeSector[sector];
      if (signs_[index(term, moving, fixed)] != kClassical[term - 1]) {
        mask |= 1U << (4 * sector + static_cast<unsigned>(term - 1));
      }
    }
  }
  return mask;
}

std::vector<SignSchema> schema_space(const std::function<bool(const SignSchema&)>& keep) {
  std::vector<SignSchema> out;
  for (unsigned mask = 0; mask < (1U << SignSchema::kFreeBits); ++mask) {
    SignSchema s = mask == 0 ? SignSchema::uniform() : SignSchema::from_flip_mask(mask);
    if (!keep || keep(s)) out.push_back(std::move(s));
  }
  return out;
}

std::string to_string(RelationKind kind) { return kind == RelationKind::one_term ? "1T" : "4T"; }

std::vector<CircleRelation> generate_1T(std::size_t n, bool framed, std::uint64_t capacity) {
  std::vector<CircleRelation> out;
  if (n == 0) return out;
  for (const ChordDiagram& d : enumerate_diagrams(n, framed, capacity)) {
    const auto& labels = d.labels();
    const std::size_t points = labels.size();
    bool solitary = false;
    for (std::size_t i = 0; i < points && !solitary; ++i) {
      const Label l = labels[i];
      solitary = labels[(i + 1) % points] == l && d.framing()[l] == 0;
    }
    if (!solitary) continue;
    CircleRelation rel;
    rel.terms.add(d, 1);
    rel.origin = {RelationKind::one_term, d.encode(), -1, -1};
    rel.placements = {d};
    out.push_back(std::move(rel));
  }
  return out;
}

std::vector<CircleRelation> four_term_generators(const RawWord& base, const SignSchema& schema) {
  std::vector<CircleRelation> out;
  const std::size_t points = base.labels.size();
  const std::size_t n = points / 2;
  if (n < 2) return out;
  // Validates the word.
  (void)ChordDiagram::canonical(base);
  const std::string base_text = raw_encoding(base);
  const std::size_t gaps = points - 1;
  for (std::size_t x = 0; x < points; ++x) {
    Surgery s;
    s.moving = base.labels[x];
    for (std::size_t k = 1; k < points; ++k) s.rest.push_back(base.labels[(x + k) % points]);
    for (std::size_t d = 0; d < n; ++d) {
      if (static_cast<int>(d) == s.moving) continue;
      // p is the first endpoint of d met after the moving point.
      const auto [p, q] = endpoints(s.rest, static_cast<int>(d));
      // Circular gap g sits between rest[g] and rest[g+1]; inserting after rest[g].
      const std::size_t gap[SignSchema::kTerms] = {p, q - 1, q, (p + gaps - 1) % gaps};
      const Bit fc = base.framing.empty() ? 0 : base.framing[s.moving];
      const Bit fd = base.framing.empty() ? 0 : base.framing[d];
      CircleRelation rel;
      rel.origin = {RelationKind::four_term, base_text, static_cast<int>(x), static_cast<int>(d),
                    fc, fd};
      for (int t = 0; t < SignSchema::kTerms; ++t) {
        ChordDiagram placed = ChordDiagram::canonical(with_inserted(base, s, gap[t] + 1));
        rel.terms.add(placed, term_sign(schema, base.framed, t + 1, fc, fd));
        rel.placements.push_back(std::move(placed));
      }
      out.push_back(std::move(rel));
    }
  }
  return out;
}

std::vector<CircleRelation> four_term_skeleton(std::size_t n, bool framed, unsigned jobs,
                                               std::uint64_t capacity) {
  if (n < 2) return {};
  const auto bases = enumerate_diagrams(n, framed, capacity);
  const SignSchema uniform = SignSchema::uniform();
  auto parts = parallel_map(bases.size(), jobs, [&](std::size_t i) {
    return four_term_generators(bases[i].raw(), uniform);
  });
  std::vector<CircleRelation> all;
  for (auto& part : parts) {
    for (auto& r : part) all.push_back(std::move(r));
  }
  return all;
}

std::vector<CircleRelation> apply_schema(const std::vector<CircleRelation>& skeleton,
                                         const SignSchema& schema) {
  std::vector<CircleRelation> out;
  out.reserve(skeleton.size());
  for (const CircleRelation& g : skeleton) {
    if (g.origin.kind != RelationKind::four_term || g.placements.size() != SignSchema::kTerms) {
      throw StructuralError("apply_schema expects 4T generators with four placements");
    }
    const bool framed = g.placements.front().framed();
    CircleRelation rel;
    rel.origin = g.origin;
    rel.placements = g.placements;
    for (int t = 0; t < SignSchema::kTerms; ++t) {
      rel.terms.add(g.placements[t], term_sign(schema, framed, t + 1, g.origin.moving_framing,
                                               g.origin.fixed_framing));
    }
    out.push_back(std::move(rel));
  }
  return dedupe(std::move(out));
}

std::vector<CircleRelation> generate_4T(std::size_t n, const std::optional<SignSchema>& schema,
                                        unsigned jobs, std::uint64_t capacity) {
  if (n < 2) return {};
  const bool framed = schema.has_value();
  const SignSchema signs = schema.value_or(SignSchema::uniform());
  const auto bases = enumerate_diagrams(n, framed, capacity);
  return flatten(parallel_map(bases.size(), jobs, [&](std::size_t i) {
    return four_term_generators(bases[i].raw(), signs);
  }));
}

std::vector<ArcRelation> generate_arc_1T(std::size_t n, bool framed, std::uint64_t capacity) {
  std::vector<ArcRelation> out;
  if (n == 0) return out;
  for (const ArcDiagram& d : enumerate_arc_diagrams(n, framed, capacity)) {
    const auto& labels = d.labels();
    bool solitary = false;
    for (std::size_t i = 0; i + 1 < labels.size() && !solitary; ++i) {
      solitary = labels[i] == labels[i + 1] && d.framing()[labels[i]] == 0;
    }
    if (!solitary) continue;
    ArcRelation rel;
    rel.terms.add(d, 1);
    rel.origin = {RelationKind::one_term, d.encode(), -1, -1};
    rel.placements = {d};
    out.push_back(std::move(rel));
  }
  return out;
}

std::vector<ArcRelation> generate_arc_4T(std::size_t n, const std::optional<SignSchema>& schema,
                                         unsigned jobs, std::uint64_t capacity) {
  if (n < 2) return {};
  const bool framed = schema.has_value();
  const SignSchema signs = schema.value_or(SignSchema::uniform());
  const auto bases = enumerate_arc_diagrams(n, framed, capacity);
  return flatten(parallel_map(bases.size(), jobs, [&](std::size_t i) {
    return arc_four_term_generators(bases[i], signs);
  }));
}

std::string RelationSpec::describe() const {
  std::string out;
  if (four_term) out += "4t";
  if (one_term) out += out.empty() ? "1t" : ",1t";
  if (out.empty()) out = "none";
  out += framed ? " framed schema=" + schema.name() : " unframed";
  return out;
}

void parse_relation_list(std::string_view text, RelationSpec& spec) {
  spec.four_term = false;
  spec.one_term = false;
  std::stringstream in{std::string(text)};
  std::string item;
  while (std::getline(in, item, ',')) {
    std::transform(item.begin(), item.end(), item.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (item == "4t") {
      spec.four_term = true;
    } else if (item == "1t") {
      spec.one_term = true;
    } else if (item != "none" && !item.empty()) {
      throw StructuralError("unknown relation family \"" + item + "\"");
    }
  }
}

std::vector<CircleRelation> generate_relations(std::size_t n, const RelationSpec& spec,
                                               unsigned jobs, std::uint64_t capacity) {
  std::vector<CircleRelation> out;
  if (spec.four_term) {
    out = generate_4T(n, spec.framed ? std::optional(spec.schema) : std::nullopt, jobs, capacity);
  }
  if (spec.one_term) {
    for (auto& r : generate_1T(n, spec.framed, capacity)) out.push_back(std::move(r));
  }
  return out;
}

std::vector<ArcRelation> generate_arc_relations(std::size_t n, const RelationSpec& spec,
                                                unsigned jobs, std::uint64_t capacity) {
  std::vector<ArcRelation> out;
  if (spec.four_term) {
    out = generate_arc_4T(n, spec.framed ? std::optional(spec.schema) : std::nullopt, jobs,
                          capacity);
  }
  if (spec.one_term) {
    for (auto& r : generate_arc_1T(n, spec.framed, capacity)) out.push_back(std::move(r));
  }
  return out;
}

template <class Diagram>
std::string relation_fingerprint(const std::vector<RelationVector<Diagram>>& relations) {
  std::vector<std::string> lines;
  lines.reserve(relations.size());
  for (const auto& r : relations) lines.push_back(format_combination(r.terms));
  std::sort(lines.begin(), lines.end());
  std::string text;
  for (const auto& line : lines) {
    text += line;
    text.push_back('\n');
  }
  return sha256_hex(text);
}

template std::string relation_fingerprint(const std::vector<CircleRelation>&);
template std::string relation_fingerprint(const std::vector<ArcRelation>&);

}  // namespace chordspace
