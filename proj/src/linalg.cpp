#include "chordspace/linalg.hpp"

#include <bit>

namespace chordspace {

Field parse_field(std::string_view text) {
  if (text == "q" || text == "Q" || text == "rational") return Field::rational;
  if (text == "gf2" || text == "GF2" || text == "2") return Field::gf2;
  throw StructuralError("unknown field \"" + std::string(text) + "\" (expected q or gf2)");
}

int to_gf2(const Rational& value) {
  if (mpz_even_p(value.get_den_mpz_t())) {
    throw StructuralError("coefficient " + value.get_str() + " has no image in GF(2)");
  }
  return mpz_odd_p(value.get_num_mpz_t()) ? 1 : 0;
}

Rational parse_rational(std::string_view text) {
  Rational value;
  const std::string s(text);
  if (s.empty() || value.set_str(s, 10) != 0) {
    throw StructuralError("malformed rational \"" + s + "\"");
  }
  if (value.get_den() == 0) throw StructuralError("zero denominator in \"" + s + "\"");
  value.canonicalize();
  return value;
}

// Eliminates pivot columns from the top down. A pivot row only touches columns
// at or below its pivot, so one descending sweep suffices.
void RationalEchelon::reduce_in_place(Row& row) const {
  auto it = row.end();
  while (it != row.begin()) {
    --it;
    const std::size_t col = it->first;
    auto pivot = rows_.find(col);
    if (pivot == rows_.end()) continue;
    const Rational factor = it->second;
    for (const auto& [c, v] : pivot->second) {
      auto [slot, inserted] = row.try_emplace(c, 0);
      slot->second -= factor * v;
      if (slot->second == 0) row.erase(slot);
    }
    it = row.lower_bound(col);
  }
}

RationalEchelon::Row RationalEchelon::reduce(Row row) const {
  reduce_in_place(row);
  return row;
}

bool RationalEchelon::insert(Row row) {
  for (auto it = row.begin(); it != row.end();) {
    if (it->first >= columns_) throw StructuralError("row entry outside the column range");
    it = it->second == 0 ? row.erase(it) : std::next(it);
  }
  reduce_in_place(row);
  if (row.empty()) return false;
  const auto lead = std::prev(row.end());
  const std::size_t pivot = lead->first;
  const Rational scale = 1 / lead->second;
  if (scale != 1) {
    for (auto& entry : row) entry.second *= scale;
  }
  rows_.emplace(pivot, std::move(row));
  return true;
}

BitRow& BitRow::operator^=(const BitRow& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

bool BitRow::none() const {
  for (auto w : words_) {
    if (w != 0) return false;
  }
  return true;
}

std::optional<std::size_t> BitRow::highest_below(std::size_t bound) const {
  if (bound == 0) return std::nullopt;
  std::size_t top = bound - 1;
  std::size_t word = top >> 6;
  std::uint64_t mask = (top & 63) == 63 ? ~std::uint64_t{0} : ((std::uint64_t{1} << ((top & 63) + 1)) - 1);
  for (;;) {
    const std::uint64_t w = words_[word] & mask;
    if (w != 0) return word * 64 + (63 - static_cast<std::size_t>(std::countl_zero(w)));
    if (word == 0) return std::nullopt;
    --word;
    mask = ~std::uint64_t{0};
  }
}

void Gf2Echelon::reduce_in_place(BitRow& row) const {
  std::size_t bound = columns_;
  while (auto col = row.highest_below(bound)) {
    const long r = pivot_row_[*col];
    if (r >= 0) row ^= rows_[static_cast<std::size_t>(r)];
    bound = *col;
  }
}

BitRow Gf2Echelon::reduce(BitRow row) const {
  reduce_in_place(row);
  return row;
}

bool Gf2Echelon::insert(BitRow row) {
  if (row.words().size() != (columns_ + 63) / 64) {
    throw StructuralError("bit row width does not match the column count");
  }
  reduce_in_place(row);
  auto lead = row.highest_below(columns_);
  if (!lead) return false;
  pivot_row_[*lead] = static_cast<long>(rows_.size());
  rows_.push_back(std::move(row));
  return true;
}

std::vector<std::pair<std::size_t, const BitRow*>> Gf2Echelon::rows() const {
  std::vector<std::pair<std::size_t, const BitRow*>> out;
  for (std::size_t c = 0; c < columns_; ++c) {
    if (pivot_row_[c] >= 0) out.emplace_back(c, &rows_[static_cast<std::size_t>(pivot_row_[c])]);
  }
  return out;
}

QuotientBasis<ChordDiagram> quotient_basis(std::size_t n, bool framed,
                                           std::span<const CircleRelation> relations, Field field,
                                           std::uint64_t capacity) {
  return QuotientBasis<ChordDiagram>(n, enumerate_diagrams(n, framed, capacity), relations, field);
}

QuotientBasis<ArcDiagram> arc_quotient_basis(std::size_t n, bool framed,
                                             std::span<const ArcRelation> relations, Field field,
                                             std::uint64_t capacity) {
  return QuotientBasis<ArcDiagram>(n, enumerate_arc_diagrams(n, framed, capacity), relations,
                                   field);
}

}  // namespace chordspace
