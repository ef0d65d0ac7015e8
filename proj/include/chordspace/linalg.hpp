#ifndef CHORDSPACE_LINALG_HPP
#define CHORDSPACE_LINALG_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "chordspace/diagram.hpp"
#include "chordspace/linear_combination.hpp"
#include "chordspace/relations.hpp"

namespace chordspace {

/*
 * Incremental row echelon form over Q. Each stored row is keyed by its pivot,
 * which is the row's LARGEST column, with pivot coefficient 1. Non-pivot
 * columns are therefore exactly the columns a left-to-right greedy scan keeps
 * as independent modulo the row space.
 */
class RationalEchelon {
 public:
  using Row = std::map<std::size_t, Rational>;

  explicit RationalEchelon(std::size_t columns = 0) : columns_(columns) {}

  /// Adds a row; returns true if it enlarged the span.
  bool insert(Row row);
  /// Normal form: the unique representative supported on non-pivot columns.
  Row reduce(Row row) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t columns() const { return columns_; }
  bool is_pivot(std::size_t column) const { return rows_.count(column) != 0; }
  const std::map<std::size_t, Row>& rows() const { return rows_; }

 private:
  void reduce_in_place(Row& row) const;

  std::size_t columns_;
  std::map<std::size_t, Row> rows_;
};

/// Packed GF(2) row, bit c of word c/64 is column c.
class BitRow {
 public:
  BitRow() = default;
  explicit BitRow(std::size_t columns) : words_((columns + 63) / 64, 0) {}

  bool test(std::size_t c) const { return (words_[c >> 6] >> (c & 63)) & 1U; }
  void set(std::size_t c) { words_[c >> 6] |= std::uint64_t{1} << (c & 63); }
  void flip(std::size_t c) { words_[c >> 6] ^= std::uint64_t{1} << (c & 63); }
  BitRow& operator^=(const BitRow& other);
  bool none() const;
  /// Highest set column strictly below `bound`, if any.
  std::optional<std::size_t> highest_below(std::size_t bound) const;
  const std::vector<std::uint64_t>& words() const { return words_; }

  bool operator==(const BitRow&) const = default;

 private:
  std::vector<std::uint64_t> words_;
};

/// Same contract as RationalEchelon over GF(2) with packed 64-bit rows.
class Gf2Echelon {
 public:
  explicit Gf2Echelon(std::size_t columns = 0) : columns_(columns), pivot_row_(columns, -1) {}

  bool insert(BitRow row);
  BitRow reduce(BitRow row) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t columns() const { return columns_; }
  bool is_pivot(std::size_t column) const { return pivot_row_[column] >= 0; }
  /// Stored rows keyed by pivot column, ascending.
  std::vector<std::pair<std::size_t, const BitRow*>> rows() const;

 private:
  void reduce_in_place(BitRow& row) const;

  std::size_t columns_;
  std::vector<BitRow> rows_;
  std::vector<long> pivot_row_;
};

/*
 * The quotient of the span of `columns` (sorted canonical diagrams) by the span
 * of a relation set, over Q or GF(2). The basis is the list of non-pivot
 * columns in sorted order; reduce() writes any vector in that basis.
 */
template <class Diagram>
class QuotientBasis {
 public:
  QuotientBasis(std::size_t order, std::vector<Diagram> columns, Field field)
      : order_(order), field_(field), columns_(std::move(columns)) {
    if (!std::is_sorted(columns_.begin(), columns_.end()) ||
        std::adjacent_find(columns_.begin(), columns_.end()) != columns_.end()) {
      throw StructuralError("quotient columns must be sorted and distinct");
    }
    for (const Diagram& d : columns_) {
      if (d.order() != order_) throw StructuralError("quotient column of wrong order");
    }
    if (field_ == Field::rational) {
      echelon_ = RationalEchelon(columns_.size());
    } else {
      echelon_ = Gf2Echelon(columns_.size());
    }
  }

  QuotientBasis(std::size_t order, std::vector<Diagram> columns,
                std::span<const RelationVector<Diagram>> relations, Field field)
      : QuotientBasis(order, std::move(columns), field) {
    for (const auto& r : relations) add_relation(r.terms);
  }

  /// Adds one relation; returns true if it raised the rank.
  bool add_relation(const LinearCombination<Diagram>& v) {
    if (field_ == Field::rational) {
      return std::get<RationalEchelon>(echelon_).insert(to_row(v));
    }
    return std::get<Gf2Echelon>(echelon_).insert(to_bits(v));
  }

  std::size_t order() const { return order_; }
  Field field() const { return field_; }
  const std::vector<Diagram>& columns() const { return columns_; }

  std::size_t rank() const {
    return std::visit([](const auto& e) { return e.rank(); }, echelon_);
  }
  std::size_t dimension() const { return columns_.size() - rank(); }

  /// Non-pivot columns, in sorted order.
  std::vector<Diagram> basis() const {
    std::vector<Diagram> out;
    for (std::size_t c = 0; c < columns_.size(); ++c) {
      if (!is_pivot(c)) out.push_back(columns_[c]);
    }
    return out;
  }

  bool is_pivot(std::size_t column) const {
    return std::visit([column](const auto& e) { return e.is_pivot(column); }, echelon_);
  }

  std::optional<std::size_t> column_of(const Diagram& d) const {
    auto it = std::lower_bound(columns_.begin(), columns_.end(), d);
    if (it == columns_.end() || *it != d) return std::nullopt;
    return static_cast<std::size_t>(it - columns_.begin());
  }

  bool contains(const LinearCombination<Diagram>& v) const {
    for (const auto& entry : v.terms()) {
      if (!column_of(entry.first)) return false;
    }
    return true;
  }

  /// Normal form in the basis. Linear, idempotent, kills every added relation.
  LinearCombination<Diagram> reduce(const LinearCombination<Diagram>& v) const {
    LinearCombination<Diagram> out;
    if (field_ == Field::rational) {
      for (const auto& [c, value] : std::get<RationalEchelon>(echelon_).reduce(to_row(v))) {
        out.add(columns_[c], value);
      }
    } else {
      const BitRow bits = std::get<Gf2Echelon>(echelon_).reduce(to_bits(v));
      for (std::size_t c = 0; c < columns_.size(); ++c) {
        if (bits.test(c)) out.add(columns_[c], 1);
      }
    }
    return out;
  }

  bool in_span(const LinearCombination<Diagram>& v) const { return reduce(v).empty(); }

  const std::variant<RationalEchelon, Gf2Echelon>& echelon() const { return echelon_; }

 private:
  std::size_t require_column(const Diagram& d) const {
    if (d.order() != order_) {
      throw StructuralError("diagram " + d.encode() + " has order " + std::to_string(d.order()) +
                            ", expected " + std::to_string(order_));
    }
    auto c = column_of(d);
    if (!c) throw StructuralError("diagram " + d.encode() + " is not a column of this space");
    return *c;
  }

  RationalEchelon::Row to_row(const LinearCombination<Diagram>& v) const {
    RationalEchelon::Row row;
    for (const auto& [d, c] : v.terms()) row.emplace(require_column(d), c);
    return row;
  }

  BitRow to_bits(const LinearCombination<Diagram>& v) const {
    BitRow row(columns_.size());
    for (const auto& [d, c] : v.terms()) {
      if (to_gf2(c) != 0) row.flip(require_column(d));
    }
    return row;
  }

  std::size_t order_;
  Field field_;
  std::vector<Diagram> columns_;
  std::variant<RationalEchelon, Gf2Echelon> echelon_;
};

/// Sorted union of the supports. Throws StructuralError on mixed orders.
template <class Diagram>
std::vector<Diagram> support_columns(const std::vector<RelationVector<Diagram>>& vectors) {
  std::vector<Diagram> cols;
  std::optional<std::size_t> order;
  for (const auto& r : vectors) {
    for (const auto& entry : r.terms.terms()) {
      if (order && *order != entry.first.order()) {
        throw StructuralError("relation vectors of mixed order");
      }
      order = entry.first.order();
      cols.push_back(entry.first);
    }
  }
  std::sort(cols.begin(), cols.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  return cols;
}

/// Rank of the span of `vectors`.
template <class Diagram>
std::size_t rank(const std::vector<RelationVector<Diagram>>& vectors, Field field) {
  auto cols = support_columns(vectors);
  if (cols.empty()) return 0;
  const std::size_t order = cols.front().order();
  return QuotientBasis<Diagram>(order, std::move(cols), vectors, field).rank();
}

/// Quotient of all (framed or unframed) circle diagrams of order n by `relations`.
QuotientBasis<ChordDiagram> quotient_basis(std::size_t n, bool framed,
                                           std::span<const CircleRelation> relations, Field field,
                                           std::uint64_t capacity = kDefaultCapacity);

/// Same for arc diagrams.
QuotientBasis<ArcDiagram> arc_quotient_basis(std::size_t n, bool framed,
                                             std::span<const ArcRelation> relations, Field field,
                                             std::uint64_t capacity = kDefaultCapacity);

}  // namespace chordspace

#endif  // CHORDSPACE_LINALG_HPP
