#ifndef CHORDSPACE_LINEAR_COMBINATION_HPP
#define CHORDSPACE_LINEAR_COMBINATION_HPP

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <string>
#include <string_view>

namespace chordspace {

using Rational = mpq_class;

enum class Field { rational, gf2 };

inline std::string to_string(Field field) { return field == Field::rational ? "q" : "gf2"; }

/// Accepts "q", "rational", "gf2", "2". Throws StructuralError otherwise.
Field parse_field(std::string_view text);

/// Maps a rational with odd denominator into {0, 1}.
int to_gf2(const Rational& value);

Rational parse_rational(std::string_view text);

/// Finite formal sum of diagrams with exact coefficients. Zero terms are never stored.
template <class Diagram>
class LinearCombination {
 public:
  using Terms = std::map<Diagram, Rational>;

  LinearCombination() = default;
  explicit LinearCombination(const Diagram& d, const Rational& c = 1) { add(d, c); }

  void add(const Diagram& d, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(d, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rational coefficient(const Diagram& d) const {
    auto it = terms_.find(d);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  LinearCombination& operator+=(const LinearCombination& other) {
    for (const auto& [d, c] : other.terms_) add(d, c);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& other) {
    for (const auto& [d, c] : other.terms_) add(d, -c);
    return *this;
  }
  LinearCombination& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& entry : terms_) entry.second *= s;
    }
    return *this;
  }
  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
  friend LinearCombination operator*(const Rational& s, LinearCombination a) { return a *= s; }

  /// Coefficients reduced into GF(2); terms with even coefficient drop out.
  LinearCombination mod2() const {
    LinearCombination out;
    for (const auto& [d, c] : terms_) {
      if (to_gf2(c) != 0) out.terms_.emplace(d, Rational(1));
    }
    return out;
  }

  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  bool operator==(const LinearCombination&) const = default;
  bool operator<(const LinearCombination& other) const { return terms_ < other.terms_; }

 private:
  Terms terms_;
};

/// "c*WORD" terms joined by " + " / " - ", "0" when empty.
template <class Diagram>
std::string format_combination(const LinearCombination<Diagram>& v) {
  if (v.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [d, c] : v.terms()) {
    if (first) {
      out += c.get_str() + "*" + d.encode();
      first = false;
    } else {
      out += (c < 0 ? " - " : " + ");
      Rational magnitude = abs(c);
      out += magnitude.get_str() + "*" + d.encode();
    }
  }
  return out;
}

}  // namespace chordspace

#endif  // CHORDSPACE_LINEAR_COMBINATION_HPP
