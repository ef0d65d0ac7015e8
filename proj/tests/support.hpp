#ifndef CHORDSPACE_TESTS_SUPPORT_HPP
#define CHORDSPACE_TESTS_SUPPORT_HPP

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "chordspace/diagram.hpp"
#include "chordspace/linear_combination.hpp"
#include "oracle/oracle.hpp"

namespace testing_support {

inline oracle::Labelled labelled_of(const chordspace::MatchingWord& d) {
  oracle::Labelled out;
  for (auto l : d.labels()) out.seq.push_back(l);
  if (d.framed()) {
    for (auto b : d.framing()) out.bit.push_back(b);
  }
  return out;
}

inline oracle::Key circle_key_of(const chordspace::MatchingWord& d) {
  return oracle::circle_key(labelled_of(d));
}

inline oracle::Key line_key_of(const chordspace::MatchingWord& d) {
  return oracle::line_key(labelled_of(d));
}

inline chordspace::RawWord raw_of(const oracle::Labelled& d) {
  chordspace::RawWord raw;
  raw.labels = d.seq;
  raw.framed = !d.bit.empty();
  for (int b : d.bit) raw.framing.push_back(static_cast<chordspace::Bit>(b));
  if (!raw.framed) raw.framing.assign(d.seq.size() / 2, 0);
  return raw;
}

/// Uniformly shuffled matching on 2n points with random chord labels and framings.
inline chordspace::RawWord random_raw(std::mt19937_64& rng, std::size_t n, bool framed) {
  std::vector<int> points(2 * n);
  std::iota(points.begin(), points.end(), 0);
  std::shuffle(points.begin(), points.end(), rng);
  std::vector<int> names(n);
  std::iota(names.begin(), names.end(), 0);
  std::shuffle(names.begin(), names.end(), rng);
  chordspace::RawWord raw;
  raw.labels.assign(2 * n, -1);
  for (std::size_t c = 0; c < n; ++c) {
    raw.labels[static_cast<std::size_t>(points[2 * c])] = names[c];
    raw.labels[static_cast<std::size_t>(points[2 * c + 1])] = names[c];
  }
  raw.framed = framed;
  raw.framing.assign(n, 0);
  if (framed) {
    for (auto& b : raw.framing) b = static_cast<chordspace::Bit>(rng() & 1U);
  }
  return raw;
}

inline chordspace::RawWord rotated(chordspace::RawWord raw, std::size_t k) {
  if (!raw.labels.empty()) {
    std::rotate(raw.labels.begin(), raw.labels.begin() + static_cast<long>(k % raw.labels.size()),
                raw.labels.end());
  }
  return raw;
}

/// Random combination of `terms` diagrams from `pool` with small integer coefficients.
template <class Diagram>
chordspace::LinearCombination<Diagram> random_combination(std::mt19937_64& rng,
                                                          const std::vector<Diagram>& pool,
                                                          std::size_t terms) {
  chordspace::LinearCombination<Diagram> v;
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (std::size_t k = 0; k < terms; ++k) v.add(pool[pick(rng)], coeff(rng));
  return v;
}

}  // namespace testing_support

#endif  // CHORDSPACE_TESTS_SUPPORT_HPP
