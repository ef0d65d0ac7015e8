#include <gtest/gtest.h>

#include <set>

#include "chordspace/algebra.hpp"
#include "support.hpp"

using namespace chordspace;
using namespace testing_support;

namespace {

ArcDiagram arc(std::string_view text) { return parse_arc_diagram(text); }
ChordDiagram chord(std::string_view text) { return parse_chord_diagram(text); }

// One labelled representative per circle (or line) key.
std::vector<oracle::Labelled> representatives(int n, bool framed, bool circle) {
  std::map<oracle::Key, oracle::Labelled> out;
  for (const auto& d : oracle::labelled(n, framed)) {
    out.try_emplace(circle ? oracle::circle_key(d) : oracle::line_key(d), d);
  }
  std::vector<oracle::Labelled> list;
  for (auto& [k, d] : out) list.push_back(d);
  return list;
}

// Number of unordered commuting pairs, decided by dense rank in the oracle.
std::size_t oracle_commuting(int na, int nb, bool framed, bool circle) {
  const int n = na + nb;
  auto rows = oracle::four_term(n, framed, circle);
  const std::size_t base = oracle::rank_rational(rows);
  const auto as = representatives(na, framed, circle);
  const auto bs = representatives(nb, framed, circle);
  std::size_t commuting = 0;
  for (std::size_t i = 0; i < as.size(); ++i) {
    for (std::size_t j = na == nb ? i : 0; j < bs.size(); ++j) {
      const auto ab = oracle::circle_product(as[i], bs[j], 0, 0);
      const auto ba = oracle::circle_product(bs[j], as[i], 0, 0);
      oracle::Vec diff;
      diff[circle ? oracle::circle_key(ab) : oracle::line_key(ab)] += 1;
      diff[circle ? oracle::circle_key(ba) : oracle::line_key(ba)] -= 1;
      std::erase_if(diff, [](const auto& e) { return e.second == 0; });
      if (diff.empty()) {
        ++commuting;
        continue;
      }
      rows.push_back(diff);
      if (oracle::rank_rational(rows) == base) ++commuting;
      rows.pop_back();
    }
  }
  return commuting;
}

const std::vector<unsigned> kSectorFlips = {0x000, 0x00f, 0x0f0, 0x0ff, 0xf00, 0xf0f, 0xff0, 0xfff};

}  // namespace

TEST(ArcProduct, Examples) {
  EXPECT_EQ(multiply_arc(arc("AA|0"), arc("AA|1")).encode(), "AABB|01");
  EXPECT_EQ(multiply_arc(arc("AA|1"), arc("AA|0")).encode(), "AABB|10");
  EXPECT_EQ(multiply_arc(arc("ABAB"), arc("AA")).encode(), "ABABCC");
  EXPECT_EQ(multiply_arc(ArcDiagram::empty_diagram(), arc("ABBA")).encode(), "ABBA");
  EXPECT_EQ(multiply_arc(arc("ABBA"), ArcDiagram::empty_diagram()).encode(), "ABBA");
  EXPECT_THROW(multiply_arc(arc("AA"), arc("AA|0")), StructuralError);
}

TEST(ArcProduct, PropertyAssociativeWithUnit) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const bool framed = trial % 2 == 0;
    const auto a = ArcDiagram::from_word(random_raw(rng, rng() % 3, framed));
    const auto b = ArcDiagram::from_word(random_raw(rng, rng() % 3, framed));
    const auto c = ArcDiagram::from_word(random_raw(rng, rng() % 3, framed));
    ASSERT_EQ(multiply_arc(multiply_arc(a, b), c), multiply_arc(a, multiply_arc(b, c)));
    ASSERT_EQ(multiply_arc(ArcDiagram::empty_diagram(framed), a), a);
    ASSERT_EQ(multiply_arc(a, b).order(), a.order() + b.order());
  }
}

TEST(ArcProduct, BilinearExtension) {
  LinearCombination<ArcDiagram> x;
  x.add(arc("AA|0"), 2);
  x.add(arc("AA|1"), -1);
  LinearCombination<ArcDiagram> y(arc("AA|1"));
  const auto xy = multiply_arc(x, y);
  EXPECT_EQ(xy.coefficient(arc("AABB|01")), 2);
  EXPECT_EQ(xy.coefficient(arc("AABB|11")), -1);
  EXPECT_EQ(xy.terms().size(), 2U);
}

TEST(CircleProduct, Examples) {
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) EXPECT_EQ(multiply_circle(chord("AA"), chord("AA"), i, j).encode(), "AABB");
  }
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(multiply_circle(chord("ABAB|01"), ChordDiagram::empty_diagram(true), i, 0), chord("ABAB|01"));
  }
  EXPECT_THROW(multiply_circle(chord("AA"), chord("AA"), 2, 0), StructuralError);
  EXPECT_THROW(multiply_circle(chord("AA"), ChordDiagram::empty_diagram(), 0, 1), StructuralError);
}

TEST(CircleProduct, PropertyMatchesOracle) {
  std::mt19937_64 rng(57);
  for (int trial = 0; trial < 300; ++trial) {
    const bool framed = trial % 3 == 0;
    const auto a = ChordDiagram::canonical(random_raw(rng, 1 + rng() % 3, framed));
    const auto b = ChordDiagram::canonical(random_raw(rng, 1 + rng() % 3, framed));
    const std::size_t i = rng() % a.points();
    const std::size_t j = rng() % b.points();
    const auto expected = oracle::circle_product(labelled_of(a), labelled_of(b), static_cast<int>(i),
                                                 static_cast<int>(j));
    ASSERT_EQ(circle_key_of(multiply_circle(a, b, i, j)), oracle::circle_key(expected));
  }
}

TEST(WellDefined, UnframedFourTermSmallOrders) {
  for (const auto& [a, b] : {std::pair{1U, 1U}, std::pair{1U, 2U}, std::pair{2U, 2U}}) {
    const auto report = well_defined_check(a, b, RelationSpec{false, true, false}, Field::rational);
    EXPECT_EQ(report.failing_pairs, 0U) << a << "," << b;
    EXPECT_TRUE(report.failures.empty());
    EXPECT_GT(report.products, 0U);
  }
}

TEST(WellDefined, WithoutRelationsMatchesOracleCount) {
  const auto report = well_defined_check(2, 2, RelationSpec{false, false, false}, Field::rational);
  std::size_t failing = 0;
  std::size_t products = 0;
  const auto list = enumerate_chord_diagrams(2);
  for (const auto& a : list) {
    for (const auto& b : list) {
      const auto reference = oracle::circle_key(oracle::circle_product(labelled_of(a), labelled_of(b), 0, 0));
      bool bad = false;
      for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
          ++products;
          bad |= oracle::circle_key(oracle::circle_product(labelled_of(a), labelled_of(b), i, j)) != reference;
        }
      }
      failing += bad ? 1 : 0;
    }
  }
  EXPECT_GE(report.failing_pairs, 1U);
  EXPECT_EQ(report.failing_pairs, failing);
  EXPECT_EQ(report.products, products);
}

TEST(WellDefined, FramedUniformOrderOne) {
  // Sections of a single chord are all the same arc, so nothing can fail.
  for (bool four : {false, true}) {
    const auto report = well_defined_check(1, 1, RelationSpec{true, four, false}, Field::rational);
    EXPECT_EQ(report.failing_pairs, 0U);
    EXPECT_TRUE(report.framed);
  }
}

TEST(WellDefined, DeterministicAcrossJobs) {
  const RelationSpec spec{true, true, false, SignSchema::from_flip_mask(0x00f)};
  const auto one = well_defined_check(2, 2, spec, Field::rational, 1);
  const auto many = well_defined_check(2, 2, spec, Field::rational, 4);
  EXPECT_EQ(one.failing_pairs, many.failing_pairs);
  ASSERT_EQ(one.failures.size(), many.failures.size());
  for (std::size_t k = 0; k < one.failures.size(); ++k) {
    EXPECT_EQ(one.failures[k].a, many.failures[k].a);
    EXPECT_EQ(one.failures[k].product, many.failures[k].product);
  }
}

TEST(Commutator, UnframedCircleCommutes) {
  for (const auto& [a, b] : {std::pair{1U, 1U}, std::pair{1U, 2U}, std::pair{1U, 3U}, std::pair{2U, 2U}}) {
    const auto report =
        commutator_check(a, b, RelationSpec{false, true, false}, Field::rational, SpaceShape::circle);
    EXPECT_EQ(report.non_commuting, 0U);
    EXPECT_EQ(report.commuting, report.pairs);
    EXPECT_FALSE(report.convention_dependent);
  }
}

TEST(Commutator, ArcMatchesOracle) {
  for (bool framed : {false, true}) {
    for (const auto& [a, b] : {std::pair{1, 1}, std::pair{1, 2}}) {
      const auto report = commutator_check(static_cast<std::size_t>(a), static_cast<std::size_t>(b),
                                           RelationSpec{framed, true, false}, Field::rational, SpaceShape::arc);
      EXPECT_EQ(report.commuting, oracle_commuting(a, b, framed, false))
          << a << "," << b << (framed ? " framed" : "");
      EXPECT_EQ(report.commuting + report.non_commuting, report.pairs);
    }
  }
}

TEST(Commutator, FramedArcOrderOne) {
  const auto report =
      commutator_check(1, 1, RelationSpec{true, true, false}, Field::rational, SpaceShape::arc);
  EXPECT_EQ(report.pairs, 3U);
  EXPECT_EQ(report.commuting, 3U);
}

TEST(Phi, Examples) {
  LinearCombination<ChordDiagram> v;
  v.add(chord("AA|1"), 3);
  v.add(chord("AABB|11"), 2);
  v.add(chord("ABAB|01"), 1);
  const auto w = phi(v);
  EXPECT_EQ(w.coefficient(chord("AA|1")), -3);
  EXPECT_EQ(w.coefficient(chord("AABB|11")), 2);
  EXPECT_EQ(w.coefficient(chord("ABAB|01")), -1);
  EXPECT_THROW(phi(LinearCombination<ChordDiagram>(chord("AA"))), StructuralError);
}

TEST(Phi, PropertyInvolution) {
  std::mt19937_64 rng(5);
  const auto pool = enumerate_framed_diagrams(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto v = random_combination(rng, pool, 5);
    ASSERT_EQ(phi(phi(v)), v);
    ASSERT_EQ(phi(v + v), phi(v) + phi(v));
  }
}

TEST(Phi, UniformIntertwinesWithItself) {
  for (std::size_t n = 0; n <= 4; ++n) {
    const auto report = check_phi_intertwine(SignSchema::uniform(), SignSchema::uniform(), n, Field::rational);
    EXPECT_TRUE(report.holds) << n;
    EXPECT_EQ(report.outside_span, 0U);
    EXPECT_EQ(report.rank_a, report.rank_b);
  }
  for (std::size_t n = 1; n <= 3; ++n) {
    EXPECT_TRUE(check_phi_intertwine_arc(SignSchema::uniform(), SignSchema::uniform(), n, Field::rational).holds);
  }
}

TEST(Phi, DifferentRanksNeverIntertwine) {
  const auto uniform_rank = rank(generate_relations(3, RelationSpec{true, true, true}), Field::rational);
  std::size_t found = 0;
  for (unsigned mask = 1; mask < 4096 && found < 3; mask += 37) {
    const auto s = SignSchema::from_flip_mask(mask);
    const auto r = rank(generate_relations(3, RelationSpec{true, true, true, s}), Field::rational);
    const auto report = check_phi_intertwine(SignSchema::uniform(), s, 3, Field::rational);
    EXPECT_EQ(report.rank_b, r);
    if (r != uniform_rank) {
      EXPECT_FALSE(report.holds) << s.name();
      ++found;
    }
  }
  EXPECT_GT(found, 0U);
}

TEST(Phi, SectorFlipsSpanTheUniformSpace) {
  // Negating every generator of one framing sector leaves the span alone.
  const auto reference = quotient_basis(3, true, generate_relations(3, RelationSpec{true, true, true}),
                                        Field::rational);
  for (unsigned mask : kSectorFlips) {
    const auto rels = generate_relations(3, RelationSpec{true, true, true, SignSchema::from_flip_mask(mask)});
    for (const auto& r : rels) ASSERT_TRUE(reference.in_span(r.terms)) << mask;
    EXPECT_EQ(rank(rels, Field::rational), reference.rank());
    EXPECT_TRUE(check_phi_intertwine(SignSchema::uniform(), SignSchema::from_flip_mask(mask), 3,
                                     Field::rational)
                    .holds);
  }
}

TEST(SchemaSearch, OrdersTwoAndThree) {
  const auto report = schema_search({2, 3}, Field::rational);
  ASSERT_EQ(report.levels.size(), 2U);
  EXPECT_EQ(report.levels[0].order, 2U);
  EXPECT_EQ(report.levels[0].span_classes, 8U);
  EXPECT_EQ(report.levels[0].with_uniform.size(), 64U);
  EXPECT_EQ(report.levels[1].with_uniform, kSectorFlips);
  EXPECT_EQ(report.stable, kSectorFlips);
  EXPECT_FALSE(report.all_stable);
  EXPECT_EQ(report.starred, "mask-00f");
  for (unsigned m : report.levels[1].with_uniform) {
    EXPECT_NE(std::find(report.levels[0].with_uniform.begin(), report.levels[0].with_uniform.end(), m),
              report.levels[0].with_uniform.end());
  }
}
