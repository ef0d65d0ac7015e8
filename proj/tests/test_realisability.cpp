#include <gtest/gtest.h>

#include "chordspace/realisability.hpp"
#include "support.hpp"

using namespace chordspace;
using namespace testing_support;

namespace {

ChordDiagram chord(std::string_view text) { return parse_chord_diagram(text); }

const HomologyTrivialModel kTrivial;
const SingleClassModel kSingle;

}  // namespace

TEST(Models, Examples) {
  EXPECT_TRUE(kTrivial.realisable(chord("AA|0")));
  EXPECT_FALSE(kTrivial.realisable(chord("AA|1")));
  EXPECT_TRUE(kSingle.realisable(chord("AA|1")));
  EXPECT_TRUE(kSingle.realisable(chord("AA|0")));
  EXPECT_TRUE(kTrivial.realisable(ChordDiagram::empty_diagram(true)));
  EXPECT_EQ(make_model("trivial")->mode(), "trivial");
  EXPECT_EQ(make_model("single-class")->mode(), "single-class");
  EXPECT_THROW(make_model("both"), StructuralError);
}

TEST(Models, RealisableSetsAtLowOrder) {
  EXPECT_EQ(realisable_set(0, kTrivial).size(), 1U);
  const auto one = realisable_set(1, kTrivial);
  ASSERT_EQ(one.size(), 1U);
  EXPECT_EQ(one[0].encode(), "AA|0");
  EXPECT_EQ(realisable_set(1, kSingle).size(), 2U);
  EXPECT_EQ(realisable_set(3, kTrivial).size(), enumerate_chord_diagrams(3).size());
}

TEST(Models, SingleClassMatchesBruteForce) {
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const auto& d : enumerate_framed_diagrams(n)) {
      ASSERT_EQ(kSingle.realisable(d), oracle::realisable_single_class(labelled_of(d))) << d.encode();
    }
  }
}

TEST(Models, PropertyIndependentOfRotation) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    const RawWord raw = random_raw(rng, n, true);
    const bool expected = kSingle.realisable(ChordDiagram::canonical(raw));
    for (std::size_t k = 0; k < 2 * n; ++k) {
      oracle::Labelled rot;
      const RawWord r = rotated(raw, k);
      rot.seq = r.labels;
      for (auto b : r.framing) rot.bit.push_back(b);
      ASSERT_EQ(oracle::realisable_single_class(rot), expected);
    }
  }
}

TEST(Models, TrivialRealisableImpliesSingleClass) {
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const auto& d : enumerate_framed_diagrams(n)) {
      if (kTrivial.realisable(d)) {
        ASSERT_TRUE(kSingle.realisable(d));
      }
      ASSERT_EQ(kTrivial.realisable(d), d.odd_chords() == 0);
    }
  }
}

TEST(Incidence, HalvesPartitionTheArcs) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& d : enumerate_framed_diagrams(n)) {
      const auto half = half_incidence(d);
      const auto other = half_incidence(d, true);
      ASSERT_EQ(half.size(), n);
      for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t k = 0; k < d.points(); ++k) ASSERT_NE(half[c].test(k), other[c].test(k));
      }
    }
  }
}

TEST(Incidence, LabelingSolvesBothHalves) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& d : enumerate_framed_diagrams(n)) {
      const auto x = arc_labeling(d);
      ASSERT_EQ(x.has_value(), kSingle.realisable(d));
      if (!x) continue;
      for (bool complementary : {false, true}) {
        const auto rows = half_incidence(d, complementary);
        for (std::size_t c = 0; c < n; ++c) {
          int sum = 0;
          for (std::size_t k = 0; k < d.points(); ++k) sum ^= rows[c].test(k) ? (*x)[k] : 0;
          ASSERT_EQ(sum, d.framing()[c]) << d.encode();
        }
      }
    }
  }
}

TEST(Lemma, NoViolationsUpToOrderFour) {
  for (std::size_t n = 2; n <= 4; ++n) {
    for (const RealisabilityModel* model : {static_cast<const RealisabilityModel*>(&kTrivial),
                                            static_cast<const RealisabilityModel*>(&kSingle)}) {
      const auto report = lemma_4T_closure_check(n, SignSchema::uniform(), *model);
      EXPECT_TRUE(report.violations.empty()) << model->mode() << " n = " << n;
      EXPECT_GT(report.quadruples, 0U);
      EXPECT_EQ(report.all_realisable + report.none_realisable, report.quadruples);
    }
  }
}

TEST(Lemma, TrivialModelSplitsByFraming) {
  // A quadruple keeps its framings, so it is realisable exactly when all framings vanish.
  const auto report = lemma_4T_closure_check(3, SignSchema::uniform(), kTrivial);
  std::size_t zero = 0;
  std::set<std::vector<ChordDiagram>> seen;
  for (const auto& r : four_term_skeleton(3, true)) {
    auto p = r.placements;
    std::sort(p.begin(), p.end());
    if (seen.insert(p).second && p[0].odd_chords() == 0) ++zero;
  }
  EXPECT_EQ(report.quadruples, seen.size());
  EXPECT_EQ(report.all_realisable, zero);
}

TEST(Restricted, Dimensions) {
  const RelationSpec both{true, true, true};
  EXPECT_EQ(restricted_quotient_dim(0, both, kTrivial, Field::rational).dimension, 1U);
  // Trivial model: the zero-framed copy of the unframed quotient.
  for (std::size_t n = 1; n <= 4; ++n) {
    EXPECT_EQ(restricted_quotient_dim(n, both, kTrivial, Field::rational).dimension,
              oracle::quotient_dim(static_cast<int>(n), false, true, true).dim())
        << n;
  }
  // Single class realises everything at order 2.
  const auto two = restricted_quotient_dim(2, both, kSingle, Field::rational);
  EXPECT_EQ(two.columns, 6U);
  EXPECT_EQ(two.dimension, oracle::quotient_dim(2, true, true, true).dim());
  EXPECT_EQ(two.dimension, 4U);
  EXPECT_TRUE(two.lemma_holds);
  EXPECT_THROW(restricted_quotient_dim(2, RelationSpec{false, true, true}, kTrivial, Field::rational),
               StructuralError);
}

TEST(Restricted, KeepsOnlyRealisableRelations) {
  const auto rels = generate_relations(3, RelationSpec{true, true, true});
  const auto kept = restrict_relations(rels, kTrivial);
  EXPECT_LT(kept.size(), rels.size());
  for (const auto& r : kept) {
    for (const auto& p : r.placements) ASSERT_EQ(p.odd_chords(), 0);
  }
}
