#include "antitop/core.hpp"

#include <gtest/gtest.h>

#include "antitop/error.hpp"
#include "test_util.hpp"

namespace antitop {
namespace {

using testing::all_spaces;
using testing::family_of;
using testing::set_of;

const Universe kFour = Universe::numbered(4);
const Universe kFive = Universe::lettered(5);

SetFamily chain() { return family_of(kFour, {{"1", "2"}, {"2", "3"}, {"3", "4"}}); }
SetFamily blocks() { return family_of(kFive, {{"a", "b"}, {"c", "d"}, {"e"}}); }

TEST(UniverseTest, RejectsDuplicateAndEmptyLabels) {
  EXPECT_THROW(Universe({"a", "a"}), InvalidArgument);
  EXPECT_THROW(Universe(std::vector<std::string>{}), InvalidArgument);
  EXPECT_THROW(Universe({"a", ""}), InvalidArgument);
}

TEST(UniverseTest, IndexAndLabelsAreBijective) {
  const Universe u({"x", "y", "z"});
  for (std::size_t i = 0; i < u.size(); ++i) EXPECT_EQ(u.index_of(u.label(i)), i);
  EXPECT_FALSE(u.index_of("w"));
  EXPECT_THROW(u.subset({"w"}), InvalidArgument);
}

TEST(SubsetMaskTest, ComplementIsInvolution) {
  for (std::uint64_t b = 0; b < 32; ++b) {
    SubsetMask m(b, 5);
    EXPECT_EQ(m.complement().complement(), m);
    EXPECT_EQ((m | m.complement()), SubsetMask::full(5));
    EXPECT_TRUE((m & m.complement()).is_empty());
  }
}

TEST(SetFamilyTest, CanonicalFormSortsAndDeduplicates) {
  const SetFamily f(kFour, {set_of(kFour, {"3", "4"}), set_of(kFour, {"1", "2"}),
                            set_of(kFour, {"2", "1"})});
  ASSERT_EQ(f.size(), 2U);
  EXPECT_EQ(f.duplicates_collapsed(), 1U);
  EXPECT_LT(f.members()[0], f.members()[1]);
  EXPECT_EQ(f.members()[0], set_of(kFour, {"1", "2"}));
}

TEST(SetFamilyTest, RejectsForeignWidth) {
  EXPECT_THROW(SetFamily(kFour, {SubsetMask(1, 3)}), UniverseMismatch);
}

TEST(IsAntiTopologyTest, PaperExamples) {
  EXPECT_TRUE(is_anti_topology(chain()));
  EXPECT_TRUE(is_anti_topology(family_of(Universe::numbered(2), {{"1"}, {"2"}})));
  EXPECT_TRUE(is_anti_topology(blocks()));
}

TEST(IsAntiTopologyTest, SubsetOfMemberIsRejectedWithWitness) {
  const Universe u = Universe::numbered(3);
  const auto r = is_anti_topology(family_of(u, {{"1", "2"}, {"2"}}));
  EXPECT_FALSE(r);
  ASSERT_EQ(r.violation, Violation::kIntersectionMember);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(r.witness->first, set_of(u, {"2"}));
  EXPECT_EQ(r.witness->second, set_of(u, {"1", "2"}));
}

TEST(IsAntiTopologyTest, SinglePointUniverseIsTooSmall) {
  const auto r = is_anti_topology(SetFamily(Universe({"1"}), {}));
  EXPECT_FALSE(r);
  EXPECT_EQ(r.violation, Violation::kUniverseTooSmall);
}

TEST(IsAntiTopologyTest, EmptyAndFullSetsAreRejected) {
  EXPECT_EQ(is_anti_topology(SetFamily(kFour, {kFour.empty_set()})).violation,
            Violation::kContainsEmpty);
  EXPECT_EQ(is_anti_topology(SetFamily(kFour, {kFour.full_set()})).violation,
            Violation::kContainsFull);
}

TEST(IsAntiTopologyTest, EmptyFamilyIsDegenerate) {
  const auto r = is_anti_topology(SetFamily(kFour, {}));
  EXPECT_TRUE(r.ok);
  EXPECT_TRUE(r.degenerate);
  EXPECT_FALSE(is_anti_topology(chain()).degenerate);
}

TEST(OracleTest, PaperExamples) {
  EXPECT_TRUE(is_anti_topology_oracle(chain(), 3));
  EXPECT_TRUE(is_anti_topology_oracle(blocks(), 3));
  EXPECT_THROW(is_anti_topology_oracle(chain(), 1), InvalidArgument);
}

// Every family of at most five subsets of a 4-point universe, including
// families containing the empty set or the universe.
TEST(OracleTest, PairwiseCheckMatchesSubfamilyOracle) {
  const std::size_t n = 4;
  std::size_t checked = 0;
  for (std::uint32_t choice = 0; choice < (1U << 16); ++choice) {
    if (std::popcount(choice) > 5) continue;
    std::vector<SubsetMask> members;
    for (std::uint64_t b = 0; b < 16; ++b) {
      if ((choice >> b) & 1U) members.emplace_back(b, n);
    }
    const SetFamily f(kFour, members);
    ASSERT_EQ(is_anti_topology(f).ok, is_anti_topology_oracle(f, f.size() < 2 ? 2 : f.size()))
        << to_string(f);
    ++checked;
  }
  EXPECT_EQ(checked, 6885U);
}

TEST(ClosedFamilyTest, PaperExamples) {
  EXPECT_EQ(closed_family(chain()), family_of(kFour, {{"1", "2"}, {"1", "4"}, {"3", "4"}}));
  EXPECT_EQ(closed_family(blocks()),
            family_of(kFive, {{"c", "d", "e"}, {"a", "b", "e"}, {"a", "b", "c", "d"}}));
}

TEST(ClosedFamilyTest, InvolutionPreservesSize) {
  for (const auto& f : all_spaces(4, true)) {
    const auto closed = closed_family(f);
    EXPECT_EQ(closed.size(), f.size());
    EXPECT_EQ(closed_family(closed), f);
  }
}

TEST(AssociatedTopologyTest, PaperExamples) {
  EXPECT_EQ(associated_topology(chain()),
            family_of(kFour, {{}, {"1", "2", "3", "4"}, {"1", "2"}, {"2", "3"}, {"3", "4"},
                              {"2"}, {"3"}, {"1", "2", "3"}, {"2", "3", "4"}}));
  EXPECT_EQ(associated_topology(blocks()),
            family_of(kFive, {{}, {"a", "b", "c", "d", "e"}, {"a", "b"}, {"c", "d"}, {"e"},
                              {"a", "b", "c", "d"}, {"a", "b", "e"}, {"c", "d", "e"}}));
}

TEST(AssociatedTopologyTest, IsATopologyContainingTheFamily) {
  for (const auto& f : all_spaces(4, true)) {
    const auto tau = associated_topology(f);
    EXPECT_TRUE(classify_structure(tau).is_topology) << to_string(f);
    for (auto m : f.members()) EXPECT_TRUE(tau.contains(m));
    EXPECT_EQ(associated_topology(tau), tau);
  }
}

TEST(AssociatedTopologyTest, GuardsLargeUniverses) {
  EXPECT_THROW(associated_topology(SetFamily(Universe::numbered(25), {})), CapacityError);
  EXPECT_NO_THROW(associated_topology(singletons(Universe::numbered(8))));
}

TEST(ClassifyStructureTest, PaperExamples) {
  const auto anti = classify_structure(chain());
  EXPECT_TRUE(anti.is_anti_topology);
  EXPECT_FALSE(anti.is_topology || anti.is_supra || anti.is_infra || anti.is_minimal_structure ||
               anti.is_weak_structure);

  const Universe abc = Universe::lettered(3);
  const auto weak = classify_structure(family_of(abc, {{}, {"a"}}));
  EXPECT_TRUE(weak.is_weak_structure);
  EXPECT_FALSE(weak.is_minimal_structure || weak.is_infra || weak.is_supra || weak.is_topology ||
               weak.is_anti_topology);

  const auto indiscrete = classify_structure(SetFamily(abc, {abc.empty_set(), abc.full_set()}));
  EXPECT_TRUE(indiscrete.is_topology && indiscrete.is_supra && indiscrete.is_infra &&
              indiscrete.is_minimal_structure && indiscrete.is_weak_structure);
}

// Consistency of the flags over every family on a 3-point universe.
TEST(ClassifyStructureTest, FlagImplicationsHoldForAllFamilies) {
  const Universe u = Universe::lettered(3);
  for (std::uint32_t choice = 0; choice < 256; ++choice) {
    std::vector<SubsetMask> members;
    for (std::uint64_t b = 0; b < 8; ++b) {
      if ((choice >> b) & 1U) members.emplace_back(b, 3);
    }
    const auto c = classify_structure(SetFamily(u, members));
    if (c.is_topology) {
      EXPECT_TRUE(c.is_supra && c.is_infra && c.is_minimal_structure && c.is_weak_structure);
    }
    if (c.is_infra || c.is_supra) EXPECT_TRUE(c.is_minimal_structure);
    if (c.is_minimal_structure) EXPECT_TRUE(c.is_weak_structure);
    if (c.is_anti_topology) {
      EXPECT_FALSE(c.is_topology || c.is_supra || c.is_infra || c.is_minimal_structure ||
                   c.is_weak_structure);
    }
  }
}

TEST(MakeExampleTest, SingletonsAndSplit) {
  const auto s = make_example(Singletons{3});
  EXPECT_EQ(s, family_of(Universe::lettered(3), {{"a"}, {"b"}, {"c"}}));
  EXPECT_TRUE(is_anti_topology(s));

  const Universe u = Universe::numbered(3);
  const auto sp = make_example(Split{u, set_of(u, {"1", "2"})});
  EXPECT_EQ(sp, family_of(u, {{"1", "2"}, {"3"}}));
  EXPECT_TRUE(is_anti_topology(sp));
}

TEST(MakeExampleTest, KUniformAndPairChain) {
  const auto k = make_example(KUniform{4, 2});
  EXPECT_EQ(k.size(), 6U);
  for (auto m : k.members()) EXPECT_EQ(m.count(), 2U);
  EXPECT_TRUE(is_anti_topology(k));
  EXPECT_TRUE(is_anti_topology_oracle(k, 6));

  const auto chain5 = make_example(PairChain{5});
  EXPECT_EQ(chain5, family_of(Universe::lettered(5), {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"}}));
  EXPECT_TRUE(is_anti_topology(chain5));
}

TEST(MakeExampleTest, FixturesMatchLiterals) {
  EXPECT_EQ(make_example(Fixture{1}), chain());
  EXPECT_EQ(make_example(Fixture{3}), blocks());
  EXPECT_TRUE(is_anti_topology(make_example(Fixture{2})));
  EXPECT_THROW(make_example(Fixture{4}), InvalidArgument);
}

TEST(MakeExampleTest, InvalidParametersAreRejected) {
  EXPECT_THROW(make_example(KUniform{4, 0}), InvalidArgument);
  EXPECT_THROW(make_example(KUniform{4, 4}), InvalidArgument);
  EXPECT_THROW(make_example(PairChain{2}), InvalidArgument);
  EXPECT_THROW(make_example(Singletons{1}), InvalidArgument);
  const Universe u = Universe::numbered(3);
  EXPECT_THROW(make_example(Split{u, u.empty_set()}), InvalidArgument);
  EXPECT_THROW(make_example(Split{u, u.full_set()}), InvalidArgument);
}

// Generated families are anti-topologies across a range of parameters.
TEST(MakeExampleTest, GeneratorsProduceAntiTopologies) {
  for (std::size_t n = 2; n <= 8; ++n) {
    EXPECT_TRUE(is_anti_topology(make_example(Singletons{n})));
    for (std::size_t k = 1; k < n; ++k) EXPECT_TRUE(is_anti_topology(make_example(KUniform{n, k})));
    if (n >= 3) EXPECT_TRUE(is_anti_topology(make_example(PairChain{n})));
    const Universe u = Universe::lettered(n);
    for (std::uint64_t b = 1; b < SubsetMask::full_bits(n); ++b) {
      EXPECT_TRUE(is_anti_topology(make_example(Split{u, SubsetMask(b, n)})));
    }
  }
}

// Lemma suites over every anti-topology on at most four points.
TEST(AntiTopologyLemmas, SubsetsOfMembersAreNotMembers) {
  for (const auto& f : all_spaces(4)) {
    for (auto b : f.members()) {
      for (std::uint64_t a = 1; a < b.bits(); ++a) {
        SubsetMask sub(a, b.width());
        if (sub.is_subset_of(b)) EXPECT_FALSE(f.contains(sub)) << to_string(f);
      }
    }
  }
}

TEST(AntiTopologyLemmas, ClosedFamilyIsAntiClosedUnderMeetsAndJoins) {
  for (const auto& f : all_spaces(4)) {
    const auto closed = closed_family(f);
    auto members = closed.members();
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        EXPECT_FALSE(closed.contains(members[i] & members[j])) << to_string(f);
      }
    }
    // Every subfamily of at least two distinct members.
    const std::size_t m = members.size();
    for (std::uint32_t choice = 0; choice < (1U << m); ++choice) {
      if (std::popcount(choice) < 2) continue;
      SubsetMask join = f.universe().empty_set();
      for (std::size_t k = 0; k < m; ++k) {
        if ((choice >> k) & 1U) join = join | members[k];
      }
      EXPECT_FALSE(closed.contains(join)) << to_string(f);
    }
  }
}

}  // namespace
}  // namespace antitop
