#include "antitop/modal.hpp"

#include <random>

#include <gtest/gtest.h>

#include "antitop/core.hpp"
#include "antitop/error.hpp"
#include "test_util.hpp"

namespace antitop::modal {
namespace {

using antitop::testing::all_spaces;
using antitop::testing::family_of;
using antitop::testing::set_of;

Formula v(const char* name) { return Formula::var(name); }

const char* kGamma = "[]p & []q -> ![](p|q)";

TEST(ParseTest, GammaStructure) {
  const auto expected = Formula::implication(
      Formula::conjunction(Formula::box(v("p")), Formula::box(v("q"))),
      Formula::negation(Formula::box(Formula::disjunction(v("p"), v("q")))));
  EXPECT_EQ(parse_formula(kGamma), expected);
  EXPECT_EQ(to_string(expected), "[]p & []q -> ![](p | q)");
}

TEST(ParseTest, AtomsAndDiamond) {
  EXPECT_EQ(parse_formula("p"), v("p"));
  EXPECT_EQ(parse_formula("  x_1 "), v("x_1"));
  EXPECT_EQ(parse_formula("<>p"), Formula::negation(Formula::box(Formula::negation(v("p")))));
}

TEST(ParseTest, PrecedenceAndAssociativity) {
  EXPECT_EQ(parse_formula("p -> q -> r"),
            Formula::implication(v("p"), Formula::implication(v("q"), v("r"))));
  EXPECT_EQ(parse_formula("p | q & r"),
            Formula::disjunction(v("p"), Formula::conjunction(v("q"), v("r"))));
  EXPECT_EQ(parse_formula("p & q & r"),
            Formula::conjunction(Formula::conjunction(v("p"), v("q")), v("r")));
  EXPECT_EQ(parse_formula("!p & q"), Formula::conjunction(Formula::negation(v("p")), v("q")));
  EXPECT_EQ(parse_formula("(p -> q) -> r"),
            Formula::implication(Formula::implication(v("p"), v("q")), v("r")));
}

std::size_t error_position(const char* text) {
  try {
    parse_formula(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  ADD_FAILURE() << "no parse error for " << text;
  return 0;
}

TEST(ParseTest, ErrorsCarryPositions) {
  EXPECT_EQ(error_position("p & #"), 4U);
  EXPECT_EQ(error_position("(p & q"), 0U);
  EXPECT_EQ(error_position("p & q)"), 5U);
  EXPECT_EQ(error_position("p &"), 3U);
  EXPECT_EQ(error_position("p & & q"), 4U);
  EXPECT_EQ(error_position("p q"), 2U);
  EXPECT_EQ(error_position("P"), 0U);
  EXPECT_EQ(error_position("[ ]p"), 0U);
  EXPECT_EQ(error_position(""), 0U);
}

Formula random_formula(std::mt19937_64& rng, int depth) {
  static const char* kVars[] = {"p", "q", "r", "s1"};
  const auto pick = depth <= 0 ? 0 : rng() % 6;
  switch (pick) {
    case 0: return Formula::var(kVars[rng() % 4]);
    case 1: return Formula::negation(random_formula(rng, depth - 1));
    case 2: return Formula::box(random_formula(rng, depth - 1));
    case 3: return Formula::conjunction(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    case 4: return Formula::disjunction(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    default:
      return Formula::implication(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
  }
}

TEST(ParseTest, PrintParseRoundTrip) {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 100; ++i) {
    const auto f = random_formula(rng, 5);
    const auto text = to_string(f);
    const auto parsed = parse_formula(text);
    EXPECT_EQ(parsed, f) << text;
    EXPECT_EQ(to_string(parsed), text);
  }
}

class TwoWorldModel : public ::testing::Test {
 protected:
  Universe worlds = Universe::numbered(2);
  SetFamily frame = family_of(worlds, {{"1"}});
  Model model{frame, {{"p", set_of(worlds, {"1"})}}};
};

TEST_F(TwoWorldModel, TruthSets) {
  EXPECT_EQ(truth_set(model, parse_formula("[]p")), worlds.full_set());
  EXPECT_EQ(truth_set(model, parse_formula("[]p -> p")), set_of(worlds, {"1"}));
  EXPECT_EQ(truth_set(model, parse_formula("p | !p")), worlds.full_set());
  EXPECT_FALSE(is_valid_in_model(model, parse_formula("[]p -> p")));
  EXPECT_TRUE(is_valid_in_model(Model(frame, {{"p", worlds.full_set()}}), v("p")));
}

TEST_F(TwoWorldModel, UnvaluedVariableIsNamed) {
  try {
    truth_set(model, parse_formula("p & zeta"));
    FAIL() << "expected EvaluationError";
  } catch (const EvaluationError& e) {
    EXPECT_NE(std::string(e.what()).find("zeta"), std::string::npos);
  }
}

TEST(ModelTest, RejectsNonAntiTopologyAndWrongWidth) {
  const Universe u = Universe::numbered(2);
  EXPECT_THROW(Model(family_of(u, {{"1"}, {"1", "2"}}), {}), NotAntiTopology);
  EXPECT_THROW(Model(family_of(u, {{"1"}}), {{"p", SubsetMask(1, 3)}}), UniverseMismatch);
}

// Independent boolean evaluator for box-free formulas.
bool eval_bool(const Formula& f, const std::map<std::string, bool>& env) {
  switch (f.op()) {
    case Op::kVar: return env.at(f.name());
    case Op::kNot: return !eval_bool(f.lhs(), env);
    case Op::kAnd: return eval_bool(f.lhs(), env) && eval_bool(f.rhs(), env);
    case Op::kOr: return eval_bool(f.lhs(), env) || eval_bool(f.rhs(), env);
    case Op::kImplies: return !eval_bool(f.lhs(), env) || eval_bool(f.rhs(), env);
    case Op::kBox: break;
  }
  ADD_FAILURE() << "box in a box-free formula";
  return false;
}

bool box_free(const Formula& f) {
  switch (f.op()) {
    case Op::kVar: return true;
    case Op::kBox: return false;
    case Op::kNot: return box_free(f.lhs());
    default: return box_free(f.lhs()) && box_free(f.rhs());
  }
}

TEST(TruthSetProperties, BooleanLayerMatchesTruthTable) {
  std::mt19937_64 rng(7);
  const Universe u = Universe::numbered(2);
  const SetFamily frame = family_of(u, {{"1"}});
  int checked = 0;
  while (checked < 200) {
    const auto f = random_formula(rng, 4);
    if (!box_free(f)) continue;
    ++checked;
    const auto vars = f.variables();
    for (std::uint32_t row = 0; row < (1U << vars.size()); ++row) {
      std::map<std::string, bool> env;
      Valuation val;
      for (std::size_t k = 0; k < vars.size(); ++k) {
        env[vars[k]] = (row >> k) & 1U;
        // World 1 follows the row; world 2 the negated row.
        val[vars[k]] = SubsetMask(((row >> k) & 1U) ? 1 : 2, 2);
      }
      const auto truth = truth_set(Model(frame, val), f);
      EXPECT_EQ(truth.contains(0), eval_bool(f, env)) << to_string(f);
      std::map<std::string, bool> flipped;
      for (auto& [k, b] : env) flipped[k] = !b;
      EXPECT_EQ(truth.contains(1), eval_bool(f, flipped)) << to_string(f);
    }
  }
}

TEST(TruthSetProperties, BoxIsAllOrNothing) {
  std::mt19937_64 rng(1000);
  const auto spaces = all_spaces(4, true);
  for (int i = 0; i < 1000; ++i) {
    const auto& space = spaces[rng() % spaces.size()];
    const auto n = space.universe().size();
    Valuation val;
    for (const char* name : {"p", "q", "r", "s1"}) {
      val[name] = SubsetMask(rng() & SubsetMask::full_bits(n), n);
    }
    const auto f = Formula::box(random_formula(rng, 4));
    const auto truth = truth_set(Model(space, val), f);
    EXPECT_TRUE(truth.is_empty() || truth.is_full());
  }
}

TEST(TautologyTest, ImplicationFromBoxFailsOnTwoWorlds) {
  const Universe u = Universe::numbered(2);
  const auto r = is_tautology_in_space(family_of(u, {{"1"}}), parse_formula("[]p -> p"));
  EXPECT_FALSE(r);
  ASSERT_TRUE(r.countermodel);
  EXPECT_EQ(r.countermodel->valuation().at("p"), set_of(u, {"1"}));
}

TEST(TautologyTest, ExcludedMiddleEverywhere) {
  for (const auto& f : all_spaces(4, true)) EXPECT_TRUE(is_tautology_in_space(f, parse_formula("p | !p")));
}

// γ fails whenever φ and ψ share an anti-open truth set: both boxes hold and
// so does the box of their union.
TEST(TautologyTest, GammaFailsWhenValuationsCoincide) {
  const auto gamma = parse_formula(kGamma);
  const auto chain = family_of(Universe::numbered(4), {{"1", "2"}, {"2", "3"}, {"3", "4"}});
  const auto in_chain = is_tautology_in_space(chain, gamma);
  EXPECT_FALSE(in_chain);
  ASSERT_TRUE(in_chain.countermodel);
  const auto& val = in_chain.countermodel->valuation();
  EXPECT_EQ(val.at("p"), val.at("q"));
  EXPECT_TRUE(chain.contains(val.at("p")));

  const auto upto = is_anti_tautology_upto(4, gamma);
  EXPECT_FALSE(upto);
  ASSERT_TRUE(upto.countermodel);
  const Universe ab = Universe::lettered(2);
  EXPECT_EQ(upto.countermodel->family(), family_of(ab, {{"a"}}));
  EXPECT_EQ(upto.countermodel->valuation().at("p"), set_of(ab, {"a"}));
  EXPECT_EQ(upto.countermodel->valuation().at("q"), set_of(ab, {"a"}));
}

TEST(TautologyTest, GammaHoldsForDistinctValuations) {
  const auto gamma = parse_formula(kGamma);
  for (const auto& space : all_spaces(4, true)) {
    const auto n = space.universe().size();
    for (std::uint64_t p = 0; p <= SubsetMask::full_bits(n); ++p) {
      for (std::uint64_t q = 0; q <= SubsetMask::full_bits(n); ++q) {
        if (p == q) continue;
        const Model m(space, {{"p", SubsetMask(p, n)}, {"q", SubsetMask(q, n)}});
        EXPECT_TRUE(is_valid_in_model(m, gamma));
      }
    }
  }
}

TEST(TautologyTest, UptoRegressions) {
  const auto box_t = is_anti_tautology_upto(2, parse_formula("[]p -> p"));
  EXPECT_FALSE(box_t);
  ASSERT_TRUE(box_t.countermodel);
  EXPECT_EQ(box_t.countermodel->worlds().size(), 2U);

  // Frozen by exhaustion: V(p)={a,b}, V(q)={a} on {{a}} falsifies it.
  const auto split_box = is_anti_tautology_upto(4, parse_formula("[](p & q) -> ([]p & []q)"));
  EXPECT_FALSE(split_box);
  ASSERT_TRUE(split_box.countermodel);
  const Universe ab = Universe::lettered(2);
  EXPECT_EQ(split_box.countermodel->valuation().at("p"), ab.full_set());
  EXPECT_EQ(split_box.countermodel->valuation().at("q"), set_of(ab, {"a"}));

  EXPECT_TRUE(is_anti_tautology_upto(4, parse_formula("[]p -> !<>!p")));
}

TEST(TautologyTest, ParallelMatchesSerial) {
  const char* formulas[] = {kGamma, "[]p -> p", "[](p & q) -> ([]p & []q)", "p | !p",
                            "[]p | []!p | [](p -> q)"};
  for (const auto& space : all_spaces(4, true)) {
    for (const char* text : formulas) {
      const auto f = parse_formula(text);
      const auto par = is_tautology_in_space(space, f);
      const auto ser = is_tautology_in_space_serial(space, f);
      ASSERT_EQ(par.tautology, ser.tautology) << text << " on " << to_string(space);
      if (!par) EXPECT_EQ(par.countermodel->valuation(), ser.countermodel->valuation());
    }
  }
}

TEST(TautologyTest, GuardsAndRanges) {
  const auto big = SetFamily(Universe::numbered(9), {});
  EXPECT_THROW(is_tautology_in_space(big, parse_formula("p & q")), CapacityError);
  EXPECT_THROW(is_anti_tautology_upto(1, v("p")), InvalidArgument);
  EXPECT_THROW(is_anti_tautology_upto(5, v("p")), InvalidArgument);
  const Universe u = Universe::numbered(2);
  EXPECT_THROW(is_tautology_in_space(family_of(u, {{"1"}, {"1", "2"}}), v("p")), NotAntiTopology);
}

}  // namespace
}  // namespace antitop::modal
