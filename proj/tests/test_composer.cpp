#include <doctest.h>

#include <set>

#include "lc/composer.hpp"
#include "lc/text.hpp"
#include "support/random_formulas.hpp"

using lc::Formula;
using lc::ImplicationStructure;
using lc::Relation;

namespace {

ImplicationStructure impl(const char* text) {
  return ImplicationStructure::from_formula(lc::parse(text));
}

}  // namespace

TEST_SUITE("composer") {
  TEST_CASE("compose merges a shared context into a disjunctive branch") {
    const auto composed = lc::compose(impl("t & p -> r"), impl("t & q -> r"));
    CHECK(composed.str() == "t & (p | q) -> r");

    // Premise order is irrelevant after normalization.
    CHECK(lc::compose(impl("p & t -> r"), impl("t & q -> r")).str() == "t & (p | q) -> r");

    // A multi-conjunct context stays in the premise.
    CHECK(lc::compose(impl("a & b & p -> r"), impl("a & b & q -> r")).str() ==
          "a & b & (p | q) -> r");

    // Leftovers larger than one conjunct are disjoined as conjunctions.
    CHECK(lc::compose(impl("t & p1 & p2 -> r"), impl("t & q -> r")).str() ==
          "t & (p1 & p2 | q) -> r");
  }

  TEST_CASE("compose rejects mismatched or degenerate inputs") {
    CHECK_THROWS_AS(lc::compose(impl("t & p -> r"), impl("t & q -> s")), lc::ComposeError);
    CHECK_THROWS_AS(lc::compose(impl("p -> r"), impl("q -> r")), lc::ComposeError);
    // One premise contained in the other leaves an empty leftover.
    CHECK_THROWS_AS(lc::compose(impl("t & p -> r"), impl("t -> r")), lc::ComposeError);
    CHECK_THROWS_AS(lc::compose(impl("t & p -> r"), impl("t & p -> r")), lc::ComposeError);

    // The plain rule without a context is opt-in.
    CHECK(lc::compose(impl("p -> r"), impl("q -> r"), /*allow_empty_context=*/true).str() ==
          "p | q -> r");
  }

  TEST_CASE("compose output is equivalent to the conjunction of its inputs") {
    lc::RngStream rng(5150, 0);
    const char* atoms[] = {"a", "b", "c", "d", "e"};
    for (int i = 0; i < 200; ++i) {
      // Random split: context of 1-2 atoms, distinct leftover atoms, one conclusion.
      std::vector<Formula> ctx{Formula::atom(atoms[0])};
      if (rng.next_u64() & 1) ctx.push_back(Formula::atom(atoms[1]));
      auto premise1 = ctx;
      premise1.push_back(Formula::atom(atoms[2]));
      auto premise2 = ctx;
      premise2.push_back(Formula::atom(atoms[3]));
      ImplicationStructure g1(Formula::conjunction(premise1), Formula::atom(atoms[4]));
      ImplicationStructure g2(Formula::conjunction(premise2), Formula::atom(atoms[4]));
      const auto composed = lc::compose(g1, g2);
      CHECK(lc::are_equivalent(Formula::conjunction({g1.to_formula(), g2.to_formula()}),
                               composed.to_formula()));
    }
  }

  TEST_CASE("invert_all reproduces the two-conjunct enumeration") {
    const auto candidates = lc::invert_all(impl("p1 & p2 -> r"));
    REQUIRE(candidates.size() == 3);
    CHECK(candidates[0].structure.str() == "r -> p1 & p2");
    CHECK(candidates[0].moved.size() == 2);
    CHECK(candidates[1].structure.str() == "p1 & r -> p2");
    CHECK(candidates[1].moved == std::vector<Formula>{Formula::atom("p2")});
    CHECK(candidates[2].structure.str() == "p2 & r -> p1");
    CHECK(candidates[2].moved == std::vector<Formula>{Formula::atom("p1")});
  }

  TEST_CASE("invert_all covers the composed structure") {
    const auto candidates = lc::invert_all(impl("t & (p | q) -> r"));
    REQUIRE(candidates.size() == 3);
    bool found = false;
    for (const auto& candidate : candidates) {
      if (candidate.structure.str() == "t & r -> p | q") found = true;
    }
    CHECK(found);

    const auto single = lc::invert_all(impl("p -> r"));
    REQUIRE(single.size() == 1);
    CHECK(single[0].structure.str() == "r -> p");
  }

  TEST_CASE("invert_all yields 2^n - 1 distinct candidates") {
    const char* names[] = {"a", "b", "c", "d"};
    for (std::size_t n = 1; n <= 4; ++n) {
      std::vector<Formula> conjuncts;
      for (std::size_t i = 0; i < n; ++i) conjuncts.push_back(Formula::atom(names[i]));
      const Formula premise =
          n == 1 ? conjuncts[0] : Formula::conjunction(conjuncts);
      const auto candidates = lc::invert_all(ImplicationStructure(premise, Formula::atom("z")));
      CHECK(candidates.size() == (std::size_t{1} << n) - 1);
      std::set<std::string> rendered;
      for (const auto& candidate : candidates) rendered.insert(candidate.structure.str());
      CHECK(rendered.size() == candidates.size());
    }
  }

  TEST_CASE("conditionalize moves the negated other disjunct into the premise") {
    const auto inverse = impl("t & r -> p | q");
    const auto keep_p = lc::conditionalize(inverse, Formula::atom("p"));
    CHECK(keep_p.str() == "t & r & ~q -> p");
    const auto keep_q = lc::conditionalize(inverse, Formula::atom("q"));
    CHECK(keep_q.str() == "t & r & ~p -> q");

    CHECK(lc::classify(inverse, keep_p).relation == Relation::TautologicalEquivalence);
    CHECK(lc::classify(inverse, keep_q).relation == Relation::TautologicalEquivalence);

    CHECK_THROWS_AS(lc::conditionalize(impl("t & r -> p & q"), Formula::atom("p")),
                    lc::StructureError);
    CHECK_THROWS_AS(lc::conditionalize(inverse, Formula::atom("s")), lc::StructureError);
  }

  TEST_CASE("homogenize rewrites the disjunction as an exclusive one") {
    const auto inverse = impl("t & r -> p | q");
    const auto homogenized = lc::homogenize(inverse);
    CHECK(homogenized.str() == "t & r -> p ^ ~p & q");
    CHECK(lc::classify(inverse, homogenized).relation == Relation::TautologicalEquivalence);
    CHECK_THROWS_AS(lc::homogenize(impl("t & r -> p & q")), lc::StructureError);
  }

  TEST_CASE("homogenize and conditionalize stay equivalent on random disjunction conclusions") {
    lc::RngStream rng(31337, 0);
    for (int i = 0; i < 200; ++i) {
      const Formula premise = lc::testing::random_formula(rng, 2, false);
      const Formula left = Formula::atom("u");
      const Formula right = Formula::atom("v");
      const ImplicationStructure inv(premise, Formula::disjunction({left, right}));
      if (inv.conclusion().kind() != lc::Kind::Or) continue;  // premise may share u or v
      const auto h = lc::homogenize(inv);
      CHECK(lc::are_equivalent(inv.to_formula(), h.to_formula()));
      const auto c = lc::conditionalize(inv, inv.conclusion().parts()[0]);
      CHECK(lc::are_equivalent(inv.to_formula(), c.to_formula()));
    }
  }

  TEST_CASE("classify separates the composed structure from its inverse") {
    const auto composed = impl("t & (p | q) -> r");
    const auto inverse = impl("t & r -> p | q");
    const auto verdict = lc::classify(composed, inverse);
    CHECK(verdict.relation == Relation::Independent);

    // Enumeration-first witnesses for each failing direction.
    REQUIRE(verdict.forward_witness.has_value());
    CHECK(*verdict.forward_witness ==
          lc::Assignment{{"p", false}, {"q", false}, {"r", true}, {"t", true}});
    REQUIRE(verdict.backward_witness.has_value());
    CHECK(*verdict.backward_witness ==
          lc::Assignment{{"p", false}, {"q", true}, {"r", false}, {"t", true}});

    // Witnesses re-check by evaluation.
    const Formula fwd = Formula::implication(composed.to_formula(), inverse.to_formula());
    const Formula bwd = Formula::implication(inverse.to_formula(), composed.to_formula());
    CHECK_FALSE(lc::eval(fwd, *verdict.forward_witness));
    CHECK_FALSE(lc::eval(bwd, *verdict.backward_witness));

    // Any assignment with t,p true and q,r false also falsifies the backward
    // direction; classify's witness is simply the first in enumeration order.
    const lc::Assignment alternative{{"p", true}, {"q", false}, {"r", false}, {"t", true}};
    CHECK_FALSE(lc::eval(bwd, alternative));
  }

  TEST_CASE("classify recognizes equivalence and one-sided implication") {
    const auto inverse = impl("t & r -> p | q");
    CHECK(lc::classify(inverse, lc::homogenize(inverse)).relation ==
          Relation::TautologicalEquivalence);
    CHECK(lc::classify(inverse, inverse).relation == Relation::TautologicalEquivalence);

    const auto strong = impl("p & q -> r");
    const auto weak = impl("p & q & s -> r");
    const auto verdict = lc::classify(strong, weak);
    CHECK(verdict.relation == Relation::ForwardOnly);
    CHECK_FALSE(verdict.forward_witness.has_value());
    REQUIRE(verdict.backward_witness.has_value());
    CHECK(lc::classify(weak, strong).relation == Relation::BackwardOnly);
  }
}
