#include <doctest.h>

#include "lc/catalog.hpp"
#include "lc/text.hpp"

using lc::catalog::Group;
namespace cat = lc::catalog;

namespace {

lc::geo::SamplerConfig small_cfg(std::uint64_t seed, std::uint64_t samples) {
  lc::geo::SamplerConfig cfg;
  cfg.seed = seed;
  cfg.sample_count = samples;
  return cfg;
}

void check_tag(const cat::DerivedProblem& problem, const char* tag) {
  if (tag == nullptr) {
    CHECK_FALSE(problem.tag.has_value());
  } else {
    REQUIRE(problem.tag.has_value());
    CHECK(*problem.tag == tag);
  }
}

}  // namespace

TEST_SUITE("catalog") {
  TEST_CASE("group ids parse") {
    CHECK(cat::parse_group("I") == Group::I);
    CHECK(cat::parse_group("IV") == Group::IV);
    CHECK(cat::parse_group("3") == Group::III);
    CHECK_THROWS_AS(cat::parse_group("V"), cat::UnknownGroupError);
    CHECK_THROWS_AS(cat::parse_group(""), cat::UnknownGroupError);
  }

  TEST_CASE("schemas bind the documented statements") {
    const auto s1 = cat::schema(Group::I);
    CHECK(s1.statements.at('p') == "AC = AB");
    CHECK(s1.statements.at('q') == "angle BAC = 90 deg");
    CHECK(s1.statements.at('r') == "angle DAC + angle ABC = 90 deg");

    const auto s2 = cat::schema(Group::II);
    CHECK(s2.statements.at('p') == "AC = BC");
    CHECK(s2.statements.at('q') == "angle ACB = 60 deg");
    CHECK(s2.statements.at('r') == "JA1 = JB1");

    const auto s3 = cat::schema(Group::III);
    CHECK(s3.statements.at('q') == "angle ACB = 90 deg");

    const auto s4 = cat::schema(Group::IV);
    CHECK(s4.statements.at('r') ==
          "the circumcenter G of triangle FDE lies on the bisector of angle ACB");
    for (Group g : {Group::I, Group::II, Group::III, Group::IV}) {
      CHECK(cat::schema(g).statements.size() == 3);
      CHECK_FALSE(cat::schema(g).context.empty());
    }
  }

  TEST_CASE("derived sets match the golden formulas for every group") {
    for (Group g : {Group::I, Group::II, Group::III, Group::IV}) {
      const auto set = cat::derive_set(g);
      CHECK(set.generating_p.structure.str() == "t & p -> r");
      CHECK(set.generating_q.structure.str() == "t & q -> r");
      CHECK(set.composed.structure.str() == "t & (p | q) -> r");
      CHECK(set.inverse.structure.str() == "t & r -> p | q");
      CHECK(set.conditional_p.structure.str() == "t & r & ~q -> p");
      CHECK(set.conditional_q.structure.str() == "t & r & ~p -> q");
      CHECK(set.homogenized.structure.str() == "t & r -> p ^ ~p & q");
      CHECK(set.all().size() == 7);
    }
  }

  TEST_CASE("derived problems carry their source numbering") {
    const auto g1 = cat::derive_set(Group::I);
    check_tag(g1.generating_p, "4.1");
    check_tag(g1.generating_q, "4.2");
    check_tag(g1.composed, nullptr);
    check_tag(g1.inverse, "4.3");
    check_tag(g1.conditional_p, "4.4");
    check_tag(g1.conditional_q, "4.5");
    check_tag(g1.homogenized, "4.6");

    const auto g2 = cat::derive_set(Group::II);
    check_tag(g2.inverse, "4.9");
    check_tag(g2.conditional_q, "4.10");
    check_tag(g2.conditional_p, "4.11");
    check_tag(g2.homogenized, "4.12");

    const auto g3 = cat::derive_set(Group::III);
    check_tag(g3.generating_p, "4.13");
    check_tag(g3.inverse, "4.15");
    check_tag(g3.conditional_p, nullptr);
    check_tag(g3.conditional_q, nullptr);
    check_tag(g3.homogenized, "4.16");

    const auto g4 = cat::derive_set(Group::IV);
    check_tag(g4.generating_p, "4.18");
    check_tag(g4.generating_q, "4.19");
    check_tag(g4.inverse, "4.20");
    check_tag(g4.conditional_q, "4.21");
    check_tag(g4.conditional_p, "4.22");
    check_tag(g4.homogenized, "4.23");
  }

  TEST_CASE("derived transformations are equivalent where claimed, independent where not") {
    for (Group g : {Group::I, Group::II, Group::III, Group::IV}) {
      const auto set = cat::derive_set(g);
      CHECK(lc::classify(set.inverse.structure, set.homogenized.structure).relation ==
            lc::Relation::TautologicalEquivalence);
      CHECK(lc::classify(set.inverse.structure, set.conditional_p.structure).relation ==
            lc::Relation::TautologicalEquivalence);
      CHECK(lc::classify(set.inverse.structure, set.conditional_q.structure).relation ==
            lc::Relation::TautologicalEquivalence);
      // Inverse truth is a geometric fact, not a propositional one.
      CHECK(lc::classify(set.composed.structure, set.inverse.structure).relation ==
            lc::Relation::Independent);
    }
  }

  TEST_CASE("group batteries meet every expectation at desk scale") {
    for (Group g : {Group::I, Group::II, Group::III, Group::IV}) {
      const auto result = cat::verify_group(g, small_cfg(42, 120));
      REQUIRE(result.items.size() == 6);
      for (const auto& item : result.items) {
        INFO("group ", result.group, " item ", item.name);
        CHECK(item.met);
      }
      CHECK(result.all_met);
    }
  }

  TEST_CASE("capstone battery meets every expectation at desk scale") {
    const auto result = cat::verify_capstone(small_cfg(7, 120));
    REQUIRE(result.items.size() == 4);
    for (const auto& item : result.items) {
      INFO("item ", item.name);
      CHECK(item.met);
    }
    CHECK(result.all_met);
  }

  TEST_CASE("capstone closed-form instances agree on both sides") {
    using namespace lc::geo;
    const auto spec = cat::capstone_spec();
    const auto both_sides = [&](const Triangle& t) {
      const auto left = predicate(spec.left_group, spec.left_atom, t,
                                  construct(spec.left_group, t), 1e-9);
      const auto right = predicate(spec.right_group, spec.right_atom, t,
                                   construct(spec.right_group, t), 1e-9);
      return std::pair(left.holds, right.holds);
    };
    // Equilateral: both sides hold.
    const Triangle eq({0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2.0});
    CHECK(both_sides(eq) == std::pair(true, true));
    // Isosceles AC = BC with gamma = 50 deg: both sides hold.
    const double half = std::numbers::pi * 25.0 / 180.0;
    const Triangle iso({0, 0}, {1, 0}, {0.5, 0.5 / std::tan(half)});
    CHECK(both_sides(iso) == std::pair(true, true));
    // Scalene with gamma = 60 deg: both sides hold though p fails.
    const double alpha = std::numbers::pi * 80.0 / 180.0;
    const double beta = std::numbers::pi * 40.0 / 180.0;
    const double b = std::sin(beta) / std::sin(std::numbers::pi / 3.0);
    const Triangle sixty({0, 0}, {1, 0}, {b * std::cos(alpha), b * std::sin(alpha)});
    const auto dp = construct(Group::II, sixty);
    CHECK_FALSE(predicate(Group::II, AtomId::P, sixty, dp, 1e-9).holds);
    CHECK(both_sides(sixty) == std::pair(true, true));
    // Generic scalene: neither side holds.
    const Triangle generic({0, 0}, {1, 0}, {0.3, 0.9});
    CHECK(both_sides(generic) == std::pair(false, false));
  }
}
