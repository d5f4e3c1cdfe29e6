#include "lc/composer.hpp"

#include <algorithm>

#include "lc/text.hpp"

namespace lc {

namespace {

bool formula_less(const Formula& a, const Formula& b) { return compare(a, b) < 0; }

/// Conjunction in the given order; a single part stands alone.
Formula conjoin(std::vector<Formula> parts) {
  if (parts.empty()) throw Error("internal: empty conjunction");
  if (parts.size() == 1) return std::move(parts.front());
  return Formula::conjunction(std::move(parts));
}

void check_equivalent(const Formula& before, const Formula& after, const char* what) {
  if (!are_equivalent(before, after)) {
    throw std::logic_error(std::string("internal: ") + what +
                           " produced a non-equivalent structure: " + print(before) + " vs " +
                           print(after));
  }
}

void flatten_conjuncts(const Formula& f, std::vector<Formula>& out) {
  if (f.kind() == Kind::And) {
    for (const Formula& part : f.parts()) flatten_conjuncts(part, out);
    return;
  }
  Formula n = normalize(f);
  if (n.kind() == Kind::And) {
    out.insert(out.end(), n.parts().begin(), n.parts().end());
  } else {
    out.push_back(std::move(n));
  }
}

}  // namespace

ImplicationStructure::ImplicationStructure(const Formula& premise, const Formula& conclusion)
    : premise_(normalize(premise)), conclusion_(normalize(conclusion)) {
  std::vector<Formula> flat;
  flatten_conjuncts(premise, flat);
  for (Formula& part : flat) {
    bool seen = false;
    for (const Formula& kept : conjuncts_) {
      if (kept == part) {
        seen = true;
        break;
      }
    }
    if (!seen) conjuncts_.push_back(std::move(part));
  }
}

ImplicationStructure ImplicationStructure::from_formula(const Formula& f) {
  if (f.kind() != Kind::Implies) {
    throw StructureError("expected an implication, got: " + print(f));
  }
  return ImplicationStructure(f.lhs(), f.rhs());
}

Formula ImplicationStructure::premise_as_written() const {
  return conjoin(std::vector<Formula>(conjuncts_.begin(), conjuncts_.end()));
}

const char* to_string(Relation r) {
  switch (r) {
    case Relation::TautologicalEquivalence: return "tautological-equivalence";
    case Relation::ForwardOnly: return "forward-only";
    case Relation::BackwardOnly: return "backward-only";
    case Relation::Independent: return "independent";
  }
  return "?";
}

namespace {

/// Normalized premise conjuncts in canonical sorted order.
std::vector<Formula> sorted_conjuncts(const ImplicationStructure& s) {
  if (s.premise().kind() == Kind::And) return s.premise().parts();
  return {s.premise()};
}

}  // namespace

ImplicationStructure compose(const ImplicationStructure& g1, const ImplicationStructure& g2,
                             bool allow_empty_context) {
  if (g1.conclusion() != g2.conclusion()) {
    throw ComposeError("conclusion mismatch: '" + print(g1.conclusion()) + "' vs '" +
                       print(g2.conclusion()) + "'");
  }
  const auto c1 = sorted_conjuncts(g1);
  const auto c2 = sorted_conjuncts(g2);
  std::vector<Formula> shared;
  std::set_intersection(c1.begin(), c1.end(), c2.begin(), c2.end(), std::back_inserter(shared),
                        formula_less);
  std::vector<Formula> left1, left2;
  std::set_difference(c1.begin(), c1.end(), shared.begin(), shared.end(),
                      std::back_inserter(left1), formula_less);
  std::set_difference(c2.begin(), c2.end(), shared.begin(), shared.end(),
                      std::back_inserter(left2), formula_less);
  if (shared.empty() && !allow_empty_context) {
    throw ComposeError("no common premise context between '" + g1.str() + "' and '" + g2.str() +
                       "'");
  }
  if (left1.empty() || left2.empty()) {
    throw ComposeError("one premise is contained in the other; nothing to disjoin");
  }
  Formula branch = Formula::disjunction({conjoin(std::move(left1)), conjoin(std::move(left2))});
  std::vector<Formula> premise_parts = std::move(shared);
  premise_parts.push_back(std::move(branch));
  ImplicationStructure composed(conjoin(std::move(premise_parts)), g1.conclusion());
  check_equivalent(Formula::conjunction({g1.to_formula(), g2.to_formula()}),
                   composed.to_formula(), "compose");
  return composed;
}

std::vector<InverseCandidate> invert_all(const ImplicationStructure& src) {
  const auto& conjuncts = src.premise_conjuncts();
  const std::size_t n = conjuncts.size();
  if (n > 16) {
    throw Error("premise has " + std::to_string(n) + " conjuncts; inversion limit is 16");
  }
  std::vector<InverseCandidate> out;
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  out.reserve(full);
  for (std::uint32_t kept_mask = 0; kept_mask < full; ++kept_mask) {
    std::vector<Formula> kept, moved;
    for (std::size_t i = 0; i < n; ++i) {
      if ((kept_mask >> i) & 1) {
        kept.push_back(conjuncts[i]);
      } else {
        moved.push_back(conjuncts[i]);
      }
    }
    kept.push_back(src.conclusion());
    ImplicationStructure structure(conjoin(std::move(kept)), conjoin(std::vector(moved)));
    out.push_back({std::move(structure), std::move(moved)});
  }
  return out;
}

namespace {

/// Requires the conclusion to be a binary disjunction; returns its parts.
std::pair<Formula, Formula> binary_disjuncts(const ImplicationStructure& s, const char* op) {
  const Formula& c = s.conclusion();
  if (c.kind() != Kind::Or || c.parts().size() != 2) {
    throw StructureError(std::string(op) + " requires a binary disjunction conclusion, got: '" +
                         print(c) + "'");
  }
  return {c.parts()[0], c.parts()[1]};
}

}  // namespace

ImplicationStructure conditionalize(const ImplicationStructure& inv, const Formula& keep) {
  auto [first, second] = binary_disjuncts(inv, "conditionalize");
  Formula kept = normalize(keep);
  Formula other = first;
  if (kept == first) {
    other = second;
  } else if (kept != second) {
    throw StructureError("'" + print(keep) + "' is not a disjunct of the conclusion '" +
                         print(inv.conclusion()) + "'");
  }
  auto premise_parts = inv.premise_conjuncts();
  premise_parts.push_back(Formula::negation(std::move(other)));
  ImplicationStructure out(conjoin(std::move(premise_parts)), kept);
  check_equivalent(inv.to_formula(), out.to_formula(), "conditionalize");
  return out;
}

ImplicationStructure homogenize(const ImplicationStructure& inv) {
  auto [first, second] = binary_disjuncts(inv, "homogenize");
  Formula conclusion = Formula::exclusive_or(
      first, Formula::conjunction({Formula::negation(first), second}));
  ImplicationStructure out(inv.premise_as_written(), conclusion);
  check_equivalent(inv.to_formula(), out.to_formula(), "homogenize");
  return out;
}

RelationVerdict classify(const ImplicationStructure& a, const ImplicationStructure& b) {
  RelationVerdict verdict;
  Formula fa = a.to_formula();
  Formula fb = b.to_formula();
  verdict.forward_witness = find_falsifying(Formula::implication(fa, fb));
  verdict.backward_witness = find_falsifying(Formula::implication(fb, fa));
  if (!verdict.forward_witness && !verdict.backward_witness) {
    verdict.relation = Relation::TautologicalEquivalence;
  } else if (!verdict.forward_witness) {
    verdict.relation = Relation::ForwardOnly;
  } else if (!verdict.backward_witness) {
    verdict.relation = Relation::BackwardOnly;
  } else {
    verdict.relation = Relation::Independent;
  }
  return verdict;
}

}  // namespace lc
