#include "lc/formula.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <utility>

namespace lc {

bool is_valid_atom_name(std::string_view name) {
  if (name.empty()) return false;
  auto head = static_cast<unsigned char>(name.front());
  if (!std::isalpha(head) && name.front() != '_') return false;
  for (char ch : name) {
    auto c = static_cast<unsigned char>(ch);
    if (!std::isalnum(c) && ch != '_') return false;
  }
  return true;
}

Formula Formula::atom(std::string name) {
  if (!is_valid_atom_name(name)) {
    throw std::invalid_argument("invalid atom name: '" + name + "'");
  }
  return Formula(std::make_shared<const Node>(Node{Kind::Atom, std::move(name), {}}));
}

Formula Formula::negation(Formula f) {
  return Formula(std::make_shared<const Node>(Node{Kind::Not, {}, {std::move(f)}}));
}

Formula Formula::conjunction(std::vector<Formula> parts) {
  if (parts.size() < 2) {
    throw std::invalid_argument("conjunction requires at least two operands");
  }
  return Formula(std::make_shared<const Node>(Node{Kind::And, {}, std::move(parts)}));
}

Formula Formula::disjunction(std::vector<Formula> parts) {
  if (parts.size() < 2) {
    throw std::invalid_argument("disjunction requires at least two operands");
  }
  return Formula(std::make_shared<const Node>(Node{Kind::Or, {}, std::move(parts)}));
}

Formula Formula::exclusive_or(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(Node{Kind::Xor, {}, {std::move(lhs), std::move(rhs)}}));
}

Formula Formula::implication(Formula lhs, Formula rhs) {
  return Formula(
      std::make_shared<const Node>(Node{Kind::Implies, {}, {std::move(lhs), std::move(rhs)}}));
}

Formula Formula::biconditional(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(Node{Kind::Iff, {}, {std::move(lhs), std::move(rhs)}}));
}

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  if (node_->kind != other.node_->kind) return false;
  if (node_->kind == Kind::Atom) return node_->name == other.node_->name;
  if (node_->parts.size() != other.node_->parts.size()) return false;
  for (std::size_t i = 0; i < node_->parts.size(); ++i) {
    if (node_->parts[i] != other.node_->parts[i]) return false;
  }
  return true;
}

namespace {

void collect_atom_seq(const Formula& f, std::vector<const std::string*>& out) {
  if (f.kind() == Kind::Atom) {
    out.push_back(&f.name());
    return;
  }
  for (const Formula& part : f.parts()) collect_atom_seq(part, out);
}

int kind_rank(Kind k) { return static_cast<int>(k); }

}  // namespace

int compare(const Formula& a, const Formula& b) {
  std::vector<const std::string*> sa, sb;
  collect_atom_seq(a, sa);
  collect_atom_seq(b, sb);
  const std::size_t n = std::min(sa.size(), sb.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = sa[i]->compare(*sb[i]);
    if (c != 0) return c;
  }
  if (sa.size() != sb.size()) return sa.size() < sb.size() ? -1 : 1;
  // Same atom sequence: order by connective, then structurally.
  struct Rec {
    static int go(const Formula& x, const Formula& y) {
      if (x == y) return 0;
      if (x.kind() != y.kind()) return kind_rank(x.kind()) < kind_rank(y.kind()) ? -1 : 1;
      if (x.kind() == Kind::Atom) return x.name().compare(y.name());
      if (x.parts().size() != y.parts().size()) return x.parts().size() < y.parts().size() ? -1 : 1;
      for (std::size_t i = 0; i < x.parts().size(); ++i) {
        int c = go(x.parts()[i], y.parts()[i]);
        if (c != 0) return c;
      }
      return 0;
    }
  };
  return Rec::go(a, b);
}

bool eval(const Formula& f, const Assignment& a) {
  switch (f.kind()) {
    case Kind::Atom: {
      auto it = a.find(f.name());
      if (it == a.end()) {
        throw EvalError("assignment is missing atom '" + f.name() + "'");
      }
      return it->second;
    }
    case Kind::Not:
      return !eval(f.operand(), a);
    case Kind::And:
      for (const Formula& part : f.parts()) {
        if (!eval(part, a)) return false;
      }
      return true;
    case Kind::Or:
      for (const Formula& part : f.parts()) {
        if (eval(part, a)) return true;
      }
      return false;
    case Kind::Xor:
      return eval(f.lhs(), a) != eval(f.rhs(), a);
    case Kind::Implies:
      return !eval(f.lhs(), a) || eval(f.rhs(), a);
    case Kind::Iff:
      return eval(f.lhs(), a) == eval(f.rhs(), a);
  }
  throw Error("unreachable formula kind");
}

namespace {

void collect_atoms(const Formula& f, std::set<std::string>& out) {
  if (f.kind() == Kind::Atom) {
    out.insert(f.name());
    return;
  }
  for (const Formula& part : f.parts()) collect_atoms(part, out);
}

std::vector<std::string> guarded_atoms(const Formula& f) {
  auto names = atoms(f);
  if (names.size() > kMaxTableAtoms) {
    throw AtomLimitError("formula has " + std::to_string(names.size()) +
                         " atoms; the truth-table limit is " + std::to_string(kMaxTableAtoms));
  }
  return names;
}

/// Enumerates assignments in table order and stops early when fn returns
/// false. fn is called with (row index, assignment, value).
template <typename Fn>
void enumerate_rows(const Formula& f, const std::vector<std::string>& names, Fn&& fn) {
  const std::size_t n = names.size();
  Assignment a;
  for (const auto& name : names) a.emplace(name, false);
  const std::uint64_t rows = std::uint64_t{1} << n;
  for (std::uint64_t row = 0; row < rows; ++row) {
    for (std::size_t j = 0; j < n; ++j) {
      a[names[j]] = ((row >> (n - 1 - j)) & 1) != 0;
    }
    if (!fn(row, a, eval(f, a))) return;
  }
}

}  // namespace

std::vector<std::string> atoms(const Formula& f) {
  std::set<std::string> names;
  collect_atoms(f, names);
  return {names.begin(), names.end()};
}

const char* to_string(Classification c) {
  switch (c) {
    case Classification::Tautology: return "tautology";
    case Classification::Contradiction: return "contradiction";
    case Classification::Contingent: return "contingent";
  }
  return "?";
}

Assignment TruthTableReport::assignment_for_row(std::uint64_t row) const {
  Assignment a;
  const std::size_t n = atom_order.size();
  for (std::size_t j = 0; j < n; ++j) {
    a[atom_order[j]] = ((row >> (n - 1 - j)) & 1) != 0;
  }
  return a;
}

TruthTableReport truth_table(const Formula& f) {
  TruthTableReport report;
  report.atom_order = guarded_atoms(f);
  report.row_values.reserve(std::size_t{1} << report.atom_order.size());
  bool any_true = false;
  bool any_false = false;
  enumerate_rows(f, report.atom_order, [&](std::uint64_t, const Assignment& a, bool value) {
    report.row_values.push_back(value);
    if (value && !any_true) {
      any_true = true;
      report.satisfying = a;
    }
    if (!value && !any_false) {
      any_false = true;
      report.falsifying = a;
    }
    return true;
  });
  report.classification = any_false ? (any_true ? Classification::Contingent : Classification::Contradiction)
                                    : Classification::Tautology;
  return report;
}

std::optional<Assignment> find_falsifying(const Formula& f) {
  auto names = guarded_atoms(f);
  std::optional<Assignment> witness;
  enumerate_rows(f, names, [&](std::uint64_t, const Assignment& a, bool value) {
    if (!value) {
      witness = a;
      return false;
    }
    return true;
  });
  return witness;
}

bool is_tautology(const Formula& f) { return !find_falsifying(f).has_value(); }

bool are_equivalent(const Formula& f, const Formula& g) {
  return is_tautology(Formula::biconditional(f, g));
}

Formula normalize(const Formula& f) {
  switch (f.kind()) {
    case Kind::Atom:
      return f;
    case Kind::Not: {
      Formula child = normalize(f.operand());
      if (child.kind() == Kind::Not) return child.operand();
      return Formula::negation(std::move(child));
    }
    case Kind::And:
    case Kind::Or: {
      std::vector<Formula> flat;
      for (const Formula& part : f.parts()) {
        Formula n = normalize(part);
        if (n.kind() == f.kind()) {
          flat.insert(flat.end(), n.parts().begin(), n.parts().end());
        } else {
          flat.push_back(std::move(n));
        }
      }
      std::sort(flat.begin(), flat.end(), [](const Formula& a, const Formula& b) {
        return compare(a, b) < 0;
      });
      flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
      if (flat.size() == 1) return flat.front();
      return f.kind() == Kind::And ? Formula::conjunction(std::move(flat))
                                   : Formula::disjunction(std::move(flat));
    }
    case Kind::Xor:
      return Formula::exclusive_or(normalize(f.lhs()), normalize(f.rhs()));
    case Kind::Implies:
      return Formula::implication(normalize(f.lhs()), normalize(f.rhs()));
    case Kind::Iff:
      return Formula::biconditional(normalize(f.lhs()), normalize(f.rhs()));
  }
  throw Error("unreachable formula kind");
}

}  // namespace lc
