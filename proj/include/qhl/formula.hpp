#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qhl/config.hpp"
#include "qhl/errors.hpp"
#include "qhl/projector.hpp"

namespace qhl {

/// Immutable propositional formula over named atoms with NOT/AND/OR. The tree
/// is well-formed by construction; malformed text such as "A & | B" can only
/// ever exist as a ParseError.
class Formula {
 public:
  enum class Kind { Atom, Not, And, Or };

  static Formula atom(std::string name) {
    if (!valid_atom_name(name)) {
      throw ValidationError("formula atom: invalid name '" + name + "'");
    }
    return Formula(std::make_shared<Node>(Node{Kind::Atom, std::move(name), nullptr, nullptr}));
  }
  static Formula negation(Formula f) {
    return Formula(std::make_shared<Node>(Node{Kind::Not, {}, f.root_, nullptr}));
  }
  static Formula conjunction(Formula l, Formula r) {
    return Formula(std::make_shared<Node>(Node{Kind::And, {}, l.root_, r.root_}));
  }
  static Formula disjunction(Formula l, Formula r) {
    return Formula(std::make_shared<Node>(Node{Kind::Or, {}, l.root_, r.root_}));
  }

  Kind kind() const { return root_->kind; }
  const std::string& atom_name() const { return root_->name; }
  Formula child() const { return Formula(root_->left); }  // Not
  Formula left() const { return Formula(root_->left); }
  Formula right() const { return Formula(root_->right); }

  /// Structural equality.
  friend bool operator==(const Formula& a, const Formula& b) {
    return equal(a.root_.get(), b.root_.get());
  }
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

  /// Atom names, sorted, deduplicated.
  std::vector<std::string> atoms() const {
    std::set<std::string> names;
    collect_atoms(root_.get(), names);
    return {names.begin(), names.end()};
  }

  static bool valid_atom_name(std::string_view name) {
    if (name.empty() || !is_alpha(name[0])) return false;
    for (std::size_t i = 1; i < name.size(); ++i) {
      if (!is_name_char(name[i])) return false;
    }
    return true;
  }

  static bool is_alpha(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
  }
  static bool is_name_char(char c) {
    return is_alpha(c) || (c >= '0' && c <= '9') || c == '_' || c == '+' || c == '-';
  }

 private:
  struct Node {
    Kind kind;
    std::string name;                    // Atom only
    std::shared_ptr<const Node> left;    // Not child / And-Or left
    std::shared_ptr<const Node> right;   // And-Or right
  };

  explicit Formula(std::shared_ptr<const Node> root) : root_(std::move(root)) {}

  static bool equal(const Node* a, const Node* b) {
    if (a == b) return true;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
      case Kind::Atom:
        return a->name == b->name;
      case Kind::Not:
        return equal(a->left.get(), b->left.get());
      default:
        return equal(a->left.get(), b->left.get()) &&
               equal(a->right.get(), b->right.get());
    }
  }

  static void collect_atoms(const Node* n, std::set<std::string>& out) {
    switch (n->kind) {
      case Kind::Atom:
        out.insert(n->name);
        return;
      case Kind::Not:
        collect_atoms(n->left.get(), out);
        return;
      default:
        collect_atoms(n->left.get(), out);
        collect_atoms(n->right.get(), out);
    }
  }

  std::shared_ptr<const Node> root_;
};

namespace detail {

// Token stream over the formula grammar. ASCII operators !, &, | plus the
// Unicode aliases U+00AC, U+2227, U+2228. Positions are byte offsets.
class FormulaLexer {
 public:
  enum class Tok { Atom, Not, And, Or, LParen, RParen, End };

  explicit FormulaLexer(std::string_view input) : input_(input) { advance(); }

  Tok token() const { return token_; }
  const std::string& lexeme() const { return lexeme_; }
  std::size_t position() const { return token_pos_; }

  void advance() {
    while (pos_ < input_.size() && is_space(input_[pos_])) ++pos_;
    token_pos_ = pos_;
    if (pos_ >= input_.size()) {
      token_ = Tok::End;
      lexeme_ = "end of input";
      return;
    }
    const char c = input_[pos_];
    if (c == '!') { single(Tok::Not); return; }
    if (c == '&') { single(Tok::And); return; }
    if (c == '|') { single(Tok::Or); return; }
    if (c == '(') { single(Tok::LParen); return; }
    if (c == ')') { single(Tok::RParen); return; }
    if (match_utf8("\xc2\xac", Tok::Not)) return;       // NOT sign
    if (match_utf8("\xe2\x88\xa7", Tok::And)) return;   // logical and
    if (match_utf8("\xe2\x88\xa8", Tok::Or)) return;    // logical or
    if (Formula::is_alpha(c)) {
      std::size_t end = pos_ + 1;
      while (end < input_.size() && Formula::is_name_char(input_[end])) ++end;
      token_ = Tok::Atom;
      lexeme_ = std::string(input_.substr(pos_, end - pos_));
      pos_ = end;
      return;
    }
    throw ParseError(pos_, "an atom, '!', or '('",
                     "'" + printable(c) + "'");
  }

  [[noreturn]] void fail(const std::string& expected) const {
    std::string found = token_ == Tok::Atom ? "atom '" + lexeme_ + "'"
                        : token_ == Tok::End ? lexeme_
                                             : "'" + lexeme_ + "'";
    throw ParseError(token_pos_, expected, found);
  }

 private:
  static bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r';
  }

  static std::string printable(char c) {
    if (c >= 0x20 && c < 0x7f) return std::string(1, c);
    char buf[8];
    std::snprintf(buf, sizeof buf, "\\x%02x", static_cast<unsigned char>(c));
    return buf;
  }

  void single(Tok t) {
    token_ = t;
    lexeme_ = std::string(1, input_[pos_]);
    ++pos_;
  }

  bool match_utf8(std::string_view bytes, Tok t) {
    if (input_.substr(pos_, bytes.size()) != bytes) return false;
    token_ = t;
    lexeme_ = std::string(bytes);
    pos_ += bytes.size();
    return true;
  }

  std::string_view input_;
  std::size_t pos_ = 0;
  std::size_t token_pos_ = 0;
  Tok token_ = Tok::End;
  std::string lexeme_;
};

// Recursive descent over: Or := And ('|' And)*; And := Unary ('&' Unary)*;
// Unary := '!' Unary | Atom | '(' Or ')'.
class FormulaParser {
 public:
  explicit FormulaParser(std::string_view input) : lex_(input) {}

  Formula parse() {
    Formula f = parse_or();
    if (lex_.token() != FormulaLexer::Tok::End) {
      lex_.fail("an operator or end of input");
    }
    return f;
  }

 private:
  Formula parse_or() {
    Formula f = parse_and();
    while (lex_.token() == FormulaLexer::Tok::Or) {
      lex_.advance();
      f = Formula::disjunction(std::move(f), parse_and());
    }
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (lex_.token() == FormulaLexer::Tok::And) {
      lex_.advance();
      f = Formula::conjunction(std::move(f), parse_unary());
    }
    return f;
  }

  Formula parse_unary() {
    switch (lex_.token()) {
      case FormulaLexer::Tok::Not: {
        lex_.advance();
        return Formula::negation(parse_unary());
      }
      case FormulaLexer::Tok::Atom: {
        Formula f = Formula::atom(lex_.lexeme());
        lex_.advance();
        return f;
      }
      case FormulaLexer::Tok::LParen: {
        lex_.advance();
        Formula f = parse_or();
        if (lex_.token() != FormulaLexer::Tok::RParen) {
          lex_.fail("')'");
        }
        lex_.advance();
        return f;
      }
      default:
        lex_.fail("an operand (atom, '!', or '(')");
    }
  }

  FormulaLexer lex_;
};

}  // namespace detail

/// Parse formula text. Throws ParseError with byte offset, the expected token
/// class, and the offending lexeme.
inline Formula parse(std::string_view input) {
  return detail::FormulaParser(input).parse();
}

/// Canonical ASCII rendering with minimal parentheses; reparses to an
/// identical tree.
inline std::string render(const Formula& f) {
  const auto prec = [](Formula::Kind k) {
    switch (k) {
      case Formula::Kind::Or: return 1;
      case Formula::Kind::And: return 2;
      case Formula::Kind::Not: return 3;
      default: return 4;
    }
  };
  struct Impl {
    decltype(prec) p;
    std::string go(const Formula& f, int parent, bool right_side) {
      const int mine = p(f.kind());
      // same-precedence right operands keep explicit parens so that
      // left-associative reparsing reproduces the tree
      const bool parens = mine < parent || (mine == parent && right_side);
      std::string body;
      switch (f.kind()) {
        case Formula::Kind::Atom:
          body = f.atom_name();
          break;
        case Formula::Kind::Not:
          body = "!" + go(f.child(), p(Formula::Kind::Not), false);
          break;
        case Formula::Kind::And:
          body = go(f.left(), mine, false) + " & " + go(f.right(), mine, true);
          break;
        case Formula::Kind::Or:
          body = go(f.left(), mine, false) + " | " + go(f.right(), mine, true);
          break;
      }
      return parens ? "(" + body + ")" : body;
    }
  };
  return Impl{prec}.go(f, 0, false);
}

using Assignment = std::map<std::string, bool>;

inline bool classical_eval(const Formula& f, const Assignment& a) {
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      const auto it = a.find(f.atom_name());
      if (it == a.end()) throw UnboundAtomError(f.atom_name());
      return it->second;
    }
    case Formula::Kind::Not:
      return !classical_eval(f.child(), a);
    case Formula::Kind::And:
      return classical_eval(f.left(), a) && classical_eval(f.right(), a);
    default:
      return classical_eval(f.left(), a) || classical_eval(f.right(), a);
  }
}

struct TruthTable {
  std::vector<std::string> atoms;  // lexicographic
  std::vector<std::pair<Assignment, bool>> rows;
};

/// All 2^n assignments in lexicographic atom order (first atom most
/// significant, false before true).
inline TruthTable truth_table(const Formula& f) {
  TruthTable table;
  table.atoms = f.atoms();
  const std::size_t n = table.atoms.size();
  if (n > truth_table_atom_cap) {
    throw CapacityError("truth_table: " + std::to_string(n) +
                        " atoms exceeds the cap of " +
                        std::to_string(truth_table_atom_cap));
  }
  const std::size_t count = std::size_t{1} << n;
  table.rows.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    Assignment a;
    for (std::size_t i = 0; i < n; ++i) {
      a[table.atoms[i]] = ((k >> (n - 1 - i)) & 1) != 0;
    }
    table.rows.emplace_back(a, classical_eval(f, a));
  }
  return table;
}

/// Atom name -> projector map; all bound projectors must share one dimension.
class ProjectorBinding {
 public:
  ProjectorBinding() = default;

  void bind(const std::string& name, Projector p) {
    if (!Formula::valid_atom_name(name)) {
      throw ValidationError("binding: invalid atom name '" + name + "'");
    }
    if (!map_.empty() && p.dim() != dim_) {
      throw ShapeError("binding: projector for '" + name + "' has dimension " +
                       std::to_string(p.dim()) + ", expected " +
                       std::to_string(dim_));
    }
    dim_ = p.dim();
    map_.insert_or_assign(name, std::move(p));
  }

  bool has(const std::string& name) const { return map_.count(name) != 0; }

  const Projector& at(const std::string& name) const {
    const auto it = map_.find(name);
    if (it == map_.end()) throw UnboundAtomError(name);
    return it->second;
  }

  Eigen::Index dim() const { return dim_; }
  bool empty() const { return map_.empty(); }
  const std::map<std::string, Projector>& entries() const { return map_; }

 private:
  std::map<std::string, Projector> map_;
  Eigen::Index dim_ = 0;
};

/// Subspace semantics: Atom -> bound projector, Not -> orthocomplement,
/// And -> meet, Or -> join.
inline Projector quantum_eval(const Formula& f, const ProjectorBinding& b) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      return b.at(f.atom_name());
    case Formula::Kind::Not:
      return complement(quantum_eval(f.child(), b));
    case Formula::Kind::And:
      return meet(quantum_eval(f.left(), b), quantum_eval(f.right(), b));
    default:
      return join(quantum_eval(f.left(), b), quantum_eval(f.right(), b));
  }
}

}  // namespace qhl
