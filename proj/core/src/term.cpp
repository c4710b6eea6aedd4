#include "semivar/term.hpp"

#include <algorithm>  // for sort, unique
#include <array>      // for array
#include <cctype>     // for isalpha, isdigit, isspace
#include <utility>    // for move

namespace semivar {

  struct Term::Node {
    Kind              kind;
    char              symbol = '\0';
    std::vector<Term> children;
    bool              has_prime = false;
  };

  Term Term::variable(char symbol) {
    if (!std::isalpha(static_cast<unsigned char>(symbol))) {
      throw InvalidArgument(std::string("variables must be letters, got '")
                            + symbol + "'");
    }
    return Term(std::make_shared<Node const>(Node{Kind::variable, symbol, {}}));
  }

  Term Term::product(Term left, Term right) {
    bool const p = left.contains_prime() || right.contains_prime();
    return Term(std::make_shared<Node const>(
        Node{Kind::product, '\0', {std::move(left), std::move(right)}, p}));
  }

  Term Term::prime(Term child) {
    return Term(std::make_shared<Node const>(
        Node{Kind::prime, '\0', {std::move(child)}, true}));
  }

  Term Term::power(Term const& t, std::size_t k) {
    if (k == 0) {
      throw InvalidArgument("term powers must be positive");
    }
    Term result = t;
    for (std::size_t i = 1; i < k; ++i) {
      result = product(std::move(result), t);
    }
    return result;
  }

  Term::Kind Term::kind() const noexcept {
    return _node->kind;
  }

  char Term::symbol() const {
    return _node->symbol;
  }

  Term const& Term::left() const {
    return _node->children.at(0);
  }

  Term const& Term::right() const {
    return _node->children.at(1);
  }

  Term const& Term::child() const {
    return _node->children.at(0);
  }

  bool Term::contains_prime() const noexcept {
    return _node->has_prime;
  }

  std::vector<char> Term::variables() const {
    std::vector<char> out;
    std::vector<Node const*> stack{_node.get()};
    while (!stack.empty()) {
      Node const* node = stack.back();
      stack.pop_back();
      if (node->kind == Kind::variable) {
        out.push_back(node->symbol);
      }
      for (auto const& c : node->children) {
        stack.push_back(c._node.get());
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::string Term::to_string() const {
    switch (kind()) {
      case Kind::variable:
        return std::string(1, symbol());
      case Kind::product: {
        std::string r = right().to_string();
        if (right().kind() == Kind::product) {
          r = "(" + r + ")";
        }
        return left().to_string() + r;
      }
      case Kind::prime:
      default: {
        std::string c = child().to_string();
        if (child().kind() == Kind::product) {
          c = "(" + c + ")";
        }
        return c + "'";
      }
    }
  }

  bool operator==(Term const& a, Term const& b) {
    if (a._node == b._node) {
      return true;
    }
    return a.kind() == b.kind() && a._node->symbol == b._node->symbol
           && a._node->children == b._node->children;
  }

  std::vector<char> Identity::variables() const {
    std::vector<char> out = lhs.variables();
    auto              r   = rhs.variables();
    out.insert(out.end(), r.begin(), r.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::string Identity::to_string() const {
    return lhs.to_string() + " = " + rhs.to_string();
  }

  namespace {

    class Parser {
     public:
      explicit Parser(std::string_view text) : _text(text) {}

      Term term() {
        Term result = factor();
        while (true) {
          skip_space();
          if (peek() == '*') {
            ++_pos;
            result = Term::product(std::move(result), factor());
          } else if (starts_factor(peek())) {
            result = Term::product(std::move(result), factor());
          } else {
            return result;
          }
        }
      }

      void expect(char c) {
        skip_space();
        if (peek() != c) {
          fail(std::string("expected '") + c + "'");
        }
        ++_pos;
      }

      void expect_end() {
        skip_space();
        if (_pos != _text.size()) {
          fail("unexpected trailing input");
        }
      }

     private:
      static bool starts_factor(char c) {
        return c == '(' || std::isalpha(static_cast<unsigned char>(c));
      }

      char peek() const {
        return _pos < _text.size() ? _text[_pos] : '\0';
      }

      void skip_space() {
        while (_pos < _text.size()
               && std::isspace(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
      }

      [[noreturn]] void fail(std::string const& what) const {
        throw TermSyntaxError(what + " at position " + std::to_string(_pos)
                              + " in '" + std::string(_text) + "'");
      }

      Term atom() {
        skip_space();
        char const c = peek();
        if (c == '(') {
          ++_pos;
          Term inner = term();
          expect(')');
          return inner;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
          ++_pos;
          return Term::variable(c);
        }
        fail("expected a variable or '('");
      }

      Term factor() {
        Term result = atom();
        while (true) {
          skip_space();
          if (peek() == '\'') {
            ++_pos;
            result = Term::prime(std::move(result));
          } else if (peek() == '^') {
            ++_pos;
            skip_space();
            std::size_t k      = 0;
            bool        digits = false;
            while (std::isdigit(static_cast<unsigned char>(peek()))) {
              k      = 10 * k + static_cast<std::size_t>(peek() - '0');
              digits = true;
              ++_pos;
            }
            if (!digits || k == 0) {
              fail("expected a positive exponent");
            }
            result = Term::power(result, k);
          } else {
            return result;
          }
        }
      }

      std::string_view _text;
      std::size_t      _pos = 0;
    };

    using Env = std::array<element_type, 128>;
    constexpr element_type unbound = static_cast<element_type>(-1);

    element_type eval_env(Term const& t, UnarySemigroup const& s, Env const& env) {
      switch (t.kind()) {
        case Term::Kind::variable: {
          element_type const v = env[static_cast<unsigned char>(t.symbol())];
          if (v == unbound) {
            throw UnboundVariable(t.symbol());
          }
          return v;
        }
        case Term::Kind::product:
          return s(eval_env(t.left(), s, env), eval_env(t.right(), s, env));
        case Term::Kind::prime:
        default:
          return s.prime(eval_env(t.child(), s, env));
      }
    }

    Env to_env(Assignment const& env) {
      Env out;
      out.fill(unbound);
      for (auto [k, v] : env) {
        out[static_cast<unsigned char>(k)] = v;
      }
      return out;
    }

  }  // namespace

  Term parse_term(std::string_view text) {
    Parser p(text);
    Term   t = p.term();
    p.expect_end();
    return t;
  }

  Identity parse_identity(std::string_view text) {
    auto const eq = text.find('=');
    if (eq == std::string_view::npos) {
      throw TermSyntaxError("identity needs '=' in '" + std::string(text)
                            + "'");
    }
    return {parse_term(text.substr(0, eq)), parse_term(text.substr(eq + 1))};
  }

  std::vector<Identity> parse_identity_list(std::string_view text) {
    std::vector<Identity> out;
    while (!text.empty()) {
      auto const       nl   = text.find('\n');
      std::string_view line = text.substr(0, nl);
      text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
      auto const first = line.find_first_not_of(" \t\r");
      if (first == std::string_view::npos || line[first] == '#') {
        continue;
      }
      out.push_back(parse_identity(line));
    }
    return out;
  }

  element_type eval(Term const&           term,
                    UnarySemigroup const& s,
                    Assignment const&     env) {
    return eval_env(term, s, to_env(env));
  }

  std::optional<element_type> eval_partial(Term const&                   term,
                                           std::size_t                   n,
                                           std::span<element_type const> cells,
                                           Assignment const&             env) {
    switch (term.kind()) {
      case Term::Kind::variable: {
        auto it = env.find(term.symbol());
        if (it == env.end()) {
          throw UnboundVariable(term.symbol());
        }
        return it->second;
      }
      case Term::Kind::product: {
        auto a = eval_partial(term.left(), n, cells, env);
        if (!a) {
          return std::nullopt;
        }
        auto b = eval_partial(term.right(), n, cells, env);
        if (!b) {
          return std::nullopt;
        }
        element_type const v = cells[*a * n + *b];
        if (v >= n) {
          return std::nullopt;
        }
        return v;
      }
      case Term::Kind::prime:
      default:
        return std::nullopt;
    }
  }

  std::optional<Assignment> find_counterexample(UnarySemigroup const& s,
                                                Identity const&       id) {
    auto const        vars = id.variables();
    std::size_t const n    = s.order();
    std::size_t const k    = vars.size();
    Env               env;
    env.fill(unbound);
    std::vector<element_type> values(k, 0);
    while (true) {
      for (std::size_t i = 0; i < k; ++i) {
        env[static_cast<unsigned char>(vars[i])] = values[i];
      }
      if (eval_env(id.lhs, s, env) != eval_env(id.rhs, s, env)) {
        Assignment out;
        for (std::size_t i = 0; i < k; ++i) {
          out[vars[i]] = values[i];
        }
        return out;
      }
      // odometer, last variable fastest
      std::size_t i = k;
      while (i > 0 && ++values[i - 1] == n) {
        values[i - 1] = 0;
        --i;
      }
      if (i == 0) {
        return std::nullopt;
      }
    }
  }

  bool satisfies(UnarySemigroup const& s, Identity const& id) {
    return !find_counterexample(s, id).has_value();
  }

  std::string to_string(Assignment const& env) {
    std::string out = "{";
    for (auto const& [k, v] : env) {
      if (out.size() > 1) {
        out += ", ";
      }
      out += k;
      out += ": " + std::to_string(v);
    }
    return out + "}";
  }

}  // namespace semivar
