#include "mfring/expr.hpp"

#include <cctype>
#include <numeric>
#include <regex>

#include "mfring/error.hpp"

namespace mfring {

namespace {

struct Token {
  enum class Kind { Open, Close, Word } kind;
  std::string text;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '(') {
      out.push_back({Token::Kind::Open, "("});
      ++i;
    } else if (c == ')') {
      out.push_back({Token::Kind::Close, ")"});
      ++i;
    } else {
      std::string word;
      int depth = 0;
      while (i < s.size()) {
        const char d = s[i];
        if (d == '[') ++depth;
        if (d == ']') --depth;
        if (depth == 0 && (std::isspace(static_cast<unsigned char>(d)) || d == '(' || d == ')')) break;
        if (!std::isspace(static_cast<unsigned char>(d))) word += d;
        ++i;
      }
      if (depth != 0) throw Error(Errc::Parse, "unbalanced brackets in '" + s + "'");
      out.push_back({Token::Kind::Word, word});
    }
  }
  return out;
}

bool is_number(const std::string& w) {
  static const std::regex re(R"(-?\d+(/\d+)?)");
  return std::regex_match(w, re);
}

Rational parse_rational(const std::string& w) {
  const auto slash = w.find('/');
  if (slash == std::string::npos) return Rational(Integer(w));
  Integer den(w.substr(slash + 1));
  if (den == 0) throw Error(Errc::Parse, "zero denominator in '" + w + "'");
  Rational r(Integer(w.substr(0, slash)), den);
  r.canonicalize();
  return r;
}

long parse_int(const Expr& e, const std::string& op) {
  if (e.kind != Expr::Kind::Number || e.number.get_den() != 1) {
    throw Error(Errc::Parse, "'" + op + "' expects an integer parameter");
  }
  return e.number.get_num().get_si();
}

const std::vector<std::string>& operators() {
  static const std::vector<std::string> ops{"add", "sub", "neg", "mul", "scale", "pow", "V", "low", "conj", "zeta"};
  return ops;
}

bool is_operator(const std::string& w) {
  for (const auto& op : operators())
    if (op == w) return true;
  return false;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, const std::string& src) : toks_(std::move(toks)), src_(src) {}

  Expr parse_top() {
    std::vector<Expr> items;
    std::optional<std::string> head;
    if (!toks_.empty() && toks_[0].kind == Token::Kind::Word && is_operator(toks_[0].text)) {
      head = toks_[0].text;
      pos_ = 1;
    }
    while (pos_ < toks_.size()) items.push_back(item());
    if (head) return apply(*head, std::move(items));
    if (items.size() != 1) fail("expected a single expression");
    return std::move(items.front());
  }

 private:
  [[noreturn]] void fail(const std::string& why) const { throw Error(Errc::Parse, "expression '" + src_ + "': " + why); }

  Expr item() {
    const Token& t = toks_[pos_++];
    if (t.kind == Token::Kind::Close) fail("unexpected ')'");
    if (t.kind == Token::Kind::Word) {
      if (is_operator(t.text)) fail("operator '" + t.text + "' needs parentheses here");
      Expr e;
      if (is_number(t.text)) {
        e.kind = Expr::Kind::Number;
        e.number = parse_rational(t.text);
      } else {
        e.kind = Expr::Kind::Atom;
        e.name = t.text;
      }
      return e;
    }
    if (pos_ >= toks_.size()) fail("unterminated '('");
    std::optional<std::string> head;
    if (toks_[pos_].kind == Token::Kind::Word && is_operator(toks_[pos_].text)) head = toks_[pos_++].text;
    std::vector<Expr> items;
    while (true) {
      if (pos_ >= toks_.size()) fail("unterminated '('");
      if (toks_[pos_].kind == Token::Kind::Close) {
        ++pos_;
        break;
      }
      items.push_back(item());
    }
    if (head) return apply(*head, std::move(items));
    if (items.size() != 1) fail("parenthesised group without operator");
    return std::move(items.front());
  }

  Expr apply(const std::string& op, std::vector<Expr> items) {
    Expr e;
    e.kind = Expr::Kind::Apply;
    e.name = op == "scale" ? "mul" : op;
    auto need = [&](std::size_t n) {
      if (items.size() != n) fail("'" + op + "' takes " + std::to_string(n) + " arguments");
    };
    if (op == "pow") {
      need(2);
      e.ints.push_back(parse_int(items[1], op));
      if (e.ints[0] < 0) fail("negative exponent");
      e.args.push_back(std::move(items[0]));
    } else if (op == "V" || op == "low") {
      need(2);
      e.ints.push_back(parse_int(items[0], op));
      if (e.ints[0] <= 0) fail("'" + op + "' index must be positive");
      e.args.push_back(std::move(items[1]));
    } else if (op == "zeta") {
      need(2);
      e.ints.push_back(parse_int(items[0], op));
      e.ints.push_back(parse_int(items[1], op));
      if (e.ints[1] <= 0) fail("root of unity order must be positive");
    } else if (op == "neg" || op == "conj") {
      need(1);
      e.args = std::move(items);
    } else {
      if (items.empty()) fail("'" + op + "' needs arguments");
      e.args = std::move(items);
    }
    return e;
  }

  std::vector<Token> toks_;
  const std::string& src_;
  std::size_t pos_ = 0;
};

unsigned to_unsigned(const std::string& s) { return static_cast<unsigned>(std::stoul(s)); }

}  // namespace

Expr parse_expr(const std::string& text) {
  auto toks = tokenize(text);
  if (toks.empty()) throw Error(Errc::Parse, "empty expression");
  return Parser(std::move(toks), text).parse_top();
}

Atom classify_atom(const std::string& text) {
  static const std::regex e_re(R"(E(\d+))");
  static const std::regex c_re(R"(C(\d+))");
  static const std::regex theta_re(R"(theta(\d*))");
  static const std::regex f_re(R"(f\[(\d+);(.+)\])");
  static const std::regex g_re(R"(g\[(\d+);(.+)\])");
  static const std::regex bqf_re(R"(bqf\[(-?\d+),(-?\d+),(-?\d+)\])");
  std::smatch m;
  if (std::regex_match(text, m, e_re)) return AtomE{to_unsigned(m[1])};
  if (std::regex_match(text, m, c_re)) return AtomC{to_unsigned(m[1])};
  if (std::regex_match(text, m, theta_re)) return AtomTheta{m[1].length() ? to_unsigned(m[1]) : 1u};
  if (text == "alpha23") return AtomAlpha23{};
  if (std::regex_match(text, m, bqf_re)) return AtomBqf{std::stol(m[1]), std::stol(m[2]), std::stol(m[3])};
  if (std::regex_match(text, m, f_re)) return AtomF{to_unsigned(m[1]), m[2]};
  if (std::regex_match(text, m, g_re)) {
    const unsigned k = to_unsigned(m[1]);
    const std::string body = m[2];
    // Split at the top-level comma, if any.
    int depth = 0;
    for (std::size_t i = 0; i < body.size(); ++i) {
      if (body[i] == '(') ++depth;
      if (body[i] == ')') --depth;
      if (body[i] == ',' && depth == 0) return AtomG2{k, body.substr(0, i), body.substr(i + 1)};
    }
    return AtomG{k, body};
  }
  if (text.empty() || text.find_first_of("[];,") != std::string::npos) {
    throw Error(Errc::Parse, "malformed atom '" + text + "'");
  }
  return AtomForm{text};
}

std::optional<int> atom_weight(const Atom& atom) {
  return std::visit(
      [](const auto& a) -> std::optional<int> {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, AtomE>) return 2 * static_cast<int>(a.k);
        else if constexpr (std::is_same_v<T, AtomC>) return 4;
        else if constexpr (std::is_same_v<T, AtomF> || std::is_same_v<T, AtomG> || std::is_same_v<T, AtomG2>)
          return 2 * static_cast<int>(a.k);
        else if constexpr (std::is_same_v<T, AtomTheta>) return 1;
        else if constexpr (std::is_same_v<T, AtomAlpha23> || std::is_same_v<T, AtomBqf>) return 2;
        else return std::nullopt;
      },
      atom);
}

unsigned atom_conductor(const Atom& atom) {
  return std::visit(
      [](const auto& a) -> unsigned {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, AtomF> || std::is_same_v<T, AtomG>) return parse_character(a.chi).order();
        else if constexpr (std::is_same_v<T, AtomG2>)
          return std::lcm(parse_character(a.chi).order(), parse_character(a.psi).order());
        else return 1u;
      },
      atom);
}

}  // namespace mfring
