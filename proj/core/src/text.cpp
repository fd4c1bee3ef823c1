#include "tdvr/text.hpp"

#include <cctype>
#include <charconv>
#include <optional>

#include "tdvr/errors.hpp"

namespace tdvr {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string_view text;
  std::size_t column;  // 1-based
};

class Lexer {
 public:
  Lexer(std::string_view s, std::size_t line, std::size_t offset) : s_(s), line_(line), offset_(offset) {
    advance();
  }

  const Token& peek() const { return cur_; }
  Token take() {
    Token t = cur_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& msg, std::size_t column) const {
    throw ParseError(msg, line_, column + offset_);
  }
  [[noreturn]] void fail(const std::string& msg) const { fail(msg, cur_.column); }

 private:
  void advance() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    const std::size_t start = pos_;
    if (pos_ >= s_.size()) {
      cur_ = {Tok::End, {}, start + 1};
      return;
    }
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      cur_ = {Tok::Number, s_.substr(start, pos_ - start), start + 1};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      cur_ = {Tok::Ident, s_.substr(start, pos_ - start), start + 1};
      return;
    }
    ++pos_;
    Tok k;
    switch (c) {
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '^': k = Tok::Caret; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      default: throw ParseError(std::string("unexpected character '") + c + "'", line_, start + 1 + offset_);
    }
    cur_ = {k, s_.substr(start, 1), start + 1};
  }

  std::string_view s_;
  std::size_t line_;
  std::size_t offset_;
  std::size_t pos_ = 0;
  Token cur_{Tok::End, {}, 1};
};

std::uint64_t to_number(const Lexer& lx, const Token& t) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
  if (ec != std::errc() || ptr != t.text.data() + t.text.size()) lx.fail("number out of range", t.column);
  return v;
}

Scalar number_scalar(const RingSpec& ring, std::uint64_t v) {
  if (ring.flavor() == Flavor::EquiChar) return Scalar(ring, v % ring.p());
  return Scalar(ring, v % ring.modulus());
}

std::uint32_t optional_power(Lexer& lx) {
  if (lx.peek().kind != Tok::Caret) return 1;
  lx.take();
  const Token t = lx.take();
  if (t.kind != Tok::Number) lx.fail("expected an exponent after '^'", t.column);
  const std::uint64_t e = to_number(lx, t);
  if (e > 0xffffffffULL) lx.fail("exponent does not fit in 32 bits", t.column);
  return static_cast<std::uint32_t>(e);
}

Scalar pi_literal(Lexer& lx, const RingSpec& ring, const Token& t) {
  if (ring.flavor() != Flavor::EquiChar) lx.fail("uniformizer literal mismatch: 'pi' used over Z/p^a", t.column);
  return Scalar::uniformizer_power(ring, optional_power(lx));
}

bool starts_factor(Tok k) { return k == Tok::Number || k == Tok::Ident || k == Tok::LParen; }

// sum of scalar terms inside parentheses
Scalar parse_scalar_sum(Lexer& lx, const RingSpec& ring) {
  Scalar total(ring);
  bool first = true;
  while (true) {
    bool negate = false;
    if (lx.peek().kind == Tok::Plus || lx.peek().kind == Tok::Minus) {
      negate = lx.take().kind == Tok::Minus;
    } else if (!first) {
      break;
    }
    first = false;
    Scalar term = Scalar::one(ring);
    bool have = false;
    while (true) {
      if (have && lx.peek().kind == Tok::Star) lx.take();
      const Token t = lx.peek();
      if (t.kind == Tok::Number) {
        lx.take();
        term *= number_scalar(ring, to_number(lx, t));
      } else if (t.kind == Tok::Ident && t.text == "pi") {
        lx.take();
        term *= pi_literal(lx, ring, t);
      } else if (t.kind == Tok::LParen) {
        lx.take();
        term *= parse_scalar_sum(lx, ring);
        if (lx.peek().kind != Tok::RParen) lx.fail("expected ')'");
        lx.take();
      } else if (t.kind == Tok::Ident) {
        lx.fail("unexpected identifier '" + std::string(t.text) + "' in a scalar");
      } else {
        if (!have) lx.fail("expected a scalar term");
        break;
      }
      have = true;
      if (!starts_factor(lx.peek().kind) && lx.peek().kind != Tok::Star) break;
    }
    total += negate ? -term : term;
  }
  return total;
}

std::optional<std::uint32_t> component_marker(std::string_view id) {
  if (id.size() < 2 || id[0] != 'e') return std::nullopt;
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(id.data() + 1, id.data() + id.size(), v);
  if (ec != std::errc() || ptr != id.data() + id.size()) return std::nullopt;
  return v;
}

}  // namespace

Scalar parse_scalar(const RingSpec& ring, std::string_view text, std::size_t line, std::size_t column_offset) {
  Lexer lx(text, line, column_offset);
  if (lx.peek().kind == Tok::End) lx.fail("empty scalar");
  Scalar s = parse_scalar_sum(lx, ring);
  if (lx.peek().kind != Tok::End) lx.fail("trailing input after scalar");
  return s;
}

Element parse_element(const ModulePtr& module, std::string_view text, std::size_t line, std::size_t column_offset) {
  const RingSpec& ring = module->ring();
  const auto& vars = module->var_names();
  Lexer lx(text, line, column_offset);
  if (lx.peek().kind == Tok::End) lx.fail("empty element");
  std::vector<Term> terms;
  bool first = true;
  while (lx.peek().kind != Tok::End) {
    bool negate = false;
    if (lx.peek().kind == Tok::Plus || lx.peek().kind == Tok::Minus) {
      negate = lx.take().kind == Tok::Minus;
    } else if (!first) {
      lx.fail("expected '+' or '-' between terms");
    }
    first = false;
    const std::size_t term_column = lx.peek().column;
    Scalar coeff = Scalar::one(ring);
    std::vector<std::uint32_t> exps(vars.size(), 0);
    std::optional<std::uint32_t> comp;
    bool have = false;
    while (true) {
      if (have && lx.peek().kind == Tok::Star) lx.take();
      const Token t = lx.peek();
      if (t.kind == Tok::Number) {
        lx.take();
        coeff *= number_scalar(ring, to_number(lx, t));
      } else if (t.kind == Tok::LParen) {
        lx.take();
        coeff *= parse_scalar_sum(lx, ring);
        if (lx.peek().kind != Tok::RParen) lx.fail("expected ')'");
        lx.take();
      } else if (t.kind == Tok::Ident) {
        lx.take();
        if (t.text == "pi") {
          coeff *= pi_literal(lx, ring, t);
        } else {
          std::size_t vi = vars.size();
          for (std::size_t k = 0; k < vars.size(); ++k)
            if (vars[k] == t.text) vi = k;
          if (vi < vars.size()) {
            const std::uint64_t e = std::uint64_t{exps[vi]} + optional_power(lx);
            if (e > 0xffffffffULL) lx.fail("exponent does not fit in 32 bits", t.column);
            exps[vi] = static_cast<std::uint32_t>(e);
          } else if (auto c = component_marker(t.text)) {
            if (comp) lx.fail("more than one component marker in a term", t.column);
            if (*c < 1 || *c > module->rank())
              lx.fail("component marker " + std::string(t.text) + " outside e1..e" + std::to_string(module->rank()),
                      t.column);
            comp = *c - 1;
          } else {
            lx.fail("unknown variable '" + std::string(t.text) + "'", t.column);
          }
        }
      } else {
        if (!have) lx.fail("expected a term");
        break;
      }
      have = true;
      if (!starts_factor(lx.peek().kind) && lx.peek().kind != Tok::Star) break;
    }
    if (!comp) {
      if (module->rank() > 1) lx.fail("term lacks a component marker (rank > 1)", term_column);
      comp = 0;
    }
    terms.push_back({negate ? -coeff : coeff, {Monomial(std::move(exps)), *comp}});
  }
  return Element(module, std::move(terms));
}

TermOrder parse_term_order(std::string_view text, std::uint32_t rank) {
  std::vector<std::string> words;
  std::string cur;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      if (!cur.empty()) words.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
  }
  if (!cur.empty()) words.push_back(std::move(cur));
  if (words.empty()) throw ParseError("empty term order");
  MonomialOrder mono;
  if (words[0] == "lex") mono = MonomialOrder::Lex;
  else if (words[0] == "deglex") mono = MonomialOrder::DegLex;
  else if (words[0] == "degrevlex" || words[0] == "grevlex") mono = MonomialOrder::DegRevLex;
  else throw ParseError("unknown monomial order '" + words[0] + "'");
  ModuleMode mode = ModuleMode::POT;
  std::size_t next = 1;
  if (words.size() > 1 && (words[1] == "pot" || words[1] == "top")) {
    mode = words[1] == "pot" ? ModuleMode::POT : ModuleMode::TOP;
    next = 2;
  }
  if (next < words.size() && words[next] == "priority") ++next;
  std::vector<std::uint32_t> prio;
  for (; next < words.size(); ++next) {
    std::uint32_t v = 0;
    const auto& w = words[next];
    auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
    if (ec != std::errc() || ptr != w.data() + w.size() || v < 1 || v > rank)
      throw ParseError("bad component priority entry '" + w + "'");
    prio.push_back(v - 1);
  }
  if (prio.empty()) {
    for (std::uint32_t c = 0; c < rank; ++c) prio.push_back(c);
  }
  if (prio.size() != rank) throw ParseError("component priority must list all " + std::to_string(rank) + " components");
  try {
    return TermOrder(mono, mode, std::move(prio));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

std::string to_string(const Monomial& x, const std::vector<std::string>& var_names) {
  std::string s;
  for (std::size_t i = 0; i < x.nvars(); ++i) {
    if (x[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += i < var_names.size() ? var_names[i] : "x" + std::to_string(i + 1);
    if (x[i] > 1) s += "^" + std::to_string(x[i]);
  }
  return s.empty() ? "1" : s;
}

std::string to_string(const ModuleMonomial& x, const FreeModule& module) {
  std::string s = to_string(x.mono, module.var_names());
  if (module.rank() > 1) s = (x.mono.is_one() ? "" : s + "*") + "e" + std::to_string(x.component + 1);
  return s;
}

std::string to_string(const Element& f) {
  if (f.is_zero()) return "0";
  const FreeModule& m = *f.module();
  std::string out;
  for (const auto& t : f.terms()) {
    if (!out.empty()) out += " + ";
    std::string coeff = to_string(t.coeff);
    const bool compound = coeff.find(' ') != std::string::npos;
    const std::string mono = to_string(t.mono, m);
    const bool bare_one = t.mono.mono.is_one() && m.rank() == 1;
    if (bare_one) {
      out += coeff;
    } else if (t.coeff == Scalar::one(f.ring())) {
      out += mono;
    } else {
      out += (compound ? "(" + coeff + ")" : coeff) + "*" + mono;
    }
  }
  return out;
}

}  // namespace tdvr
