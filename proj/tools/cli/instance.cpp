#include "instance.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "tdvr/errors.hpp"
#include "tdvr/text.hpp"

namespace tdvr::cli {

namespace {

struct Line {
  std::size_t number;
  std::size_t column;  // 1-based column of `text` in the raw line
  std::string text;
};

std::string_view trim(std::string_view s, std::size_t& lead) {
  lead = 0;
  while (lead < s.size() && std::isspace(static_cast<unsigned char>(s[lead]))) ++lead;
  std::size_t end = s.size();
  while (end > lead && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
  return s.substr(lead, end - lead);
}

std::vector<std::pair<std::string, std::size_t>> words(const Line& l) {
  std::vector<std::pair<std::string, std::size_t>> out;
  std::size_t i = 0;
  while (i < l.text.size()) {
    while (i < l.text.size() && std::isspace(static_cast<unsigned char>(l.text[i]))) ++i;
    const std::size_t start = i;
    while (i < l.text.size() && !std::isspace(static_cast<unsigned char>(l.text[i]))) ++i;
    if (i > start) out.emplace_back(l.text.substr(start, i - start), l.column + start);
  }
  return out;
}

std::uint64_t parse_number(const std::string& s, const Line& l, std::size_t col, const char* what) {
  if (s.empty() || s.size() > 9 || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw ParseError(std::string("expected a number for ") + what, l.number, col);
  return std::stoull(s);
}

bool valid_variable(const std::string& v) {
  if (v.empty() || !(std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_')) return false;
  for (char c : v)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  if (v == "pi") return false;
  if (v.size() > 1 && v[0] == 'e' &&
      std::all_of(v.begin() + 1, v.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    return false;
  return true;
}

}  // namespace

Instance parse_instance(std::string_view text) {
  std::vector<Line> lines;
  {
    std::size_t number = 0, pos = 0;
    while (pos <= text.size()) {
      const std::size_t nl = text.find('\n', pos);
      std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
      ++number;
      if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
      if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
      std::size_t lead;
      const std::string_view body = trim(raw, lead);
      if (!body.empty()) lines.push_back({number, lead + 1, std::string(body)});
      if (nl == std::string_view::npos) break;
      pos = nl + 1;
    }
  }

  std::optional<RingSpec> ring;
  std::vector<std::string> vars;
  bool have_vars = false;
  std::uint32_t rank = 1;
  bool have_rank = false;
  std::optional<Line> order_line;
  std::vector<Line> gen_lines;
  std::optional<std::size_t> gens_at;

  auto duplicate = [](const Line& l, const char* what) {
    throw ParseError(std::string("duplicate '") + what + "' line", l.number, l.column);
  };

  for (const auto& l : lines) {
    if (gens_at) {
      gen_lines.push_back(l);
      continue;
    }
    const auto w = words(l);
    const std::string& key = w.front().first;
    if (key.rfind("gens:", 0) == 0) {
      gens_at = l.number;
      const std::size_t skip = 5;
      std::size_t lead;
      const std::string_view rest = trim(std::string_view(l.text).substr(skip), lead);
      if (!rest.empty()) gen_lines.push_back({l.number, l.column + skip + lead, std::string(rest)});
    } else if (key == "ring") {
      if (ring) duplicate(l, "ring");
      std::optional<std::uint64_t> p, a;
      std::optional<Flavor> flavor;
      for (std::size_t k = 1; k < w.size(); ++k) {
        const auto& [tok, col] = w[k];
        const auto eq = tok.find('=');
        if (eq == std::string::npos) throw ParseError("expected key=value in ring line", l.number, col);
        const std::string name = tok.substr(0, eq), value = tok.substr(eq + 1);
        if (name == "p") {
          p = parse_number(value, l, col + eq + 1, "p");
        } else if (name == "a") {
          a = parse_number(value, l, col + eq + 1, "a");
        } else if (name == "flavor") {
          if (value == "pi") flavor = Flavor::EquiChar;
          else if (value == "p") flavor = Flavor::MixedChar;
          else throw ParseError("flavor must be 'pi' or 'p'", l.number, col + eq + 1);
        } else {
          throw ParseError("unknown ring key '" + name + "'", l.number, col);
        }
      }
      if (!p || !a || !flavor) throw ParseError("ring line needs p=, a= and flavor=", l.number, l.column);
      try {
        ring = RingSpec(static_cast<std::uint32_t>(*p), static_cast<std::uint32_t>(*a), *flavor);
      } catch (const PreconditionError& e) {
        throw ParseError(e.what(), l.number, l.column);
      }
    } else if (key == "vars") {
      if (have_vars) duplicate(l, "vars");
      have_vars = true;
      std::set<std::string> seen;
      for (std::size_t k = 1; k < w.size(); ++k) {
        const auto& [tok, col] = w[k];
        if (!valid_variable(tok)) throw ParseError("invalid variable name '" + tok + "'", l.number, col);
        if (!seen.insert(tok).second) throw ParseError("duplicate variable '" + tok + "'", l.number, col);
        vars.push_back(tok);
      }
    } else if (key == "rank") {
      if (have_rank) duplicate(l, "rank");
      have_rank = true;
      if (w.size() != 2) throw ParseError("rank line takes one number", l.number, l.column);
      const std::uint64_t r = parse_number(w[1].first, l, w[1].second, "rank");
      if (r == 0 || r > 64) throw ParseError("rank must be between 1 and 64", l.number, w[1].second);
      rank = static_cast<std::uint32_t>(r);
    } else if (key == "order") {
      if (order_line) duplicate(l, "order");
      order_line = l;
    } else {
      throw ParseError("unknown directive '" + key + "'", l.number, l.column);
    }
  }

  if (!ring) throw ParseError("missing 'ring' line", lines.empty() ? 1 : lines.front().number, 1);
  if (!gens_at) throw ParseError("missing 'gens:' section", lines.empty() ? 1 : lines.back().number, 1);
  if (gen_lines.empty()) throw ParseError("no generators", *gens_at, 1);

  std::optional<TermOrder> order;
  if (order_line) {
    const std::string body = order_line->text.substr(5);
    try {
      order = parse_term_order(body, rank);
    } catch (const ParseError& e) {
      throw ParseError(e.bare_message(), order_line->number, order_line->column + 5 + (e.column() ? e.column() - 1 : 0));
    } catch (const PreconditionError& e) {
      throw ParseError(e.what(), order_line->number, order_line->column);
    }
  }

  Instance inst{make_module(*ring, vars, rank, order), {}};
  for (const auto& l : gen_lines) {
    Element g = parse_element(inst.module, l.text, l.number, l.column - 1);
    if (g.is_zero()) throw ParseError("zero generator", l.number, l.column);
    inst.generators.push_back(std::move(g));
  }
  return inst;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open instance file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str());
}

std::string format_instance(const Instance& inst) {
  const FreeModule& m = *inst.module;
  std::ostringstream out;
  out << "ring p=" << m.ring().p() << " a=" << m.ring().length() << " flavor=" << to_string(m.ring().flavor())
      << "\n";
  out << "vars";
  for (const auto& v : m.var_names()) out << ' ' << v;
  out << "\nrank " << m.rank() << "\n";
  out << "order " << m.order().describe() << "\n";
  out << "gens:\n";
  for (const auto& g : inst.generators) out << to_string(g) << "\n";
  return out.str();
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string fingerprint(const Instance& inst) {
  static const char* hex = "0123456789abcdef";
  std::uint64_t h = fnv1a64(format_instance(inst));
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) s[static_cast<std::size_t>(i)] = hex[h & 0xf];
  return s;
}

Instance reorder(const Instance& inst, const TermOrder& order) {
  Instance out{with_order(inst.module, order), {}};
  for (const auto& g : inst.generators) out.generators.emplace_back(out.module, g.terms());
  return out;
}

}  // namespace tdvr::cli
