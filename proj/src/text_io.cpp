#include "cgsb/text_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace cgsb {

std::string format_letter(Letter p, const Alphabet& al) {
  if (p.is_partial()) return "D";
  std::string out = p.kind() == LetterKind::L ? "L" : "R";
  out += std::to_string(p.index());
  out += "[";
  out += p.decoration() < al.size() ? al.names[p.decoration()] : "#" + std::to_string(p.decoration());
  return out + "]";
}

std::string format_word(const Word& w, const Alphabet& al) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += format_letter(w[i], al);
  }
  return out;
}

std::string format_monomial(const ModuleMonomial& m, const Alphabet& al) {
  std::string out;
  for (Letter p : m.word) out += format_letter(p, al) + " ";
  return out + "|" + al.generator_name(m.gen);
}

namespace {

template <class Key, class Fmt>
std::string format_terms(const Combination<Key>& x, Order o, Fmt&& fmt) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : sorted_terms(x, o)) {
    Rational a = abs(c);
    if (first)
      out += (c < 0 ? "-" : "");
    else
      out += (c < 0 ? " - " : " + ");
    out += to_string(a) + " * " + fmt(k);
    first = false;
  }
  return out;
}

}  // namespace

std::string format_element(const ModuleElement& x, const Alphabet& al, Order o) {
  return format_terms(x, o, [&](const ModuleMonomial& m) { return format_monomial(m, al); });
}

std::string format_element(const AlgebraElement& x, const Alphabet& al, Order o) {
  return format_terms(x, o, [&](const Word& w) { return format_word(w, al); });
}

std::string format_rule(const AlgebraRule& r, const Alphabet& al, Order o) {
  return format_word(r.lhs, al) + " -> " + format_element(r.rhs, al, o);
}

std::string format_rule(const ModuleRule& r, const Alphabet& al, Order o) {
  return format_monomial(r.lhs, al) + " -> " + format_element(r.rhs, al, o);
}

namespace {

struct Token {
  enum Kind { t_letter, t_gen, t_number, t_plus, t_minus, t_star, t_end } kind = t_end;
  Letter letter;
  Generator gen;
  std::string text;
  std::size_t pos = 0;
};

bool name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

class Lexer {
 public:
  Lexer(const std::string& s, const Alphabet& al) : s_(s), al_(al) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
      Token t;
      t.pos = i_;
      if (i_ == s_.size()) {
        out.push_back(t);
        return out;
      }
      char c = s_[i_];
      if (c == '+' || c == '-' || c == '*') {
        t.kind = c == '+' ? Token::t_plus : c == '-' ? Token::t_minus : Token::t_star;
        ++i_;
      } else if (c == 'D' && (i_ + 1 == s_.size() || !name_char(s_[i_ + 1]))) {
        t.kind = Token::t_letter;
        t.letter = Letter::partial();
        ++i_;
      } else if (c == 'L' || c == 'R') {
        t.kind = Token::t_letter;
        ++i_;
        std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (start == i_) fail("expected an index after " + std::string(1, c));
        long n = std::stol(s_.substr(start, i_ - start));
        if (n > static_cast<long>(Letter::kMaxIndex)) fail("letter index too large");
        if (i_ == s_.size() || s_[i_] != '[') fail("expected '[' after the letter index");
        ++i_;
        std::string name = ident();
        if (i_ == s_.size() || s_[i_] != ']') fail("expected ']'");
        ++i_;
        auto a = al_.find(name);
        if (!a) fail("unknown decoration '" + name + "'");
        auto idx = static_cast<std::uint32_t>(n);
        t.letter = c == 'L' ? Letter::L(idx, static_cast<std::uint32_t>(*a)) : Letter::R(idx, static_cast<std::uint32_t>(*a));
      } else if (c == '|') {
        ++i_;
        std::string name = ident();
        t.kind = Token::t_gen;
        if (al_.has_central() && name == al_.central) {
          t.gen = Generator::central();
        } else if (auto a = al_.find(name)) {
          t.gen = Generator{static_cast<int>(*a)};
        } else {
          fail("unknown generator '" + name + "'");
        }
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t start = i_;
        while (i_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[i_])) || s_[i_] == '/')) ++i_;
        t.kind = Token::t_number;
        t.text = s_.substr(start, i_ - start);
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      out.push_back(t);
    }
  }

 private:
  std::string ident() {
    while (i_ < s_.size() && s_[i_] == ' ') ++i_;
    std::size_t start = i_;
    while (i_ < s_.size() && name_char(s_[i_])) ++i_;
    if (start == i_) fail("expected a name");
    return s_.substr(start, i_ - start);
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at column " + std::to_string(i_ + 1) + " in \"" + s_ + "\"");
  }

  const std::string& s_;
  const Alphabet& al_;
  std::size_t i_ = 0;
};

struct ParsedTerm {
  Rational coeff = 1;
  Word word;
  std::optional<Generator> gen;
  bool bare_number = false;  // scalar times the empty word
};

std::vector<ParsedTerm> parse_terms(const std::string& text, const Alphabet& al) {
  auto toks = Lexer(text, al).run();
  std::size_t i = 0;
  auto fail = [&](const std::string& what) {
    throw ParseError(what + " at column " + std::to_string(toks[i].pos + 1) + " in \"" + text + "\"");
  };
  std::vector<ParsedTerm> out;
  if (toks[0].kind == Token::t_end) throw ParseError("empty expression");
  bool first = true;
  while (toks[i].kind != Token::t_end) {
    Rational sign = 1;
    if (toks[i].kind == Token::t_plus || toks[i].kind == Token::t_minus) {
      if (toks[i].kind == Token::t_minus) sign = -1;
      ++i;
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    ParsedTerm t;
    bool had_number = false, had_star = false, explicit_one = false;
    if (toks[i].kind == Token::t_number) {
      t.coeff = parse_rational(toks[i].text);
      had_number = true;
      ++i;
      if (toks[i].kind == Token::t_star) {
        had_star = true;
        ++i;
        if (toks[i].kind == Token::t_number && toks[i].text == "1") {
          explicit_one = true;
          ++i;
        }
      }
    }
    while (toks[i].kind == Token::t_letter) t.word.push_back(toks[i++].letter);
    if (toks[i].kind == Token::t_gen) t.gen = toks[i++].gen;
    const bool body = !t.word.empty() || t.gen;
    if (had_number && !had_star && body) fail("expected '*'");
    if (!had_number && !body) fail("expected a term");
    if (had_star && !body && !explicit_one) fail("expected a term after '*'");
    t.bare_number = !body;
    t.coeff *= sign;
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

bool looks_like_module(const std::string& text) { return text.find('|') != std::string::npos; }

Word parse_word(const std::string& text, const Alphabet& al) {
  auto ts = parse_terms(text, al);
  if (ts.size() != 1 || ts[0].gen || ts[0].coeff != 1) throw ParseError("expected a single word: \"" + text + "\"");
  return ts[0].word;
}

ModuleMonomial parse_monomial(const std::string& text, const Alphabet& al) {
  auto ts = parse_terms(text, al);
  if (ts.size() != 1 || !ts[0].gen || ts[0].coeff != 1 || ts[0].bare_number)
    throw ParseError("expected a single monomial ending in |x: \"" + text + "\"");
  return ModuleMonomial{ts[0].word, *ts[0].gen};
}

ModuleElement parse_module_element(const std::string& text, const Alphabet& al) {
  ModuleElement out;
  for (const auto& t : parse_terms(text, al)) {
    if (t.bare_number && t.coeff == 0) continue;
    if (!t.gen) throw ParseError("module term without a generator in \"" + text + "\"");
    out.add_term(ModuleMonomial{t.word, *t.gen}, t.coeff);
  }
  return out;
}

AlgebraElement parse_algebra_element(const std::string& text, const Alphabet& al) {
  AlgebraElement out;
  for (const auto& t : parse_terms(text, al)) {
    if (t.gen) throw ParseError("generator in an algebra expression \"" + text + "\"");
    out.add_term(t.word, t.coeff);
  }
  return out;
}

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

}  // namespace

RulesFile parse_rules_file(const std::string& text) {
  RulesFile f;
  std::istringstream in(text);
  std::string raw;
  std::size_t no = 0;
  while (std::getline(in, raw)) {
    ++no;
    std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    auto where = "line " + std::to_string(no) + ": ";
    if (line[0] == '@') {
      auto parts = split_ws(line);
      const std::string& d = parts[0];
      if (d == "@preset" && parts.size() == 2) {
        f.preset = parts[1];
      } else if (d == "@order" && parts.size() == 2) {
        try {
          f.order = parse_order(parts[1]);
        } catch (const Error& e) {
          throw ParseError(where + e.what());
        }
      } else if (d == "@generators" && parts.size() >= 2) {
        f.generators.assign(parts.begin() + 1, parts.end());
      } else if (d == "@central" && parts.size() == 2) {
        f.central = parts[1];
      } else {
        throw ParseError(where + "bad directive '" + line + "'");
      }
      continue;
    }
    auto arrow = line.find("->");
    if (arrow == std::string::npos) throw ParseError(where + "expected 'lhs -> rhs'");
    RulesFile::Line r{no, trim(line.substr(0, arrow)), trim(line.substr(arrow + 2))};
    if (r.lhs.empty() || r.rhs.empty()) throw ParseError(where + "expected 'lhs -> rhs'");
    f.rules.push_back(std::move(r));
  }
  return f;
}

std::optional<Alphabet> file_alphabet(const RulesFile& file) {
  if (file.generators.empty()) return std::nullopt;
  return Alphabet{file.generators, file.central.value_or("")};
}

void add_file_rules(RuleSet& base, const RulesFile& file) {
  const Alphabet& al = base.alphabet();
  for (const auto& ln : file.rules) {
    RuleTag tag{"file", "line " + std::to_string(ln.line_no)};
    try {
      if (looks_like_module(ln.lhs)) {
        ModuleRule r{parse_monomial(ln.lhs, al), parse_module_element(ln.rhs, al), tag};
        if (!is_oriented(r, base.order()))
          throw OrientationViolated("lhs is not the leading monomial of the rule");
        base.add_rule(std::move(r));
      } else {
        AlgebraRule r{parse_word(ln.lhs, al), parse_algebra_element(ln.rhs, al), tag, false};
        if (!is_oriented(r, base.order()))
          throw OrientationViolated("lhs is not the leading monomial of the rule");
        base.add_rule(std::move(r));
      }
    } catch (const OrientationViolated& e) {
      throw OrientationViolated("line " + std::to_string(ln.line_no) + ": " + e.what());
    } catch (const DuplicateLhs& e) {
      throw DuplicateLhs("line " + std::to_string(ln.line_no) + ": " + e.what());
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(ln.line_no) + ": " + e.what());
    }
  }
}

std::string write_rules_file(const RuleSet& rs, const std::string& preset_line) {
  const Alphabet& al = rs.alphabet();
  std::ostringstream out;
  if (!preset_line.empty()) out << "@preset " << preset_line << "\n";
  out << "@order " << order_name(rs.order()) << "\n";
  out << "@generators";
  for (const auto& n : al.names) out << " " << n;
  out << "\n";
  if (al.has_central()) out << "@central " << al.central << "\n";
  for (const auto& r : rs.algebra_rules()) out << format_rule(*r, al, rs.order()) << "  # " << r->tag.text() << "\n";
  for (const auto& r : rs.module_rules()) out << format_rule(*r, al, rs.order()) << "  # " << r->tag.text() << "\n";
  return out.str();
}

namespace {

using nlohmann::json;

Rational json_rational(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(std::to_string(v.get<long long>()));
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw ParseError(where + ": expected an integer or a \"p/q\" string");
}

json rational_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return to_string(q);
}

std::pair<std::size_t, std::size_t> json_pair(const std::string& key, const std::vector<std::string>& names) {
  auto comma = key.find(',');
  if (comma == std::string::npos) throw ParseError("key \"" + key + "\" is not of the form \"x,y\"");
  auto find = [&](std::string n) {
    n = trim(n);
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == n) return i;
    throw ParseError("unknown basis element '" + n + "' in \"" + key + "\"");
  };
  return {find(key.substr(0, comma)), find(key.substr(comma + 1))};
}

}  // namespace

LieSpec parse_lie_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("basis") || !j["basis"].is_array())
    throw ParseError("Lie file needs a \"basis\" array");
  LieSpec s;
  for (const auto& n : j["basis"]) {
    if (!n.is_string()) throw ParseError("basis names must be strings");
    s.basis_names.push_back(n.get<std::string>());
  }
  if (j.contains("central")) s.central_name = j["central"].get<std::string>();
  if (j.contains("bracket")) {
    for (const auto& [key, val] : j["bracket"].items()) {
      auto ij = json_pair(key, s.basis_names);
      LieVector v;
      if (!val.is_object()) throw ParseError("bracket \"" + key + "\" must be an object");
      for (const auto& [name, c] : val.items()) {
        auto k = json_pair(name + "," + name, s.basis_names).first;
        v.add(k, json_rational(c, "bracket \"" + key + "\""));
      }
      if (s.brackets.count(ij)) throw ParseError("bracket \"" + key + "\" given twice");
      s.brackets[ij] = v;
    }
  }
  if (j.contains("form")) {
    for (const auto& [key, val] : j["form"].items()) {
      auto ij = json_pair(key, s.basis_names);
      if (s.form.count(ij)) throw ParseError("form \"" + key + "\" given twice");
      s.form[ij] = json_rational(val, "form \"" + key + "\"");
    }
  }
  for (const auto& [key, val] : j.items())
    if (key != "basis" && key != "central" && key != "bracket" && key != "form")
      throw ParseError("unknown key \"" + key + "\" in Lie file");
  return s;
}

std::string lie_to_json(const LieData& lie) {
  json j;
  j["basis"] = lie.names();
  j["central"] = lie.central_name();
  json br = json::object(), fm = json::object();
  const auto& n = lie.names();
  for (std::size_t a = 0; a < lie.dim(); ++a)
    for (std::size_t b = a + 1; b < lie.dim(); ++b) {
      const LieVector& v = lie.bracket(a, b);
      if (v.is_zero()) continue;
      json o = json::object();
      for (const auto& [k, c] : v.coeffs()) o[n[k]] = rational_json(c);
      br[n[a] + "," + n[b]] = o;
    }
  for (std::size_t a = 0; a < lie.dim(); ++a)
    for (std::size_t b = a; b < lie.dim(); ++b)
      if (lie.form(a, b) != 0) fm[n[a] + "," + n[b]] = rational_json(lie.form(a, b));
  j["bracket"] = br;
  j["form"] = fm;
  return j.dump(2);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace cgsb
