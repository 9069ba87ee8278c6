#include "twochar/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace twochar {

namespace {

// ---- key = value lexer ----

struct Token {
  enum Kind { Ident, Int, String, LBracket, RBracket, Comma, Equals, End } kind;
  std::string text;
  long number = 0;
  int line = 0;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  int line = 1;
  size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (c == '\n') {
      ++line;
      ++i;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '#') {
      while (i < s.size() && s[i] != '\n') ++i;
    } else if (c == '[') {
      out.push_back({Token::LBracket, "[", 0, line});
      ++i;
    } else if (c == ']') {
      out.push_back({Token::RBracket, "]", 0, line});
      ++i;
    } else if (c == ',') {
      out.push_back({Token::Comma, ",", 0, line});
      ++i;
    } else if (c == '=') {
      out.push_back({Token::Equals, "=", 0, line});
      ++i;
    } else if (c == '"') {
      std::string text;
      ++i;
      while (true) {
        if (i >= s.size() || s[i] == '\n') throw ParseError("unterminated string", line);
        if (s[i] == '"') break;
        if (s[i] == '\\') {
          ++i;
          if (i >= s.size() || (s[i] != '"' && s[i] != '\\')) throw ParseError("bad escape in string", line);
        }
        text += s[i++];
      }
      ++i;
      out.push_back({Token::String, text, 0, line});
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+') {
      size_t start = i;
      if (c == '-' || c == '+') ++i;
      if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) {
        throw ParseError("expected digits after sign", line);
      }
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      std::string text = s.substr(start, i - start);
      long v;
      try {
        v = std::stol(text);
      } catch (const std::out_of_range&) {
        throw ParseError("integer out of range: " + text, line);
      }
      out.push_back({Token::Int, text, v, line});
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = i;
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      out.push_back({Token::Ident, s.substr(start, i - start), 0, line});
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line);
    }
  }
  out.push_back({Token::End, "", 0, line});
  return out;
}

class ValueParser {
 public:
  explicit ValueParser(std::vector<Token> tokens) : t_(std::move(tokens)) {}

  const Token& peek() const { return t_[pos_]; }
  const Token& next() { return t_[pos_++]; }

  Value value() {
    const Token& tok = next();
    switch (tok.kind) {
      case Token::Int:
        return {tok.number, tok.line};
      case Token::String:
        return {tok.text, tok.line};
      case Token::LBracket: {
        Value v{std::vector<Value>{}, tok.line};
        auto& items = std::get<std::vector<Value>>(v.data);
        if (peek().kind == Token::RBracket) {
          next();
          return v;
        }
        while (true) {
          items.push_back(value());
          const Token& sep = next();
          if (sep.kind == Token::RBracket) break;
          if (sep.kind != Token::Comma) throw ParseError("expected ',' or ']' in list", sep.line);
          // trailing comma
          if (peek().kind == Token::RBracket) {
            next();
            break;
          }
        }
        return v;
      }
      case Token::End:
        throw ParseError("unexpected end of input, expected a value", tok.line);
      default:
        throw ParseError("expected a value, got '" + tok.text + "'", tok.line);
    }
  }

  int last_line() const { return pos_ > 0 ? t_[pos_ - 1].line : 0; }

 private:
  std::vector<Token> t_;
  size_t pos_ = 0;
};

std::string kind_name(const Value& v) {
  if (v.is_int()) return "an integer";
  if (v.is_string()) return "a string";
  return "a list";
}

}  // namespace

long Value::as_int() const {
  if (!is_int()) throw ParseError("expected an integer, got " + kind_name(*this), line);
  return std::get<long>(data);
}

const std::string& Value::as_string() const {
  if (!is_string()) throw ParseError("expected a string, got " + kind_name(*this), line);
  return std::get<std::string>(data);
}

const std::vector<Value>& Value::as_list() const {
  if (!is_list()) throw ParseError("expected a list, got " + kind_name(*this), line);
  return std::get<std::vector<Value>>(data);
}

KeyValues KeyValues::parse(const std::string& text) {
  ValueParser p(tokenize(text));
  KeyValues kv;
  int prev_end = 0;
  while (p.peek().kind != Token::End) {
    const Token key = p.next();
    if (key.kind != Token::Ident) throw ParseError("expected a key, got '" + key.text + "'", key.line);
    if (key.line == prev_end) throw ParseError("expected a newline before key '" + key.text + "'", key.line);
    const Token eq = p.next();
    if (eq.kind != Token::Equals) throw ParseError("expected '=' after key '" + key.text + "'", eq.line);
    Value v = p.value();
    if (kv.entries_.count(key.text)) throw ParseError("duplicate key '" + key.text + "'", key.line);
    kv.entries_.emplace(key.text, std::move(v));
    prev_end = p.last_line();
  }
  return kv;
}

const Value& KeyValues::get(const std::string& key) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) throw ParseError("missing key '" + key + "'");
  return it->second;
}

void KeyValues::allow_only(const std::vector<std::string>& allowed) const {
  for (const auto& [key, v] : entries_) {
    bool ok = false;
    for (const auto& a : allowed) ok = ok || a == key;
    if (!ok) throw ParseError("unknown key '" + key + "'", v.line);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
  if (!out) throw Error("write failed: " + path);
}

// ---- groups ----

namespace {

int parse_small_int(const std::string& s, const std::string& whole) {
  if (s.empty() || s.size() > 6) throw ParseError("bad group name \"" + whole + "\"");
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad group name \"" + whole + "\"");
  }
  return std::stoi(s);
}

GroupPtr builtin_factor(const std::string& name, const std::string& whole) {
  if (name == "Q8") return quaternion8();
  if (name.size() >= 2) {
    int n = parse_small_int(name.substr(1), whole);
    switch (name[0]) {
      case 'C':
        return cyclic(n);
      case 'D':
        return dihedral(n);
      case 'S':
        return symmetric(n);
    }
  }
  throw ParseError("unknown builtin group \"" + whole + "\"");
}

}  // namespace

GroupPtr builtin_group(const std::string& name) {
  GroupPtr g;
  size_t start = 0;
  while (true) {
    size_t x = name.find('x', start);
    GroupPtr f = builtin_factor(name.substr(start, x == std::string::npos ? x : x - start), name);
    g = g ? direct_product(g, f) : f;
    if (x == std::string::npos) break;
    start = x + 1;
  }
  return g;
}

GroupPtr parse_group_file(const std::string& text) {
  KeyValues kv = KeyValues::parse(text);
  kv.allow_only({"builtin", "n", "degree", "generators", "labels"});
  GroupPtr g;
  if (kv.has("builtin")) {
    if (kv.has("degree") || kv.has("generators")) {
      throw ParseError("'builtin' cannot be combined with 'degree' or 'generators'", kv.get("builtin").line);
    }
    const Value& b = kv.get("builtin");
    const std::string& name = b.as_string();
    try {
      if (name == "cyclic" || name == "dihedral" || name == "symmetric") {
        int n = static_cast<int>(kv.get("n").as_int());
        g = name == "cyclic" ? cyclic(n) : name == "dihedral" ? dihedral(n) : symmetric(n);
      } else if (name == "quaternion8") {
        g = quaternion8();
      } else {
        if (kv.has("n")) throw ParseError("'n' is only used with cyclic, dihedral or symmetric", kv.get("n").line);
        g = builtin_group(name);
      }
    } catch (const ParseError& e) {
      if (e.line() > 0) throw;
      throw ParseError(e.what(), b.line);
    } catch (const ParameterError& e) {
      throw ParseError(e.what(), b.line);
    }
  } else {
    const Value& d = kv.get("degree");
    long degree = d.as_int();
    if (degree < 1 || degree > 64) throw ParseError("degree must lie in 1..64", d.line);
    std::vector<Permutation> gens;
    for (const Value& v : kv.get("generators").as_list()) {
      try {
        gens.push_back(parse_cycles(v.as_string(), static_cast<int>(degree)));
      } catch (const ParseError& e) {
        if (e.line() > 0) throw;
        throw ParseError(e.what(), v.line);
      }
    }
    g = FiniteGroup::from_permutation_generators(static_cast<int>(degree), gens);
  }
  if (kv.has("labels")) {
    const Value& lv = kv.get("labels");
    std::vector<std::string> labels;
    for (const Value& v : lv.as_list()) labels.push_back(v.as_string());
    if (static_cast<int>(labels.size()) != g->order()) {
      throw ParseError("expected " + std::to_string(g->order()) + " labels, got " + std::to_string(labels.size()),
                       lv.line);
    }
    g = FiniteGroup::from_mult_table(g->table(), std::move(labels));
  }
  return g;
}

GroupPtr load_group(const std::string& path) { return parse_group_file(read_file(path)); }

Subgroup parse_subgroup_spec(const GroupPtr& g, const std::string& spec) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char c : spec) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  std::vector<int> gens;
  for (auto& p : parts) {
    size_t a = p.find_first_not_of(" \t");
    size_t b = p.find_last_not_of(" \t");
    std::string label = a == std::string::npos ? "" : p.substr(a, b - a + 1);
    if (label.empty()) {
      if (parts.size() == 1) break;
      throw ParseError("empty element label in subgroup spec \"" + spec + "\"");
    }
    auto idx = g->find_label(label);
    if (!idx) throw ParseError("unknown element label \"" + label + "\" in subgroup spec");
    gens.push_back(*idx);
  }
  return Subgroup::generated_by(g, gens);
}

// ---- cyclotomic literals ----

namespace {

class LiteralParser {
 public:
  LiteralParser(const std::string& s, int level) : s_(s), level_(level) {}

  CycNumber parse() {
    skip();
    if (pos_ >= s_.size()) fail("empty literal");
    CycNumber total(level_);
    bool first = true;
    while (pos_ < s_.size()) {
      bool negative = false;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        negative = s_[pos_] == '-';
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      CycNumber term = factor();
      skip();
      while (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        skip();
        term *= factor();
        skip();
      }
      total += negative ? -term : term;
      first = false;
    }
    return total;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " in cyclotomic literal \"" + s_ + "\"");
  }

  BigInt digits() {
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return BigInt(s_.substr(start, pos_ - start));
  }

  long small(long limit) {
    BigInt v = digits();
    if (v > limit) fail("number too large");
    return v.get_si();
  }

  CycNumber factor() {
    if (pos_ >= s_.size()) fail("expected a factor");
    if (s_[pos_] == 'z') {
      ++pos_;
      long n = small(1000000);
      if (n < 1) fail("zN needs N >= 1");
      if (level_ % n != 0) {
        fail("z" + std::to_string(n) + " is not available at level " + std::to_string(level_));
      }
      long k = 1;
      skip();
      if (pos_ < s_.size() && s_[pos_] == '^') {
        ++pos_;
        skip();
        bool neg = pos_ < s_.size() && s_[pos_] == '-';
        if (neg) ++pos_;
        k = small(1000000000);
        if (neg) k = -k;
      }
      return root_of_unity(level_, k * (level_ / n));
    }
    BigRational q(digits());
    skip();
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      skip();
      BigInt den = digits();
      if (den == 0) fail("zero denominator");
      q = BigRational(q.get_num(), den);
      q.canonicalize();
    }
    return CycNumber::rational(level_, q);
  }

  const std::string& s_;
  int level_;
  size_t pos_ = 0;
};

}  // namespace

CycNumber parse_cyclotomic(const std::string& text, int level) { return LiteralParser(text, level).parse(); }

std::string format_cyclotomic(const CycNumber& x) {
  if (auto q = x.as_rational()) return q->get_str();
  const int level = x.level();
  if (auto k = x.root_of_unity_exponent()) return "z" + std::to_string(level) + "^" + std::to_string(*k);
  std::string out;
  const auto& c = x.coeffs();
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    bool negative = c[i] < 0;
    BigRational a = abs(c[i]);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono = "z" + std::to_string(level) + "^" + std::to_string(i);
    if (i == 0) {
      out += a.get_str();
    } else if (a == 1) {
      out += mono;
    } else {
      out += a.get_str() + "*" + mono;
    }
  }
  return out;
}

// ---- cocycle files ----

Cocycle parse_cocycle_file(const GroupPtr& g, const std::string& text) {
  KeyValues kv = KeyValues::parse(text);
  kv.allow_only({"modulus", "table"});
  const Value& mv = kv.get("modulus");
  long m = mv.as_int();
  if (m < 1 || m > 1000000) throw ParseError("modulus must lie in 1..1000000", mv.line);
  const int n = g->order();
  const Value& tv = kv.get("table");
  const auto& rows = tv.as_list();
  if (static_cast<int>(rows.size()) != n) {
    throw ParseError("table needs " + std::to_string(n) + " rows, got " + std::to_string(rows.size()), tv.line);
  }
  std::vector<int> table;
  table.reserve(static_cast<size_t>(n) * n);
  for (const Value& row : rows) {
    const auto& r = row.as_list();
    if (static_cast<int>(r.size()) != n) {
      throw ParseError("table row needs " + std::to_string(n) + " entries, got " + std::to_string(r.size()), row.line);
    }
    for (const Value& e : r) table.push_back(static_cast<int>(((e.as_int() % m) + m) % m));
  }
  return Cocycle(g, static_cast<int>(m), std::move(table));
}

std::string format_cocycle_file(const Cocycle& c) {
  const int n = c.group()->order();
  std::ostringstream out;
  out << "modulus = " << c.modulus() << "\n";
  out << "table = [\n";
  for (int g = 0; g < n; ++g) {
    out << "  [";
    for (int h = 0; h < n; ++h) out << (h ? ", " : "") << c.exponent(g, h);
    out << "],";
    out << "  # " << c.group()->label(g) << "\n";
  }
  out << "]\n";
  return out.str();
}

// ---- 2-rep files ----

namespace {

CycNumber literal_value(const Value& v, int level) {
  if (v.is_int()) return CycNumber::integer(level, v.as_int());
  try {
    return parse_cyclotomic(v.as_string(), level);
  } catch (const ParseError& e) {
    if (e.line() > 0) throw;
    throw ParseError(e.what(), v.line);
  }
}

const std::vector<Value>& sized_list(const Value& v, size_t size, const std::string& what) {
  const auto& l = v.as_list();
  if (l.size() != size) {
    throw ParseError(what + " needs " + std::to_string(size) + " entries, got " + std::to_string(l.size()), v.line);
  }
  return l;
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

TwoRep parse_two_rep_file(const GroupPtr& g, const std::string& text) {
  KeyValues kv = KeyValues::parse(text);
  kv.allow_only({"group", "group_order", "elements", "level", "n", "sigma", "coh", "unit"});
  const int order = g->order();
  if (kv.has("group")) {
    const Value& gv = kv.get("group");
    GroupPtr named;
    try {
      named = builtin_group(gv.as_string());
    } catch (const Error&) {
      // not a builtin name: a free-form reference
    }
    if (named && !same_group(*named, *g)) {
      throw ValidationError("2-rep file refers to group " + gv.as_string() + ", which differs from the given group");
    }
  }
  if (kv.has("group_order") && kv.get("group_order").as_int() != order) {
    throw ValidationError("2-rep file is for a group of order " + std::to_string(kv.get("group_order").as_int()) +
                          ", the given group has order " + std::to_string(order));
  }
  if (kv.has("elements")) {
    const auto& els = sized_list(kv.get("elements"), order, "elements");
    for (int i = 0; i < order; ++i) {
      if (els[i].as_string() != g->label(i)) {
        throw ValidationError("element " + std::to_string(i) + " is \"" + els[i].as_string() +
                              "\" in the 2-rep file but \"" + g->label(i) + "\" in the group");
      }
    }
  }
  const Value& lv = kv.get("level");
  long level = lv.as_int();
  if (level < 1 || level > 100000) throw ParseError("level must lie in 1..100000", lv.line);
  const Value& nv = kv.get("n");
  long n = nv.as_int();
  if (n < 0 || n > 100000) throw ParseError("n must lie in 0..100000", nv.line);
  const int L = static_cast<int>(level);
  const int N = static_cast<int>(n);

  std::vector<Permutation> sigma;
  for (const Value& v : sized_list(kv.get("sigma"), order, "sigma")) {
    try {
      sigma.push_back(parse_cycles(v.as_string(), N));
    } catch (const ParseError& e) {
      if (e.line() > 0) throw;
      throw ParseError(e.what(), v.line);
    }
  }

  std::vector<CycNumber> coh;
  coh.reserve(static_cast<size_t>(order) * order * N);
  const Value& cv = kv.get("coh");
  if (!cv.is_list()) {
    coh.assign(static_cast<size_t>(order) * order * N, literal_value(cv, L));
  } else {
    for (const Value& row : sized_list(cv, order, "coh")) {
      for (const Value& cell : sized_list(row, order, "coh row")) {
        for (const Value& e : sized_list(cell, N, "coh entry")) coh.push_back(literal_value(e, L));
      }
    }
  }
  std::vector<CycNumber> unit;
  const Value& uv = kv.get("unit");
  if (!uv.is_list()) {
    unit.assign(N, literal_value(uv, L));
  } else {
    for (const Value& e : sized_list(uv, N, "unit")) unit.push_back(literal_value(e, L));
  }
  TwoRep rho(g, L, N, std::move(sigma), std::move(coh), std::move(unit));
  Report r = check_two_rep(rho);
  if (!r) throw ValidationError("2-rep axiom fails: " + r.witness);
  return rho;
}

std::string format_two_rep_file(const TwoRep& rho, const std::string& group_reference) {
  const auto& g = *rho.group();
  const int order = g.order();
  std::ostringstream out;
  if (!group_reference.empty()) out << "group = " << quote(group_reference) << "\n";
  out << "group_order = " << order << "\n";
  out << "elements = [";
  for (int i = 0; i < order; ++i) out << (i ? ", " : "") << quote(g.label(i));
  out << "]\n";
  out << "level = " << rho.level() << "\n";
  out << "n = " << rho.n() << "\n";
  out << "sigma = [\n";
  for (int i = 0; i < order; ++i) out << "  " << quote(format_cycles(rho.sigma(i))) << ",  # " << g.label(i) << "\n";
  out << "]\n";
  out << "# coh[g][h][j] = c_{g,h}(j)\n";
  out << "coh = [\n";
  for (int a = 0; a < order; ++a) {
    out << "  [  # " << g.label(a) << "\n";
    for (int b = 0; b < order; ++b) {
      out << "    [";
      for (int j = 0; j < rho.n(); ++j) out << (j ? ", " : "") << quote(format_cyclotomic(rho.coh(a, b, j)));
      out << "],\n";
    }
    out << "  ],\n";
  }
  out << "]\n";
  out << "unit = [";
  for (int j = 0; j < rho.n(); ++j) out << (j ? ", " : "") << quote(format_cyclotomic(rho.unit(j)));
  out << "]\n";
  return out.str();
}

// ---- JSON ----

Json to_json(const CycNumber& x) {
  Json coeffs = Json::array();
  for (const auto& q : x.coeffs()) coeffs.push_back(Json::array({q.get_num().get_str(), q.get_den().get_str()}));
  return Json{{"level", x.level()}, {"coeffs", std::move(coeffs)}};
}

CycNumber cyclotomic_from_json(const Json& j) {
  try {
    int level = j.at("level").get<int>();
    if (level < 1) throw ParseError("level must be positive");
    std::vector<BigRational> coeffs;
    for (const auto& c : j.at("coeffs")) {
      if (!c.is_array() || c.size() != 2) throw ParseError("coefficient must be [\"num\", \"den\"]");
      BigInt num, den;
      if (num.set_str(c[0].get<std::string>(), 10) != 0 || den.set_str(c[1].get<std::string>(), 10) != 0) {
        throw ParseError("coefficient is not a decimal integer");
      }
      if (den == 0) throw ParseError("zero denominator");
      BigRational q(num, den);
      q.canonicalize();
      coeffs.push_back(q);
    }
    if (static_cast<int>(coeffs.size()) != euler_phi(level)) {
      throw ParseError("level " + std::to_string(level) + " needs " + std::to_string(euler_phi(level)) +
                       " coefficients");
    }
    return CycNumber(level, std::move(coeffs));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed cyclotomic JSON: ") + e.what());
  }
}

Json to_json(const CohomologyGroup& h) {
  return Json{{"invariant_factors", h.invariant_factors()}, {"order", h.order()}, {"text", h.to_string()}};
}

Json to_json(const Cocycle& c) {
  const int n = c.group()->order();
  Json table = Json::array();
  for (int g = 0; g < n; ++g) {
    Json row = Json::array();
    for (int h = 0; h < n; ++h) row.push_back(c.exponent(g, h));
    table.push_back(std::move(row));
  }
  return Json{{"modulus", c.modulus()}, {"elements", c.group()->labels()}, {"table", std::move(table)}};
}

Json to_json(const TwoRep& rho) {
  const auto& g = *rho.group();
  const int order = g.order();
  Json sigma = Json::array();
  for (int i = 0; i < order; ++i) sigma.push_back(format_cycles(rho.sigma(i)));
  Json coh = Json::array();
  for (int a = 0; a < order; ++a) {
    Json row = Json::array();
    for (int b = 0; b < order; ++b) {
      Json cell = Json::array();
      for (int j = 0; j < rho.n(); ++j) cell.push_back(format_cyclotomic(rho.coh(a, b, j)));
      row.push_back(std::move(cell));
    }
    coh.push_back(std::move(row));
  }
  Json unit = Json::array();
  for (int j = 0; j < rho.n(); ++j) unit.push_back(format_cyclotomic(rho.unit(j)));
  return Json{{"group_order", order}, {"elements", g.labels()}, {"level", rho.level()}, {"n", rho.n()},
              {"sigma", std::move(sigma)}, {"coh", std::move(coh)}, {"unit", std::move(unit)}};
}

Json to_json(const ClassFunction& chi) {
  const auto& gd = *chi.groupoid();
  Json values = Json::object();
  for (int c = 0; c < chi.num_classes(); ++c) {
    values[gd.morphism_label(chi.classes().classes[c].front())] = format_cyclotomic(chi.value(c));
  }
  return Json{{"level", chi.level()}, {"values", std::move(values)}};
}

Json to_json(const TwoClassFunction& chi) {
  const auto& g = *chi.group();
  const auto& pairs = g.commuting_pairs().pairs;
  Json values = Json::object();
  for (size_t i = 0; i < pairs.size(); ++i) {
    auto [a, b] = pairs[i];
    values["(" + g.label(a) + "," + g.label(b) + ")"] = format_cyclotomic(chi.values()[i]);
  }
  return Json{{"level", chi.level()}, {"values", std::move(values)}};
}

Json to_json(const FiniteGroupoid& g) {
  Json objects = Json::array();
  for (int x = 0; x < g.num_objects(); ++x) objects.push_back(g.object_label(x));
  Json morphisms = Json::array();
  for (int m = 0; m < g.num_morphisms(); ++m) {
    morphisms.push_back(Json{{"label", g.morphism_label(m)}, {"src", g.src(m)}, {"tgt", g.tgt(m)}});
  }
  Json triples = Json::array();
  for (int f = 0; f < g.num_morphisms(); ++f) {
    for (int h = 0; h < g.num_morphisms(); ++h) {
      int c = g.compose(f, h);
      if (c >= 0) triples.push_back(Json::array({f, h, c}));
    }
  }
  return Json{{"objects", std::move(objects)}, {"morphisms", std::move(morphisms)}, {"compose", std::move(triples)}};
}

}  // namespace twochar
