#include "behavioral/textfmt.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace behavioral {

bool ModelFile::has_behavior(const std::string& name) const {
  for (const auto& [n, b] : behaviors)
    if (n == name) return true;
  return false;
}

const Behavior& ModelFile::behavior(const std::string& name) const {
  for (const auto& [n, b] : behaviors)
    if (n == name) return b;
  throw std::invalid_argument("behavior '" + name + "' is not defined");
}

bool ModelFile::has_network(const std::string& name) const {
  for (const auto& [n, s] : networks)
    if (n == name) return true;
  return false;
}

const NetworkSpec& ModelFile::network(const std::string& name) const {
  for (const auto& [n, s] : networks)
    if (n == name) return s;
  throw std::invalid_argument("network '" + name + "' is not defined");
}

Network instantiate(const ModelFile& model, const std::string& network_name) {
  const NetworkSpec& spec = model.network(network_name);
  Network net;
  for (const auto& [plant, desired] : spec.bindings)
    net.subsystems.push_back({model.behavior(plant), model.behavior(desired)});
  net.edges = spec.edges;
  return net;
}

namespace {

enum class Tok { ident, nat, punct, end };

struct Token {
  Tok kind = Tok::end;
  std::string text;
  int line = 1;
  int col = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') bump();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        bump();
      } else {
        break;
      }
    }
    current_ = Token{Tok::end, "", line_, col_};
    if (pos_ >= text_.size()) return;

    const char c = text_[pos_];
    current_.line = line_;
    current_.col = col_;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      current_.kind = Tok::ident;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        current_.text += text_[pos_];
        bump();
      }
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      current_.kind = Tok::nat;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        current_.text += text_[pos_];
        bump();
      }
    } else if (std::string("{}[](),:;+-=/^").find(c) != std::string::npos) {
      current_.kind = Tok::punct;
      current_.text = c;
      bump();
    } else {
      throw ParseError(line_, col_, std::string("unexpected character '") + c + "'");
    }
  }

  void bump() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token current_;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) {}

  ModelFile parse() {
    ModelFile model;
    while (lex_.peek().kind != Tok::end) {
      const Token head = expect_ident("'behavior' or 'network'");
      if (head.text == "behavior") {
        parse_behavior(model);
      } else if (head.text == "network") {
        parse_network(model);
      } else {
        throw ParseError(head.line, head.col,
                         "expected 'behavior' or 'network', got '" + head.text + "'");
      }
    }
    return model;
  }

 private:
  [[noreturn]] void fail(const Token& at, const std::string& message) {
    throw ParseError(at.line, at.col, message);
  }

  Token expect_punct(const std::string& text) {
    const Token t = lex_.take();
    if (t.kind != Tok::punct || t.text != text)
      fail(t, "expected '" + text + "', got '" + (t.kind == Tok::end ? "end of input" : t.text) +
                  "'");
    return t;
  }

  Token expect_ident(const std::string& what) {
    const Token t = lex_.take();
    if (t.kind != Tok::ident)
      fail(t, "expected " + what + ", got '" + (t.kind == Tok::end ? "end of input" : t.text) +
                  "'");
    return t;
  }

  long expect_nat(const std::string& what) {
    const Token t = lex_.take();
    if (t.kind != Tok::nat) fail(t, "expected " + what);
    try {
      return std::stol(t.text);
    } catch (const std::out_of_range&) {
      fail(t, "number out of range");
    }
  }

  bool peek_punct(const std::string& text) {
    return lex_.peek().kind == Tok::punct && lex_.peek().text == text;
  }

  void expect_keyword(const std::string& word) {
    const Token t = expect_ident("'" + word + "'");
    if (t.text != word) fail(t, "expected '" + word + "', got '" + t.text + "'");
    expect_punct(":");
  }

  void parse_behavior(ModelFile& model) {
    const Token name = expect_ident("behavior name");
    if (model.has_behavior(name.text))
      fail(name, "behavior '" + name.text + "' is already defined");
    expect_punct("{");
    expect_keyword("vars");

    std::vector<VarGroup> groups;
    while (true) {
      const Token g = expect_ident("variable group name");
      expect_punct(":");
      const long dim = expect_nat("group dimension");
      for (const auto& existing : groups)
        if (existing.name == g.text) fail(g, "duplicate variable group '" + g.text + "'");
      groups.push_back({g.text, static_cast<Eigen::Index>(dim)});
      if (peek_punct(",")) {
        lex_.take();
        continue;
      }
      break;
    }
    expect_punct(";");
    Signature sig(groups);

    expect_keyword("rows");
    std::vector<std::vector<Poly>> rows;
    while (!peek_punct(";")) {
      rows.push_back(parse_row(sig.total_dim()));
      if (peek_punct(",")) {
        lex_.take();
        continue;
      }
      break;
    }
    expect_punct(";");
    expect_punct("}");

    PolyMat kernel = poly_zero(static_cast<Eigen::Index>(rows.size()), sig.total_dim());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < rows[i].size(); ++j)
        kernel(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
    model.behaviors.emplace_back(name.text, Behavior(std::move(sig), std::move(kernel)));
  }

  std::vector<Poly> parse_row(Eigen::Index expected) {
    const Token open = expect_punct("[");
    std::vector<Poly> row;
    if (!peek_punct("]")) {
      row.push_back(parse_poly());
      while (peek_punct(",")) {
        lex_.take();
        row.push_back(parse_poly());
      }
    }
    expect_punct("]");
    if (static_cast<Eigen::Index>(row.size()) != expected)
      fail(open, "row has " + std::to_string(row.size()) + " entries, the variable list needs " +
                     std::to_string(expected));
    return row;
  }

  Poly parse_poly() {
    Poly result;
    bool negative = false;
    if (peek_punct("-") || peek_punct("+")) negative = lex_.take().text == "-";
    result += parse_term(negative);
    while (peek_punct("+") || peek_punct("-")) {
      negative = lex_.take().text == "-";
      result += parse_term(negative);
    }
    return result;
  }

  // term := RAT? ("xi" ("^" NAT)?)?, at least one of the two parts.
  Poly parse_term(bool negative) {
    const Token at = lex_.peek();
    Rational coeff(1);
    bool have_coeff = false;
    if (at.kind == Tok::nat) {
      const long num = expect_nat("coefficient");
      long den = 1;
      if (peek_punct("/")) {
        const Token slash = lex_.take();
        den = expect_nat("denominator");
        if (den == 0) fail(slash, "zero denominator");
      }
      coeff = make_rational(num, den);
      have_coeff = true;
    }
    int power = 0;
    if (lex_.peek().kind == Tok::ident) {
      const Token id = lex_.take();
      if (id.text != "xi")
        fail(id, "unknown symbol '" + id.text + "' (the indeterminate spells 'xi')");
      power = 1;
      if (peek_punct("^")) {
        const Token caret = lex_.take();
        if (peek_punct("-")) fail(caret, "negative exponents are not allowed");
        const long raw = expect_nat("exponent");
        if (raw > 4096) fail(caret, "exponent too large");
        power = static_cast<int>(raw);
      }
    } else if (!have_coeff) {
      fail(at, "expected a term (coefficient or 'xi')");
    }
    if (negative) coeff = -coeff;
    return Poly::monomial(coeff, power);
  }

  void parse_network(ModelFile& model) {
    const Token name = expect_ident("network name");
    if (model.has_network(name.text)) fail(name, "network '" + name.text + "' is already defined");
    expect_punct("{");
    expect_keyword("subsystems");

    NetworkSpec spec;
    while (true) {
      expect_punct("(");
      const Token plant = expect_ident("plant behavior name");
      expect_punct(",");
      const Token desired = expect_ident("desired behavior name");
      expect_punct(")");
      if (!model.has_behavior(plant.text))
        fail(plant, "behavior '" + plant.text + "' is not defined");
      if (!model.has_behavior(desired.text))
        fail(desired, "behavior '" + desired.text + "' is not defined");
      spec.bindings.emplace_back(plant.text, desired.text);
      if (peek_punct(",")) {
        lex_.take();
        continue;
      }
      break;
    }
    expect_punct(";");

    expect_keyword("edges");
    while (!peek_punct(";")) {
      expect_punct("(");
      Edge e;
      e.i = static_cast<std::size_t>(expect_nat("subsystem index"));
      expect_punct(",");
      e.j = static_cast<std::size_t>(expect_nat("subsystem index"));
      expect_punct(",");
      const Token s = expect_ident("'s'");
      if (s.text != "s") fail(s, "expected 's=<dim>'");
      expect_punct("=");
      e.s_dim = static_cast<Eigen::Index>(expect_nat("shared plant dimension"));
      expect_punct(",");
      const Token k = expect_ident("'k'");
      if (k.text != "k") fail(k, "expected 'k=<dim>'");
      expect_punct("=");
      e.k_dim = static_cast<Eigen::Index>(expect_nat("shared desired dimension"));
      expect_punct(")");
      spec.edges.push_back(e);
      if (peek_punct(",")) {
        lex_.take();
        continue;
      }
      break;
    }
    expect_punct(";");
    expect_punct("}");
    model.networks.emplace_back(name.text, std::move(spec));
  }

  Lexer lex_;
};

}  // namespace

ModelFile parse_model(std::string_view text) { return Parser(text).parse(); }

std::string serialize_row(const PolyMat& kernel, Eigen::Index row) {
  std::string out = "[";
  for (Eigen::Index c = 0; c < kernel.cols(); ++c) {
    if (c) out += ", ";
    out += to_string(kernel(row, c));
  }
  return out + "]";
}

std::string serialize(const std::string& name, const Behavior& b, bool canonical) {
  const PolyMat kernel = canonical ? row_compress(b.kernel).full_rows : b.kernel;
  std::ostringstream os;
  os << "behavior " << name << " {\n  vars: ";
  const auto& groups = b.sig.groups();
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (i) os << ", ";
    os << groups[i].name << ":" << groups[i].dim;
  }
  os << ";\n  rows:";
  if (kernel.rows() == 0) {
    os << " ;\n}\n";
    return os.str();
  }
  for (Eigen::Index r = 0; r < kernel.rows(); ++r) {
    os << (r == 0 ? " " : "        ") << serialize_row(kernel, r);
    os << (r + 1 < kernel.rows() ? ",\n" : ";\n");
  }
  os << "}\n";
  return os.str();
}

std::string serialize(const std::string& name, const NetworkSpec& net) {
  std::ostringstream os;
  os << "network " << name << " {\n  subsystems: ";
  for (std::size_t i = 0; i < net.bindings.size(); ++i) {
    if (i) os << ", ";
    os << "(" << net.bindings[i].first << ", " << net.bindings[i].second << ")";
  }
  os << ";\n  edges:";
  if (net.edges.empty()) {
    os << " ;\n}\n";
    return os.str();
  }
  for (std::size_t i = 0; i < net.edges.size(); ++i) {
    const Edge& e = net.edges[i];
    os << (i == 0 ? " " : "         ") << "(" << e.i << ", " << e.j << ", s=" << e.s_dim
       << ", k=" << e.k_dim << ")";
    os << (i + 1 < net.edges.size() ? ",\n" : ";\n");
  }
  os << "}\n";
  return os.str();
}

std::string serialize(const ModelFile& model) {
  std::string out;
  for (const auto& [name, b] : model.behaviors) {
    if (!out.empty()) out += "\n";
    out += serialize(name, b);
  }
  for (const auto& [name, spec] : model.networks) {
    if (!out.empty()) out += "\n";
    out += serialize(name, spec);
  }
  return out;
}

}  // namespace behavioral
