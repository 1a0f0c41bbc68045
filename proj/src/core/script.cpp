#include "mcgspin/script.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <set>

#include "mcgspin/errors.hpp"

namespace mcgspin::script {

namespace {

// ---------------------------------------------------------------- lexer

enum class Tok { Ident, Int, Sym, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::int64_t value = 0;
  Position pos;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_blank();
      Token t;
      t.pos = {line_, col_};
      if (i_ >= text_.size()) {
        out.push_back(t);
        return out;
      }
      const char c = text_[i_];
      if (ident_start(c)) {
        t.kind = Tok::Ident;
        while (i_ < text_.size()) {
          const char d = text_[i_];
          const bool hyphen = d == '-' && i_ + 1 < text_.size() && ident_start(text_[i_ + 1]);
          if (!ident_char(d) && !hyphen) break;
          t.text += d;
          advance(1);
        }
      } else if (is_digit(c) || minus_before_digit()) {
        t.kind = Tok::Int;
        if (c == '-') {
          t.text = "-";
          advance(1);
        } else if (c != '-' && !is_digit(c)) {  // U+2212
          t.text = "-";
          advance(3);
        }
        while (i_ < text_.size() && is_digit(text_[i_])) {
          t.text += text_[i_];
          advance(1);
        }
        const auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), t.value);
        if (ec != std::errc() || p != t.text.data() + t.text.size())
          throw ParseError(ErrorKind::Parse, t.pos.line, t.pos.column, "integer '" + t.text + "' out of range");
      } else if (std::string_view("=;:[],+^*").find(c) != std::string_view::npos) {
        t.kind = Tok::Sym;
        t.text = std::string(1, c);
        advance(1);
      } else {
        std::string shown = static_cast<unsigned char>(c) < 0x80 && std::isprint(static_cast<unsigned char>(c))
                                ? std::string(1, c)
                                : "byte 0x" + hex(static_cast<unsigned char>(c));
        throw ParseError(ErrorKind::Parse, line_, col_, "unexpected character '" + shown + "'");
      }
      out.push_back(std::move(t));
    }
  }

 private:
  static std::string hex(unsigned char c) {
    const char* digits = "0123456789abcdef";
    return {digits[c >> 4], digits[c & 15]};
  }

  bool minus_before_digit() const {
    if (text_[i_] == '-') return i_ + 1 < text_.size() && is_digit(text_[i_ + 1]);
    return text_.substr(i_, 3) == "\xE2\x88\x92" && i_ + 3 < text_.size() && is_digit(text_[i_ + 3]);
  }

  void skip_blank() {
    while (i_ < text_.size()) {
      const char c = text_[i_];
      if (c == '#') {
        while (i_ < text_.size() && text_[i_] != '\n') advance(1);
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance(1);
      } else {
        break;
      }
    }
  }

  void advance(std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i_) {
      if (text_[i_] == '\n') {
        ++line_;
        col_ = 1;
      } else if ((static_cast<unsigned char>(text_[i_]) & 0xC0) != 0x80) {
        ++col_;
      }
    }
  }

  std::string_view text_;
  std::size_t i_ = 0, line_ = 1, col_ = 1;
};

// ---------------------------------------------------------------- parser

enum class Kind { Form, Curve, Word, Fact, Subsurface };

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::Form: return "form";
    case Kind::Curve: return "curve";
    case Kind::Word: return "word";
    case Kind::Fact: return "factorization";
    case Kind::Subsurface: return "subsurface";
  }
  return "?";
}

const std::set<std::string, std::less<>> kKeywords = {
    "basis", "form", "curve", "word", "fact", "factorization", "subsurface", "check", "check-spin",
    "check-relation", "invariants", "h1", "arf", "apply", "chain", "builtin", "twists", "power",
    "conjugate", "by", "fibersum", "hurwitz", "at", "left", "right", "breed", "with", "labels", "signature"};

constexpr int kMaxGenus = 512;

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Script run() {
    Script s;
    while (peek().kind != Tok::End) s.statements.push_back(statement());
    return s;
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  const Token& take() { return toks_[i_ < toks_.size() - 1 ? i_++ : i_]; }

  [[noreturn]] static void fail(const Token& t, const std::string& msg, ErrorKind kind = ErrorKind::Parse) {
    throw ParseError(kind, t.pos.line, t.pos.column, msg);
  }

  static std::string describe(const Token& t) {
    switch (t.kind) {
      case Tok::End: return "end of input";
      case Tok::Int: return "integer " + t.text;
      default: return "'" + t.text + "'";
    }
  }

  bool at_sym(char c) const { return peek().kind == Tok::Sym && peek().text[0] == c; }
  bool at_word(std::string_view w) const { return peek().kind == Tok::Ident && peek().text == w; }

  void expect_sym(char c) {
    if (!at_sym(c)) fail(peek(), std::string("expected '") + c + "', found " + describe(peek()));
    take();
  }
  void expect_word(std::string_view w) {
    if (!at_word(w)) fail(peek(), "expected '" + std::string(w) + "', found " + describe(peek()));
    take();
  }
  const Token& expect_ident(const char* what) {
    if (peek().kind != Tok::Ident) fail(peek(), std::string("expected ") + what + ", found " + describe(peek()));
    return take();
  }
  std::int64_t expect_int(const char* what) {
    if (peek().kind != Tok::Int) fail(peek(), std::string("expected ") + what + ", found " + describe(peek()));
    return take().value;
  }

  int genus(const Token& at) const {
    if (!basis_) fail(at, "no basis declared; start the script with 'basis g=N'", ErrorKind::Precondition);
    return basis_->genus;
  }

  std::string declare(Kind kind) {
    const Token& t = expect_ident("a name");
    if (kKeywords.count(t.text)) fail(t, "'" + t.text + "' is a reserved word");
    if (symbols_.count(t.text)) fail(t, "'" + t.text + "' is already declared");
    pending_ = {t.text, kind};
    return t.text;
  }

  std::string use(Kind kind) {
    const Token& t = expect_ident((std::string("a ") + kind_name(kind) + " name").c_str());
    const auto it = symbols_.find(t.text);
    if (it == symbols_.end()) fail(t, "undeclared name '" + t.text + "'", ErrorKind::NotFound);
    if (it->second != kind)
      fail(t, "'" + t.text + "' is a " + kind_name(it->second) + ", expected a " + kind_name(kind));
    return t.text;
  }

  void check_coordinate(const Token& t) {
    const int g = genus(t);
    if (SurfaceBasis(g, basis_->scheme).coordinate(t.text)) return;
    const std::string letters = basis_->scheme == LabelScheme::XY ? "xy" : "ab";
    const bool shaped = t.text.size() >= 2 && letters.find(t.text[0]) != std::string::npos &&
                        std::all_of(t.text.begin() + 1, t.text.end(), is_digit);
    if (shaped)
      fail(t, "'" + t.text + "' is out of range for genus " + std::to_string(g), ErrorKind::DimensionMismatch);
    fail(t, "'" + t.text + "' is not a basis label (expected " + letters.substr(0, 1) + "1.." + letters.substr(1) +
                std::to_string(g) + ")");
  }

  std::vector<std::int64_t> int_vector(const Token& at) {
    expect_sym('[');
    std::vector<std::int64_t> v;
    if (!at_sym(']')) {
      v.push_back(expect_int("an integer"));
      while (at_sym(',')) {
        take();
        v.push_back(expect_int("an integer"));
      }
    }
    expect_sym(']');
    const int g = genus(at);
    if (v.size() != static_cast<std::size_t>(2 * g))
      fail(at, "integer vector has " + std::to_string(v.size()) + " entries, genus " + std::to_string(g) +
                   " needs " + std::to_string(2 * g),
           ErrorKind::DimensionMismatch);
    return v;
  }

  WordLetter letter(bool positive_only) {
    WordLetter l;
    l.curve = use(Kind::Curve);
    if (at_sym('^')) {
      take();
      const Token& e = peek();
      const std::int64_t k = expect_int("an exponent");
      if (k == 0 || k > 100000 || k < -100000) fail(e, "exponent must be nonzero and at most 100000 in size");
      if (positive_only && k < 0) fail(e, "factorization twists must have positive exponents");
      l.exponent = static_cast<int>(k);
    }
    return l;
  }

  Statement statement() {
    const Token& head = expect_ident("a statement keyword");
    Statement st{head.pos, Basis{}};
    const std::string& kw = head.text;
    if (kw == "basis") {
      st.node = basis(head);
    } else if (kw == "form") {
      genus(head);
      Form f{declare(Kind::Form), {}};
      expect_sym('=');
      do f.items.push_back(form_item());
      while (!at_sym(';'));
      st.node = std::move(f);
    } else if (kw == "curve") {
      genus(head);
      st.node = curve();
    } else if (kw == "word") {
      genus(head);
      st.node = word();
    } else if (kw == "fact" || kw == "factorization") {
      genus(head);
      st.node = fact();
    } else if (kw == "subsurface") {
      genus(head);
      st.node = subsurface();
    } else if (kw == "check") {
      CheckQuery q;
      q.form = use(Kind::Form);
      q.curve = use(Kind::Curve);
      st.node = q;
    } else if (kw == "check-spin") {
      CheckSpinQuery q;
      q.fact = use(Kind::Fact);
      q.form = use(Kind::Form);
      st.node = q;
    } else if (kw == "check-relation") {
      st.node = CheckRelationQuery{use(Kind::Fact)};
    } else if (kw == "invariants") {
      InvariantsQuery q{use(Kind::Fact), std::nullopt};
      if (at_word("signature")) {
        take();
        expect_sym('=');
        const Token& s = expect_ident("meyer, endo or paper");
        if (s.text != "meyer" && s.text != "endo" && s.text != "paper")
          fail(s, "signature source must be meyer, endo or paper");
        q.signature = s.text;
      }
      st.node = q;
    } else if (kw == "h1") {
      st.node = H1Query{use(Kind::Fact)};
    } else if (kw == "arf") {
      st.node = ArfQuery{use(Kind::Form)};
    } else {
      fail(head, "unknown statement '" + kw + "'");
    }
    expect_sym(';');
    if (pending_) {
      symbols_.emplace(pending_->first, pending_->second);
      pending_.reset();
    }
    return st;
  }

  Basis basis(const Token& head) {
    if (basis_) fail(head, "basis already declared");
    Basis b;
    expect_word("g");
    expect_sym('=');
    const Token& gt = peek();
    const std::int64_t g = expect_int("a genus");
    if (g < 1 || g > kMaxGenus) fail(gt, "genus must be between 1 and " + std::to_string(kMaxGenus));
    b.genus = static_cast<int>(g);
    if (at_word("labels")) {
      take();
      expect_sym('=');
      const Token& s = expect_ident("xy or ab");
      if (s.text != "xy" && s.text != "ab") fail(s, "labels must be xy or ab");
      b.scheme = s.text == "xy" ? LabelScheme::XY : LabelScheme::AB;
    }
    basis_ = b;
    return b;
  }

  FormItem form_item() {
    FormItem item;
    if (at_sym('*')) {
      take();
      item.selector = "*";
    } else {
      const Token& t = expect_ident("a basis label or selector");
      if (at_sym('*')) {
        take();
        const std::string letters = basis_->scheme == LabelScheme::XY ? "xy" : "ab";
        if (t.text.size() != 1 || letters.find(t.text[0]) == std::string::npos)
          fail(t, "selector '" + t.text + "*' must be one of " + letters.substr(0, 1) + "* or " + letters.substr(1) + "*");
        item.selector = t.text + "*";
      } else {
        check_coordinate(t);
        item.selector = t.text;
      }
    }
    expect_sym(':');
    const Token& v = peek();
    const std::int64_t value = expect_int("0 or 1");
    if (value != 0 && value != 1) fail(v, "form values are 0 or 1");
    item.value = static_cast<int>(value);
    return item;
  }

  CurveDecl curve() {
    CurveDecl d{declare(Kind::Curve), SparseCurve{}};
    expect_sym('=');
    const Token& start = peek();
    if (at_sym('[')) {
      d.expr = VectorCurve{int_vector(start)};
    } else if (at_word("apply")) {
      take();
      AppliedCurve a;
      a.word = use(Kind::Word);
      a.curve = use(Kind::Curve);
      d.expr = a;
    } else if (at_word("chain")) {
      take();
      const Token& it = peek();
      const std::int64_t i = expect_int("a chain index");
      const int g = basis_->genus;
      if (i < 1 || i > 2 * g + 1)
        fail(it, "chain index must be between 1 and " + std::to_string(2 * g + 1), ErrorKind::DimensionMismatch);
      d.expr = ChainCurve{static_cast<int>(i)};
    } else {
      SparseCurve s;
      if (peek().kind == Tok::Int) {
        if (peek().value != 0) fail(peek(), "a sparse class is a '+'-separated list of basis labels, or 0");
        take();
      } else {
        do {
          if (!s.terms.empty()) take();
          const Token& t = expect_ident("a basis label");
          check_coordinate(t);
          s.terms.push_back(t.text);
        } while (at_sym('+'));
      }
      if (at_sym('[')) {
        auto v = int_vector(start);
        SurfaceBasis b(basis_->genus, basis_->scheme);
        ClassMod2 sparse(basis_->genus);
        for (const auto& term : s.terms) sparse += ClassMod2::basis_vector(basis_->genus, *b.coordinate(term));
        if (!(ClassInt(basis_->genus, v).reduce() == sparse))
          fail(start, "sparse class and integer vector disagree mod 2", ErrorKind::DimensionMismatch);
        s.integral = std::move(v);
      }
      d.expr = std::move(s);
    }
    return d;
  }

  WordDecl word() {
    WordDecl w{declare(Kind::Word), {}, std::nullopt};
    expect_sym('=');
    if (at_word("builtin")) {
      take();
      const Token& b = expect_ident("phi or psi");
      if (b.text != "phi" && b.text != "psi") fail(b, "builtin words are phi and psi");
      w.builtin = b.text;
    } else if (peek().kind == Tok::Int) {
      if (peek().value != 1) fail(peek(), "the identity word is written 1");
      take();
    } else {
      do w.letters.push_back(letter(false));
      while (!at_sym(';'));
    }
    return w;
  }

  FactDecl fact() {
    FactDecl d{declare(Kind::Fact), TwistList{}};
    expect_sym('=');
    const Token& op = expect_ident("twists, conjugate, fibersum, hurwitz, breed or builtin");
    if (op.text == "twists") {
      TwistList t;
      do t.twists.push_back(letter(true));
      while (!at_word("power"));
      take();
      const Token& p = peek();
      const std::int64_t power = expect_int("a boundary power");
      if (power < 0 || power > 1000000) fail(p, "boundary power must be between 0 and 1000000");
      t.power = static_cast<int>(power);
      d.expr = std::move(t);
    } else if (op.text == "conjugate") {
      ConjugateOp c;
      c.fact = use(Kind::Fact);
      expect_word("by");
      c.word = use(Kind::Word);
      d.expr = c;
    } else if (op.text == "fibersum") {
      FiberSumOp f;
      f.first = use(Kind::Fact);
      f.second = use(Kind::Fact);
      if (at_word("by")) {
        take();
        f.word = use(Kind::Word);
      }
      d.expr = f;
    } else if (op.text == "hurwitz") {
      HurwitzOp h;
      h.fact = use(Kind::Fact);
      expect_word("at");
      h.index = position_index();
      const Token& dir = expect_ident("left or right");
      if (dir.text != "left" && dir.text != "right") fail(dir, "direction must be left or right");
      h.direction = dir.text == "left" ? Direction::Left : Direction::Right;
      d.expr = h;
    } else if (op.text == "breed") {
      BreedOp b;
      b.fact = use(Kind::Fact);
      expect_word("at");
      b.index = position_index();
      expect_word("with");
      b.subsurface = use(Kind::Subsurface);
      d.expr = b;
    } else if (op.text == "builtin") {
      BuiltinFact b;
      const Token& w = expect_ident("P, U, V, VU or Z");
      if (w.text != "P" && w.text != "U" && w.text != "V" && w.text != "VU" && w.text != "Z")
        fail(w, "builtin factorizations are P, U, V, VU and Z");
      b.which = w.text;
      if (w.text == "Z") {
        b.k = 0;
        if (at_word("k")) {
          take();
          expect_sym('=');
          const Token& kt = peek();
          const std::int64_t k = expect_int("a breeding count");
          if (k < 0 || k > 2 * static_cast<std::int64_t>(kMaxGenus) + 2) fail(kt, "breeding count out of range");
          b.k = static_cast<int>(k);
        }
      }
      d.expr = b;
    } else {
      fail(op, "unknown factorization form '" + op.text + "'");
    }
    return d;
  }

  std::int64_t position_index() {
    const Token& t = peek();
    const std::int64_t i = expect_int("a 1-based position");
    if (i < 1) fail(t, "positions are 1-based");
    return i;
  }

  SubsurfaceDecl subsurface() {
    SubsurfaceDecl d{declare(Kind::Subsurface), std::nullopt};
    expect_sym('=');
    if (at_word("builtin")) {
      take();
      return d;
    }
    std::vector<std::string> names;
    for (int i = 0; i < 4; ++i) names.push_back(use(Kind::Curve));
    expect_sym(':');
    for (int i = 0; i < 8; ++i) names.push_back(use(Kind::Curve));
    d.curves = std::move(names);
    return d;
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
  std::optional<Basis> basis_;
  std::map<std::string, Kind, std::less<>> symbols_;
  std::optional<std::pair<std::string, Kind>> pending_;
};

// ---------------------------------------------------------------- printer

std::string letters_text(const std::vector<WordLetter>& ls) {
  std::string out;
  for (const auto& l : ls) {
    if (!out.empty()) out += ' ';
    out += l.curve;
    if (l.exponent != 1) out += "^" + std::to_string(l.exponent);
  }
  return out;
}

std::string vector_text(const std::vector<std::int64_t>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "]";
}

template <class... F>
struct Overload : F... {
  using F::operator()...;
};
template <class... F>
Overload(F...) -> Overload<F...>;

}  // namespace

Script parse_script(std::string_view text) { return Parser(Lexer(text).run()).run(); }

std::string to_text(const Statement& s) {
  return std::visit(
      Overload{
          [](const Basis& b) {
            return "basis g=" + std::to_string(b.genus) + " labels=" + (b.scheme == LabelScheme::XY ? "xy" : "ab") + ";";
          },
          [](const Form& f) {
            std::string out = "form " + f.name + " =";
            for (const auto& it : f.items) out += " " + it.selector + ":" + std::to_string(it.value);
            return out + ";";
          },
          [](const CurveDecl& c) {
            const std::string rhs = std::visit(
                Overload{[](const SparseCurve& s) {
                           std::string out;
                           for (const auto& t : s.terms) out += (out.empty() ? "" : "+") + t;
                           if (out.empty()) out = "0";
                           if (s.integral) out += " " + vector_text(*s.integral);
                           return out;
                         },
                         [](const VectorCurve& v) { return vector_text(v.integral); },
                         [](const AppliedCurve& a) { return "apply " + a.word + " " + a.curve; },
                         [](const ChainCurve& ch) { return "chain " + std::to_string(ch.index); }},
                c.expr);
            return "curve " + c.name + " = " + rhs + ";";
          },
          [](const WordDecl& w) {
            const std::string rhs = w.builtin ? "builtin " + *w.builtin
                                    : w.letters.empty() ? std::string("1")
                                                        : letters_text(w.letters);
            return "word " + w.name + " = " + rhs + ";";
          },
          [](const FactDecl& f) {
            const std::string rhs = std::visit(
                Overload{[](const TwistList& t) {
                           return "twists " + letters_text(t.twists) + " power " + std::to_string(t.power);
                         },
                         [](const ConjugateOp& c) { return "conjugate " + c.fact + " by " + c.word; },
                         [](const FiberSumOp& fs) {
                           return "fibersum " + fs.first + " " + fs.second + (fs.word ? " by " + *fs.word : "");
                         },
                         [](const HurwitzOp& h) {
                           return "hurwitz " + h.fact + " at " + std::to_string(h.index) +
                                  (h.direction == Direction::Left ? " left" : " right");
                         },
                         [](const BreedOp& b) {
                           return "breed " + b.fact + " at " + std::to_string(b.index) + " with " + b.subsurface;
                         },
                         [](const BuiltinFact& b) {
                           return "builtin " + b.which + (b.k ? " k=" + std::to_string(*b.k) : "");
                         }},
                f.expr);
            return "fact " + f.name + " = " + rhs + ";";
          },
          [](const SubsurfaceDecl& d) {
            if (!d.curves) return "subsurface " + d.name + " = builtin;";
            std::string out = "subsurface " + d.name + " =";
            for (std::size_t i = 0; i < d.curves->size(); ++i) out += (i == 4 ? " : " : " ") + (*d.curves)[i];
            return out + ";";
          },
          [](const CheckQuery& q) { return "check " + q.form + " " + q.curve + ";"; },
          [](const CheckSpinQuery& q) { return "check-spin " + q.fact + " " + q.form + ";"; },
          [](const CheckRelationQuery& q) { return "check-relation " + q.fact + ";"; },
          [](const InvariantsQuery& q) {
            return "invariants " + q.fact + (q.signature ? " signature=" + *q.signature : "") + ";";
          },
          [](const H1Query& q) { return "h1 " + q.fact + ";"; },
          [](const ArfQuery& q) { return "arf " + q.form + ";"; }},
      s.node);
}

std::string to_text(const Script& s) {
  std::string out;
  for (const auto& st : s.statements) out += to_text(st) + "\n";
  return out;
}

// ---------------------------------------------------------------- runner

namespace {

class Runner {
 public:
  RunResult run(const Script& s) {
    RunResult result;
    std::string prefix;
    for (const auto& st : s.statements) {
      const std::string line = to_text(st);
      prefix += line + "\n";
      try {
        if (st.is_query()) {
          Json results = query(st.node);
          if (!results.at("verdict").get<bool>()) result.all_verdicts_pass = false;
          result.certificates.push_back(make_certificate(line, prefix, std::move(results)));
        } else {
          declare(st.node);
        }
      } catch (const ParseError&) {
        throw;
      } catch (const Error& e) {
        // Names and shapes were settled by the parser, so a lookup or shape
        // failure here is a violated precondition of the operation.
        const bool static_kind = e.kind() == ErrorKind::NotFound || e.kind() == ErrorKind::DimensionMismatch ||
                                 e.kind() == ErrorKind::Parse;
        throw ParseError(static_kind ? ErrorKind::Precondition : e.kind(), st.position.line, st.position.column,
                         e.what());
      }
    }
    return result;
  }

 private:
  SurfaceBasis basis() const { return SurfaceBasis(genus_, scheme_); }

  void declare(const Node& node) {
    std::visit(Overload{[&](const Basis& b) {
                          genus_ = b.genus;
                          scheme_ = b.scheme;
                        },
                        [&](const Form& f) {
                          std::string text;
                          for (const auto& it : f.items) text += it.selector + ":" + std::to_string(it.value) + " ";
                          forms_.insert_or_assign(f.name, parse_form_text(genus_, text, scheme_));
                        },
                        [&](const CurveDecl& c) { curves_.insert_or_assign(c.name, build_curve(c)); },
                        [&](const WordDecl& w) { words_.insert_or_assign(w.name, build_word(w)); },
                        [&](const FactDecl& f) { facts_.insert_or_assign(f.name, build_fact(f)); },
                        [&](const SubsurfaceDecl& d) { subsurfaces_.insert_or_assign(d.name, build_subsurface(d)); },
                        [](const auto&) {}},
               node);
  }

  Curve build_curve(const CurveDecl& c) const {
    return std::visit(
        Overload{[&](const SparseCurve& s) {
                   if (s.integral) return Curve::from_integral(c.name, ClassInt(genus_, *s.integral));
                   ClassMod2 v(genus_);
                   for (const auto& t : s.terms) v += ClassMod2::basis_vector(genus_, *basis().coordinate(t));
                   return Curve(c.name, v);
                 },
                 [&](const VectorCurve& v) { return Curve::from_integral(c.name, ClassInt(genus_, v.integral)); },
                 [&](const AppliedCurve& a) { return apply_word(words_.at(a.word), curves_.at(a.curve), c.name); },
                 [&](const ChainCurve& ch) {
                   return chain_curves(genus_).at(static_cast<std::size_t>(ch.index - 1)).renamed(c.name);
                 }},
        c.expr);
  }

  TwistWord build_word(const WordDecl& w) const {
    if (w.builtin) {
      const Conjugators cj = phi_psi(genus_);
      return TwistWord(w.name, (*w.builtin == "phi" ? cj.phi : cj.psi).letters());
    }
    if (w.letters.empty()) return TwistWord::identity(genus_, w.name);
    std::vector<Letter> letters;
    for (const auto& l : w.letters)
      for (int r = 0; r < std::abs(l.exponent); ++r) letters.push_back({curves_.at(l.curve), l.exponent > 0 ? 1 : -1});
    return TwistWord(w.name, std::move(letters));
  }

  PositiveFactorization build_fact(const FactDecl& f) const {
    PositiveFactorization p = std::visit(
        Overload{[&](const TwistList& t) {
                   std::vector<Curve> twists;
                   for (const auto& l : t.twists)
                     for (int r = 0; r < l.exponent; ++r) twists.push_back(curves_.at(l.curve));
                   return PositiveFactorization(genus_, std::move(twists), t.power);
                 },
                 [&](const ConjugateOp& c) { return conjugate(facts_.at(c.fact), words_.at(c.word)); },
                 [&](const FiberSumOp& s) {
                   const TwistWord w = s.word ? words_.at(*s.word) : TwistWord::identity(genus_);
                   return fiber_sum(facts_.at(s.first), facts_.at(s.second), w);
                 },
                 [&](const HurwitzOp& h) {
                   return hurwitz_move(facts_.at(h.fact), static_cast<std::size_t>(h.index),
                                       h.direction == Direction::Left ? HurwitzDirection::Left : HurwitzDirection::Right);
                 },
                 [&](const BreedOp& b) {
                   return breed(facts_.at(b.fact), static_cast<std::size_t>(b.index), subsurfaces_.at(b.subsurface));
                 },
                 [&](const BuiltinFact& b) { return builtin(b); }},
        f.expr);
    return p;
  }

  PositiveFactorization builtin(const BuiltinFact& b) const {
    if (b.which == "P") return korkmaz_cadavid(genus_);
    if (b.which == "Z") return build_z(genus_, *b.k);
    const UVPair uv = u_v_factorizations(genus_);
    if (b.which == "U") return uv.u;
    if (b.which == "V") return uv.v;
    const Conjugators cj = phi_psi(genus_);
    return fiber_sum(conjugate(uv.v, cj.phi), uv.u, cj.psi);
  }

  SubsurfaceImage build_subsurface(const SubsurfaceDecl& d) const {
    if (!d.curves) return pencil_images(genus_);
    const auto& n = *d.curves;
    std::array<Curve, 4> boundary{curves_.at(n[0]), curves_.at(n[1]), curves_.at(n[2]), curves_.at(n[3])};
    std::array<Curve, 8> interior{curves_.at(n[4]), curves_.at(n[5]), curves_.at(n[6]),  curves_.at(n[7]),
                                  curves_.at(n[8]), curves_.at(n[9]), curves_.at(n[10]), curves_.at(n[11])};
    return SubsurfaceImage(boundary, interior);
  }

  Json query(const Node& node) const {
    return std::visit(
        Overload{
            [&](const CheckQuery& q) -> Json {
              const Curve& c = curves_.at(q.curve);
              const int v = eval_quadratic(forms_.at(q.form), c.mod2);
              return {{"curve", q.curve}, {"class", class_text(c.mod2, scheme_)}, {"value", v}, {"verdict", v == 1}};
            },
            [&](const CheckSpinQuery& q) -> Json {
              Json j = to_json(check_spin(facts_.at(q.fact), forms_.at(q.form)));
              j["length"] = facts_.at(q.fact).length();
              return j;
            },
            [&](const CheckRelationQuery& q) -> Json {
              const RelationCheck r = check_relation(facts_.at(q.fact));
              Json j = to_json(r);
              j["length"] = facts_.at(q.fact).length();
              j["verdict"] = r.mod2 && r.integral.value_or(true);
              return j;
            },
            [&](const InvariantsQuery& q) -> Json {
              const PositiveFactorization& p = facts_.at(q.fact);
              std::string src = q.signature.value_or(p.has_integral() ? "meyer" : p.family() ? "paper" : "");
              if (src.empty())
                throw Error(ErrorKind::Unavailable,
                            "no signature source: entries lack integer classes and no family is recorded");
              std::optional<HyperellipticCertificate> cert;
              SignatureSource s = SignatureSource::Meyer;
              if (src == "endo") {
                s = SignatureSource::EndoHyperelliptic;
                cert = HyperellipticCertificate{"asserted by the script author"};
              } else if (src == "paper") {
                s = SignatureSource::PaperFormula;
              }
              Json j = to_json(invariants_of(p, s, cert));
              j["verdict"] = true;
              return j;
            },
            [&](const H1Query& q) -> Json {
              Json j = to_json(fibration_h1(facts_.at(q.fact)));
              j["verdict"] = true;
              return j;
            },
            [&](const ArfQuery& q) -> Json { return {{"arf", arf_invariant(forms_.at(q.form))}, {"verdict", true}}; },
            [](const auto&) -> Json { return {{"verdict", true}}; }},
        node);
  }

  int genus_ = 1;
  LabelScheme scheme_ = LabelScheme::XY;
  std::map<std::string, QuadraticForm> forms_;
  std::map<std::string, Curve> curves_;
  std::map<std::string, TwistWord> words_;
  std::map<std::string, PositiveFactorization> facts_;
  std::map<std::string, SubsurfaceImage> subsurfaces_;
};

}  // namespace

RunResult run(const Script& s) { return Runner().run(s); }

}  // namespace mcgspin::script
