#include "crys/expr.hpp"

#include <atomic>
#include <cctype>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace crys {

namespace {

std::atomic<std::size_t> next_id{1};

struct InternKey {
  int kind;
  std::string payload;
  std::size_t l, r;
  long e;
  bool operator==(const InternKey&) const = default;
};

struct InternKeyHash {
  std::size_t operator()(const InternKey& k) const {
    std::size_t h = std::hash<std::string>()(k.payload);
    auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
    mix(static_cast<std::size_t>(k.kind));
    mix(k.l);
    mix(k.r);
    mix(static_cast<std::size_t>(k.e));
    return h;
  }
};

template <typename Node>
struct Interner {
  std::mutex mu;
  std::unordered_map<InternKey, std::shared_ptr<const Node>, InternKeyHash> table;

  std::shared_ptr<const Node> intern(Node node, InternKey key) {
    std::lock_guard<std::mutex> lock(mu);
    auto it = table.find(key);
    if (it != table.end()) return it->second;
    node.id = next_id.fetch_add(1);
    auto sp = std::make_shared<const Node>(std::move(node));
    table.emplace(std::move(key), sp);
    return sp;
  }
};

Interner<RatExpr::Node>& rat_interner() {
  static Interner<RatExpr::Node>* i = new Interner<RatExpr::Node>();
  return *i;
}
Interner<PLExpr::Node>& pl_interner() {
  static Interner<PLExpr::Node>* i = new Interner<PLExpr::Node>();
  return *i;
}

}  // namespace

// ---------------------------------------------------------------- RatExpr

RatExpr RatExpr::var(const std::string& name) {
  Node n;
  n.kind = Kind::var;
  n.name = name;
  return RatExpr(rat_interner().intern(std::move(n), {0, "v:" + name, 0, 0, 0}));
}

RatExpr RatExpr::constant(const Rat& c0) {
  Rat c = c0;
  c.canonicalize();
  if (c <= 0) throw std::invalid_argument("RatExpr constants must be positive");
  Node n;
  n.kind = Kind::constant;
  n.value = c;
  return RatExpr(rat_interner().intern(std::move(n), {1, "c:" + c.get_str(), 0, 0, 0}));
}

RatExpr RatExpr::constant(long num, long den) { return constant(Rat(num, den)); }

RatExpr operator+(const RatExpr& a, const RatExpr& b) {
  RatExpr::Node n;
  n.kind = RatExpr::Kind::add;
  n.lhs = a.n_;
  n.rhs = b.n_;
  return RatExpr(rat_interner().intern(std::move(n), {2, "", a.n_->id, b.n_->id, 0}));
}

RatExpr operator*(const RatExpr& a, const RatExpr& b) {
  RatExpr::Node n;
  n.kind = RatExpr::Kind::mul;
  n.lhs = a.n_;
  n.rhs = b.n_;
  return RatExpr(rat_interner().intern(std::move(n), {3, "", a.n_->id, b.n_->id, 0}));
}

RatExpr operator/(const RatExpr& a, const RatExpr& b) {
  RatExpr::Node n;
  n.kind = RatExpr::Kind::div;
  n.lhs = a.n_;
  n.rhs = b.n_;
  return RatExpr(rat_interner().intern(std::move(n), {4, "", a.n_->id, b.n_->id, 0}));
}

RatExpr RatExpr::pow(long e) const {
  if (e == 1) return *this;
  Node n;
  n.kind = Kind::pow;
  n.lhs = n_;
  n.exponent = e;
  return RatExpr(rat_interner().intern(std::move(n), {5, "", n_->id, 0, e}));
}

namespace {

Rat eval_rat(const RatExpr::Node* n, const RatExpr::Env& env,
             std::unordered_map<std::size_t, Rat>& memo) {
  auto it = memo.find(n->id);
  if (it != memo.end()) return it->second;
  Rat out;
  switch (n->kind) {
    case RatExpr::Kind::var: {
      auto v = env.find(n->name);
      if (v == env.end()) throw std::out_of_range("unbound variable: " + n->name);
      out = v->second;
      break;
    }
    case RatExpr::Kind::constant:
      out = n->value;
      break;
    case RatExpr::Kind::add:
      out = eval_rat(n->lhs.get(), env, memo) + eval_rat(n->rhs.get(), env, memo);
      break;
    case RatExpr::Kind::mul:
      out = eval_rat(n->lhs.get(), env, memo) * eval_rat(n->rhs.get(), env, memo);
      break;
    case RatExpr::Kind::div:
      out = eval_rat(n->lhs.get(), env, memo) / eval_rat(n->rhs.get(), env, memo);
      break;
    case RatExpr::Kind::pow:
      out = rat_pow(eval_rat(n->lhs.get(), env, memo), n->exponent);
      break;
  }
  memo.emplace(n->id, out);
  return out;
}

}  // namespace

Rat RatExpr::eval(const Env& env) const {
  std::unordered_map<std::size_t, Rat> memo;
  return eval_rat(n_.get(), env, memo);
}

std::vector<Rat> RatExpr::eval_all(const std::vector<RatExpr>& es, const Env& env) {
  std::unordered_map<std::size_t, Rat> memo;
  std::vector<Rat> out;
  out.reserve(es.size());
  for (const RatExpr& e : es) out.push_back(eval_rat(e.raw(), env, memo));
  return out;
}

void RatExpr::collect_vars(std::set<std::string>& out) const {
  switch (n_->kind) {
    case Kind::var:
      out.insert(n_->name);
      return;
    case Kind::constant:
      return;
    case Kind::pow:
      RatExpr(n_->lhs).collect_vars(out);
      return;
    default:
      RatExpr(n_->lhs).collect_vars(out);
      RatExpr(n_->rhs).collect_vars(out);
  }
}

namespace {

void print_rat(const RatExpr::Node* n, std::string& out) {
  switch (n->kind) {
    case RatExpr::Kind::var:
      out += n->name;
      return;
    case RatExpr::Kind::constant:
      out += n->value.get_str();
      return;
    case RatExpr::Kind::add:
      out += "(";
      print_rat(n->lhs.get(), out);
      out += " + ";
      print_rat(n->rhs.get(), out);
      out += ")";
      return;
    case RatExpr::Kind::mul:
      out += "(";
      print_rat(n->lhs.get(), out);
      out += "*";
      print_rat(n->rhs.get(), out);
      out += ")";
      return;
    case RatExpr::Kind::div:
      out += "(";
      print_rat(n->lhs.get(), out);
      out += "/";
      print_rat(n->rhs.get(), out);
      out += ")";
      return;
    case RatExpr::Kind::pow:
      print_rat(n->lhs.get(), out);
      out += "^" + std::to_string(n->exponent);
      return;
  }
}

void json_rat(const RatExpr::Node* n, std::string& out) {
  switch (n->kind) {
    case RatExpr::Kind::var:
      out += "{\"var\":\"" + n->name + "\"}";
      return;
    case RatExpr::Kind::constant:
      out += "{\"const\":\"" + n->value.get_str() + "\"}";
      return;
    case RatExpr::Kind::pow:
      out += "{\"op\":\"pow\",\"exp\":" + std::to_string(n->exponent) + ",\"base\":";
      json_rat(n->lhs.get(), out);
      out += "}";
      return;
    default: {
      const char* op = n->kind == RatExpr::Kind::add   ? "add"
                       : n->kind == RatExpr::Kind::mul ? "mul"
                                                       : "div";
      out += std::string("{\"op\":\"") + op + "\",\"args\":[";
      json_rat(n->lhs.get(), out);
      out += ",";
      json_rat(n->rhs.get(), out);
      out += "]}";
      return;
    }
  }
}

}  // namespace

std::string RatExpr::to_string() const {
  std::string s;
  print_rat(n_.get(), s);
  return s;
}

std::string RatExpr::to_json() const {
  std::string s;
  json_rat(n_.get(), s);
  return s;
}

// ------------------------------------------------------------------ PLExpr

PLExpr PLExpr::var(const std::string& name) {
  Node n;
  n.kind = Kind::var;
  n.name = name;
  return PLExpr(pl_interner().intern(std::move(n), {10, "v:" + name, 0, 0, 0}));
}

PLExpr PLExpr::constant(long v) {
  Node n;
  n.kind = Kind::constant;
  n.value = v;
  return PLExpr(pl_interner().intern(std::move(n), {11, "", 0, 0, v}));
}

PLExpr operator+(const PLExpr& a, const PLExpr& b) {
  PLExpr::Node n;
  n.kind = PLExpr::Kind::plus;
  n.lhs = a.n_;
  n.rhs = b.n_;
  return PLExpr(pl_interner().intern(std::move(n), {12, "", a.n_->id, b.n_->id, 0}));
}

PLExpr operator-(const PLExpr& a, const PLExpr& b) {
  PLExpr::Node n;
  n.kind = PLExpr::Kind::minus;
  n.lhs = a.n_;
  n.rhs = b.n_;
  return PLExpr(pl_interner().intern(std::move(n), {13, "", a.n_->id, b.n_->id, 0}));
}

PLExpr PLExpr::max(const PLExpr& a, const PLExpr& b) {
  Node n;
  n.kind = Kind::max;
  n.lhs = a.n_;
  n.rhs = b.n_;
  return PLExpr(pl_interner().intern(std::move(n), {14, "", a.n_->id, b.n_->id, 0}));
}

PLExpr PLExpr::scaled(long k) const {
  Node n;
  n.kind = Kind::smul;
  n.lhs = n_;
  n.value = k;
  return PLExpr(pl_interner().intern(std::move(n), {15, "", n_->id, 0, k}));
}

namespace {

long eval_pl(const PLExpr::Node* n, const PLExpr::Env& env,
             std::unordered_map<std::size_t, long>& memo) {
  auto it = memo.find(n->id);
  if (it != memo.end()) return it->second;
  long out = 0;
  switch (n->kind) {
    case PLExpr::Kind::var: {
      auto v = env.find(n->name);
      if (v == env.end()) throw std::out_of_range("unbound variable: " + n->name);
      out = v->second;
      break;
    }
    case PLExpr::Kind::constant:
      out = n->value;
      break;
    case PLExpr::Kind::plus:
      out = eval_pl(n->lhs.get(), env, memo) + eval_pl(n->rhs.get(), env, memo);
      break;
    case PLExpr::Kind::minus:
      out = eval_pl(n->lhs.get(), env, memo) - eval_pl(n->rhs.get(), env, memo);
      break;
    case PLExpr::Kind::max:
      out = std::max(eval_pl(n->lhs.get(), env, memo), eval_pl(n->rhs.get(), env, memo));
      break;
    case PLExpr::Kind::smul:
      out = n->value * eval_pl(n->lhs.get(), env, memo);
      break;
  }
  memo.emplace(n->id, out);
  return out;
}

void print_pl(const PLExpr::Node* n, std::string& out) {
  switch (n->kind) {
    case PLExpr::Kind::var:
      out += n->name;
      return;
    case PLExpr::Kind::constant:
      out += std::to_string(n->value);
      return;
    case PLExpr::Kind::plus:
    case PLExpr::Kind::minus:
      out += "(";
      print_pl(n->lhs.get(), out);
      out += n->kind == PLExpr::Kind::plus ? " + " : " - ";
      print_pl(n->rhs.get(), out);
      out += ")";
      return;
    case PLExpr::Kind::max:
      out += "max(";
      print_pl(n->lhs.get(), out);
      out += ", ";
      print_pl(n->rhs.get(), out);
      out += ")";
      return;
    case PLExpr::Kind::smul:
      out += std::to_string(n->value) + "*";
      print_pl(n->lhs.get(), out);
      return;
  }
}

}  // namespace

long PLExpr::eval(const Env& env) const {
  std::unordered_map<std::size_t, long> memo;
  return eval_pl(n_.get(), env, memo);
}

void PLExpr::collect_vars(std::set<std::string>& out) const {
  switch (n_->kind) {
    case Kind::var:
      out.insert(n_->name);
      return;
    case Kind::constant:
      return;
    case Kind::smul:
      PLExpr(n_->lhs).collect_vars(out);
      return;
    default:
      PLExpr(n_->lhs).collect_vars(out);
      PLExpr(n_->rhs).collect_vars(out);
  }
}

std::string PLExpr::to_string() const {
  std::string s;
  print_pl(n_.get(), s);
  return s;
}

// ------------------------------------------------------------ tropicalize

namespace {

PLExpr trop(const RatExpr::Node* n, std::unordered_map<std::size_t, PLExpr>& memo) {
  auto it = memo.find(n->id);
  if (it != memo.end()) return it->second;
  PLExpr out;
  switch (n->kind) {
    case RatExpr::Kind::var:
      out = PLExpr::var(n->name);
      break;
    case RatExpr::Kind::constant:
      out = PLExpr::constant(0);
      break;
    case RatExpr::Kind::add:
      out = PLExpr::max(trop(n->lhs.get(), memo), trop(n->rhs.get(), memo));
      break;
    case RatExpr::Kind::mul:
      out = trop(n->lhs.get(), memo) + trop(n->rhs.get(), memo);
      break;
    case RatExpr::Kind::div:
      out = trop(n->lhs.get(), memo) - trop(n->rhs.get(), memo);
      break;
    case RatExpr::Kind::pow:
      out = trop(n->lhs.get(), memo).scaled(n->exponent);
      break;
  }
  memo.emplace(n->id, out);
  return out;
}

}  // namespace

PLExpr tropicalize(const RatExpr& e) {
  std::unordered_map<std::size_t, PLExpr> memo;
  return trop(e.raw(), memo);
}

// ----------------------------------------------------------------- parser

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  RatExpr program() {
    skip_ws();
    while (peek_word("let")) {
      pos_ += 3;
      skip_ws();
      std::string name = ident();
      skip_ws();
      expect('=');
      RatExpr value = expr();
      skip_ws();
      expect(';');
      bindings_[name] = value;
      skip_ws();
    }
    RatExpr e = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return e;
  }

 private:
  RatExpr expr() {
    RatExpr e = term();
    skip_ws();
    while (pos_ < s_.size() && s_[pos_] == '+') {
      ++pos_;
      e = e + term();
      skip_ws();
    }
    return e;
  }

  RatExpr term() {
    RatExpr e = factor();
    skip_ws();
    while (pos_ < s_.size() && (s_[pos_] == '*' || s_[pos_] == '/')) {
      const char op = s_[pos_++];
      RatExpr rhs = factor();
      e = op == '*' ? e * rhs : e / rhs;
      skip_ws();
    }
    return e;
  }

  RatExpr factor() {
    RatExpr e = primary();
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      skip_ws();
      bool neg = false;
      if (pos_ < s_.size() && s_[pos_] == '-') {
        neg = true;
        ++pos_;
      }
      long v = integer();
      e = e.pow(neg ? -v : v);
    }
    return e;
  }

  RatExpr primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RatExpr e = expr();
      skip_ws();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long num = integer();
      skip_ws();
      // "3/2" as a literal only when the next token is a digit; a following
      // identifier or '(' keeps '/' as division
      if (pos_ < s_.size() && s_[pos_] == '/' ) {
        std::size_t save = pos_;
        ++pos_;
        skip_ws();
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
          long den = integer();
          return RatExpr::constant(num, den);
        }
        pos_ = save;
      }
      return RatExpr::constant(num);
    }
    if (c == '-') fail("subtraction is not allowed");
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name = ident();
      auto it = bindings_.find(name);
      if (it != bindings_.end()) return it->second;
      return RatExpr::var(name);
    }
    fail(std::string("unexpected character '") + c + "'");
    return RatExpr();
  }

  std::string ident() {
    std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    if (start == pos_) fail("expected identifier");
    return s_.substr(start, pos_ - start);
  }

  long integer() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stol(s_.substr(start, pos_ - start));
  }

  bool peek_word(const std::string& w) {
    if (s_.compare(pos_, w.size(), w) != 0) return false;
    const std::size_t after = pos_ + w.size();
    return after >= s_.size() ||
           (!std::isalnum(static_cast<unsigned char>(s_[after])) && s_[after] != '_');
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != c)
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg + " at offset " + std::to_string(pos_));
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  std::map<std::string, RatExpr> bindings_;
};

}  // namespace

RatExpr parse_rat_expr(const std::string& text) { return Parser(text).program(); }

bool check_subtraction_free(const std::string& text) {
  try {
    parse_rat_expr(text);
    return true;
  } catch (const ParseError&) {
    return false;
  }
}

}  // namespace crys
