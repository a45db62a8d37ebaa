#include "family_dsl.hpp"

#include <cctype>
#include <limits>
#include <map>

#include "indseq/error.hpp"

namespace indseq::cli {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  Expr parse_all() {
    Expr e = parse_expr();
    skip_ws();
    if (i_ != s_.size()) throw DslError(i_, "unexpected '" + std::string(1, s_[i_]) + "'");
    return e;
  }

 private:
  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  bool peek(char c) {
    skip_ws();
    return i_ < s_.size() && s_[i_] == c;
  }

  void expect(char c) {
    skip_ws();
    if (i_ >= s_.size()) throw DslError(i_, std::string("expected '") + c + "', found end of input");
    if (s_[i_] != c) throw DslError(i_, std::string("expected '") + c + "', found '" + s_[i_] + "'");
    ++i_;
  }

  std::string identifier() {
    skip_ws();
    const std::size_t start = i_;
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
    if (start == i_ || std::isdigit(static_cast<unsigned char>(s_[start]))) {
      i_ = start;
      throw DslError(start, "expected a family name");
    }
    return s_.substr(start, i_ - start);
  }

  long long number() {
    skip_ws();
    const std::size_t start = i_;
    if (i_ < s_.size() && s_[i_] == '-') ++i_;
    const std::size_t digits = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (digits == i_) throw DslError(start, "expected an integer");
    try {
      return std::stoll(s_.substr(start, i_ - start));
    } catch (const std::out_of_range&) {
      throw DslError(start, "integer out of range");
    }
  }

  Expr parse_expr() {
    skip_ws();
    Expr e;
    e.pos = i_;
    e.name = identifier();
    expect('(');
    if (peek(')')) {
      ++i_;
      return e;
    }
    for (;;) {
      e.args.push_back(parse_arg());
      skip_ws();
      if (peek(',')) {
        ++i_;
        continue;
      }
      expect(')');
      return e;
    }
  }

  Arg parse_arg() {
    skip_ws();
    Arg a;
    a.pos = i_;
    if (i_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[i_])) || s_[i_] == '-')) {
      a.number = number();
      return a;
    }
    const std::size_t save = i_;
    const std::string id = identifier();
    if (peek('=')) {
      ++i_;
      a.key = id;
      skip_ws();
      if (i_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[i_])) || s_[i_] == '-')) {
        a.number = number();
      } else {
        a.expr = std::make_shared<Expr>(parse_expr());
      }
      return a;
    }
    i_ = save;
    a.expr = std::make_shared<Expr>(parse_expr());
    return a;
  }

  const std::string& s_;
  std::size_t i_ = 0;
};

// Splits arguments into positional and keyword parts and checks their types.
class Args {
 public:
  explicit Args(const Expr& e) : e_(e) {
    for (const auto& a : e.args) {
      if (a.key) {
        if (keyed_.count(*a.key)) throw DslError(a.pos, "duplicate argument '" + *a.key + "'");
        keyed_[*a.key] = &a;
      } else {
        positional_.push_back(&a);
      }
    }
  }

  std::size_t positional_count() const { return positional_.size(); }

  int int_at(std::size_t i, const char* what, long long min = 0) const {
    if (i >= positional_.size()) throw DslError(e_.pos, e_.name + ": missing argument " + what);
    return checked(*positional_[i], what, min);
  }

  std::vector<int> all_ints(const char* what, long long min = 0) const {
    std::vector<int> out;
    for (const Arg* a : positional_) out.push_back(checked(*a, what, min));
    return out;
  }

  const Expr& expr_at(std::size_t i, const char* what) const {
    if (i >= positional_.size()) throw DslError(e_.pos, e_.name + ": missing argument " + what);
    if (!positional_[i]->expr) throw DslError(positional_[i]->pos, e_.name + ": " + what + " must be a family");
    return *positional_[i]->expr;
  }

  std::optional<int> key_int(const std::string& k, long long min = 0) const {
    auto it = keyed_.find(k);
    if (it == keyed_.end()) return std::nullopt;
    return checked(*it->second, k.c_str(), min);
  }

  int require_key_or_pos(const std::string& k, std::size_t i, long long min = 0) const {
    if (auto v = key_int(k, min)) return *v;
    return int_at(i, k.c_str(), min);
  }

  bool has_key(const std::string& k) const { return keyed_.count(k) != 0; }

  /// Rejects keys outside `allowed` (v and w are always allowed).
  void only_keys(std::initializer_list<const char*> allowed) const {
    for (const auto& [k, a] : keyed_) {
      if (k == "v" || k == "w") continue;
      bool ok = false;
      for (const char* name : allowed) ok = ok || k == name;
      if (!ok) throw DslError(a->pos, e_.name + ": unknown argument '" + k + "'");
    }
  }

  void max_positional(std::size_t n) const {
    if (positional_.size() > n) throw DslError(positional_[n]->pos, e_.name + ": too many arguments");
  }

 private:
  int checked(const Arg& a, const char* what, long long min) const {
    if (!a.number) throw DslError(a.pos, e_.name + ": " + what + " must be an integer");
    if (*a.number < min) throw DslError(a.pos, e_.name + ": " + what + " must be >= " + std::to_string(min));
    if (*a.number > std::numeric_limits<int>::max()) throw DslError(a.pos, e_.name + ": " + what + " too large");
    return static_cast<int>(*a.number);
  }

  const Expr& e_;
  std::vector<const Arg*> positional_;
  std::map<std::string, const Arg*> keyed_;
};

MarkedGraph plain(Graph g, int v = 0, std::optional<int> w = std::nullopt) { return {std::move(g), v, w}; }

MarkedGraph evaluate_unmarked(const Expr& e, const Args& a) {
  const std::string& n = e.name;
  if (n == "path") {
    a.only_keys({"n"});
    a.max_positional(1);
    const int k = a.require_key_or_pos("n", 0);
    return plain(path(k), 0, k >= 2 ? std::optional<int>(1) : std::nullopt);
  }
  if (n == "markedpath") {
    a.only_keys({"k"});
    a.max_positional(1);
    return marked_path(a.require_key_or_pos("k", 0, 2));
  }
  if (n == "star") {
    a.only_keys({"k"});
    a.max_positional(1);
    const int k = a.require_key_or_pos("k", 0);
    return plain(star(k), 0, k >= 1 ? std::optional<int>(1) : std::nullopt);
  }
  if (n == "complete") {
    a.only_keys({"n"});
    a.max_positional(1);
    const int k = a.require_key_or_pos("n", 0);
    return plain(complete_graph(k), 0, k >= 2 ? std::optional<int>(1) : std::nullopt);
  }
  if (n == "cycle") {
    a.only_keys({"n"});
    a.max_positional(1);
    return plain(cycle(a.require_key_or_pos("n", 0, 3)), 0, 1);
  }
  if (n == "doublestar") {
    a.only_keys({"s", "e", "l1", "l2"});
    a.max_positional(2);
    if (a.has_key("s") || a.has_key("e")) {
      const int s = a.key_int("s").value_or(0);
      const int ex = a.key_int("e").value_or(0);
      return double_star(s, s + ex);
    }
    return double_star(a.require_key_or_pos("l1", 0), a.require_key_or_pos("l2", 1));
  }
  if (n == "centipede") {
    a.only_keys({"n"});
    a.max_positional(1);
    return plain(centipede(a.require_key_or_pos("n", 0)));
  }
  if (n == "caterpillar") {
    a.only_keys({});
    return plain(caterpillar(a.all_ints("pendant count")));
  }
  if (n == "spider") {
    a.only_keys({});
    return plain(spider(a.all_ints("leg length", 1)));
  }
  if (n == "fib") {
    a.only_keys({"n"});
    a.max_positional(1);
    return fibonacci_tree(a.require_key_or_pos("n", 0));
  }
  if (n == "randomtree") {
    a.only_keys({"n", "seed"});
    a.max_positional(2);
    const int k = a.require_key_or_pos("n", 0, 1);
    const int seed = a.key_int("seed").value_or(a.positional_count() > 1 ? a.int_at(1, "seed") : 0);
    return plain(random_tree(k, static_cast<std::uint64_t>(seed)));
  }
  if (n == "concat1" || n == "concat2") {
    a.only_keys({"n"});
    a.max_positional(2);
    const MarkedGraph base = evaluate(a.expr_at(0, "base family"));
    const int copies = a.require_key_or_pos("n", 1, n == "concat1" ? 1 : 0);
    if (n == "concat1") return plain(concat_one(base, copies));
    base.validate(true);
    return plain(concat_two(base, copies));
  }
  if (n == "rooted") {
    a.only_keys({});
    a.max_positional(2);
    const MarkedGraph g = evaluate(a.expr_at(0, "base graph"));
    const MarkedGraph h = evaluate(a.expr_at(1, "rooted graph"));
    return plain(rooted_product(g.graph, h));
  }
  if (n == "union") {
    a.only_keys({});
    a.max_positional(2);
    return plain(disjoint_union(evaluate(a.expr_at(0, "first graph")).graph,
                                evaluate(a.expr_at(1, "second graph")).graph));
  }
  if (n == "pendants") {
    // pendants(g, k=K) attaches K leaves everywhere; with v=V only at V.
    a.only_keys({"k"});
    a.max_positional(2);
    const MarkedGraph g = evaluate(a.expr_at(0, "base graph"));
    const int k = a.require_key_or_pos("k", 1);
    if (auto at = a.key_int("v")) {
      if (!g.graph.valid_vertex(*at)) throw DslError(e.pos, "pendants: vertex out of range");
      return plain(attach_pendants(g.graph, *at, k), *at);
    }
    return plain(attach_pendants_everywhere(g.graph, k));
  }
  if (n == "pendantstar") {
    a.only_keys({"n"});
    a.max_positional(2);
    const MarkedGraph g = evaluate(a.expr_at(0, "base graph"));
    const int at = a.key_int("v").value_or(g.v);
    if (!g.graph.valid_vertex(at)) throw DslError(e.pos, "pendantstar: vertex out of range");
    return plain(attach_pendant_star_via_leaf(g.graph, at, a.require_key_or_pos("n", 1, 1)), at);
  }
  throw DslError(e.pos, "unknown family '" + n + "'");
}

}  // namespace

Expr parse_family(const std::string& text) { return Parser(text).parse_all(); }

MarkedGraph evaluate(const Expr& e) {
  const Args a(e);
  MarkedGraph m;
  try {
    m = evaluate_unmarked(e, a);
  } catch (const GraphError& err) {
    throw DslError(e.pos, e.name + ": " + err.what());
  }
  if (auto v = a.key_int("v")) m.v = *v;
  if (auto w = a.key_int("w")) m.w = *w;
  if (m.graph.vertex_count() > 0 && !m.graph.valid_vertex(m.v)) {
    throw DslError(e.pos, e.name + ": mark v out of range");
  }
  if (m.w && !m.graph.valid_vertex(*m.w)) throw DslError(e.pos, e.name + ": mark w out of range");
  return m;
}

MarkedGraph build_family(const std::string& text) { return evaluate(parse_family(text)); }

std::string family_help() {
  return "path(n) markedpath(k) star(k) complete(n) cycle(n) doublestar(l1,l2) doublestar(s=,e=) "
         "centipede(n) caterpillar(k1,...) spider(l1,...) fib(n) randomtree(n,seed=) concat1(g,n=) "
         "concat2(g,n=) rooted(g,h) union(g,h) pendants(g,k=[,v=]) pendantstar(g,n=[,v=]); "
         "every family accepts v= and w= marks";
}

}  // namespace indseq::cli
