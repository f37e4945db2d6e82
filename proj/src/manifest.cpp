#include "m4kit/manifest.hpp"

#include <cctype>
#include <chrono>
#include <map>
#include <set>

#include "m4kit/blocks.hpp"
#include "m4kit/error.hpp"
#include "m4kit/surgery.hpp"

namespace m4kit {

const Arg* Statement::arg(std::string_view key) const {
  for (const auto& a : args)
    if (a.key == key) return &a;
  return nullptr;
}

bool Statement::operator==(const Statement& o) const {
  if (kind != o.kind || name != o.name || callee != o.callee || refs != o.refs ||
      args.size() != o.args.size())
    return false;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i].key != o.args[i].key || args[i].value != o.args[i].value ||
        args[i].quoted != o.args[i].quoted)
      return false;
  }
  return true;
}

namespace {

const std::set<std::string> kExpectKeys = {"e",      "sigma",     "chi_h",  "c1sq",
                                           "region", "parity",    "pi1",    "gen",
                                           "model",  "h1",        "symplectic",
                                           "surjective", "meridian"};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class LineParser {
 public:
  LineParser(std::string_view text, std::size_t line) : s_(text), line_(line) {}

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, pos_ + 1); }
  [[noreturn]] void fail_at(const std::string& what, std::size_t col) const {
    throw ParseError(what, line_, col);
  }

  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\r')) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }
  std::size_t column() {
    skip_ws();
    return pos_ + 1;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  void expect(char c) {
    skip_ws();
    if (pos_ >= s_.size()) fail(std::string("expected '") + c + "' before end of line");
    if (s_[pos_] != c) fail(std::string("expected '") + c + "', found '" + s_[pos_] + "'");
    ++pos_;
  }
  std::string ident(const char* what) {
    skip_ws();
    if (pos_ >= s_.size()) fail(std::string("expected ") + what + " before end of line");
    if (!ident_start(s_[pos_])) fail(std::string("expected ") + what + ", found '" + s_[pos_] + "'");
    std::size_t b = pos_;
    while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
    return std::string(s_.substr(b, pos_ - b));
  }
  // NAME or NAME.SURFACE
  std::string ref() {
    std::string r = ident("object reference");
    if (pos_ < s_.size() && s_[pos_] == '.') {
      ++pos_;
      r += "." + ident("surface name");
    }
    return r;
  }
  // Value of a named argument: integer, identifier or double-quoted string.
  Arg value_arg(std::string key, std::size_t col) {
    Arg a;
    a.key = std::move(key);
    a.line = line_;
    a.column = col;
    skip_ws();
    if (pos_ >= s_.size()) fail("expected a value before end of line");
    char c = s_[pos_];
    if (c == '"') {
      std::size_t b = ++pos_;
      while (pos_ < s_.size() && s_[pos_] != '"') ++pos_;
      if (pos_ >= s_.size()) fail_at("unterminated string", b);
      a.value = std::string(s_.substr(b, pos_ - b));
      a.quoted = true;
      ++pos_;
    } else if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t b = pos_++;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      a.value = std::string(s_.substr(b, pos_ - b));
      if (a.value == "-" || a.value == "+") fail_at("expected digits after sign", b + 1);
      if (a.value[0] == '+') a.value.erase(0, 1);
    } else if (ident_start(c)) {
      a.value = ident("value");
    } else {
      fail(std::string("unexpected '") + c + "' in argument value");
    }
    return a;
  }
  // Bare expectation value: a run of non-blank characters.
  std::string word() {
    skip_ws();
    std::size_t b = pos_;
    while (pos_ < s_.size() && s_[pos_] != ' ' && s_[pos_] != '\t' && s_[pos_] != '\r') ++pos_;
    if (b == pos_) fail("expected a value");
    return std::string(s_.substr(b, pos_ - b));
  }
  std::size_t line() const { return line_; }

 private:
  std::string_view s_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

// Comment start: '#' at line start or after blank, outside quotes.
std::string_view strip_comment(std::string_view line) {
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (c == '"') quoted = !quoted;
    if (c == '#' && !quoted && (i == 0 || line[i - 1] == ' ' || line[i - 1] == '\t')) {
      return line.substr(0, i);
    }
  }
  return line;
}

struct Signature {
  std::vector<std::string> keys;
  std::set<std::string> required;
};

Signature signature_of(const Statement& st) {
  using K = Statement::Kind;
  switch (st.kind) {
    case K::Block: {
      const CatalogEntry& e = catalog_entry(st.callee);
      Signature s;
      for (const auto& p : e.params) {
        s.keys.push_back(p.name);
        if (p.required) s.required.insert(p.name);
      }
      return s;
    }
    case K::Sum: return {{"map"}, {}};
    case K::Surgery: return {{"site", "k", "m"}, {"site", "k"}};
    case K::Blowup: return {{}, {}};
    case K::Realize: return {{"chi", "c"}, {"chi", "c"}};
    case K::Expect: break;
  }
  return {};
}

std::size_t expected_refs(Statement::Kind k) {
  using K = Statement::Kind;
  switch (k) {
    case K::Sum: return 2;
    case K::Surgery:
    case K::Blowup: return 1;
    default: return 0;
  }
}

const char* callee_for(Statement::Kind k) {
  using K = Statement::Kind;
  switch (k) {
    case K::Sum: return "fibersum";
    case K::Surgery: return "surgery";
    case K::Blowup: return "blowup";
    case K::Realize: return "realize";
    default: return nullptr;
  }
}

Statement parse_statement(LineParser& p) {
  Statement st;
  st.line = p.line();
  st.column = p.column();
  std::string verb = p.ident("statement keyword");
  static const std::map<std::string, Statement::Kind> verbs = {
      {"block", Statement::Kind::Block},     {"sum", Statement::Kind::Sum},
      {"surgery", Statement::Kind::Surgery}, {"blowup", Statement::Kind::Blowup},
      {"realize", Statement::Kind::Realize}, {"expect", Statement::Kind::Expect}};
  auto it = verbs.find(verb);
  if (it == verbs.end()) p.fail_at("unknown statement '" + verb + "'", st.column);
  st.kind = it->second;

  if (st.kind == Statement::Kind::Expect) {
    // expect [NAME:] key=value ...
    std::size_t col = p.column();
    std::string first = p.ident("object name or expectation key");
    if (p.peek(':')) {
      p.expect(':');
      st.name = first;
      col = p.column();
      first = p.ident("expectation key");
    }
    for (;;) {
      if (!kExpectKeys.count(first)) p.fail_at("unknown expectation key '" + first + "'", col);
      if (st.arg(first)) p.fail_at("duplicate expectation key '" + first + "'", col);
      p.expect('=');
      Arg a;
      a.key = first;
      a.line = st.line;
      a.column = col;
      a.value = p.word();
      st.args.push_back(std::move(a));
      if (p.at_end()) break;
      col = p.column();
      first = p.ident("expectation key");
    }
    if (st.args.empty()) p.fail("expectation needs at least one key=value clause");
    return st;
  }

  st.name = p.ident("a name");
  p.expect('=');
  std::size_t callee_col = p.column();
  st.callee = p.ident("constructor name");
  if (const char* want = callee_for(st.kind); want && st.callee != want) {
    p.fail_at("'" + verb + "' statements call " + want + "(...), not " + st.callee, callee_col);
  }
  if (st.kind == Statement::Kind::Block) {
    try {
      catalog_entry(st.callee);
    } catch (const Error&) {
      p.fail_at("unknown constructor '" + st.callee + "'", callee_col);
    }
  }
  p.expect('(');
  const std::size_t nrefs = expected_refs(st.kind);
  bool first = true;
  while (!p.peek(')')) {
    if (!first) p.expect(',');
    first = false;
    std::size_t col = p.column();
    if (st.refs.size() < nrefs) {
      st.refs.push_back(p.ref());
      if (p.peek('=')) p.fail_at("expected a positional reference, found a named argument", col);
      continue;
    }
    std::string key = p.ident("argument name");
    p.expect('=');
    Arg a = p.value_arg(key, col);
    if (st.arg(a.key)) p.fail_at("duplicate argument '" + a.key + "'", col);
    st.args.push_back(std::move(a));
  }
  std::size_t close_col = p.column();
  p.expect(')');
  if (!p.at_end()) p.fail("unexpected text after ')'");

  if (st.refs.size() != nrefs) {
    p.fail_at(st.callee + " takes " + std::to_string(nrefs) + " positional argument(s), got " +
                  std::to_string(st.refs.size()),
              close_col);
  }
  Signature sig = signature_of(st);
  for (const auto& a : st.args) {
    if (std::find(sig.keys.begin(), sig.keys.end(), a.key) == sig.keys.end()) {
      p.fail_at(st.callee + " has no parameter '" + a.key + "'", a.column);
    }
    bool is_int = !a.quoted && !a.value.empty() &&
                  (a.value[0] == '-' || std::isdigit(static_cast<unsigned char>(a.value[0])));
    bool wants_string = a.key == "site" || a.key == "map";
    if (wants_string && is_int) p.fail_at("parameter '" + a.key + "' takes a name", a.column);
    if (!wants_string && !is_int) p.fail_at("parameter '" + a.key + "' takes an integer", a.column);
  }
  for (const auto& r : sig.required) {
    if (!st.arg(r)) p.fail_at(st.callee + " needs parameter '" + r + "'", callee_col);
  }
  if (st.kind == Statement::Kind::Sum) {
    for (const auto& r : st.refs) {
      if (r.find('.') == std::string::npos) {
        p.fail_at("fibersum takes OBJECT.SURFACE references", callee_col);
      }
    }
  } else {
    for (const auto& r : st.refs) {
      if (r.find('.') != std::string::npos) p.fail_at("expected an object name, got " + r, callee_col);
    }
  }
  return st;
}

std::string object_of(const std::string& ref) { return ref.substr(0, ref.find('.')); }

}  // namespace

Manifest parse_manifest(std::string_view text, std::string source) {
  Manifest m;
  m.source = std::move(source);
  std::set<std::string> defined;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = strip_comment(text.substr(start, end - start));
    LineParser p(line, line_no);
    if (!p.at_end()) {
      Statement st = parse_statement(p);
      if (st.kind == Statement::Kind::Expect) {
        if (st.name.empty() && defined.empty()) {
          p.fail_at("expectation before any object", st.column);
        }
        if (!st.name.empty() && !defined.count(st.name)) {
          p.fail_at("unknown object '" + st.name + "'", st.column);
        }
      } else {
        for (const auto& r : st.refs) {
          if (!defined.count(object_of(r))) {
            p.fail_at("unknown object '" + object_of(r) + "'", st.column);
          }
        }
        if (!defined.insert(st.name).second) {
          p.fail_at("name '" + st.name + "' is already defined", st.column);
        }
      }
      m.statements.push_back(std::move(st));
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  return m;
}

namespace {

std::string print_statement(const Statement& st) {
  using K = Statement::Kind;
  static const std::map<K, std::string> verbs = {{K::Block, "block"},     {K::Sum, "sum"},
                                                 {K::Surgery, "surgery"}, {K::Blowup, "blowup"},
                                                 {K::Realize, "realize"}, {K::Expect, "expect"}};
  std::string out = verbs.at(st.kind) + " ";
  if (st.kind == K::Expect) {
    out = "expect";
    if (!st.name.empty()) out += " " + st.name + ":";
    for (const auto& a : st.args) out += " " + a.key + "=" + a.value;
    return out;
  }
  out += st.name + " = " + st.callee + "(";
  bool first = true;
  for (const auto& r : st.refs) {
    out += (first ? "" : ", ") + r;
    first = false;
  }
  for (const auto& a : st.args) {
    out += (first ? "" : ", ") + a.key + "=" + (a.quoted ? "\"" + a.value + "\"" : a.value);
    first = false;
  }
  return out + ")";
}

}  // namespace

std::string print_manifest(const Manifest& m) {
  std::string out;
  for (const auto& st : m.statements) out += print_statement(st) + "\n";
  return out;
}

std::string to_string(ExpectationResult::Status s) {
  switch (s) {
    case ExpectationResult::Status::Pass: return "pass";
    case ExpectationResult::Status::Fail: return "fail";
    case ExpectationResult::Status::Inconclusive: return "inconclusive";
    case ExpectationResult::Status::Skipped: break;
  }
  return "skipped";
}

std::size_t Report::count(ExpectationResult::Status s) const {
  std::size_t n = 0;
  for (const auto& e : expectations) n += e.status == s;
  return n;
}

int Report::exit_code() const {
  if (count(ExpectationResult::Status::Fail)) return 1;
  if (count(ExpectationResult::Status::Inconclusive)) return 2;
  return 0;
}

namespace {

long long int_arg(const Statement& st, const std::string& key, long long fallback) {
  const Arg* a = st.arg(key);
  if (!a) return fallback;
  try {
    return std::stoll(a->value);
  } catch (const std::exception&) {
    throw ParseError("integer out of range for '" + key + "'", a->line, a->column);
  }
}

// Parses "trivial", "Z", "Z/p" into a target.
Target target_of(const std::string& v, const std::string& gen, std::size_t line, std::size_t col) {
  if (v == "trivial" || v == "1") return Target::trivial();
  if (v == "Z") return Target::infinite_cyclic(gen);
  if (v.rfind("Z/", 0) == 0) {
    try {
      long long p = std::stoll(v.substr(2));
      if (p >= 2) return Target::finite_cyclic(p, gen);
    } catch (const std::exception&) {
    }
  }
  throw ParseError("pi1 expectation must be trivial, Z or Z/p (p >= 2), got '" + v + "'", line, col);
}

std::string verdict_text(const Certificate& c) {
  switch (c.verdict) {
    case Verdict::Trivial: return "trivial";
    case Verdict::InfiniteCyclic: return "Z";
    case Verdict::FiniteCyclic: return "Z/" + std::to_string(c.order);
    case Verdict::Inconclusive: break;
  }
  return "inconclusive";
}

bool same_target(const Target& a, const Target& b) {
  return a.kind == b.kind && a.order == b.order && a.generator == b.generator;
}

class Runner {
 public:
  Runner(const Manifest& m, const RunOptions& o) : m_(m), opts_(o) {}

  Report run() {
    auto t0 = std::chrono::steady_clock::now();
    report_.manifest = m_.source;
    report_.budget = opts_.budget;
    report_.certified = opts_.certify;
    for (const auto& st : m_.statements) {
      try {
        execute(st);
      } catch (const ParseError&) {
        throw;
      } catch (const Error& e) {
        throw ParseError(e.what(), st.line, st.column);
      }
    }
    report_.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return std::move(report_);
  }

 private:
  ObjectReport& object(const std::string& name) { return report_.objects[index_.at(name)]; }

  void bind(const Statement& st, MarkedManifold m, std::optional<Realization> r = std::nullopt) {
    m.name = st.name;
    ObjectReport o;
    o.name = st.name;
    o.statement = print_statement(st);
    if ((m.e + m.sigma) % 4 == 0) o.point = coords(m.e, m.sigma);
    o.manifold = std::move(m);
    o.realization = std::move(r);
    if (o.realization && !o.realization->arithmetic_only) o.pi1 = o.realization->pi1;
    index_[st.name] = report_.objects.size();
    report_.objects.push_back(std::move(o));
    last_ = st.name;
  }

  void execute(const Statement& st) {
    using K = Statement::Kind;
    switch (st.kind) {
      case K::Block: {
        const CatalogEntry& e = catalog_entry(st.callee);
        std::map<std::string, long long> args;
        for (const auto& p : e.params) args[p.name] = int_arg(st, p.name, p.default_value);
        bind(st, e.make(args));
        return;
      }
      case K::Sum: {
        auto split = [](const std::string& r) {
          auto dot = r.find('.');
          return std::pair{r.substr(0, dot), r.substr(dot + 1)};
        };
        auto [xo, xs] = split(st.refs[0]);
        auto [no, ns] = split(st.refs[1]);
        SumIdentification id;
        if (const Arg* a = st.arg("map")) id.name = a->value;
        bind(st, fiber_sum(object(xo).manifold, xs, object(no).manifold, ns, id));
        return;
      }
      case K::Surgery: {
        const Arg* site = st.arg("site");
        const MarkedManifold& base = object(st.refs[0]).manifold;
        try {
          base.torus(site->value);
        } catch (const Error& e) {
          throw ParseError(e.what(), site->line, site->column);
        }
        bind(st, torus_surgery(base, site->value, int_arg(st, "k", 0), int_arg(st, "m", 1)));
        return;
      }
      case K::Blowup:
        bind(st, blow_up(object(st.refs[0]).manifold));
        return;
      case K::Realize: {
        GeoPoint p{int_arg(st, "chi", 0), int_arg(st, "c", 0)};
        Realization r = realize_pair(p, opts_.budget);
        MarkedManifold n = r.n;
        if (r.arithmetic_only) {
          n.e = r.e;
          n.sigma = r.sigma;
        }
        bind(st, std::move(n), std::move(r));
        return;
      }
      case K::Expect:
        expect(st);
        return;
    }
  }

  void add(const Statement& st, const Arg& a, std::string actual, ExpectationResult::Status s) {
    ExpectationResult r;
    r.object = st.name.empty() ? last_ : st.name;
    r.key = a.key;
    r.expected = a.value;
    r.actual = std::move(actual);
    r.status = s;
    r.line = a.line;
    report_.expectations.push_back(std::move(r));
  }

  void compare(const Statement& st, const Arg& a, const std::string& actual) {
    add(st, a, actual,
        actual == a.value ? ExpectationResult::Status::Pass : ExpectationResult::Status::Fail);
  }

  const Certificate& certificate(ObjectReport& o, const Target& t) {
    if (o.pi1 && same_target(o.pi1->target, t)) return *o.pi1;
    o.pi1 = certify(o.manifold.pi1, t, opts_.budget);
    return *o.pi1;
  }

  void expect(const Statement& st) {
    using S = ExpectationResult::Status;
    ObjectReport& o = object(st.name.empty() ? last_ : st.name);
    const MarkedManifold& m = o.manifold;
    const Arg* gen_arg = st.arg("gen");
    const std::string gen = gen_arg ? gen_arg->value : "";
    std::optional<Target> pi1_target;
    if (const Arg* a = st.arg("pi1")) pi1_target = target_of(a->value, gen, a->line, a->column);

    for (const auto& a : st.args) {
      const std::string& k = a.key;
      if ((k == "surjective" || k == "meridian") && !o.realization) {
        throw ParseError("'" + k + "' applies to realize objects only", a.line, a.column);
      }
      if (k == "e") {
        compare(st, a, std::to_string(m.e));
      } else if (k == "sigma") {
        compare(st, a, std::to_string(m.sigma));
      } else if (k == "chi_h" || k == "c1sq") {
        if (!o.point) {
          add(st, a, "not admissible", S::Fail);
        } else {
          compare(st, a, std::to_string(k == "chi_h" ? o.point->chi_h : o.point->c1sq));
        }
      } else if (k == "region") {
        compare(st, a, o.point && region_check(*o.point) ? "true" : "false");
      } else if (k == "parity") {
        compare(st, a, to_string(m.parity));
      } else if (k == "symplectic") {
        compare(st, a, m.symplectic ? "true" : "false");
      } else if (k == "h1") {
        compare(st, a, to_string(h1(closed_candidate(m.pi1))));
      } else if (k == "gen") {
        continue;  // consumed by pi1
      } else if (!opts_.certify) {
        add(st, a, "", S::Skipped);
      } else if ((k == "pi1" || k == "model") && o.realization &&
                 o.realization->arithmetic_only) {
        add(st, a, "inconclusive: " + o.realization->note, S::Inconclusive);
      } else if (k == "pi1") {
        const Certificate& c = o.realization ? *o.pi1 : certificate(o, *pi1_target);
        std::string actual = verdict_text(c);
        if (!c.conclusive()) {
          add(st, a, "inconclusive: " + c.reason, S::Inconclusive);
        } else if (!gen.empty() && c.generator != gen) {
          add(st, a, actual + " (generator " + c.generator + ")", S::Fail);
        } else {
          add(st, a, actual, actual == a.value || (a.value == "1" && actual == "trivial")
                                 ? S::Pass
                                 : S::Fail);
        }
      } else if (k == "model") {
        const Certificate& c = o.pi1 && o.pi1->verdict == Verdict::Trivial
                                   ? *o.pi1
                                   : certificate(o, Target::trivial());
        if (!c.conclusive()) {
          add(st, a, "inconclusive: " + c.reason, S::Inconclusive);
          continue;
        }
        try {
          o.model = freedman_model(m, c);
          compare(st, a, o.model->name());
        } catch (const Error& e) {
          add(st, a, e.what(), S::Fail);
        }
      } else if (k == "surjective" || k == "meridian") {
        const Realization& r = *o.realization;
        if (k == "surjective") {
          if (!r.surjectivity_index) {
            add(st, a, "inconclusive", S::Inconclusive);
          } else {
            compare(st, a, *r.surjectivity_index == 1 ? "true" : "false");
          }
        } else if (!r.meridian.conclusive()) {
          add(st, a, "inconclusive: " + r.meridian.reason, S::Inconclusive);
        } else {
          compare(st, a, "trivial");
        }
      }
    }
  }

  const Manifest& m_;
  RunOptions opts_;
  Report report_;
  std::map<std::string, std::size_t> index_;
  std::string last_;
};

}  // namespace

Report run_manifest(const Manifest& m, const RunOptions& opts) { return Runner(m, opts).run(); }

}  // namespace m4kit
