#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "m4kit/certify.hpp"
#include "m4kit/geography.hpp"
#include "m4kit/manifold.hpp"

namespace m4kit {

struct Arg {
  std::string key;
  std::string value;
  bool quoted = false;
  std::size_t line = 0;
  std::size_t column = 0;
};

struct Statement {
  enum class Kind { Block, Sum, Surgery, Blowup, Realize, Expect };
  Kind kind = Kind::Block;
  std::string name;      // bound name; for expect, the object checked (may be empty)
  std::string callee;    // constructor or operation name
  std::vector<std::string> refs;  // positional references, e.g. "Y.Sigma2"
  std::vector<Arg> args;          // named arguments; for expect, the key=value clauses
  std::size_t line = 0;
  std::size_t column = 0;

  const Arg* arg(std::string_view key) const;
  bool operator==(const Statement& o) const;
};

struct Manifest {
  std::string source;  // file name used in diagnostics
  std::vector<Statement> statements;
};

// Throws ParseError with line and column.
Manifest parse_manifest(std::string_view text, std::string source = "<input>");
// Canonical text; parse(print(m)) == m up to source positions.
std::string print_manifest(const Manifest& m);

struct ExpectationResult {
  std::string object;
  std::string key;
  std::string expected;
  std::string actual;
  enum class Status { Pass, Fail, Inconclusive, Skipped } status = Status::Pass;
  std::size_t line = 0;
};
std::string to_string(ExpectationResult::Status s);

struct ObjectReport {
  std::string name;
  std::string statement;  // canonical statement text
  MarkedManifold manifold;
  std::optional<GeoPoint> point;       // when e + sigma is divisible by 4
  std::optional<Certificate> pi1;      // when certified
  std::optional<FreedmanModel> model;  // when pi1 certified trivial and parity odd
  std::optional<Realization> realization;
};

struct Report {
  static constexpr int schema_version = 1;
  std::string manifest;
  Budget budget;
  bool certified = false;  // false for `build`: pi1 expectations are skipped
  std::vector<ObjectReport> objects;
  std::vector<ExpectationResult> expectations;
  double wall_ms = 0;

  std::size_t count(ExpectationResult::Status s) const;
  // 0 all met, 1 a failure, 2 inconclusive (no failure).
  int exit_code() const;
};

struct RunOptions {
  Budget budget;
  bool certify = true;
};

// Executes statements in order. Module errors are rethrown as ParseError
// carrying the statement's position.
Report run_manifest(const Manifest& m, const RunOptions& opts);

// JSON report (schema_version 1).
std::string report_json(const Report& r, int indent = 2);
// Certificates embedded in a report.
std::vector<Certificate> certificates_from_json(std::string_view json);
std::string certificate_json(const Certificate& c, int indent = 2);
Certificate certificate_from_json(std::string_view json);

}  // namespace m4kit
