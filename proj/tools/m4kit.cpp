#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "m4kit/blocks.hpp"
#include "m4kit/error.hpp"
#include "m4kit/geography.hpp"
#include "m4kit/manifest.hpp"
#include "m4kit/replay.hpp"

namespace fs = std::filesystem;
using namespace m4kit;

namespace {

constexpr int kUsage = 3;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Outcome {
  std::string file;
  std::optional<Report> report;
  std::string error;
};

Outcome run_file(const std::string& file, const RunOptions& opts) {
  Outcome o{file, std::nullopt, {}};
  try {
    Manifest m = parse_manifest(slurp(file), file);
    o.report = run_manifest(m, opts);
  } catch (const Error& e) {
    o.error = file + ":" + e.what();
  }
  return o;
}

void print_summary(const Report& r, std::ostream& out) {
  out << r.manifest << "\n";
  for (const auto& o : r.objects) {
    out << "  " << o.name << ": e=" << o.manifold.e << " sigma=" << o.manifold.sigma;
    if (o.point) out << " (chi_h, c1^2)=(" << o.point->chi_h << ", " << o.point->c1sq << ")";
    if (o.pi1) out << " pi1: " << describe(*o.pi1);
    if (o.model) out << " model " << o.model->name();
    out << "\n";
  }
  for (const auto& e : r.expectations) {
    out << "  [" << to_string(e.status) << "] " << e.object << " " << e.key << "=" << e.expected;
    if (e.status != ExpectationResult::Status::Pass && e.status != ExpectationResult::Status::Skipped)
      out << " (got " << e.actual << ")";
    out << "\n";
  }
}

int manifests(const std::vector<std::string>& files, const RunOptions& opts, bool json,
              const std::string& report_dir) {
  std::vector<std::future<Outcome>> jobs;
  for (const auto& f : files) jobs.push_back(std::async(std::launch::async, run_file, f, opts));
  int code = 0;
  for (auto& j : jobs) {
    Outcome o = j.get();
    if (!o.report) {
      std::cerr << "error: " << o.error << "\n";
      code = kUsage;
      continue;
    }
    const Report& r = *o.report;
    if (json) {
      std::cout << report_json(r) << "\n";
    } else {
      print_summary(r, std::cout);
    }
    if (!report_dir.empty()) {
      fs::create_directories(report_dir);
      fs::path out = fs::path(report_dir) / (fs::path(o.file).stem().string() + ".report.json");
      std::ofstream(out) << report_json(r) << "\n";
    }
    if (code != kUsage) code = std::max(code, r.exit_code());
  }
  return code;
}

int catalog_cmd() {
  for (const auto& e : catalog()) {
    std::map<std::string, long long> args;
    std::string sig;
    for (const auto& p : e.params) {
      args[p.name] = p.default_value;
      if (!sig.empty()) sig += ", ";
      sig += p.name + (p.required ? "" : "=" + std::to_string(p.default_value));
    }
    MarkedManifold m = e.make(args);
    std::cout << e.name << "(" << sig << ")  " << e.summary << "\n";
    std::cout << "  e=" << m.e << " sigma=" << m.sigma << " parity=" << to_string(m.parity)
              << " generators=" << m.pi1.generators.size() << " relators=" << m.pi1.relators.size()
              << "\n";
    for (const auto& s : m.surfaces)
      std::cout << "  surface " << s.name << " genus " << s.genus << " meridian "
                << to_string(s.meridian) << "\n";
    for (const auto& t : m.tori)
      std::cout << "  site \"" << t.site << "\" curve " << t.curve << " pushoff "
                << to_string(t.pushoff) << " coefficient " << t.coefficient << "\n";
  }
  return 0;
}

int replay_cmd(const std::string& file, const Budget& budget) {
  std::vector<Certificate> certs = certificates_from_json(slurp(file));
  int bad = 0;
  for (std::size_t i = 0; i < certs.size(); ++i) {
    ReplayResult r = replay(certs[i], budget);
    std::cout << "certificate " << i << " (" << describe(certs[i]) << "): ";
    if (r.ok) {
      std::cout << "ok, " << r.steps_checked << " steps\n";
    } else {
      std::cout << "FAILED: " << r.error << "\n";
      ++bad;
    }
  }
  return bad ? 1 : 0;
}

int realize_cmd(long long chi, long long c, const Budget& budget) {
  Realization r = realize_pair({chi, c}, budget);
  std::cout << "(" << chi << ", " << c << "): " << r.construction << "\n";
  std::cout << "  T' = site \"" << r.skipped_site << "\" generated by";
  for (const auto& g : r.torus_generators) std::cout << " " << g;
  std::cout << "\n  e=" << r.e << " sigma=" << r.sigma << "\n";
  std::cout << "  pi1(N): " << describe(r.pi1) << "\n";
  std::cout << "  <T'> index: "
            << (r.surjectivity_index ? std::to_string(*r.surjectivity_index) : "not computed")
            << "\n";
  std::cout << "  meridian " << to_string(r.meridian.subject) << ": " << describe(r.meridian) << "\n";
  if (!r.note.empty()) std::cout << "  note: " << r.note << "\n";
  if (r.arithmetic_only) return 2;
  return r.established() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Build, certify and place 4-manifold constructions"};
  app.require_subcommand(1);
  Budget budget = Budget::from_env();

  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--max-cosets", budget.max_cosets, "Coset table limit");
    sub->add_option("--max-steps", budget.max_steps, "Derivation step limit");
  };

  std::vector<std::string> files;
  bool json = false;
  std::string report_dir;

  auto* build = app.add_subcommand("build", "Construct objects and check invariant expectations");
  build->add_option("files", files, "Manifest files")->required()->check(CLI::ExistingFile);
  build->add_flag("--json", json, "Print the JSON report");
  build->add_option("--report-dir", report_dir, "Write <stem>.report.json here");

  auto* cert = app.add_subcommand("certify", "Construct, certify pi1 and check all expectations");
  cert->add_option("files", files, "Manifest files")->required()->check(CLI::ExistingFile);
  cert->add_flag("--json", json, "Print the JSON report");
  cert->add_option("--report-dir", report_dir, "Write <stem>.report.json here");
  add_budget(cert);

  auto* geo = app.add_subcommand("geography", "Characteristic numbers and realizations");
  std::vector<long long> coords_args, check_args, realize_args;
  auto* o1 = geo->add_option("--coords", coords_args, "e sigma")->expected(2);
  auto* o2 = geo->add_option("--check", check_args, "chi c")->expected(2);
  auto* o3 = geo->add_option("--realize", realize_args, "chi c")->expected(2);
  o1->excludes(o2)->excludes(o3);
  o2->excludes(o3);
  add_budget(geo);

  auto* cat = app.add_subcommand("catalog", "List catalog blocks, surfaces and surgery sites");

  auto* rep = app.add_subcommand("replay", "Re-check the certificates embedded in a report");
  std::string report_file;
  rep->add_option("report", report_file, "Report file")->required()->check(CLI::ExistingFile);
  add_budget(rep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*build) return manifests(files, {budget, false}, json, report_dir);
    if (*cert) return manifests(files, {budget, true}, json, report_dir);
    if (*cat) return catalog_cmd();
    if (*rep) return replay_cmd(report_file, budget);
    if (*geo) {
      if (!coords_args.empty()) {
        GeoPoint p = coords(coords_args[0], coords_args[1]);
        std::cout << "chi_h=" << p.chi_h << " c1sq=" << p.c1sq
                  << " region=" << (region_check(p) ? "true" : "false") << "\n";
        return 0;
      }
      if (!check_args.empty()) {
        GeoPoint p{check_args[0], check_args[1]};
        auto [e, s] = euler_signature(p);
        bool in = region_check(p);
        std::cout << "e=" << e << " sigma=" << s << " region=" << (in ? "true" : "false") << "\n";
        return in ? 0 : 1;
      }
      if (!realize_args.empty()) return realize_cmd(realize_args[0], realize_args[1], budget);
      std::cerr << "geography needs one of --coords, --check, --realize\n";
      return kUsage;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
