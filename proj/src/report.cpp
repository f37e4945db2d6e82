#include <json.hpp>

#include "m4kit/error.hpp"
#include "m4kit/manifest.hpp"

namespace m4kit {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

const char* kind_name(Target::Kind k) {
  switch (k) {
    case Target::Kind::Trivial: return "trivial";
    case Target::Kind::InfiniteCyclic: return "infinite-cyclic";
    case Target::Kind::FiniteCyclic: return "finite-cyclic";
    case Target::Kind::Auto: break;
  }
  return "auto";
}

Target::Kind kind_from(const std::string& s) {
  if (s == "trivial") return Target::Kind::Trivial;
  if (s == "infinite-cyclic") return Target::Kind::InfiniteCyclic;
  if (s == "finite-cyclic") return Target::Kind::FiniteCyclic;
  if (s == "auto") return Target::Kind::Auto;
  throw Error("unknown target kind '" + s + "'");
}

Verdict verdict_from(const std::string& s) {
  for (Verdict v : {Verdict::Trivial, Verdict::FiniteCyclic, Verdict::InfiniteCyclic,
                    Verdict::Inconclusive}) {
    if (to_string(v) == s) return v;
  }
  throw Error("unknown verdict '" + s + "'");
}

ordered_json words(const std::vector<Word>& ws) {
  ordered_json a = ordered_json::array();
  for (const auto& w : ws) a.push_back(to_string(w));
  return a;
}

ordered_json step_json(const Step& s) {
  ordered_json j;
  j["rule"] = s.rule;
  if (!s.target.empty()) j["target"] = s.target;
  if (s.slot) j["slot"] = s.slot;
  if (!s.gen.empty()) j["gen"] = s.gen;
  if (!s.gen2.empty()) j["gen2"] = s.gen2;
  if (!s.inputs.empty()) j["inputs"] = words(s.inputs);
  if (!s.output.is_identity()) j["output"] = to_string(s.output);
  if (s.rotation) j["rotation"] = s.rotation;
  if (s.pos1) j["pos1"] = s.pos1;
  if (s.pos2) j["pos2"] = s.pos2;
  if (!s.value.empty()) j["value"] = s.value;
  return j;
}

Step step_from(const json& j) {
  Step s;
  s.rule = j.at("rule").get<std::string>();
  s.target = j.value("target", "");
  s.slot = j.value("slot", std::size_t{0});
  s.gen = j.value("gen", "");
  s.gen2 = j.value("gen2", "");
  if (j.contains("inputs"))
    for (const auto& w : j["inputs"]) s.inputs.push_back(parse_word(w.get<std::string>()));
  if (j.contains("output")) s.output = parse_word(j["output"].get<std::string>());
  s.rotation = j.value("rotation", 0LL);
  s.pos1 = j.value("pos1", 0LL);
  s.pos2 = j.value("pos2", 0LL);
  s.value = j.value("value", "");
  return s;
}

ordered_json h1_json(const H1Result& h) {
  ordered_json j;
  j["rank"] = h.rank;
  ordered_json t = ordered_json::array();
  for (const auto& d : h.torsion) t.push_back(d.str());
  j["torsion"] = t;
  j["text"] = to_string(h);
  return j;
}

H1Result h1_from(const json& j) {
  H1Result h;
  h.rank = j.at("rank").get<std::size_t>();
  for (const auto& d : j.at("torsion")) h.torsion.emplace_back(d.get<std::string>());
  return h;
}

ordered_json cert_json(const Certificate& c) {
  ordered_json j;
  j["claim"] = c.claim == Claim::Group ? "group" : "word-trivial";
  j["input"] = to_text(c.input);
  if (c.claim == Claim::WordTrivial) j["subject"] = to_string(c.subject);
  j["target"] = {{"kind", kind_name(c.target.kind)},
                 {"order", c.target.order},
                 {"generator", c.target.generator}};
  j["verdict"] = to_string(c.verdict);
  j["summary"] = describe(c);
  if (c.verdict == Verdict::FiniteCyclic) j["order"] = c.order;
  if (!c.generator.empty()) j["generator"] = c.generator;
  if (!c.reason.empty()) j["reason"] = c.reason;
  if (c.final_h1) j["h1"] = h1_json(*c.final_h1);
  j["final_presentation"] = to_text(c.final_presentation);
  ordered_json imgs = ordered_json::object();
  for (const auto& [g, w] : c.images) imgs[g] = to_string(w);
  j["images"] = imgs;
  j["cosets_used"] = c.cosets_used;
  j["steps_used"] = c.steps_used;
  ordered_json steps = ordered_json::array();
  for (const auto& s : c.trace) steps.push_back(step_json(s));
  j["trace"] = steps;
  return j;
}

Certificate cert_from(const json& j) {
  Certificate c;
  c.claim = j.at("claim").get<std::string>() == "group" ? Claim::Group : Claim::WordTrivial;
  c.input = parse_presentation(j.at("input").get<std::string>());
  if (j.contains("subject")) c.subject = parse_word(j["subject"].get<std::string>());
  const json& t = j.at("target");
  c.target.kind = kind_from(t.at("kind").get<std::string>());
  c.target.order = t.value("order", 0LL);
  c.target.generator = t.value("generator", "");
  c.verdict = verdict_from(j.at("verdict").get<std::string>());
  c.order = j.value("order", 0LL);
  c.generator = j.value("generator", "");
  c.reason = j.value("reason", "");
  if (j.contains("h1")) c.final_h1 = h1_from(j["h1"]);
  c.final_presentation = parse_presentation(j.at("final_presentation").get<std::string>());
  if (j.contains("images"))
    for (const auto& [g, w] : j["images"].items()) c.images[g] = parse_word(w.get<std::string>());
  c.cosets_used = j.value("cosets_used", std::size_t{0});
  c.steps_used = j.value("steps_used", std::size_t{0});
  for (const auto& s : j.at("trace")) c.trace.push_back(step_from(s));
  return c;
}

ordered_json manifold_json(const MarkedManifold& m) {
  ordered_json j;
  j["recipe"] = m.recipe;
  j["e"] = m.e;
  j["sigma"] = m.sigma;
  j["parity"] = to_string(m.parity);
  j["symplectic"] = m.symplectic;
  j["pi1_candidate"] = m.pi1_candidate;
  j["presentation"] = to_text(m.pi1);
  ordered_json tori = ordered_json::array();
  for (const auto& t : m.tori) {
    tori.push_back({{"site", t.site},
                    {"curve", t.curve},
                    {"pushoff", to_string(t.pushoff)},
                    {"relator", to_string(t.relator)},
                    {"coefficient", t.coefficient},
                    {"k", t.k},
                    {"m", t.m},
                    {"performed", t.performed}});
  }
  j["tori"] = tori;
  ordered_json surfaces = ordered_json::array();
  for (const auto& s : m.surfaces) {
    surfaces.push_back({{"name", s.name},
                        {"genus", s.genus},
                        {"self_intersection", s.self_intersection},
                        {"meridian", to_string(s.meridian)}});
  }
  j["surfaces"] = surfaces;
  return j;
}

}  // namespace

std::string report_json(const Report& r, int indent) {
  ordered_json j;
  j["schema_version"] = Report::schema_version;
  j["manifest"] = r.manifest;
  j["mode"] = r.certified ? "certify" : "build";
  j["budget"] = {{"max_cosets", r.budget.max_cosets}, {"max_steps", r.budget.max_steps}};
  ordered_json objects = ordered_json::array();
  ordered_json certs = ordered_json::array();
  std::size_t cosets = 0, steps = 0;
  for (const auto& o : r.objects) {
    ordered_json oj;
    oj["name"] = o.name;
    oj["statement"] = o.statement;
    oj["manifold"] = manifold_json(o.manifold);
    if (o.point) {
      oj["chi_h"] = o.point->chi_h;
      oj["c1sq"] = o.point->c1sq;
      oj["region"] = region_check(*o.point);
    }
    if (o.pi1) {
      oj["pi1"] = describe(*o.pi1);
      oj["certificate"] = certs.size();
      certs.push_back(cert_json(*o.pi1));
      cosets += o.pi1->cosets_used;
      steps += o.pi1->steps_used;
    }
    if (o.model) {
      oj["freedman_model"] = {{"b2_plus", o.model->b2_plus},
                              {"b2_minus", o.model->b2_minus},
                              {"name", o.model->name()}};
    }
    if (o.realization) {
      const Realization& z = *o.realization;
      ordered_json rj;
      rj["construction"] = z.construction;
      rj["skipped_site"] = z.skipped_site;
      rj["torus_generators"] = z.torus_generators;
      rj["designated"] = z.designated;
      rj["arithmetic_only"] = z.arithmetic_only;
      rj["e"] = z.e;
      rj["sigma"] = z.sigma;
      if (z.arithmetic_only) {
        rj["base_pi1"] = describe(z.pi1);
        rj["base_certificate"] = certs.size();
        certs.push_back(cert_json(z.pi1));
      }
      if (z.surjectivity_index) rj["surjectivity_index"] = *z.surjectivity_index;
      rj["meridian"] = describe(z.meridian);
      rj["meridian_certificate"] = certs.size();
      certs.push_back(cert_json(z.meridian));
      cosets += z.meridian.cosets_used;
      steps += z.meridian.steps_used;
      rj["established"] = z.established();
      if (!z.note.empty()) rj["note"] = z.note;
      oj["realization"] = rj;
    }
    objects.push_back(oj);
  }
  j["objects"] = objects;
  j["certificates"] = certs;
  ordered_json ex = ordered_json::array();
  for (const auto& e : r.expectations) {
    ex.push_back({{"object", e.object},
                  {"key", e.key},
                  {"expected", e.expected},
                  {"actual", e.actual},
                  {"status", to_string(e.status)},
                  {"line", e.line}});
  }
  j["expectations"] = ex;
  j["summary"] = {{"pass", r.count(ExpectationResult::Status::Pass)},
                  {"fail", r.count(ExpectationResult::Status::Fail)},
                  {"inconclusive", r.count(ExpectationResult::Status::Inconclusive)},
                  {"skipped", r.count(ExpectationResult::Status::Skipped)},
                  {"exit_code", r.exit_code()}};
  j["usage"] = {{"cosets", cosets}, {"steps", steps}};
  j["wall_ms"] = r.wall_ms;
  return j.dump(indent);
}

std::vector<Certificate> certificates_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(std::string("malformed report: ") + e.what());
  }
  if (j.value("schema_version", 0) != Report::schema_version) {
    throw Error("unsupported report schema version");
  }
  std::vector<Certificate> out;
  try {
    for (const auto& c : j.at("certificates")) out.push_back(cert_from(c));
  } catch (const json::exception& e) {
    throw Error(std::string("malformed certificate: ") + e.what());
  }
  return out;
}

std::string certificate_json(const Certificate& c, int indent) { return cert_json(c).dump(indent); }

Certificate certificate_from_json(std::string_view text) {
  try {
    return cert_from(json::parse(text));
  } catch (const json::exception& e) {
    throw Error(std::string("malformed certificate: ") + e.what());
  }
}

}  // namespace m4kit
