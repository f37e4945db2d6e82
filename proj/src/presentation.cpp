#include "m4kit/presentation.hpp"

#include <algorithm>
#include <set>

#include "m4kit/error.hpp"

namespace m4kit {

namespace {

void check_letters(const Presentation& p, const Word& w, const std::string& where) {
  for (const auto& l : w.letters()) {
    if (!p.has_generator(l.gen)) {
      throw Error("unknown generator '" + l.gen + "' in " + where);
    }
  }
}

Word rename_word(const Word& w, const std::map<std::string, std::string>& names) {
  std::vector<Letter> raw;
  raw.reserve(w.size());
  for (const auto& l : w.letters()) {
    auto it = names.find(l.gen);
    raw.push_back({it == names.end() ? l.gen : it->second, l.sign});
  }
  return reduce(std::move(raw));
}

void push_unique(std::vector<Word>& out, const Word& w) {
  if (w.is_identity()) return;
  for (const auto& v : out)
    if (equivalent_relators(v, w)) return;
  out.push_back(w);
}

std::vector<std::string> split_top(std::string_view s, char sep) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '[' || c == '(') ++depth;
    if (c == ']' || c == ')') --depth;
    if (c == sep && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

Word parse_in(std::string_view text, std::string_view context) {
  try {
    return parse_word(text);
  } catch (const ParseError& e) {
    throw Error(std::string(context) + ": " + e.what());
  }
}

}  // namespace

bool Presentation::has_generator(const std::string& g) const {
  return generator_index(g) >= 0;
}

int Presentation::generator_index(const std::string& g) const {
  auto it = std::find(generators.begin(), generators.end(), g);
  return it == generators.end() ? -1 : static_cast<int>(it - generators.begin());
}

void Presentation::validate() const {
  std::set<std::string> seen;
  for (const auto& g : generators) {
    if (!valid_generator_name(g)) throw Error("invalid generator name '" + g + "'");
    if (!seen.insert(g).second) throw Error("duplicate generator '" + g + "'");
  }
  for (const auto& t : meridional) {
    if (!valid_generator_name(t.name)) throw Error("invalid tier name '" + t.name + "'");
    if (!seen.insert(t.name).second) throw Error("meridional tier '" + t.name + "' clashes");
    check_letters(*this, t.meridian, "meridian of tier " + t.name);
  }
  for (const auto& r : relators) check_letters(*this, r, "relator " + to_string(r));
  for (const auto& c : conditional) {
    check_letters(*this, c.relator, "conditional relator");
    check_letters(*this, c.meridian, "conditional meridian");
  }
  for (const auto& [name, w] : distinguished) check_letters(*this, w, "distinguished word " + name);
}

Presentation make_presentation(std::vector<std::string> generators,
                               const std::vector<std::string>& relators) {
  Presentation p;
  p.generators = std::move(generators);
  for (const auto& r : relators) p.relators.push_back(parse_word(r));
  p.validate();
  return p;
}

Presentation free_product(const Presentation& p, const Presentation& q,
                          const std::string& p_prefix, const std::string& q_prefix) {
  std::set<std::string> names(p.generators.begin(), p.generators.end());
  for (const auto& t : p.meridional) names.insert(t.name);
  auto clash = [&](const std::string& n) {
    if (names.count(n)) throw Error("free product: generator '" + n + "' occurs in both factors");
  };
  for (const auto& g : q.generators) clash(g);
  for (const auto& t : q.meridional) clash(t.name);

  Presentation out = p;
  out.generators.insert(out.generators.end(), q.generators.begin(), q.generators.end());
  out.relators.insert(out.relators.end(), q.relators.begin(), q.relators.end());
  out.meridional.insert(out.meridional.end(), q.meridional.begin(), q.meridional.end());
  out.conditional.insert(out.conditional.end(), q.conditional.begin(), q.conditional.end());
  out.distinguished.clear();
  auto add = [&](const std::string& prefix, const std::map<std::string, Word>& d) {
    for (const auto& [k, w] : d) {
      std::string key = prefix.empty() ? k : prefix + "." + k;
      if (!out.distinguished.emplace(key, w).second) {
        throw Error("free product: distinguished name '" + key + "' occurs in both factors");
      }
    }
  };
  add(p_prefix, p.distinguished);
  add(q_prefix, q.distinguished);
  return out;
}

Presentation impose(const Presentation& p, const std::vector<Word>& relations) {
  Presentation out = p;
  for (const auto& r : relations) {
    check_letters(p, r, "imposed relation");
    out.relators.push_back(r);
  }
  return out;
}

Presentation eliminate(const Presentation& p, const std::string& g, const Word& definition) {
  if (!p.has_generator(g)) throw Error("eliminate: unknown generator '" + g + "'");
  if (definition.contains(g)) throw Error("eliminate: '" + g + "' occurs in its own definition");
  const Word witness = Word(g) * definition.inverse();
  auto it = std::find_if(p.relators.begin(), p.relators.end(),
                         [&](const Word& r) { return equivalent_relators(r, witness); });
  if (it == p.relators.end()) {
    throw Error("eliminate: no relator proves " + g + " = " + to_string(definition));
  }
  Presentation out;
  for (const auto& x : p.generators)
    if (x != g) out.generators.push_back(x);
  for (auto r = p.relators.begin(); r != p.relators.end(); ++r) {
    if (r == it) continue;
    Word s = substitute(*r, g, definition);
    if (!s.is_identity()) out.relators.push_back(std::move(s));
  }
  for (const auto& t : p.meridional)
    out.meridional.push_back({t.name, substitute(t.meridian, g, definition)});
  for (const auto& c : p.conditional)
    out.conditional.push_back({substitute(c.relator, g, definition),
                               substitute(c.meridian, g, definition)});
  for (const auto& [k, w] : p.distinguished)
    out.distinguished[k] = substitute(w, g, definition);
  return out;
}

Presentation strip_meridional(const Presentation& p) {
  Presentation out = p;
  out.meridional.clear();
  return out;
}

Presentation rename(const Presentation& p, const std::map<std::string, std::string>& names) {
  Presentation out;
  for (const auto& g : p.generators) {
    auto it = names.find(g);
    out.generators.push_back(it == names.end() ? g : it->second);
  }
  for (const auto& r : p.relators) out.relators.push_back(rename_word(r, names));
  for (const auto& t : p.meridional) {
    auto it = names.find(t.name);
    out.meridional.push_back({it == names.end() ? t.name : it->second, rename_word(t.meridian, names)});
  }
  for (const auto& c : p.conditional)
    out.conditional.push_back({rename_word(c.relator, names), rename_word(c.meridian, names)});
  for (const auto& [k, w] : p.distinguished) out.distinguished[k] = rename_word(w, names);
  out.validate();
  return out;
}

Presentation closed_candidate(const Presentation& p) {
  Presentation out = strip_meridional(p);
  out.conditional.clear();
  std::vector<Word> extra;
  for (const auto& t : p.meridional) push_unique(extra, t.meridian);
  for (const auto& c : p.conditional) {
    push_unique(extra, c.meridian);
    push_unique(extra, c.relator);
  }
  out.relators.insert(out.relators.end(), extra.begin(), extra.end());
  return out;
}

std::string to_text(const Presentation& p) {
  std::string out = "<";
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    if (i) out += ", ";
    out += p.generators[i];
  }
  out += " | ";
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    if (i) out += ", ";
    out += to_string(p.relators[i]);
  }
  if (!p.meridional.empty()) {
    out += " | meridional: ";
    for (std::size_t i = 0; i < p.meridional.size(); ++i) {
      if (i) out += ", ";
      out += p.meridional[i].name + " ~ " + to_string(p.meridional[i].meridian);
    }
  }
  if (!p.conditional.empty()) {
    out += " | conditional: ";
    for (std::size_t i = 0; i < p.conditional.size(); ++i) {
      if (i) out += ", ";
      out += to_string(p.conditional[i].relator) + " ~ " + to_string(p.conditional[i].meridian);
    }
  }
  if (!p.distinguished.empty()) {
    out += " | distinguished: ";
    bool first = true;
    for (const auto& [k, w] : p.distinguished) {
      if (!first) out += ", ";
      first = false;
      out += k + " = " + to_string(w);
    }
  }
  return out + ">";
}

Presentation parse_presentation(std::string_view text) {
  std::string t = trim(text);
  if (t.size() < 2 || t.front() != '<' || t.back() != '>') {
    throw Error("presentation must be enclosed in '<' and '>'");
  }
  auto sections = split_top(std::string_view(t).substr(1, t.size() - 2), '|');
  Presentation p;
  for (const auto& g : split_top(sections[0], ',')) {
    std::string name = trim(g);
    if (!name.empty()) p.generators.push_back(name);
  }
  if (sections.size() > 1) {
    for (const auto& r : split_top(sections[1], ',')) {
      std::string s = trim(r);
      if (!s.empty()) p.relators.push_back(parse_in(s, "relator"));
    }
  }
  for (std::size_t i = 2; i < sections.size(); ++i) {
    std::string sec = trim(sections[i]);
    auto colon = sec.find(':');
    if (colon == std::string::npos) throw Error("presentation section without a label: " + sec);
    std::string label = trim(sec.substr(0, colon));
    for (const auto& item : split_top(sec.substr(colon + 1), ',')) {
      std::string it = trim(item);
      if (it.empty()) continue;
      if (label == "distinguished") {
        auto eq = it.find('=');
        if (eq == std::string::npos) throw Error("distinguished entry needs '=': " + it);
        p.distinguished[trim(it.substr(0, eq))] = parse_in(it.substr(eq + 1), "distinguished");
        continue;
      }
      auto tilde = it.find('~');
      if (tilde == std::string::npos) throw Error(label + " entry needs '~': " + it);
      Word tag = parse_in(it.substr(tilde + 1), label);
      if (label == "meridional") {
        p.meridional.push_back({trim(it.substr(0, tilde)), tag});
      } else if (label == "conditional") {
        p.conditional.push_back({parse_in(it.substr(0, tilde), label), tag});
      } else {
        throw Error("unknown presentation section '" + label + "'");
      }
    }
  }
  p.validate();
  return p;
}

}  // namespace m4kit
