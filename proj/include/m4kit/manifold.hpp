#pragma once

#include <set>
#include <string>
#include <vector>

#include "m4kit/presentation.hpp"

namespace m4kit {

enum class Parity { Odd, Even, Unknown };
std::string to_string(Parity p);

// A genus-g surface with its complement data. `images` maps the standard
// labels a1, b1, ... to words in the ambient group; labels listed in
// `modulo_meridian` hold only modulo the meridian's normal closure.
struct EmbeddedSurface {
  std::string name;
  int genus = 0;
  int self_intersection = 0;
  GeneratorMap images;
  std::set<std::string> modulo_meridian;
  Word meridian;
  Presentation complement;
};

// A Lagrangian or torus surgery site. `relator` is the relator currently
// attached to the site: the commutator it deletes before surgery, the
// relation curve^k = pushoff^m (stored as pushoff^m curve^-k) after.
struct SurgeryDatum {
  std::string site;
  std::string curve;
  Word pushoff;
  Word relator;
  std::string coefficient;  // as printed, e.g. "-1", "+1/p", "-m/r"
  int direction = -1;       // sign of the printed coefficient
  long long k = 0;
  long long m = 1;
  bool performed = false;
  std::vector<std::string> torus_generators;  // the two circle factors
};

struct MarkedManifold {
  std::string name;
  std::string recipe;
  long long e = 0;
  long long sigma = 0;
  Parity parity = Parity::Unknown;
  bool symplectic = false;
  bool minimal = false;       // recorded from the construction, never computed
  bool pi1_candidate = false; // presentation is an upper bound (quotient of it is pi1)
  Presentation pi1;
  std::vector<EmbeddedSurface> surfaces;
  std::vector<SurgeryDatum> tori;

  const EmbeddedSurface& surface(const std::string& name) const;
  const SurgeryDatum& torus(const std::string& site) const;
  SurgeryDatum& torus(const std::string& site);
  bool has_surface(const std::string& name) const;
};

}  // namespace m4kit
