#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "maxwell/bench.hpp"

namespace maxwell {

namespace {

// Reference spectra and mesh ladders of the built-in cases. Values are k0^2.
constexpr std::string_view kRegistry = R"json({
  "version": 1,
  "cases": [
    {
      "name": "square",
      "domain": {"type": "square"},
      "source": "analytic, m^2 + n^2",
      "reference": [
        {"value": 1, "multiplicity": 2}, {"value": 2}, {"value": 4, "multiplicity": 2},
        {"value": 5, "multiplicity": 2}, {"value": 8}, {"value": 9, "multiplicity": 2},
        {"value": 10, "multiplicity": 2}, {"value": 13, "multiplicity": 2},
        {"value": 16, "multiplicity": 2}
      ],
      "kinds": ["q4", "q9", "t6", "eq4", "eq12", "et8"],
      "resolution": {"q4": [8, 8], "q9": [8, 8], "t6": [7, 7], "eq4": [14, 14], "eq12": [10, 10], "et8": [7, 8]},
      "ladders": {
        "q4": {"base": [2, 2], "first": 1, "last": 20}, "q9": {"base": [1, 1], "first": 1, "last": 20},
        "t6": {"base": [1, 1], "first": 1, "last": 20}, "eq4": {"base": [2, 2], "first": 1, "last": 30},
        "eq12": {"base": [1, 1], "first": 1, "last": 20}, "et8": {"base": [1, 1], "first": 1, "last": 20}
      },
      "comparisons": [
        {"nodal": "q9", "edge": "eq12", "threshold": 1.0, "k": 5, "start": 1},
        {"nodal": "q4", "edge": "eq4", "threshold": 6.0, "k": 5, "start": 1},
        {"nodal": "t6", "edge": "et8", "threshold": 0.2, "k": 5, "start": 1}
      ]
    },
    {
      "name": "circle",
      "domain": {"type": "circle"},
      "source": "analytic, squared zeros of J_n'",
      "reference": [
        {"value": 3.391122, "multiplicity": 2}, {"value": 9.329970, "multiplicity": 2},
        {"value": 14.680392}, {"value": 17.652602, "multiplicity": 2},
        {"value": 28.275806, "multiplicity": 2}, {"value": 28.419561, "multiplicity": 2},
        {"value": 41.158640, "multiplicity": 2}, {"value": 44.970436, "multiplicity": 2},
        {"value": 49.224256}, {"value": 56.272502, "multiplicity": 2},
        {"value": 64.240225, "multiplicity": 2}
      ],
      "kinds": ["q9", "eq4", "eq12"],
      "resolution": {"q9": [16, 16], "eq4": [40, 40], "eq12": [30, 20]},
      "ladders": {
        "q9": {"base": [4, 4], "first": 1, "last": 10},
        "eq4": {"base": [4, 4], "first": 1, "last": 12},
        "eq12": {"base": [3, 2], "first": 2, "last": 12}
      },
      "comparisons": [
        {"nodal": "q9", "edge": "eq4", "threshold": 7.0, "k": 5, "start": 1},
        {"nodal": "q9", "edge": "eq12", "threshold": 7.0, "k": 5, "start": 1}
      ]
    },
    {
      "name": "l_shape",
      "domain": {"type": "l_shape"},
      "source": "high-accuracy reference computation",
      "reference": [
        {"value": 0.591790, "singular": true}, {"value": 1.432320},
        {"value": 4.005540, "multiplicity": 2}, {"value": 4.613200}, {"value": 5.067330},
        {"value": 7.955130}, {"value": 8.647370}, {"value": 9.481660}, {"value": 11.426100},
        {"value": 14.448600}, {"value": 16.086200}
      ],
      "kinds": ["q4", "q9", "t6", "eq4", "eq12", "et8"],
      "resolution": {"q4": [16, 16], "q9": [8, 8], "t6": [8, 8], "eq4": [12, 12], "eq12": [8, 8], "et8": [8, 8]},
      "ladders": {
        "q4": {"base": [2, 2], "first": 1, "last": 16}, "q9": {"base": [1, 1], "first": 1, "last": 16},
        "t6": {"base": [1, 1], "first": 1, "last": 16}, "eq4": {"base": [2, 2], "first": 1, "last": 20},
        "eq12": {"base": [1, 1], "first": 1, "last": 16}, "et8": {"base": [1, 1], "first": 1, "last": 16}
      },
      "comparisons": [
        {"nodal": "q9", "edge": "eq12", "threshold": 6.0, "k": 5, "start": 2},
        {"nodal": "q4", "edge": "eq4", "threshold": 6.0, "k": 5, "start": 2},
        {"nodal": "t6", "edge": "et8", "threshold": 5.0, "k": 5, "start": 2}
      ]
    },
    {
      "name": "cracked_circle",
      "domain": {"type": "cracked_circle"},
      "source": "analytic, squared zeros of J_{n/2}'",
      "reference": [
        {"value": 1.358390, "singular": true}, {"value": 3.391122}, {"value": 6.059858},
        {"value": 9.329970}, {"value": 13.195056}, {"value": 14.680392}, {"value": 17.652602},
        {"value": 21.196816}, {"value": 22.681406}, {"value": 28.275806}
      ],
      "kinds": ["q9", "eq4", "eq12"],
      "resolution": {"q9": [16, 16], "eq4": [24, 16], "eq12": [25, 16]},
      "ladders": {
        "q9": {"base": [4, 4], "first": 1, "last": 10},
        "eq4": {"base": [6, 4], "first": 1, "last": 12},
        "eq12": {"base": [5, 4], "first": 1, "last": 10}
      },
      "comparisons": [
        {"nodal": "q9", "edge": "eq4", "threshold": 4.0, "k": 5, "start": 2},
        {"nodal": "q9", "edge": "eq12", "threshold": 4.0, "k": 5, "start": 2}
      ]
    },
    {
      "name": "curved_l",
      "domain": {"type": "curved_l"},
      "source": "high-accuracy reference computation",
      "reference": [
        {"value": 1.818571, "singular": true}, {"value": 3.490576}, {"value": 10.065602},
        {"value": 10.111886}, {"value": 12.435537}
      ],
      "kinds": ["q4", "q9", "t6", "eq4", "eq12", "et8"],
      "resolution": {"q4": [9, 10], "q9": [4, 4], "t6": [4, 4], "eq4": [11, 6], "eq12": [7, 4], "et8": [3, 5]},
      "ladders": {
        "q4": {"base": [1, 1], "first": 1, "last": 24}, "q9": {"base": [1, 1], "first": 1, "last": 16},
        "t6": {"base": [1, 1], "first": 1, "last": 16}, "eq4": {"base": [1, 1], "first": 1, "last": 30},
        "eq12": {"base": [1, 1], "first": 1, "last": 16}, "et8": {"base": [1, 1], "first": 1, "last": 16}
      },
      "comparisons": [
        {"nodal": "q9", "edge": "eq12", "threshold": 2.5, "k": 5, "start": 2},
        {"nodal": "q4", "edge": "eq4", "threshold": 6.5, "k": 5, "start": 2},
        {"nodal": "t6", "edge": "et8", "threshold": 8.0, "k": 5, "start": 2}
      ],
      "distortion": {"q4": [11, 6], "eq4": [11, 6], "q9": [5, 5], "eq12": [5, 5], "t6": [3, 4], "et8": [3, 4]}
    },
    {
      "name": "inhomogeneous_l",
      "domain": {"type": "inhomogeneous_l", "dielectric": "both_arms",
                 "materials": {"1": {"mu_r": 1, "eps_r": 1}, "2": {"mu_r": 1, "eps_r": 5}}},
      "source": "high-accuracy reference computation",
      "reference": [
        {"value": 0.175980, "singular": true}, {"value": 0.398080}, {"value": 0.964840},
        {"value": 0.978740}, {"value": 1.524310}, {"value": 1.765930}, {"value": 2.274180},
        {"value": 2.389530}, {"value": 3.394090}, {"value": 3.397400}, {"value": 3.646940},
        {"value": 3.664270}
      ],
      "kinds": ["q4", "q9", "t6", "eq4", "eq12", "et8"],
      "resolution": {"q4": [16, 16], "q9": [8, 8], "t6": [8, 8], "eq4": [16, 16], "eq12": [8, 8], "et8": [8, 8]},
      "ladders": {
        "q4": {"base": [2, 2], "first": 1, "last": 16}, "q9": {"base": [1, 1], "first": 1, "last": 16},
        "t6": {"base": [1, 1], "first": 1, "last": 16}, "eq4": {"base": [2, 2], "first": 1, "last": 20},
        "eq12": {"base": [1, 1], "first": 1, "last": 16}, "et8": {"base": [1, 1], "first": 1, "last": 16}
      },
      "comparisons": [
        {"nodal": "q9", "edge": "eq12", "threshold": 6.0, "k": 5, "start": 2},
        {"nodal": "q4", "edge": "eq4", "threshold": 10.0, "k": 5, "start": 2},
        {"nodal": "t6", "edge": "et8", "threshold": 5.0, "k": 5, "start": 2}
      ]
    }
  ]
})json";

using json = nlohmann::json;

MeshSize size_of(const json& j) {
  if (!j.is_array() || j.empty() || j.size() > 2) throw InputError("mesh size must be [n] or [n, m]");
  MeshSize s{j[0].get<int>(), j.size() > 1 ? j[1].get<int>() : 0};
  if (s.n < 1 || s.m < 0) throw InputError("mesh size must be positive");
  return s;
}

DomainSpec domain_of(const json& j) {
  DomainSpec d = make_domain(parse_domain(j.at("type").get<std::string>()));
  if (j.contains("dielectric")) d.dielectric = parse_dielectric_region(j["dielectric"].get<std::string>());
  if (j.contains("materials")) {
    d.materials.clear();
    for (const auto& [id, m] : j["materials"].items()) {
      d.materials[std::stoi(id)] = {m.value("mu_r", 1.0), m.value("eps_r", 1.0)};
    }
  }
  return d;
}

BenchmarkCase case_of(const json& j) {
  BenchmarkCase c;
  c.name = j.at("name").get<std::string>();
  c.domain = domain_of(j.at("domain"));
  c.source = j.value("source", "");
  for (const json& r : j.at("reference")) {
    ReferenceValue v{r.at("value").get<double>(), r.value("multiplicity", 1), r.value("singular", false)};
    if (v.multiplicity < 1) throw InputError(c.name + ": multiplicity must be at least 1");
    if (!c.reference.empty() && v.value < c.reference.back().value) {
      throw InputError(c.name + ": reference values must be ascending");
    }
    c.reference.push_back(v);
  }
  for (const json& k : j.at("kinds")) c.kinds.push_back(parse_kind(k.get<std::string>()));
  for (const auto& [k, s] : j.at("resolution").items()) c.resolution[parse_kind(k)] = size_of(s);
  for (const auto& [k, l] : j.at("ladders").items()) {
    Ladder ladder{size_of(l.at("base")), l.value("first", 1), l.value("last", 12)};
    if (ladder.first < 1 || ladder.last < ladder.first) throw InputError(c.name + ": bad ladder range");
    c.ladders[parse_kind(k)] = ladder;
  }
  if (j.contains("comparisons")) {
    for (const json& p : j["comparisons"]) {
      Comparison cmp{parse_kind(p.at("nodal").get<std::string>()),
                     parse_kind(p.at("edge").get<std::string>()), p.at("threshold").get<double>(),
                     p.value("k", 5), p.value("start", 1)};
      if (cmp.threshold <= 0 || cmp.k < 1 || cmp.start < 1) throw InputError(c.name + ": bad comparison");
      c.comparisons.push_back(cmp);
    }
  }
  if (j.contains("distortion")) {
    for (const auto& [k, s] : j["distortion"].items()) c.distortion[parse_kind(k)] = size_of(s);
  }
  return c;
}

}  // namespace

std::vector<ReferenceValue> BenchmarkCase::slots() const {
  std::vector<ReferenceValue> out;
  for (const ReferenceValue& r : reference) {
    for (int i = 0; i < r.multiplicity; ++i) out.push_back(r);
  }
  return out;
}

const BenchmarkCase& Registry::find(std::string_view name) const {
  for (const BenchmarkCase& c : cases) {
    if (c.name == name) return c;
  }
  throw InputError("unknown benchmark case '" + std::string(name) + "'");
}

std::vector<std::string> Registry::names() const {
  std::vector<std::string> out;
  for (const BenchmarkCase& c : cases) out.push_back(c.name);
  return out;
}

std::string_view builtin_registry_json() { return kRegistry; }

Registry parse_registry(std::string_view json_text) {
  Registry reg;
  try {
    const json j = json::parse(json_text);
    reg.version = j.value("version", 1);
    if (reg.version != 1) throw InputError("unsupported registry version " + std::to_string(reg.version));
    for (const json& c : j.at("cases")) reg.cases.push_back(case_of(c));
  } catch (const json::exception& e) {
    throw InputError(std::string("registry: ") + e.what());
  }
  return reg;
}

Registry load_registry(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_registry(ss.str());
}

const Registry& builtin_registry() {
  static const Registry reg = parse_registry(kRegistry);
  return reg;
}

}  // namespace maxwell
