#include "nessprobe/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <map>
#include <set>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "nessprobe/errors.hpp"

namespace nessprobe {

namespace {

namespace pt = boost::property_tree;

const std::map<std::string, std::set<std::string>> kThermalKeys = {
    {"system", {"delta", "lambda", "gamma"}},
    {"bath", {"beta1_omega1", "beta2_omega1", "n1", "n2"}},
    {"perturbation", {"epsilon", "phi"}},
    {"grid", {"t_max", "n_points"}},
    {"output", {"name", "observable", "limit"}},
};

const std::map<std::string, std::set<std::string>> kSqueezedKeys = {
    {"system", {"delta", "lambda", "gamma"}},
    {"bath", {"beta_omega1", "n", "r", "theta"}},
    {"perturbation", {"phi", "eta", "eta_imag"}},
    {"grid", {"t_max", "n_points"}},
    {"output", {"name", "limit"}},
};

using LineIndex = std::map<std::pair<std::string, std::string>, int>;

// Line of each "key = value" entry, keyed by (section, key). Sections are "" at top level.
LineIndex index_lines(const std::string& text) {
  LineIndex out;
  std::istringstream in(text);
  std::string line, section;
  const auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  for (int n = 1; std::getline(in, line); ++n) {
    line = trim(line);
    if (line.empty() || line[0] == ';' || line[0] == '#') continue;
    if (line.front() == '[' && line.back() == ']') {
      section = trim(line.substr(1, line.size() - 2));
      out.emplace(std::pair{section, std::string()}, n);
    } else if (const auto eq = line.find('='); eq != std::string::npos) {
      out.emplace(std::pair{section, trim(line.substr(0, eq))}, n);
    }
  }
  return out;
}

class Reader {
 public:
  Reader(const pt::ptree& tree, std::string source, LineIndex lines)
      : tree_(tree), source_(std::move(source)), lines_(std::move(lines)) {}

  [[noreturn]] void fail(const std::string& what) const {
    throw ConfigError(source_ + ": " + what);
  }

  // Points at the offending entry when it exists in the file.
  [[noreturn]] void fail_at(const std::string& section, const std::string& key,
                            const std::string& what) const {
    const auto it = lines_.find({section, key});
    if (it == lines_.end()) fail(what);
    throw ConfigError(source_ + ":" + std::to_string(it->second) + ": " + what);
  }

  std::optional<std::string> text(const std::string& section, const std::string& key) const {
    const auto sec = tree_.get_child_optional(section);
    if (!sec) return std::nullopt;
    const auto value = sec->get_optional<std::string>(pt::ptree::path_type(key, '\0'));
    if (!value) return std::nullopt;
    return *value;
  }

  std::optional<double> number(const std::string& section, const std::string& key) const {
    const auto raw = text(section, key);
    if (!raw) return std::nullopt;
    double value = 0.0;
    const char* first = raw->data();
    const char* last = first + raw->size();
    const auto [end, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || end != last || !std::isfinite(value)) {
      fail_at(section, key, "[" + section + "] " + key + ": expected a finite number, got '" + *raw + "'");
    }
    return value;
  }

  double required(const std::string& section, const std::string& key) const {
    const auto value = number(section, key);
    if (!value) fail("[" + section + "] " + key + " is required");
    return *value;
  }

 private:
  const pt::ptree& tree_;
  std::string source_;
  LineIndex lines_;
};

void check_layout(const pt::ptree& tree, const Reader& reader,
                  const std::map<std::string, std::set<std::string>>& allowed) {
  for (const auto& [name, node] : tree) {
    if (name == "scenario") continue;
    if (node.empty()) reader.fail_at("", name, "top-level key '" + name + "' is not recognised");
    const auto it = allowed.find(name);
    if (it == allowed.end()) reader.fail_at(name, "", "unknown section [" + name + "]");
    for (const auto& [key, value] : node) {
      if (!it->second.count(key)) {
        reader.fail_at(name, key, "unknown key '" + key + "' in [" + name + "]");
      }
    }
  }
}

Observable parse_observable(const std::string& text, const Reader& reader) {
  if (text == "energy1") return Observable::energy1;
  if (text == "energy2") return Observable::energy2;
  reader.fail_at("output", "observable", "[output] observable must be energy1 or energy2, got '" + text + "'");
}

}  // namespace

Limit parse_limit(const std::string& text) {
  if (text == "none") return Limit::none;
  if (text == "equilibrium") return Limit::equilibrium;
  if (text == "unitary") return Limit::unitary;
  if (text == "infinite") return Limit::infinite;
  throw ConfigError("limit must be one of none, equilibrium, unitary, infinite; got '" + text +
                    "'");
}

std::string to_string(Limit limit) {
  switch (limit) {
    case Limit::equilibrium: return "equilibrium";
    case Limit::unitary: return "unitary";
    case Limit::infinite: return "infinite";
    case Limit::none: break;
  }
  return "none";
}

std::string to_string(ScenarioKind kind) {
  return kind == ScenarioKind::thermal ? "thermal" : "squeezed";
}

std::string to_string(Observable observable) {
  return observable == Observable::energy1 ? "energy1" : "energy2";
}

ScenarioConfig parse_config(std::istream& in, const std::string& source) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::istringstream body(text);
  pt::ptree tree;
  try {
    pt::read_ini(body, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(source + ":" + std::to_string(e.line()) + ": " + e.message());
  }
  const Reader reader(tree, source, index_lines(text));

  ScenarioConfig cfg;
  const std::string kind = tree.get<std::string>("scenario", "thermal");
  if (kind == "thermal") {
    cfg.kind = ScenarioKind::thermal;
  } else if (kind == "squeezed") {
    cfg.kind = ScenarioKind::squeezed;
  } else {
    reader.fail_at("", "scenario", "scenario must be thermal or squeezed, got '" + kind + "'");
  }
  check_layout(tree, reader, cfg.kind == ScenarioKind::thermal ? kThermalKeys : kSqueezedKeys);

  cfg.system.delta = reader.number("system", "delta").value_or(0.0);
  cfg.system.lambda = reader.number("system", "lambda").value_or(0.0);
  cfg.system.gamma = reader.required("system", "gamma");
  try {
    cfg.system.validate();
  } catch (const Error& e) {
    reader.fail_at("system", "", std::string("[system] ") + e.what());
  }

  if (cfg.kind == ScenarioKind::thermal) {
    const auto b1 = reader.number("bath", "beta1_omega1");
    const auto b2 = reader.number("bath", "beta2_omega1");
    const auto n1 = reader.number("bath", "n1");
    const auto n2 = reader.number("bath", "n2");
    if ((b1 || b2) && (n1 || n2)) reader.fail("[bath] give either beta1/beta2 or n1/n2, not both");
    try {
      if (b1 || b2) {
        if (!b1 || !b2) reader.fail("[bath] beta1_omega1 and beta2_omega1 go together");
        cfg.thermal = ThermalBathPair::from_inverse_temperatures(*b1, *b2, cfg.system);
      } else {
        if (!n1 || !n2) reader.fail("[bath] n1 and n2 are required");
        cfg.thermal = {*n1, *n2};
        cfg.thermal.validate();
      }
    } catch (const Error& e) {
      reader.fail(std::string("[bath] ") + e.what());
    }
    cfg.epsilon = reader.number("perturbation", "epsilon").value_or(0.0);
    cfg.phi = reader.number("perturbation", "phi").value_or(0.0);
    if (const auto obs = reader.text("output", "observable")) {
      cfg.observable = parse_observable(*obs, reader);
    }
  } else {
    const auto beta = reader.number("bath", "beta_omega1");
    const auto n = reader.number("bath", "n");
    if (beta && n) reader.fail("[bath] give either beta_omega1 or n, not both");
    if (!beta && !n) reader.fail("[bath] beta_omega1 or n is required");
    const double r = reader.number("bath", "r").value_or(0.0);
    const double theta = reader.number("bath", "theta").value_or(0.0);
    try {
      cfg.squeezed = beta ? SqueezedBath::from_inverse_temperature(*beta, r, theta)
                          : SqueezedBath{*n, r, theta};
      cfg.squeezed.validate();
    } catch (const Error& e) {
      reader.fail(std::string("[bath] ") + e.what());
    }
    const auto phi = reader.number("perturbation", "phi");
    const auto eta_re = reader.number("perturbation", "eta");
    const auto eta_im = reader.number("perturbation", "eta_imag");
    if (phi && (eta_re || eta_im)) {
      reader.fail("[perturbation] phi and eta describe the same quench; give one of them");
    }
    if (eta_re || eta_im) {
      cfg.eta = cplx(eta_re.value_or(0.0), eta_im.value_or(0.0));
      try {
        cfg.phi = phi_from_eta(*cfg.eta, r, theta);
      } catch (const Error& e) {
        reader.fail(std::string("[perturbation] ") + e.what());
      }
    } else {
      cfg.phi = phi.value_or(0.0);
      cfg.eta = eta_from_phi(cfg.phi, r, theta);
    }
    cfg.observable = Observable::energy2;
  }

  if (const auto t_max = reader.number("grid", "t_max")) {
    if (!(*t_max > 0.0)) reader.fail_at("grid", "t_max", "[grid] t_max must be positive");
    cfg.t_max = *t_max;
  } else {
    if (!(cfg.system.gamma > 0.0)) reader.fail("[grid] t_max is required when gamma = 0");
    cfg.t_max = kDefaultGridSpan / cfg.system.gamma;
  }
  if (const auto points = reader.number("grid", "n_points")) {
    if (*points < 2.0 || *points != std::floor(*points) || *points > 1e7) {
      reader.fail_at("grid", "n_points", "[grid] n_points must be an integer >= 2");
    }
    cfg.n_points = static_cast<int>(*points);
  }

  if (const auto name = reader.text("output", "name")) {
    if (name->empty() || name->find_first_of("/\\") != std::string::npos) {
      reader.fail_at("output", "name", "[output] name must be a plain file stem");
    }
    cfg.name = *name;
  }
  if (const auto limit = reader.text("output", "limit")) {
    try {
      cfg.limit = parse_limit(*limit);
    } catch (const ConfigError& e) {
      reader.fail_at("output", "limit", std::string("[output] ") + e.what());
    }
  }
  return cfg;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path + ": cannot open file");
  return parse_config(in, path);
}

}  // namespace nessprobe
