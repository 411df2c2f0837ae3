#include "hyperdyn/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hyperdyn {

std::string ConfigError::str() const {
  std::string out;
  if (line > 0) out += "line " + std::to_string(line) + ": ";
  if (!key.empty()) out += "[" + key + "] ";
  out += message;
  return out;
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) {
    if (tok[0] == '#') break;
    out.push_back(tok);
  }
  return out;
}

bool parse_int(const std::string& s, int& out) {
  try {
    size_t pos = 0;
    out = std::stoi(s, &pos);
    return pos == s.size();
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

ParsedSystem parse_config(const std::string& text) {
  ParsedSystem result;
  auto& errors = result.errors;

  int points = -1;
  bool metric_discrete = false;
  std::vector<std::vector<Rational>> metric_rows;
  std::optional<GroupKind> kind;
  int rank = 0;
  bool abelian = true;
  bool abelian_set = false;
  std::vector<Perm> gens;
  std::vector<int> gen_lines;
  int sft_alphabet = -1;
  std::vector<std::string> forbidden;
  std::vector<std::vector<int>> sft_rows;

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    const std::string key = toks[0] + (toks.size() > 1 ? " " + toks[1] : "");
    auto err = [&](const std::string& msg) { errors.push_back({lineno, key, msg}); };

    if (toks[0] == "space" && toks.size() >= 2) {
      if (toks[1] == "points" && toks.size() == 3) {
        if (!parse_int(toks[2], points) || points < 1) err("invalid point count");
      } else if (toks[1] == "metric" && toks.size() == 3 && toks[2] == "discrete") {
        metric_discrete = true;
      } else if (toks[1] == "row") {
        std::vector<Rational> row;
        bool ok = true;
        for (size_t i = 2; i < toks.size(); ++i) {
          try {
            row.push_back(Rational::parse(toks[i]));
          } catch (const std::exception&) {
            err("invalid rational '" + toks[i] + "'");
            ok = false;
          }
        }
        if (ok) metric_rows.push_back(std::move(row));
      } else {
        err("unrecognized space directive");
      }
    } else if (toks[0] == "group" && toks.size() >= 2) {
      if (toks[1] == "kind") {
        if (toks.size() == 4 && toks[2] == "free_abelian") {
          kind = GroupKind::FreeAbelian;
          if (!parse_int(toks[3], rank) || rank < 0) err("invalid free abelian rank");
        } else if (toks.size() == 3 && toks[2] == "finite") {
          kind = GroupKind::FinitePresentedByImage;
        } else {
          err("group kind must be 'free_abelian <rank>' or 'finite'");
        }
      } else if (toks[1] == "abelian" && toks.size() == 3) {
        abelian_set = true;
        if (toks[2] == "true")
          abelian = true;
        else if (toks[2] == "false")
          abelian = false;
        else
          err("abelian flag must be true or false");
      } else if (toks[1] == "gen") {
        Perm p;
        bool ok = true;
        for (size_t i = 2; i < toks.size(); ++i) {
          int v = 0;
          if (!parse_int(toks[i], v)) {
            err("invalid generator entry '" + toks[i] + "'");
            ok = false;
          }
          p.push_back(v);
        }
        if (ok) {
          gens.push_back(std::move(p));
          gen_lines.push_back(lineno);
        }
      } else {
        err("unrecognized group directive");
      }
    } else if (toks[0] == "sft" && toks.size() >= 2) {
      if (toks[1] == "alphabet" && toks.size() == 3) {
        if (!parse_int(toks[2], sft_alphabet) || sft_alphabet < 1) err("invalid alphabet size");
      } else if (toks[1] == "forbid" && toks.size() == 3) {
        forbidden.push_back(toks[2]);
      } else if (toks[1] == "row") {
        std::vector<int> row;
        bool ok = true;
        for (size_t i = 2; i < toks.size(); ++i) {
          int v = 0;
          if (!parse_int(toks[i], v) || (v != 0 && v != 1)) {
            err("matrix entries must be 0 or 1");
            ok = false;
          }
          row.push_back(v);
        }
        if (ok) sft_rows.push_back(std::move(row));
      } else {
        err("unrecognized sft directive");
      }
    } else {
      errors.push_back({lineno, toks[0], "unknown directive"});
    }
  }

  bool is_sft = sft_alphabet > 0 || !forbidden.empty() || !sft_rows.empty();
  bool is_finite = points > 0 || kind || !gens.empty() || metric_discrete || !metric_rows.empty();
  if (is_sft && is_finite) {
    errors.push_back({0, "", "config mixes finite-system and sft directives"});
    return result;
  }
  if (!is_sft && !is_finite) {
    errors.push_back({0, "", "empty config"});
    return result;
  }

  if (is_sft) {
    if (sft_alphabet < 1) {
      errors.push_back({0, "sft alphabet", "alphabet size required"});
      return result;
    }
    try {
      if (!sft_rows.empty()) {
        result.sft = sft_from_matrix(sft_alphabet, sft_rows);
      } else {
        result.sft = sft_from_forbidden_words(sft_alphabet, forbidden);
      }
    } catch (const std::exception& e) {
      errors.push_back({0, "sft", e.what()});
    }
    return result;
  }

  if (points < 1) {
    errors.push_back({0, "space points", "point count required"});
    return result;
  }
  std::vector<Rational> table;
  if (metric_discrete) {
    FiniteMetricSpace d = FiniteMetricSpace::discrete(points);
    for (int i = 0; i < points; ++i)
      for (int j = 0; j < points; ++j) table.push_back(d.dist(i, j));
  } else {
    if (static_cast<int>(metric_rows.size()) != points) {
      errors.push_back({0, "space row", "expected " + std::to_string(points) + " metric rows, got " +
                                            std::to_string(metric_rows.size())});
      return result;
    }
    for (const auto& row : metric_rows) {
      if (static_cast<int>(row.size()) != points) {
        errors.push_back({0, "space row", "metric row of wrong length"});
        return result;
      }
      for (const Rational& r : row) table.push_back(r);
    }
    for (const auto& v : validate_metric(points, table))
      errors.push_back({0, "space row", "metric axiom violation: " + v.str()});
  }

  GroupSpec group;
  group.kind = kind.value_or(GroupKind::FreeAbelian);
  group.rank = kind && *kind == GroupKind::FreeAbelian ? rank : 0;
  if (!kind) group.rank = static_cast<int>(gens.size());
  group.abelian = abelian_set ? abelian : true;
  group.generators = gens;
  if (gens.empty()) {
    errors.push_back({0, "group gen", "at least one generator required"});
    return result;
  }
  for (size_t i = 0; i < gens.size(); ++i) {
    if (static_cast<int>(gens[i].size()) != points)
      errors.push_back({gen_lines[i], "group gen", "generator acts on wrong point count"});
    else if (!is_permutation(gens[i]))
      errors.push_back({gen_lines[i], "group gen", "not a bijection"});
  }
  if (!errors.empty()) return result;

  ActionSystem sys{FiniteMetricSpace(points, std::move(table)), std::move(group), "config"};
  for (const auto& p : validate_action_system(sys)) errors.push_back({0, "group", p});
  if (errors.empty()) result.finite = std::move(sys);
  return result;
}

std::string serialize_config(const ActionSystem& sys) {
  std::ostringstream out;
  out << "space points " << sys.space.points() << "\n";
  for (int i = 0; i < sys.space.points(); ++i) {
    out << "space row";
    for (int j = 0; j < sys.space.points(); ++j) out << " " << sys.space.dist(i, j).str();
    out << "\n";
  }
  if (sys.group.kind == GroupKind::FreeAbelian)
    out << "group kind free_abelian " << sys.group.rank << "\n";
  else
    out << "group kind finite\n";
  out << "group abelian " << (sys.group.abelian ? "true" : "false") << "\n";
  for (const Perm& g : sys.group.generators) {
    out << "group gen";
    for (int v : g) out << " " << v;
    out << "\n";
  }
  return out.str();
}

std::string serialize_config(const Sft& m) {
  std::ostringstream out;
  out << "sft alphabet " << m.k << "\n";
  for (int i = 0; i < m.k; ++i) {
    out << "sft row";
    for (int j = 0; j < m.k; ++j) out << " " << (m.allowed(i, j) ? 1 : 0);
    out << "\n";
  }
  return out.str();
}

namespace {

/// "name" or "name(p1,p2)" with integer parameters.
bool parse_descriptor(const std::string& s, std::string& name, std::vector<int>& params) {
  auto open = s.find('(');
  if (open == std::string::npos) {
    name = s;
    return !name.empty();
  }
  if (s.back() != ')') return false;
  name = s.substr(0, open);
  std::string body = s.substr(open + 1, s.size() - open - 2);
  if (body.empty()) return !name.empty();
  std::istringstream in(body);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    int v = 0;
    if (!parse_int(tok, v)) return false;
    params.push_back(v);
  }
  return !name.empty();
}

}  // namespace

ParsedSystem parse_system_source(const std::string& source) {
  ParsedSystem result;
  if (source.rfind("builtin:", 0) == 0) {
    std::string desc = source.substr(8);
    std::string name;
    std::vector<int> params;
    if (!parse_descriptor(desc, name, params)) {
      result.errors.push_back({0, "system", "malformed builtin descriptor '" + desc + "'"});
      return result;
    }
    try {
      if (name == "full_shift") {
        result.sft = builtin_full_shift(params.size() == 1 ? params[0] : 2);
      } else if (name == "golden_mean") {
        result.sft = builtin_golden_mean();
      } else if (name == "swap_sft") {
        result.sft = builtin_swap_sft();
      } else {
        auto family = builtin_family(name, params);
        if (family.size() != 1) {
          result.errors.push_back(
              {0, "system", "builtin '" + name + "' expands to a family; use it in a suite file"});
          return result;
        }
        result.finite = std::move(family[0]);
      }
    } catch (const std::exception& e) {
      result.errors.push_back({0, "system", e.what()});
    }
    return result;
  }
  std::ifstream file(source);
  if (!file) {
    result.errors.push_back({0, "system", "cannot open config file '" + source + "'"});
    return result;
  }
  std::ostringstream text;
  text << file.rdbuf();
  return parse_config(text.str());
}

ParsedSuite parse_suite(const std::string& text, const Bounds& defaults) {
  ParsedSuite out;
  out.config.bounds = defaults;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    auto err = [&](const std::string& msg) { out.errors.push_back({lineno, toks[0], msg}); };
    if (toks[0] == "family") {
      if (toks.size() >= 3 && toks[1] == "sft") {
        try {
          SuiteFamily fam;
          fam.label = toks[2];
          if (toks[2] == "full_shift")
            fam.sft = builtin_full_shift(toks.size() > 3 ? std::stoi(toks[3]) : 2);
          else if (toks[2] == "golden_mean")
            fam.sft = builtin_golden_mean();
          else if (toks[2] == "swap_sft")
            fam.sft = builtin_swap_sft();
          else {
            err("unknown sft family '" + toks[2] + "'");
            continue;
          }
          out.config.families.push_back(std::move(fam));
        } catch (const std::exception& e) {
          err(e.what());
        }
      } else if (toks.size() >= 2) {
        std::vector<int> params;
        bool ok = true;
        for (size_t i = 2; i < toks.size(); ++i) {
          int v = 0;
          if (!parse_int(toks[i], v)) {
            err("invalid parameter '" + toks[i] + "'");
            ok = false;
          }
          params.push_back(v);
        }
        if (!ok) continue;
        try {
          SuiteFamily fam;
          fam.label = toks[1];
          fam.finite = builtin_family(toks[1], params);
          out.config.families.push_back(std::move(fam));
        } catch (const std::exception& e) {
          err(e.what());
        }
      } else {
        err("family needs a name");
      }
    } else if (toks[0] == "theorem" && toks.size() >= 2) {
      for (size_t i = 1; i < toks.size(); ++i) out.config.theorem_ids.push_back(toks[i]);
    } else if (toks[0] == "require_substantive" && toks.size() >= 2) {
      for (size_t i = 1; i < toks.size(); ++i) out.config.require_substantive.push_back(toks[i]);
    } else if (toks[0] == "radius" && toks.size() == 2) {
      if (!parse_int(toks[1], out.config.bounds.word_radius) || out.config.bounds.word_radius < 1)
        err("radius must be a positive integer");
    } else if (toks[0] == "cyl_len" && toks.size() == 2) {
      if (!parse_int(toks[1], out.config.bounds.cylinder_length) ||
          out.config.bounds.cylinder_length < 1)
        err("cyl_len must be a positive integer");
    } else if (toks[0] == "cap" && toks.size() == 2) {
      if (!parse_int(toks[1], out.config.bounds.hyperspace_cap) ||
          out.config.bounds.hyperspace_cap < 1)
        err("cap must be a positive integer");
    } else {
      out.errors.push_back({lineno, toks[0], "unknown suite directive"});
    }
  }
  if (out.config.families.empty() && out.errors.empty() && out.config.theorem_ids.empty())
    out.errors.push_back({0, "", "empty suite"});
  return out;
}

}  // namespace hyperdyn
