#include "objf/material.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace objf {

namespace {

// Handbook-style defaults. These are this tool's own calibration, chosen
// to give plausible impact sounds at household-object scale; they are not
// measurements of any specific specimen.
const std::map<std::string, MaterialRecord>& default_table() {
  static const std::map<std::string, MaterialRecord> table = [] {
    std::map<std::string, MaterialRecord> t;
    auto put = [&t](const char* name, Scalar rho, Scalar e, Scalar nu, Scalar alpha,
                    Scalar beta) {
      t[name] = MaterialRecord{name, rho, e, nu, alpha, beta};
    };
    put("ceramic", 2700.0, 72e9, 0.19, 6.0, 1e-7);
    put("glass", 2500.0, 68e9, 0.22, 1.0, 1e-7);
    put("wood", 650.0, 11e9, 0.30, 30.0, 3e-6);
    put("plastic", 1200.0, 2.4e9, 0.37, 40.0, 1e-5);
    put("iron", 7200.0, 110e9, 0.26, 5.0, 2e-7);
    put("polycarbonate", 1200.0, 2.3e9, 0.37, 40.0, 2e-5);
    put("steel", 7850.0, 200e9, 0.29, 5.0, 3e-8);
    for (const auto& [name, rec] : t) validate_material(rec);  // startup self-check
    return t;
  }();
  return table;
}

bool parse_value(std::string_view tok, Scalar& out) {
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

std::string_view trim(std::string_view s) {
  size_t b = s.find_first_not_of(" \t\r");
  size_t e = s.find_last_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  return s.substr(b, e - b + 1);
}

}  // namespace

void validate_material(const MaterialRecord& rec) {
  auto bad = [&rec](const std::string& what) {
    throw InputError("material '" + rec.name + "': " + what);
  };
  if (!(rec.density > 0)) bad("density must be positive");
  if (!(rec.youngs_modulus > 0)) bad("Young's modulus must be positive");
  if (!(rec.poisson_ratio > 0 && rec.poisson_ratio < 0.5))
    bad("Poisson ratio must lie in (0, 0.5)");
  if (!(rec.rayleigh_alpha >= 0)) bad("Rayleigh alpha must be non-negative");
  if (!(rec.rayleigh_beta >= 0)) bad("Rayleigh beta must be non-negative");
}

MaterialOverrides parse_overrides(const std::string& text, const std::string& label) {
  MaterialOverrides out;
  std::istringstream in(text);
  std::string line;
  Index line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view s = line;
    const size_t hash = s.find('#');
    if (hash != std::string_view::npos) s = s.substr(0, hash);
    s = trim(s);
    if (s.empty()) continue;

    std::ostringstream where;
    where << label << ":" << line_no << ": ";
    const size_t eq = s.find('=');
    if (eq == std::string_view::npos)
      throw InputError(where.str() + "expected 'material.field = value'");
    std::string_view key = trim(s.substr(0, eq));
    std::string_view val = trim(s.substr(eq + 1));
    const size_t dot = key.find('.');
    if (dot == std::string_view::npos || dot == 0 || dot + 1 == key.size())
      throw InputError(where.str() + "key must look like 'material.field'");
    Scalar value = 0;
    if (!parse_value(val, value))
      throw InputError(where.str() + "malformed numeric value '" + std::string(val) + "'");
    out[std::string(key.substr(0, dot))][std::string(key.substr(dot + 1))] = value;
  }
  return out;
}

MaterialOverrides load_overrides(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot open override file '" + path + "'");
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_overrides(buf.str(), path);
}

MaterialRecord lookup_material(const std::string& name, const MaterialOverrides& overrides) {
  const auto& table = default_table();
  const auto base = table.find(name);
  const auto ovr = overrides.find(name);
  if (base == table.end() && ovr == overrides.end())
    throw InputError("unknown material '" + name + "'");

  MaterialRecord rec;
  rec.name = name;
  if (base != table.end()) rec = base->second;
  if (ovr != overrides.end()) {
    for (const auto& [field, value] : ovr->second) {
      if (field == "density")
        rec.density = value;
      else if (field == "youngs_modulus")
        rec.youngs_modulus = value;
      else if (field == "poisson_ratio")
        rec.poisson_ratio = value;
      else if (field == "rayleigh_alpha")
        rec.rayleigh_alpha = value;
      else if (field == "rayleigh_beta")
        rec.rayleigh_beta = value;
      else
        throw InputError("unknown material field '" + field + "' for '" + name + "'");
    }
  }
  validate_material(rec);
  return rec;
}

std::vector<std::string> shipped_material_names() {
  std::vector<std::string> names;
  for (const auto& [name, rec] : default_table()) names.push_back(name);
  return names;
}

}  // namespace objf
