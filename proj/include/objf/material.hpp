// material.hpp
//
// Material labels -> elastic and damping parameters. The shipped table
// holds engineering-handbook defaults; every field can be shadowed by a
// plain-text override file.

#pragma once

#include "objf/types.hpp"

#include <map>
#include <string>
#include <vector>

namespace objf {

struct MaterialRecord {
  std::string name;
  Scalar density = 0;        // kg/m^3
  Scalar youngs_modulus = 0; // Pa
  Scalar poisson_ratio = 0;  // dimensionless, in (0, 0.5)
  Scalar rayleigh_alpha = 0; // 1/s
  Scalar rayleigh_beta = 0;  // s
};

// Throws InputError when a record violates the physical bounds.
void validate_material(const MaterialRecord& rec);

// field name -> value, e.g. overrides["wood"]["youngs_modulus"] = 9e9
using MaterialOverrides = std::map<std::string, std::map<std::string, Scalar>>;

// Parse `material.field = value` lines; '#' starts a comment. Errors
// carry line numbers.
MaterialOverrides parse_overrides(const std::string& text, const std::string& label = "<overrides>");
MaterialOverrides load_overrides(const std::string& path);

// Shipped defaults for the seven supported categories, with override
// fields shadowing defaults field-by-field. A name with no shipped
// default may be introduced entirely through overrides.
MaterialRecord lookup_material(const std::string& name,
                               const MaterialOverrides& overrides = {});

std::vector<std::string> shipped_material_names();

}  // namespace objf
