#pragma once

#include "gdlca/gd_bialgebra.hpp"

#include <map>
#include <string>
#include <vector>

namespace gdlca {

using CatalogParams = std::map<std::string, std::string>;

struct CatalogInfo {
  std::string name;
  std::string params;  // e.g. "alpha=<rational>,beta=<rational>"
  std::string summary;
};

/// Every built-in entry, in a fixed order.
const std::vector<CatalogInfo>& catalog_entries();

/// Builds a validated algebra. Parameters:
///   vir
///   current          g=sl2 | g=abelian(N)
///   vir_current      g=sl2 | g=abelian(N)
///   r_alpha_beta     alpha=<rational>, beta=<rational>
///   loop_vir_cyclic  m=<positive integer>
///   loop_hv_cyclic   m=<positive integer>
/// Throws InputError on an unknown name, a missing or unknown parameter, or a malformed value.
GDBialgebra catalog_build(const std::string& name, const CatalogParams& params = {});

/// Parses "NAME" or "NAME:k=v,k=v" and builds it.
GDBialgebra catalog_build_spec(const std::string& spec);

/// Canonical spec string for an entry, e.g. "r_alpha_beta:alpha=2,beta=0".
std::string catalog_spec(const std::string& name, const CatalogParams& params);

}  // namespace gdlca
