#pragma once

#include "gdlca/gd_bialgebra.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace gdlca {

/// Line-oriented algebra-definition format, version 1:
///
///   gdlca-algebra 1
///   name r_alpha_beta(3,1)
///   dim 2                      (optional; must match the basis)
///   basis L W
///   novikov L L : L=1
///   novikov L W : W=2
///   lie L W : W=-1             (only pairs with L before W in the basis)
///   meta source catalog
///
/// `#` starts a comment. Omitted pairs are zero. Coefficients are rational literals
/// `-?digits(/digits)?`.
struct AlgebraFile {
  struct Entry {
    std::string i, j;
    std::vector<std::pair<std::string, Rational>> value;
  };

  std::string name;
  std::vector<std::string> basis;
  std::vector<Entry> novikov;
  std::vector<Entry> lie;
  std::map<std::string, std::string> meta;
};

constexpr int kAlgebraFileVersion = 1;

/// Syntax-level parse. Throws ParseError with line and field on any malformed line, an
/// undeclared basis name, a duplicate (i,j) entry or a lie entry with i not before j.
AlgebraFile parse_algebra_document(std::string_view text);

/// Builds the algebra described by a document. Checked validation raises AxiomError on
/// axiom violations.
GDBialgebra to_bialgebra(const AlgebraFile& file, Validation validation = Validation::Checked);

/// parse_algebra_document followed by to_bialgebra.
GDBialgebra parse_algebra_file(std::string_view text, Validation validation = Validation::Checked);

AlgebraFile to_document(const GDBialgebra& a, std::map<std::string, std::string> meta = {});
std::string emit_algebra_file(const AlgebraFile& file);
std::string emit_algebra_file(const GDBialgebra& a, std::map<std::string, std::string> meta = {});

}  // namespace gdlca
