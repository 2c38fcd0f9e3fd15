#pragma once

#include "gdlca/algebra_file.hpp"
#include "gdlca/catalog.hpp"
#include "gdlca/conformal.hpp"
#include "gdlca/derivations.hpp"
#include "gdlca/error.hpp"
#include "gdlca/extensions.hpp"
#include "gdlca/gd_bialgebra.hpp"
#include "gdlca/matrix.hpp"
#include "gdlca/poly.hpp"
#include "gdlca/rational.hpp"
