#pragma once

#include "rs/common.hpp"
#include "rs/iwasawa.hpp"
#include "rs/matrix.hpp"

namespace rs {

// Squared norm of the wedge of the bottom i+1 rows: the sum of squares of all
// (i+1)x(i+1) minors drawn from those rows.  For coordinates the represented
// matrix is used directly.
double wedge_norm_sq(const Mat<double>& m, int i);
double wedge_norm_sq(const IwasawaCoords& z, int i);
bigrat wedge_norm_sq_exact(const Mat<bigrat>& m, int i);

// closed form the wedge norm collapses to in coordinates:
// product over l = 1..i of y_l^(i+1-l), squared
double wedge_norm_closed_form(const IwasawaCoords& z, int i);
std::vector<bigrat> wedge_closed_form_exponents(int k, int i);

// balance invariant on GL(2n): product over i <= n of y_i^i times
// product over i > n of y_i^(2n-i)
double height(const IwasawaCoords& z);

// same value computed through the wedge of the bottom n rows, as a cross route
double height_via_wedge(const IwasawaCoords& z);

} // namespace rs
