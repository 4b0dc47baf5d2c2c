#pragma once

#include "rs/common.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace rs {

// RFC-4180 quoting: fields with commas, quotes or line breaks are wrapped and
// inner quotes doubled
std::string csv_field(const std::string& raw);
void write_csv_row(std::ostream& os, const std::vector<std::string>& fields);

std::string format_double(double v);  // %.12g
std::string format_complex(cplx v);   // a+bi

// accepts "a", "bi", "i", "a+bi", "a-bi" with optional spaces
cplx parse_complex(const std::string& text);

} // namespace rs
