#pragma once

#include <istream>
#include <ostream>
#include <string>

#include "pfk/rational.hpp"
#include "pfk/series.hpp"

namespace pfk {

// Series text format: optional first line "offset p/q" (default 0), then one
// coefficient per line as a canonical reduced fraction.  '#' starts a
// comment.  Emission is canonical: the offset line appears only when the
// offset is nonzero, coefficients are mpq-canonical, one per line, no extra
// whitespace.

void write_series(std::ostream& os, const Series<Rat>& s);
Series<Rat> read_series(std::istream& is);

std::string series_to_string(const Series<Rat>& s);
Series<Rat> series_from_string(const std::string& text);

} // namespace pfk
