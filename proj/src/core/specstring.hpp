#pragma once
#include <string>

#include "core/lattice.hpp"
#include "core/windows.hpp"

namespace gaborlab {

/// Window spec strings: "gauss:gamma=<v>", "hermite:n=<n>,gamma=<v>",
/// "oddbump", "file:<path>" (two-column CSV t,value resampled to the grid).
/// Throws ParseError on malformed input.
SampledWindow make_window(const std::string& spec, const TimeGrid& grid);

/// Lattice spec strings: "sq:delta=<v>", "sep:alpha=<a>,beta=<b>",
/// "symp:delta=<v>,S=<a,b,c,d>" (row-major 2x2, validated symplectic).
Lattice make_lattice(const std::string& spec);

} // namespace gaborlab
