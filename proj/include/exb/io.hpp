#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "exb/applications.hpp"
#include "exb/density.hpp"

namespace exb::io {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Density CSV: header "x,rho", then uniformly spaced increasing cell
// centers with nonnegative values. Cell width is inferred from the
// spacing, so at least two rows are required.
DensityProfile read_density_csv(const std::string& text);
DensityProfile read_density_csv_file(const std::string& path);

// 1D potential CSV: header "x,V", uniformly spaced increasing samples.
struct PotentialGrid1D {
    std::vector<double> x;
    std::vector<double> V;
    double dx = 0.0;
};

// 2D potential CSV: header "x,y,V", a complete row-major rectangular
// lattice (x varies fastest).
struct PotentialGrid2D {
    size_t nx = 0, ny = 0;
    double dA = 0.0;
    std::vector<double> V;  // row-major
};

struct PotentialData {
    bool two_d = false;
    PotentialGrid1D grid1;
    PotentialGrid2D grid2;
};

PotentialData read_potential_csv(const std::string& text);
PotentialData read_potential_csv_file(const std::string& path);

// Interval CSV for the confinement solver: header "lo,hi,V".
std::vector<ConfinedInterval> read_intervals_csv(const std::string& text);
std::vector<ConfinedInterval> read_intervals_csv_file(const std::string& path);

// Whole-file read; ParseError on missing or unreadable files.
std::string read_file(const std::string& path);

}  // namespace exb::io
