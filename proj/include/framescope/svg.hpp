#pragma once

#include <string>

#include "framescope/report.hpp"

namespace framescope {

// Deterministic complex-plane picture of a report: eigenvalues as points,
// each certificate region as a circle or polygon outline, a legend naming
// the regions, and axes scaled so everything fits with a 10% margin.
std::string render_spectrum_svg(const SpectralReport& report);

}
