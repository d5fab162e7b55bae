#pragma once

#include <map>
#include <string>

#include "exb/exclusion.hpp"

namespace exb {

// A computed lower bound plus everything needed to reproduce it: the
// statistics it applies to, every registry constant consumed, and the
// intermediate quantities (integrals, exclusion strengths, branch flags).
struct BoundReport {
    std::string kind;
    StatisticsParams statistics;
    double value = 0.0;
    std::map<std::string, double> constants_used;
    std::map<std::string, double> diagnostics;
};

}  // namespace exb
