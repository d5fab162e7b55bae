#pragma once

#include <stdexcept>

namespace exb {

// The requested bound is mathematically sound but its hypotheses fail for
// these inputs (local mass below 2, alpha below 1, vanishing exclusion
// constant, ...). Distinct from bad input syntax or programming errors.
struct InapplicableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace exb
