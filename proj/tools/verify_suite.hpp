#pragma once

#include "betticone/field.hpp"

#include <string>
#include <vector>

namespace betticone::cli {

struct CheckResult {
    std::string name;
    std::string scope;
    bool passed = false;
    /// First failure, naming the offending graph in edge_list form.
    std::string detail;
    double seconds = 0.0;
};

/// Every module invariant at scales derived from max_n (at most 7).
std::vector<CheckResult> run_verify_suite(int max_n, bool dedupe, unsigned workers,
                                          const FieldSpec& field);

}  // namespace betticone::cli
