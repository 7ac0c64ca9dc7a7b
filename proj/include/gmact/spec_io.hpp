#pragma once
#include "gmact/graded.hpp"

#include <optional>
#include <string>

namespace gmact::cli {

/// A graded-algebra input file: weighted variables, relation strings in the
/// polynomial grammar, an optional rational point and an optional smoothness
/// assertion (the user's claim, never inferred).
struct AlgebraSpec {
    action::GradedAlgebra algebra;
    std::optional<action::RationalPoint> point;
    std::optional<bool> smooth;
};

AlgebraSpec load_spec(const std::string& path);
AlgebraSpec parse_spec_text(const std::string& json_text);

} // namespace gmact::cli
