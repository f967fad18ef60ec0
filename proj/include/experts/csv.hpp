#pragma once

#include <string>
#include <vector>

#include "experts/harness.hpp"

namespace experts {

inline constexpr const char* kCurveCsvHeader =
    "t,mean_regret,stderr,replications,learner,mechanism,N,N0,seed";

/// One row per (curve, checkpoint), schema kCurveCsvHeader. Floating-point
/// fields are printed with 17 significant digits so parsing them back is
/// lossless.
std::string curves_to_csv(const std::vector<ExpectedRegretCurve>& curves);

/// Inverse of curves_to_csv; consecutive rows with the same
/// (learner, mechanism, N, N0, seed, replications) key form one curve.
std::vector<ExpectedRegretCurve> parse_curves_csv(const std::string& text);

std::vector<ExpectedRegretCurve> read_curves_csv(const std::string& path);

/// Writes content to path via a temporary file in the same directory followed
/// by an atomic rename, so failed runs never leave partial output.
void write_file_atomic(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);

}  // namespace experts
