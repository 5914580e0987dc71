#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "pipeline/arrangement_file.hpp"
#include "pipeline/report.hpp"

namespace logvec {

/// Process exit codes shared by the library and the CLI.
enum ExitCode : int {
  kExitOk = 0,
  kExitError = 1,
  kExitParse = 2,
  kExitHypothesis = 3,
  kExitInconsistent = 4,
};

struct RunOptions {
  std::optional<std::uint32_t> prime;  // overrides the file; Z/p mode is advisory
  std::optional<std::uint64_t> seed;   // overrides the file; default 1
};

struct Analysis {
  Json report;
  int exit_code = kExitOk;
};

/// Validate, singularity profile, D0 and freeness; with an `add` curve,
/// the whole addition pipeline. Parse errors propagate as ParseError;
/// hypothesis failures and failed identities are recorded in the report.
Analysis analyze(const ArrangementFile& file, const RunOptions& opts = {});

/// analyze() with the curve replaced by `curve` (parsed with the file's
/// variables).
Analysis add_curve(ArrangementFile file, const std::string& curve, const RunOptions& opts = {});

struct CurveSearch {
  Json report;
  int exit_code = kExitOk;
  std::optional<std::string> curve;
  std::optional<std::string> augmented_file;
};

/// Forms of degree d through all singular points, and a certified smooth
/// member. On success augmented_file holds the file text with an `add` line.
CurveSearch find_curve(const ArrangementFile& file, int degree, const RunOptions& opts = {});

std::string library_version();

}  // namespace logvec
