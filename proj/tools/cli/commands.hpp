#pragma once

#include <iosfwd>

#include "config.hpp"
#include "validation.hpp"

namespace canonphase::cli {

int run_curve(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_nopt(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_dist(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_validate(const RunConfig& cfg, std::ostream& out, std::ostream& err,
                 const oracle::ValidationOptions& base = {});

/// Checks cfg and dispatches on cfg.command. Usage errors map to kExitUsage.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses argv into a RunConfig and runs it.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace canonphase::cli
