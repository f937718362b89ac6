#pragma once

#include <iosfwd>

#include "votelab/manifest.hpp"

namespace votelab {

/// Executes a manifest. Results go to manifest.out (plus the full-precision
/// companion for Table-1 CSV) or, when no path is set, to `console`.
void run_manifest(const RunManifest& manifest, std::ostream& console);

}  // namespace votelab
