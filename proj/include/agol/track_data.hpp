// Track encodings and start-track construction.
//
// Encodings live in a versioned JSON file (data/tracks.json, overridable via
// the AGOL_TRACKS environment variable) and are mirrored verbatim in the
// library so binaries run without the file. An encoding fixes the switches,
// the branch count, and three marked branches that carry the parameters
// (x, y, z); all other weights are solved from the switch conditions. For
// the torus and sphere start tracks that solution is unique with nonnegative
// integer coefficients.
#pragma once

#include <array>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "agol/cycles.hpp"
#include "agol/tracksim.hpp"

namespace agol {

struct TrackEncoding {
    // switches[s] = {single, d1, d2}, each entry a (branch, end) pair.
    std::vector<std::array<std::pair<int, int>, 3>> switches;
    int branches = 0;
    std::array<int, 3> marked{};  // branches carrying x, y, z
};

// Labels available in the active data source.
std::vector<std::string> available_tracks();

// Throws EncodingError for unknown labels or malformed data.
TrackEncoding load_encoding(const std::string& label);

// Rational coefficients of (x, y, z) for every branch weight, solved from
// the switch conditions. Throws EncodingError unless the solution is unique.
std::vector<std::array<mpq_class, 3>> weight_coefficients(const TrackEncoding& enc);

// Solves the switch conditions for the unmarked weights. Throws
// EncodingError when the system is not uniquely solvable and
// NonPositiveWeight when a solved weight is not positive.
RibbonTrack build_track(const TrackEncoding& enc, const QuadVec3& xyz);

// Start track for a surface: label "torus" or "sphere".
RibbonTrack build_start_track(Surface surface, const QuadVec3& weights);

// Raw embedded copy of the data file, for consistency checks.
std::string embedded_data();

// Path of the repository data file this build was configured with.
std::string default_data_file();

}  // namespace agol
