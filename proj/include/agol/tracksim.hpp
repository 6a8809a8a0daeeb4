// Combinatorial measured train tracks and maximal splittings.
//
// A track is a trivalent ribbon graph: each switch has one single-side slot
// and two double-side slots, listed in counterclockwise order (single, d1,
// d2). Branch b owns half-edges 2b and 2b+1; every half-edge sits in exactly
// one slot. The switch condition says the single-side weight equals the sum
// of the two double-side weights. A branch is large when both its half-edges
// occupy single slots. maximal_split splits every large branch of maximal
// weight exactly once and classifies the step L, R, or M; cycle detection is
// measured ribbon-graph isomorphism up to a global weight rescaling.
#pragma once

#include <array>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "agol/cycles.hpp"
#include "agol/quad.hpp"

namespace agol {

using HalfEdge = int;  // branch * 2 + end

struct RibbonTrack {
    // switches[s] = {single, d1, d2} half-edges, counterclockwise.
    std::vector<std::array<HalfEdge, 3>> switches;
    std::vector<QuadExt> weights;  // per branch

    int branch_count() const { return static_cast<int>(weights.size()); }
    int switch_count() const { return static_cast<int>(switches.size()); }
    const QuadExt& weight(int branch) const { return weights[branch]; }

    bool operator==(const RibbonTrack& o) const;
};

struct StepRecord {
    long step_index;
    SplitType type;
    long splitting_number;  // number of large branches carrying the maximum
    QuadExt max_weight;
};

struct ShapeInvariants {
    long switches, branches, boundary_walks, genus;
    bool operator==(const ShapeInvariants& o) const = default;
};

// Boundary walks and genus of the fattened surface carrying the track.
ShapeInvariants shape_invariants(const RibbonTrack& t);

// Structural soundness, switch conditions, positivity, connectivity.
// Throws EncodingError or NonPositiveWeight.
void check_track(const RibbonTrack& t);

std::vector<int> large_branches(const RibbonTrack& t);

// Splits all argmax large branches; throws DegenerateSplit on a local tie.
std::pair<RibbonTrack, StepRecord> maximal_split(const RibbonTrack& t, long step_index = 0);

struct RunResult {
    // snapshots[i] is the state after step i; steps[i] describes step i.
    std::vector<std::shared_ptr<const RibbonTrack>> snapshots;
    std::vector<StepRecord> steps;
};
RunResult run(const RibbonTrack& start, long max_steps);

// Orientation-preserving ribbon-graph isomorphism: switch slots map
// identically (cyclic order is part of the data).
struct TrackMap {
    std::vector<int> switch_map;       // t1 switch -> t2 switch
    std::vector<HalfEdge> half_map;    // t1 half-edge -> t2 half-edge
};
std::vector<TrackMap> shape_isomorphisms(const RibbonTrack& t1, const RibbonTrack& t2);

// Common ratio weight_t2(phi(b)) / weight_t1(b) over some shape isomorphism,
// or nullopt. The ratio is independent of the isomorphism found.
bool iso_shape(const RibbonTrack& t1, const RibbonTrack& t2);
std::optional<QuadExt> iso_measured(const RibbonTrack& t1, const RibbonTrack& t2);

struct CycleInfo {
    long m;         // period length
    QuadExt scale;  // per-period weight factor, the inverse dilatation
};
// Smallest m <= max_steps with the step-m track isomorphic to the start up to
// scale. Throws NoCycleFound.
CycleInfo find_cycle(const RibbonTrack& start, long max_steps);

// Pure relabeling: branch b becomes branch_perm[b] (with its half-edges
// swapped when flip_ends[b]), switch s becomes switch_perm[s].
RibbonTrack relabel(const RibbonTrack& t, const std::vector<int>& branch_perm,
                    const std::vector<bool>& flip_ends, const std::vector<int>& switch_perm);

}  // namespace agol
