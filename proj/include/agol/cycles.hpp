// Closed-form splitting cycle descriptors for the two surface families.
//
// torus_cycle and sphere_cycle emit, for an admissible word, the cycle's
// split-type word, its length, the total splitting number, the dilatation and
// normalized eigenvector, and the label of the start track. Per-step splitting
// numbers are not assigned here; the simulator measures them and the totals
// are checked against N.
#pragma once

#include <array>
#include <string>
#include <vector>

#include "agol/quad.hpp"
#include "agol/words.hpp"

namespace agol {

enum class Surface { Torus, Sphere };
enum class SplitType { L, R, M };

struct SplitWord {
    std::vector<SplitType> steps;

    std::size_t size() const { return steps.size(); }
    bool operator==(const SplitWord& o) const { return steps == o.steps; }
    std::string to_string() const;  // e.g. "RLL", "MRLLL"
};

enum class BlockType { A, APrime, B };
// A iff p' = 0, A' iff p = 0, B when both positive.
BlockType block_type(const std::array<long, 3>& block);

struct CycleDescriptor {
    Surface surface;
    ParamWord word;
    long length;  // number of maximal splittings in one period
    long total;   // sum of splitting numbers over the period
    SplitWord split_word;
    QuadExt dilatation;
    QuadVec3 eigenvector;
    std::string start_track_label;
};

CycleDescriptor torus_cycle(const ParamWord& p);
CycleDescriptor sphere_cycle(const ParamWord& p);
CycleDescriptor cycle(Surface surface, const ParamWord& p);

// Primitive period of the measured track orbit. Generically this is the full
// cycle (m = length, scale = 1/dilatation), but a word fixed by a rotation,
// or by the flip composed with a rotation, returns early: m counts the steps
// of the first r blocks, where r is the smallest positive rotation offset
// realizing the symmetry, and the scale is the rectangle width after those r
// blocks.
struct PrimitiveCycle {
    long m;
    QuadExt scale;
};
PrimitiveCycle primitive_cycle(Surface surface, const ParamWord& p);

// N is additive under concatenation on both surfaces.
bool check_additivity(const ParamWord& p, const ParamWord& t);

}  // namespace agol
