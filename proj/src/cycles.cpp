#include "agol/cycles.hpp"

#include <cassert>

#include "agol/cfrac.hpp"
#include "agol/errors.hpp"

namespace agol {

namespace {

void emit(SplitWord& w, SplitType t, long count) {
    for (long i = 0; i < count; ++i) w.steps.push_back(t);
}

long block_a(const std::array<long, 3>& b) {
    switch (block_type(b)) {
        case BlockType::A:
            return 2 * b[0];
        case BlockType::APrime:
            return 2 * b[1];
        case BlockType::B:
            return b[0] + b[1] + 2;
    }
    return 0;  // unreachable
}

CycleDescriptor base_descriptor(Surface surface, const ParamWord& p) {
    validate(p);
    CycleDescriptor d;
    d.surface = surface;
    d.word = p;
    RectangleData r = rectangle_data(p);
    d.dilatation = r.lambda;
    d.eigenvector = {r.s, r.h[0], QuadExt(1) - r.s};
    return d;
}

}  // namespace

std::string SplitWord::to_string() const {
    std::string out;
    for (SplitType t : steps) {
        out += (t == SplitType::L) ? 'L' : (t == SplitType::R) ? 'R' : 'M';
    }
    return out;
}

BlockType block_type(const std::array<long, 3>& block) {
    if (block[0] > 0 && block[1] > 0) return BlockType::B;
    if (block[1] == 0) return BlockType::A;
    return BlockType::APrime;
}

CycleDescriptor torus_cycle(const ParamWord& p) {
    CycleDescriptor d = base_descriptor(Surface::Torus, p);
    d.start_track_label = "torus";
    long total = 0;
    const bool symmetric = is_symmetric(p);
    for (const auto& b : p.blocks) {
        if (symmetric) {
            emit(d.split_word, SplitType::R, b[0]);
            emit(d.split_word, SplitType::L, 2 * b[2]);
        } else {
            emit(d.split_word, SplitType::R, b[0] + b[1]);
            emit(d.split_word, SplitType::L, 3 * b[2]);
        }
        total += b[0] + b[1] + 4 * b[2];
    }
    d.length = static_cast<long>(d.split_word.size());
    d.total = total;
    assert(d.length <= d.total);
    return d;
}

CycleDescriptor sphere_cycle(const ParamWord& p) {
    CycleDescriptor d = base_descriptor(Surface::Sphere, p);
    d.start_track_label = "sphere";
    long total = 0;
    const bool symmetric = is_symmetric(p);
    for (const auto& b : p.blocks) {
        if (symmetric) {
            // R L R^{p-1} L R L^{2q-1}
            emit(d.split_word, SplitType::R, 1);
            emit(d.split_word, SplitType::L, 1);
            emit(d.split_word, SplitType::R, b[0] - 1);
            emit(d.split_word, SplitType::L, 1);
            emit(d.split_word, SplitType::R, 1);
            emit(d.split_word, SplitType::L, 2 * b[2] - 1);
        } else {
            switch (block_type(b)) {
                case BlockType::B:
                    // R L R^{p+p'-2} L^2 R L^{3q-1}
                    emit(d.split_word, SplitType::R, 1);
                    emit(d.split_word, SplitType::L, 1);
                    emit(d.split_word, SplitType::R, b[0] + b[1] - 2);
                    emit(d.split_word, SplitType::L, 2);
                    emit(d.split_word, SplitType::R, 1);
                    emit(d.split_word, SplitType::L, 3 * b[2] - 1);
                    break;
                case BlockType::A:
                    // M R^{2p-1} L^{3q}
                    emit(d.split_word, SplitType::M, 1);
                    emit(d.split_word, SplitType::R, 2 * b[0] - 1);
                    emit(d.split_word, SplitType::L, 3 * b[2]);
                    break;
                case BlockType::APrime:
                    emit(d.split_word, SplitType::M, 1);
                    emit(d.split_word, SplitType::R, 2 * b[1] - 1);
                    emit(d.split_word, SplitType::L, 3 * b[2]);
                    break;
            }
        }
        total += block_a(b) + 4 * b[2];
    }
    d.length = static_cast<long>(d.split_word.size());
    d.total = total;
    assert(d.length <= d.total);
    return d;
}

CycleDescriptor cycle(Surface surface, const ParamWord& p) {
    return surface == Surface::Torus ? torus_cycle(p) : sphere_cycle(p);
}

PrimitiveCycle primitive_cycle(Surface surface, const ParamWord& p) {
    CycleDescriptor d = cycle(surface, p);
    const long n = static_cast<long>(p.size());
    long r = n;
    ParamWord rotated = p;
    for (long k = 1; k < n; ++k) {
        rotated = shift(rotated);
        if (rotated == p || flip(rotated) == p) {
            r = k;
            break;
        }
    }
    if (r == n) return {d.length, QuadExt(1) / d.dilatation};

    const bool symmetric = is_symmetric(p);
    long m = 0;
    for (long i = 0; i < r; ++i) {
        const auto& b = p.blocks[i];
        if (surface == Surface::Torus)
            m += symmetric ? b[0] + 2 * b[2] : b[0] + b[1] + 3 * b[2];
        else
            m += symmetric ? b[0] + 2 + 2 * b[2] : block_a(b) + 3 * b[2];
    }
    return {m, rectangle_data(p).w[r]};
}

bool check_additivity(const ParamWord& p, const ParamWord& t) {
    ParamWord pt = concatenate(p, t);
    for (Surface s : {Surface::Torus, Surface::Sphere}) {
        if (cycle(s, pt).total != cycle(s, p).total + cycle(s, t).total) return false;
    }
    return true;
}

}  // namespace agol
