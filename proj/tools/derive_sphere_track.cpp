// Offline derivation of the sphere track encodings in data/tracks.json.
//
// Starts from the quotient track: the torus track folded along its order-2
// symmetry, with four teardrop loops around the new punctures. The loop
// attachment orders and the global mirror are not determined by the fold
// alone, so all 32 variants are enumerated and validated against the exact
// cycle data (period, scale, split word) for 1,2,1. The winning variant's
// cycle is then scanned for the phase and marked-branch triple that
// reproduce the normalized eigenvector, and the auxiliary shapes used by the
// lemma tests are extracted from short runs with generic integer measures.
//
// This tool regenerates the data file contents; it is not part of the test
// suite.
#include <iostream>
#include <map>
#include <set>
#include <vector>

#include <nlohmann/json.hpp>

#include "agol/cfrac.hpp"
#include "agol/cycles.hpp"
#include "agol/errors.hpp"
#include "agol/matrices.hpp"
#include "agol/track_data.hpp"
#include "agol/tracksim.hpp"
#include "agol/words.hpp"

using namespace agol;

namespace {

// Branches: 0 eps1, 1 eps2, 2 betx, 3 betz, 4 eta, 5..8 loops.
// Switches: U, V, then the null switches of eps1, eps2, betx, betz.
// bits 0..3 flip the loop orders, bit 4 mirrors the double slots at U and V.
RibbonTrack quotient_track(const QuadVec3& v2, int bits) {
    auto he = [](int branch, int end) { return 2 * branch + end; };
    auto loop_switch = [&](int stalk, int loop, bool flip) -> std::array<HalfEdge, 3> {
        if (flip) return {he(stalk, 1), he(loop, 1), he(loop, 0)};
        return {he(stalk, 1), he(loop, 0), he(loop, 1)};
    };
    RibbonTrack t;
    bool mirror = bits & 16;
    if (mirror) {
        t.switches.push_back({he(0, 0), he(4, 0), he(2, 0)});
        t.switches.push_back({he(1, 0), he(4, 1), he(3, 0)});
    } else {
        t.switches.push_back({he(0, 0), he(2, 0), he(4, 0)});
        t.switches.push_back({he(1, 0), he(3, 0), he(4, 1)});
    }
    t.switches.push_back(loop_switch(0, 5, bits & 1));
    t.switches.push_back(loop_switch(1, 6, bits & 2));
    t.switches.push_back(loop_switch(2, 7, bits & 4));
    t.switches.push_back(loop_switch(3, 8, bits & 8));
    QuadExt half(1, 0, 2, 0);
    t.weights = {v2[0] + v2[1], v2[1] + v2[2], v2[0],          v2[2],
                 v2[1],         (v2[0] + v2[1]) * half,        (v2[1] + v2[2]) * half,
                 v2[0] * half,  v2[2] * half};
    return t;
}

std::vector<RibbonTrack> states_of(const RibbonTrack& start, long steps) {
    std::vector<RibbonTrack> states{start};
    RibbonTrack cur = start;
    for (long i = 0; i < steps; ++i) {
        cur = maximal_split(cur, i).first;
        states.push_back(cur);
    }
    return states;
}

struct CycleShape {
    long preperiod, period;
    QuadExt scale;
};

// Smallest j with an earlier isomorphic state.
std::optional<CycleShape> detect(const std::vector<RibbonTrack>& states) {
    for (std::size_t j = 1; j < states.size(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            if (auto sc = iso_measured(states[i], states[j]))
                return CycleShape{static_cast<long>(i), static_cast<long>(j - i), *sc};
    return std::nullopt;
}

std::string word_of(const std::vector<StepRecord>& steps) {
    SplitWord w;
    for (const auto& r : steps) w.steps.push_back(r.type);
    return w.to_string();
}

std::string numbers_of(const std::vector<StepRecord>& steps) {
    std::string out;
    for (const auto& r : steps) out += std::to_string(r.splitting_number) + " ";
    return out;
}

TrackEncoding encoding_of(const RibbonTrack& t, const std::array<int, 3>& marked) {
    TrackEncoding enc;
    enc.branches = t.branch_count();
    enc.marked = marked;
    for (const auto& sw : t.switches)
        enc.switches.push_back({std::make_pair(sw[0] >> 1, sw[0] & 1),
                                std::make_pair(sw[1] >> 1, sw[1] & 1),
                                std::make_pair(sw[2] >> 1, sw[2] & 1)});
    return enc;
}

// Marked triples whose snapshot weights equal the given values and determine
// the whole measure through the switch conditions.
std::vector<std::array<int, 3>> markings_with_values(const RibbonTrack& t, const QuadVec3& vals) {
    std::vector<std::array<int, 3>> out;
    int n = t.branch_count();
    for (int bx = 0; bx < n; ++bx)
        for (int by = 0; by < n; ++by)
            for (int bz = 0; bz < n; ++bz) {
                if (bx == by || bx == bz || by == bz) continue;
                if (t.weights[bx] != vals[0] || t.weights[by] != vals[1] || t.weights[bz] != vals[2])
                    continue;
                TrackEncoding enc = encoding_of(t, {bx, by, bz});
                try {
                    RibbonTrack rebuilt = build_track(enc, vals);
                    if (rebuilt.weights == t.weights) out.push_back({bx, by, bz});
                } catch (const std::exception&) {
                }
            }
    return out;
}

bool integer_coefficients(const TrackEncoding& enc) {
    for (const auto& row : weight_coefficients(enc))
        for (const auto& q : row)
            if (q < 0 || q.get_den() != 1) return false;
    return true;
}

nlohmann::ordered_json encoding_json(const TrackEncoding& enc) {
    nlohmann::ordered_json j;
    auto switches = nlohmann::ordered_json::array();
    for (const auto& sw : enc.switches) {
        auto row = nlohmann::ordered_json::array();
        for (int i = 0; i < 3; ++i) row.push_back({sw[i].first, sw[i].second});
        switches.push_back(row);
    }
    j["switches"] = switches;
    j["branches"] = enc.branches;
    j["marked"] = {enc.marked[0], enc.marked[1], enc.marked[2]};
    return j;
}

void report_run(const std::string& tag, const TrackEncoding& enc, const ParamWord& w) {
    QuadVec3 v = normalized_eigenvector(w);
    CycleDescriptor cd = sphere_cycle(w);
    RibbonTrack t = build_track(enc, v);
    RunResult res = run(t, cd.length);
    long total = 0;
    for (const auto& r : res.steps) total += r.splitting_number;
    CycleInfo info = find_cycle(t, 4 * cd.length);
    bool word_ok = word_of(res.steps) == cd.split_word.to_string();
    bool scale_ok = info.scale * cd.dilatation == QuadExt(1);
    std::cout << tag << " " << w.to_string() << ": word=" << word_of(res.steps)
              << (word_ok ? " (matches)" : " (MISMATCH vs " + cd.split_word.to_string() + ")")
              << " numbers=" << numbers_of(res.steps) << " total=" << total
              << " closed-form total=" << cd.total << " m=" << info.m
              << " scale" << (scale_ok ? "=1/dilatation" : " MISMATCH") << "\n";
}

}  // namespace

int main() {
    ParamWord probe = ParamWord::parse("1,2,1");
    QuadVec3 v = normalized_eigenvector(probe);
    QuadVec3 v2{v[0] * QuadExt(2), v[1] * QuadExt(2), v[2] * QuadExt(2)};
    RectangleData rect = rectangle_data(probe);
    QuadExt inv_lambda = QuadExt(1) / rect.lambda;
    CycleDescriptor cd = sphere_cycle(probe);

    struct Hit {
        int bits;
        long phase;
        std::array<int, 3> marked;
        TrackEncoding enc;
    };
    std::vector<Hit> hits;

    for (int bits = 0; bits < 32; ++bits) {
        RibbonTrack start;
        std::vector<RibbonTrack> states;
        try {
            start = quotient_track(v2, bits);
            check_track(start);
            if (!(shape_invariants(start) == ShapeInvariants{6, 9, 5, 0})) {
                std::cout << "variant " << bits << ": wrong surface\n";
                continue;
            }
            states = states_of(start, 60);
        } catch (const std::exception& e) {
            std::cout << "variant " << bits << ": " << e.what() << "\n";
            continue;
        }
        auto cyc = detect(states);
        if (!cyc) {
            std::cout << "variant " << bits << ": no cycle in 60 steps\n";
            continue;
        }
        bool scale_ok = cyc->scale == inv_lambda;
        std::cout << "variant " << bits << ": preperiod=" << cyc->preperiod
                  << " period=" << cyc->period << " scale_ok=" << scale_ok << "\n";
        if (cyc->period != cd.length || !scale_ok) continue;

        for (long k = cyc->preperiod; k < cyc->preperiod + cyc->period; ++k) {
            const RibbonTrack& st = states[k];
            for (int bx = 0; bx < 9; ++bx)
                for (int by = 0; by < 9; ++by)
                    for (int bz = 0; bz < 9; ++bz) {
                        if (bx == by || bx == bz || by == bz) continue;
                        // weights proportional to (s, h0, 1-s)
                        if (st.weights[by] * v[0] != st.weights[bx] * v[1]) continue;
                        if (st.weights[bz] * v[0] != st.weights[bx] * v[2]) continue;
                        TrackEncoding enc = encoding_of(st, {bx, by, bz});
                        try {
                            if (!integer_coefficients(enc)) continue;
                            RibbonTrack rebuilt = build_track(enc, v);
                            RunResult res = run(rebuilt, cd.length);
                            if (word_of(res.steps) != cd.split_word.to_string()) continue;
                            CycleInfo info = find_cycle(rebuilt, 4 * cd.length);
                            if (info.m != cd.length || info.scale != inv_lambda) continue;
                            hits.push_back({bits, k, {bx, by, bz}, enc});
                            std::cout << "  HIT bits=" << bits << " phase=" << k << " marked=" << bx
                                      << "," << by << "," << bz
                                      << " numbers=" << numbers_of(res.steps) << "\n";
                        } catch (const std::exception&) {
                        }
                    }
        }
    }

    if (hits.empty()) {
        std::cout << "no admissible start encoding found\n";
        return 1;
    }
    const Hit& win = hits.front();
    std::cout << "\nchosen: bits=" << win.bits << " phase=" << win.phase << " marked="
              << win.marked[0] << "," << win.marked[1] << "," << win.marked[2] << "\n\n";

    for (const char* s : {"1,2,1", "1,0,1;0,1,1", "1,1,1", "2,3,2", "2,0,1;0,3,1"})
        report_run("sphere", win.enc, ParamWord::parse(s));

    // Auxiliary shapes from the lemma routes, with generic integer measures.
    Mat3 m1 = generator(1), m2 = generator(2), m3 = generator(3);
    std::vector<QuadVec3> samples{{QuadExt(2), QuadExt(3), QuadExt(5)},
                                  {QuadExt(3), QuadExt(5), QuadExt(7)},
                                  {QuadExt(5), QuadExt(2), QuadExt(9)},
                                  {QuadExt(7), QuadExt(3), QuadExt(2)}};

    auto derive_aux = [&](const std::string& tag, const TrackEncoding& from, const Mat3& measure,
                          long steps, const std::string& expect_word,
                          auto target_values) -> std::optional<TrackEncoding> {
        std::set<std::array<int, 3>> common;
        TrackEncoding shape;
        bool first = true;
        for (const QuadVec3& x : samples) {
            RibbonTrack t = build_track(from, measure.apply(x));
            RunResult res = run(t, steps);
            std::string word = word_of(res.steps);
            if (word != expect_word) {
                std::cout << tag << ": route word " << word << " != " << expect_word << "\n";
                return std::nullopt;
            }
            const RibbonTrack& endst = *res.snapshots.back();
            auto marks = markings_with_values(endst, target_values(x));
            std::set<std::array<int, 3>> here(marks.begin(), marks.end());
            if (first) {
                common = here;
                shape = encoding_of(endst, {0, 1, 2});
                first = false;
            } else {
                std::set<std::array<int, 3>> inter;
                for (const auto& m : common)
                    if (here.count(m)) inter.insert(m);
                common = inter;
            }
        }
        if (common.empty()) {
            std::cout << tag << ": no common marking\n";
            return std::nullopt;
        }
        shape.marked = *common.begin();
        std::cout << tag << ": markings";
        for (const auto& m : common) std::cout << " (" << m[0] << "," << m[1] << "," << m[2] << ")";
        std::cout << " -> chose (" << shape.marked[0] << "," << shape.marked[1] << ","
                  << shape.marked[2] << ")\n";
        return shape;
    };

    // R L from (bL, M1 M3 a) lands on the block track carrying a.
    auto block = derive_aux("block", win.enc, m1 * m3, 2, "RL", [](const QuadVec3& x) { return x; });
    // L L R L L from (block, M2 x) returns to bL carrying x; the exit shape
    // sits three steps in. Its snapshot weights are not a permutation of x,
    // so it is frozen with the first marking that solves with nonnegative
    // integer coefficients (the shape alone is what the lemma tests need).
    std::optional<TrackEncoding> exit_shape;
    if (block) {
        RibbonTrack t = build_track(*block, m2.apply(samples[0]));
        RunResult res = run(t, 3);
        if (word_of(res.steps) == "LLR") {
            const RibbonTrack& endst = *res.snapshots.back();
            TrackEncoding shape = encoding_of(endst, {0, 1, 2});
            bool found = false;
            for (int bx = 0; bx < 9 && !found; ++bx)
                for (int by = 0; by < 9 && !found; ++by)
                    for (int bz = 0; bz < 9 && !found; ++bz) {
                        if (bx == by || bx == bz || by == bz) continue;
                        shape.marked = {bx, by, bz};
                        try {
                            bool integral = integer_coefficients(shape);
                            // Any uniquely solvable marking will do for a
                            // shape reference; prefer integral ones.
                            QuadVec3 probe{QuadExt(0), QuadExt(0), QuadExt(0)};
                            bool positive = false;
                            for (int a = 1; a <= 4 && !positive; ++a)
                                for (int bb = 1; bb <= 4 && !positive; ++bb)
                                    for (int cc = 1; cc <= 4 && !positive; ++cc) {
                                        try {
                                            probe = {QuadExt(a), QuadExt(bb), QuadExt(cc)};
                                            build_track(shape, probe);
                                            positive = true;
                                        } catch (const std::exception&) {
                                        }
                                    }
                            if (!positive) continue;
                            found = true;
                            std::cout << "exit: marking (" << bx << "," << by << "," << bz
                                      << ") integral=" << integral << " positive sample=("
                                      << probe[0].to_string() << "," << probe[1].to_string() << ","
                                      << probe[2].to_string() << ")\n";
                        } catch (const std::exception&) {
                        }
                    }
            if (found)
                exit_shape = shape;
            else
                std::cout << "exit: no solvable marking\n";
        } else {
            std::cout << "exit: route word " << word_of(res.steps) << " != LLR\n";
        }
    }
    // M R from (bL, M3 M2 x) lands on the one-sided track carrying M2 x.
    auto onesided = derive_aux("onesided", win.enc, m3 * m2, 2, "MR",
                               [&](const QuadVec3& x) { return m2.apply(x); });

    if (block) {
        // Remaining L L from the exit state reaches bL with measure x.
        for (const QuadVec3& x : samples) {
            RibbonTrack t = build_track(*block, m2.apply(x));
            RunResult res = run(t, 5);
            RibbonTrack target = build_track(win.enc, x);
            auto sc = iso_measured(*res.snapshots.back(), target);
            std::cout << "block LLRLL returns to bL: " << (sc && *sc == QuadExt(1) ? "yes" : "NO")
                      << "\n";
        }
    }
    if (onesided) {
        for (const QuadVec3& x : samples) {
            RibbonTrack t = build_track(*onesided, m2.apply(x));
            RunResult res = run(t, 3);
            RibbonTrack target = build_track(win.enc, x);
            auto sc = iso_measured(*res.snapshots.back(), target);
            std::cout << "onesided LLL returns to bL: " << (sc && *sc == QuadExt(1) ? "yes" : "NO")
                      << "\n";
        }
    }

    // Primitive-period probes: flip-shift-fixed words return early at the
    // rectangle width of the fixed phase.
    {
        ParamWord sym = ParamWord::parse("1,0,1;0,1,1");
        RectangleData r = rectangle_data(sym);
        QuadVec3 vs = normalized_eigenvector(sym);
        CycleInfo torus_info = find_cycle(build_start_track(Surface::Torus, vs), 40);
        CycleInfo sphere_info = find_cycle(build_track(win.enc, vs), 40);
        std::cout << "\nprimitive torus 1,0,1;0,1,1: m=" << torus_info.m
                  << " scale==w1:" << (torus_info.scale == r.w[1]) << "\n";
        std::cout << "primitive sphere 1,0,1;0,1,1: m=" << sphere_info.m
                  << " scale==w1:" << (sphere_info.scale == r.w[1])
                  << " scale^2==1/lambda:" << (sphere_info.scale * sphere_info.scale * r.lambda == QuadExt(1))
                  << "\n";
        ParamWord rep = ParamWord::parse("1,1,1;1,1,1");
        RectangleData rr = rectangle_data(rep);
        QuadVec3 vr = normalized_eigenvector(rep);
        CycleInfo ti = find_cycle(build_start_track(Surface::Torus, vr), 40);
        CycleInfo si = find_cycle(build_track(win.enc, vr), 40);
        std::cout << "primitive torus 1,1,1;1,1,1: m=" << ti.m << " scale==w1:" << (ti.scale == rr.w[1])
                  << "\n";
        std::cout << "primitive sphere 1,1,1;1,1,1: m=" << si.m << " scale==w1:" << (si.scale == rr.w[1])
                  << "\n";
    }

    auto print_compact = [](const std::string& name, const TrackEncoding& enc) {
        std::cout << "    \"" << name << "\": {\n      \"switches\": [\n";
        for (std::size_t i = 0; i < enc.switches.size(); ++i) {
            const auto& sw = enc.switches[i];
            std::cout << "        [[" << sw[0].first << ", " << sw[0].second << "], [" << sw[1].first
                      << ", " << sw[1].second << "], [" << sw[2].first << ", " << sw[2].second
                      << "]]" << (i + 1 < enc.switches.size() ? "," : "") << "\n";
        }
        std::cout << "      ],\n      \"branches\": " << enc.branches << ",\n      \"marked\": ["
                  << enc.marked[0] << ", " << enc.marked[1] << ", " << enc.marked[2] << "]\n    }";
    };
    std::cout << "\n";
    print_compact("sphere", win.enc);
    if (block) {
        std::cout << ",\n";
        print_compact("sphere_block", *block);
    }
    if (exit_shape) {
        std::cout << ",\n";
        print_compact("sphere_exit", *exit_shape);
    }
    if (onesided) {
        std::cout << ",\n";
        print_compact("sphere_onesided", *onesided);
    }
    std::cout << "\n";
    return 0;
}
