#include "agol/tracksim.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <string>

#include "agol/errors.hpp"

namespace agol {

namespace {

struct Pos {
    int sw = -1;
    int slot = -1;
};

// Position of every half-edge; throws if any is missing or duplicated.
std::vector<Pos> positions(const RibbonTrack& t) {
    std::vector<Pos> pos(2 * t.branch_count());
    for (int s = 0; s < t.switch_count(); ++s) {
        for (int i = 0; i < 3; ++i) {
            HalfEdge h = t.switches[s][i];
            if (h < 0 || h >= 2 * t.branch_count())
                throw EncodingError("half-edge id out of range");
            if (pos[h].sw != -1) throw EncodingError("half-edge attached twice");
            pos[h] = {s, i};
        }
    }
    for (std::size_t h = 0; h < pos.size(); ++h)
        if (pos[h].sw == -1) throw EncodingError("half-edge not attached");
    return pos;
}

long count_boundary_walks(const RibbonTrack& t, const std::vector<Pos>& pos) {
    // Boundary components of the fattened graph are orbits of
    // h -> ccw-successor of the partner of h.
    std::vector<char> seen(2 * t.branch_count(), 0);
    long walks = 0;
    for (HalfEdge h0 = 0; h0 < 2 * t.branch_count(); ++h0) {
        if (seen[h0]) continue;
        ++walks;
        HalfEdge h = h0;
        do {
            seen[h] = 1;
            Pos p = pos[h ^ 1];
            h = t.switches[p.sw][(p.slot + 1) % 3];
        } while (h != h0);
    }
    return walks;
}

}  // namespace

bool RibbonTrack::operator==(const RibbonTrack& o) const {
    return switches == o.switches && weights == o.weights;
}

ShapeInvariants shape_invariants(const RibbonTrack& t) {
    auto pos = positions(t);
    long v = t.switch_count();
    long e = t.branch_count();
    long walks = count_boundary_walks(t, pos);
    // chi(surface) = V - E = 2 - 2g - walks
    long twice_genus = 2 - walks - (v - e);
    if (twice_genus < 0 || twice_genus % 2 != 0) throw EncodingError("inconsistent ribbon structure");
    return {v, e, walks, twice_genus / 2};
}

void check_track(const RibbonTrack& t) {
    if (t.switch_count() * 3 != 2 * t.branch_count())
        throw EncodingError("switch and branch counts do not match a trivalent graph");
    if (t.branch_count() == 0) throw EncodingError("empty track");
    auto pos = positions(t);
    for (int b = 0; b < t.branch_count(); ++b)
        if (t.weights[b].sign() <= 0) throw NonPositiveWeight("branch " + std::to_string(b));
    for (int s = 0; s < t.switch_count(); ++s) {
        const auto& sw = t.switches[s];
        QuadExt doubles = t.weights[sw[1] >> 1] + t.weights[sw[2] >> 1];
        if (t.weights[sw[0] >> 1] != doubles)
            throw EncodingError("switch condition fails at switch " + std::to_string(s));
    }
    // Connectivity over switches through branches.
    std::vector<char> seen(t.switch_count(), 0);
    std::deque<int> q{0};
    seen[0] = 1;
    while (!q.empty()) {
        int s = q.front();
        q.pop_front();
        for (int i = 0; i < 3; ++i) {
            int s2 = pos[t.switches[s][i] ^ 1].sw;
            if (!seen[s2]) {
                seen[s2] = 1;
                q.push_back(s2);
            }
        }
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
        throw EncodingError("track is not connected");
}

std::vector<int> large_branches(const RibbonTrack& t) {
    auto pos = positions(t);
    std::vector<int> out;
    for (int b = 0; b < t.branch_count(); ++b)
        if (pos[2 * b].slot == 0 && pos[2 * b + 1].slot == 0) out.push_back(b);
    return out;
}

std::pair<RibbonTrack, StepRecord> maximal_split(const RibbonTrack& t, long step_index) {
    auto before = shape_invariants(t);
    auto pos = positions(t);
    auto larges = large_branches(t);
    if (larges.empty()) throw EncodingError("track has no large branch");

    QuadExt max_w = t.weights[larges[0]];
    for (int b : larges)
        if (t.weights[b] > max_w) max_w = t.weights[b];
    std::vector<int> split_set;
    for (int b : larges)
        if (t.weights[b] == max_w) split_set.push_back(b);

    RibbonTrack out = t;
    bool any_left = false, any_right = false;
    for (int e : split_set) {
        int sL = pos[2 * e].sw;
        int sR = pos[2 * e + 1].sw;
        assert(sL != sR);
        HalfEdge a = t.switches[sL][1], b = t.switches[sL][2];
        HalfEdge c = t.switches[sR][1], d = t.switches[sR][2];
        const QuadExt& wa = t.weights[a >> 1];
        const QuadExt& wd = t.weights[d >> 1];
        int s = wd.cmp(wa);
        if (s == 0) throw DegenerateSplit("tie at branch " + std::to_string(e));
        if (s > 0) {
            // Left split: the new branch joins the two heavy corners.
            any_left = true;
            assert(t.weights[b >> 1] > t.weights[c >> 1]);
            out.weights[e] = wd - wa;
            out.switches[sL] = {b, c, 2 * e};
            out.switches[sR] = {d, a, 2 * e + 1};
        } else {
            any_right = true;
            assert(t.weights[c >> 1] > t.weights[b >> 1]);
            out.weights[e] = wa - wd;
            out.switches[sL] = {a, 2 * e, d};
            out.switches[sR] = {c, 2 * e + 1, b};
        }
    }

    check_track(out);
    if (!(shape_invariants(out) == before)) throw EncodingError("split changed the surface");

    StepRecord rec;
    rec.step_index = step_index;
    rec.type = any_left ? (any_right ? SplitType::M : SplitType::L) : SplitType::R;
    rec.splitting_number = static_cast<long>(split_set.size());
    rec.max_weight = max_w;
    return {std::move(out), rec};
}

RunResult run(const RibbonTrack& start, long max_steps) {
    check_track(start);
    RunResult res;
    RibbonTrack cur = start;
    for (long i = 0; i < max_steps; ++i) {
        auto [next, rec] = maximal_split(cur, i);
        cur = std::move(next);
        res.snapshots.push_back(std::make_shared<const RibbonTrack>(cur));
        res.steps.push_back(rec);
    }
    return res;
}

namespace {

bool try_map(const RibbonTrack& t1, const RibbonTrack& t2, const std::vector<Pos>& pos1,
             const std::vector<Pos>& pos2, int image_of_0, TrackMap& out) {
    int ns = t1.switch_count();
    std::vector<int> smap(ns, -1), used(ns, 0);
    std::vector<HalfEdge> hmap(2 * t1.branch_count(), -1);
    std::deque<std::pair<int, int>> q{{0, image_of_0}};
    while (!q.empty()) {
        auto [x, y] = q.front();
        q.pop_front();
        if (smap[x] != -1) {
            if (smap[x] != y) return false;
            continue;
        }
        if (used[y]) return false;
        smap[x] = y;
        used[y] = 1;
        for (int i = 0; i < 3; ++i) {
            HalfEdge ha = t1.switches[x][i], hb = t2.switches[y][i];
            if (hmap[ha] != -1 && hmap[ha] != hb) return false;
            hmap[ha] = hb;
            Pos pa = pos1[ha ^ 1], pb = pos2[hb ^ 1];
            if (pa.slot != pb.slot) return false;
            q.push_back({pa.sw, pb.sw});
        }
    }
    for (int s = 0; s < ns; ++s)
        if (smap[s] == -1) return false;  // t1 disconnected
    // Partner consistency: hmap built per-switch, so both ends were set.
    for (HalfEdge h = 0; h < 2 * t1.branch_count(); ++h)
        if (hmap[h] == -1 || (hmap[h] ^ 1) != hmap[h ^ 1]) return false;
    out.switch_map = std::move(smap);
    out.half_map = std::move(hmap);
    return true;
}

}  // namespace

std::vector<TrackMap> shape_isomorphisms(const RibbonTrack& t1, const RibbonTrack& t2) {
    std::vector<TrackMap> maps;
    if (t1.switch_count() != t2.switch_count() || t1.branch_count() != t2.branch_count())
        return maps;
    if (t1.switch_count() == 0) return maps;
    auto pos1 = positions(t1), pos2 = positions(t2);
    for (int s2 = 0; s2 < t2.switch_count(); ++s2) {
        TrackMap m;
        if (try_map(t1, t2, pos1, pos2, s2, m)) maps.push_back(std::move(m));
    }
    return maps;
}

bool iso_shape(const RibbonTrack& t1, const RibbonTrack& t2) {
    return !shape_isomorphisms(t1, t2).empty();
}

std::optional<QuadExt> iso_measured(const RibbonTrack& t1, const RibbonTrack& t2) {
    for (const TrackMap& m : shape_isomorphisms(t1, t2)) {
        try {
            QuadExt ratio = t2.weights[m.half_map[0] >> 1] / t1.weights[0];
            bool ok = true;
            for (int b = 1; b < t1.branch_count() && ok; ++b)
                ok = t2.weights[m.half_map[2 * b] >> 1] == ratio * t1.weights[b];
            if (ok) return ratio;
        } catch (const FieldMismatch&) {
            // Weights from incomparable fields cannot be proportional.
        }
    }
    return std::nullopt;
}

CycleInfo find_cycle(const RibbonTrack& start, long max_steps) {
    check_track(start);
    RibbonTrack cur = start;
    for (long m = 1; m <= max_steps; ++m) {
        cur = maximal_split(cur, m - 1).first;
        if (auto scale = iso_measured(start, cur)) return {m, *scale};
    }
    throw NoCycleFound("no cycle within " + std::to_string(max_steps) + " steps");
}

RibbonTrack relabel(const RibbonTrack& t, const std::vector<int>& branch_perm,
                    const std::vector<bool>& flip_ends, const std::vector<int>& switch_perm) {
    RibbonTrack out;
    out.switches.resize(t.switch_count());
    out.weights.resize(t.branch_count());
    auto map_half = [&](HalfEdge h) {
        int b = h >> 1, end = h & 1;
        return 2 * branch_perm[b] + (end ^ (flip_ends[b] ? 1 : 0));
    };
    for (int s = 0; s < t.switch_count(); ++s)
        for (int i = 0; i < 3; ++i) out.switches[switch_perm[s]][i] = map_half(t.switches[s][i]);
    for (int b = 0; b < t.branch_count(); ++b) out.weights[branch_perm[b]] = t.weights[b];
    return out;
}

}  // namespace agol
