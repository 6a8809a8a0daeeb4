// Acceptance harness: eight checks, one line of output each, nonzero exit if
// any fails. Every comparison is exact; the only tolerance anywhere is the
// wall-clock bound on the oracle-agreement corpus.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "agol/cfrac.hpp"
#include "agol/cycles.hpp"
#include "agol/matrices.hpp"
#include "agol/quad.hpp"
#include "agol/track_data.hpp"
#include "agol/tracksim.hpp"
#include "agol/words.hpp"

using namespace agol;

namespace {

ParamWord random_word(std::mt19937& rng, int max_blocks, long max_entry) {
    std::uniform_int_distribution<int> nb(1, max_blocks);
    std::uniform_int_distribution<long> pd(0, max_entry), qd(1, max_entry);
    for (;;) {
        ParamWord w;
        int n = nb(rng);
        for (int i = 0; i < n; ++i) w.blocks.push_back({pd(rng), pd(rng), qd(rng)});
        if (is_valid(w)) return w;
    }
}

QuadExt random_quad(std::mt19937& rng, long d) {
    std::uniform_int_distribution<long> ad(-9, 9);
    std::uniform_int_distribution<long> cd(1, 9);
    return QuadExt(ad(rng), d == 0 ? 0 : ad(rng), cd(rng), d);
}

bool criterion1() {
    ParamWord p = ParamWord::parse("1,0,1;0,1,1");
    return rectangle_data(p).lambda == QuadExt(7, 3, 2, 5) &&
           initial_height(p) == QuadExt(-1, 1, 2, 5);
}

bool criterion2() {
    std::vector<ParamWord> corpus = {ParamWord::parse("1,1,1"), ParamWord::parse("1,2,1"),
                                     ParamWord::parse("1,0,1;0,1,1")};
    std::mt19937 rng(20260822);
    for (int i = 0; i < 200; ++i) corpus.push_back(random_word(rng, 4, 3));
    for (const ParamWord& w : corpus) {
        if (!verify_eigenpair(word_matrix(w), rectangle_data(w).lambda,
                              normalized_eigenvector(w)))
            return false;
    }
    return true;
}

bool run_matches(Surface surf, const ParamWord& w, bool* invariants_held) {
    CycleDescriptor d = cycle(surf, w);
    RibbonTrack start = build_start_track(surf, d.eigenvector);
    ShapeInvariants shape = shape_invariants(start);
    RunResult res = run(start, d.length);

    SplitWord realized;
    long total = 0;
    for (const auto& rec : res.steps) {
        realized.steps.push_back(rec.type);
        total += rec.splitting_number;
    }
    if (!(realized == d.split_word) || total != d.total) return false;

    for (const auto& snap : res.snapshots) {
        check_track(*snap);  // throws if a switch condition breaks
        if (!(shape_invariants(*snap) == shape)) *invariants_held = false;
    }

    auto full = iso_measured(start, *res.snapshots.back());
    if (!full || *full * d.dilatation != QuadExt(1)) return false;

    CycleInfo found = find_cycle(start, d.length);
    PrimitiveCycle predicted = primitive_cycle(surf, w);
    return found.m == predicted.m && found.scale == predicted.scale;
}

bool criterion3() {
    CycleDescriptor a = torus_cycle(ParamWord::parse("1,1,1"));
    if (a.length != 3 || a.total != 6 || a.split_word.to_string() != "RLL") return false;
    RunResult res = run(build_start_track(Surface::Torus, a.eigenvector), 3);
    for (const auto& rec : res.steps)
        if (rec.splitting_number != 2) return false;
    CycleDescriptor b = torus_cycle(ParamWord::parse("1,2,1"));
    return b.length == 6 && b.total == 7 && b.split_word.to_string() == "RRRLLL";
}

bool criterion4() {
    CycleDescriptor a = sphere_cycle(ParamWord::parse("1,2,1"));
    CycleDescriptor b = sphere_cycle(ParamWord::parse("1,0,1;0,1,1"));
    return a.length == 8 && a.total == 9 && a.split_word.to_string() == "RLRLLRLL" &&
           b.length == 10 && b.total == 12 && b.split_word.to_string() == "MRLLLMRLLL";
}

bool criterion5(double* seconds, bool* invariants_held) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<ParamWord> corpus = {ParamWord::parse("1,1,1"), ParamWord::parse("1,2,1"),
                                     ParamWord::parse("1,0,1;0,1,1")};
    std::mt19937 rng(47);
    for (int i = 0; i < 100; ++i) corpus.push_back(random_word(rng, 3, 3));

    bool ok = true;
    for (const ParamWord& w : corpus)
        for (Surface surf : {Surface::Torus, Surface::Sphere})
            ok = ok && run_matches(surf, w, invariants_held);

    *seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return ok && *seconds < 60.0;
}

bool criterion6() {
    std::mt19937 rng(6006);
    for (int i = 0; i < 100; ++i) {
        if (!check_additivity(random_word(rng, 3, 3), random_word(rng, 3, 3))) return false;
    }
    return true;
}

// Equality across possibly different fields: distinct squarefree d means
// distinct values (an irrational lies in exactly one real quadratic field).
bool same_value(const QuadExt& x, const QuadExt& y) { return x.d() == y.d() && x == y; }

std::vector<std::array<long, 2>> profile(const ParamWord& w) {
    std::vector<std::array<long, 2>> out;
    for (const auto& b : w.blocks) out.push_back({b[0] + b[1], b[2]});
    return out;
}

// Inequivalent words with equal profiles must have split ratios that are
// neither equal nor complementary at every profile-aligned rotation.
bool separated_by_ratio(const ParamWord& a, const ParamWord& b) {
    if (are_equivalent(a, b) || a.size() != b.size()) return false;
    QuadExt sb = split_ratio(b);
    ParamWord r = a;
    bool aligned = false;
    for (std::size_t k = 0; k < a.size(); ++k, r = shift(r)) {
        if (profile(r) != profile(b)) continue;
        aligned = true;
        QuadExt sa = split_ratio(r);
        if (sa == sb || sa + sb == QuadExt(1)) return false;
    }
    return aligned;
}

bool criterion7() {
    std::mt19937 rng(777);
    std::vector<ParamWord> corpus;
    for (int i = 0; i < 200; ++i) corpus.push_back(random_word(rng, 3, 3));

    struct Inv {
        QuadExt lambda;
        long lt, nt, ls, ns;
        ParamWord canon;
    };
    std::vector<Inv> inv;
    for (const ParamWord& w : corpus) {
        CycleDescriptor t = torus_cycle(w), s = sphere_cycle(w);
        inv.push_back({t.dilatation, t.length, t.total, s.length, s.total, canonical_form(w)});
    }
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        for (std::size_t j = i + 1; j < corpus.size(); ++j) {
            bool same_inv = same_value(inv[i].lambda, inv[j].lambda) && inv[i].lt == inv[j].lt &&
                            inv[i].nt == inv[j].nt && inv[i].ls == inv[j].ls &&
                            inv[i].ns == inv[j].ns && inv[i].canon == inv[j].canon;
            if (are_equivalent(corpus[i], corpus[j]) != same_inv) return false;
        }
    }

    if (!are_equivalent(ParamWord::parse("1,1,2;2,1,1"), ParamWord::parse("2,1,1;1,1,2")))
        return false;
    for (const ParamWord& w : corpus)
        if (!are_equivalent(w, flip(w))) return false;

    return separated_by_ratio(ParamWord::parse("1,2,1;2,1,1"), ParamWord::parse("3,0,1;0,3,1")) &&
           separated_by_ratio(ParamWord::parse("2,1,2;1,2,2"), ParamWord::parse("3,0,2;0,3,2"));
}

bool quad_axioms(std::mt19937& rng) {
    static const long fields[] = {0, 2, 3, 5, 21};
    std::uniform_int_distribution<int> fd(0, 4);
    long d = fields[fd(rng)];
    QuadExt x = random_quad(rng, d), y = random_quad(rng, d), z = random_quad(rng, d);

    if (x + y != y + x || (x + y) + z != x + (y + z)) return false;
    if (x * y != y * x || (x * y) * z != x * (y * z)) return false;
    if (x * (y + z) != x * y + x * z) return false;
    if (x + QuadExt(0) != x || x * QuadExt(1) != x || !(x - x).is_zero()) return false;
    if (!x.is_zero() && x / x != QuadExt(1)) return false;

    if (x.cmp(y) != -y.cmp(x)) return false;
    QuadExt lo = x < y ? x : y, hi = x < y ? y : x;
    if (lo > hi || !(lo <= hi && hi >= lo)) return false;
    if (x < y && !(x + z < y + z)) return false;
    if (x < y && z.sign() > 0 && !(x * z < y * z)) return false;
    return true;
}

bool split_ratio_predicates(std::mt19937& rng) {
    // Flip complement and symmetry detection.
    ParamWord w = random_word(rng, 3, 3);
    if (split_ratio(w) + split_ratio(flip(w)) != QuadExt(1)) return false;
    QuadVec3 v = normalized_eigenvector(w);
    if ((v[0] == v[2]) != is_symmetric(w)) return false;
    if ((split_ratio(w) == QuadExt::rational(1, 2)) != is_symmetric(w)) return false;

    // Lexicographic ordering across words sharing a profile.
    std::uniform_int_distribution<int> nb(1, 3);
    std::uniform_int_distribution<long> md(1, 4), qd(1, 3);
    for (;;) {
        int n = nb(rng);
        ParamWord a, b;
        for (int i = 0; i < n; ++i) {
            long m = md(rng), q = qd(rng);
            std::uniform_int_distribution<long> pd(0, m);
            long pa = pd(rng), pb = pd(rng);
            a.blocks.push_back({pa, m - pa, q});
            b.blocks.push_back({pb, m - pb, q});
        }
        if (!is_valid(a) || !is_valid(b)) continue;
        std::vector<long> pa, pb;
        for (int i = 0; i < n; ++i) {
            pa.push_back(a.blocks[i][0]);
            pb.push_back(b.blocks[i][0]);
        }
        if (pa == pb) return split_ratio(a) == split_ratio(b);
        int expect = pa < pb ? -1 : 1;
        return split_ratio(a).cmp(split_ratio(b)) == expect;
    }
}

bool coordinate_comparison(std::mt19937& rng) {
    std::uniform_int_distribution<long> pd(0, 3), qd(1, 3), nd(1, 9);
    long p = pd(rng), pp = pd(rng), q = qd(rng);
    if (p + pp == 0) p = 1;
    QuadVec3 x = {QuadExt::rational(nd(rng), nd(rng)), QuadExt::rational(nd(rng), nd(rng)),
                  QuadExt::rational(nd(rng), nd(rng))};
    int got = compare_13(block_matrix(p, pp, q), x);
    int expect = p == pp ? x[0].cmp(x[2]) : (p > pp ? 1 : -1);
    return got == expect;
}

bool criterion8(bool sim_invariants_held) {
    std::mt19937 rng(888);
    for (int i = 0; i < 1000; ++i)
        if (!quad_axioms(rng)) return false;
    for (int i = 0; i < 500; ++i)
        if (!split_ratio_predicates(rng)) return false;
    for (int i = 0; i < 500; ++i)
        if (!coordinate_comparison(rng)) return false;
    return sim_invariants_held;
}

}  // namespace

int main() {
    bool all = true;
    auto report = [&all](int n, const char* what, bool ok) {
        std::printf("criterion %d (%s): %s\n", n, what, ok ? "PASS" : "FAIL");
        all = all && ok;
    };

    try {
        report(1, "dilatation exactness", criterion1());
        report(2, "eigenpair exactness", criterion2());
        report(3, "torus cycle regression", criterion3());
        report(4, "sphere cycle regression", criterion4());

        double seconds = 0;
        bool invariants_held = true;
        bool c5 = criterion5(&seconds, &invariants_held);
        std::printf("criterion 5 (oracle agreement, %.1fs): %s\n", seconds,
                    c5 ? "PASS" : "FAIL");
        all = all && c5;

        report(6, "additivity", criterion6());
        report(7, "conjugacy classification", criterion7());
        report(8, "property suites", criterion8(invariants_held));
    } catch (const std::exception& e) {
        std::printf("unexpected error: %s\n", e.what());
        return 1;
    }
    return all ? 0 : 1;
}
