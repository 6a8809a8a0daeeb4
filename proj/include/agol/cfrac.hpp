// Eventually periodic continued fractions and the rectangle recursion.
//
// eval_periodic_cf turns [b0; b1, ..., bk, ov(c1, ..., cm)] into an exact
// quadratic irrational. rectangle_data runs the descending width/height
// recursion attached to a parameter word: w and h stay positive through step
// n, the dilatation is 1/w[n], and the horizontal split ratio s together with
// h[0] gives the normalized eigenvector (s, h[0], 1 - s).
#pragma once

#include <gmpxx.h>

#include <vector>

#include "agol/quad.hpp"
#include "agol/words.hpp"

namespace agol {

struct PeriodicCF {
    std::vector<mpz_class> preperiod;  // may be empty; first entry >= 0, rest >= 1
    std::vector<mpz_class> period;     // nonempty, entries >= 1
};

QuadExt eval_periodic_cf(const PeriodicCF& cf);

// Height h0 = [0; ov(p_n + p'_n, q_n, ..., p_1 + p'_1, q_1)] for blocks[0]
// = (p_n, p'_n, q_n).
QuadExt initial_height(const ParamWord& w);

struct RectangleData {
    std::vector<QuadExt> w;  // w[0..n], w[0] = 1
    std::vector<QuadExt> h;  // h[0..n]
    QuadExt lambda;          // 1 / w[n]
    QuadExt s;               // horizontal split ratio, 0 < s < 1
};

RectangleData rectangle_data(const ParamWord& word);
QuadExt split_ratio(const ParamWord& word);
QuadVec3 normalized_eigenvector(const ParamWord& word);  // (s, h0, 1 - s)

}  // namespace agol
