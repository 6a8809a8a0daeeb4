// Integer 3x3 matrices for the three generators and their block products.
//
// generator(1), generator(2), generator(3) are the elementary unipotent
// matrices I+E12, I+E21+E23, I+E32. word_matrix multiplies the block closed
// forms left to right. verify_eigenpair checks a claimed dominant eigenpair
// with exact arithmetic only.
#pragma once

#include <gmpxx.h>

#include <string>

#include "agol/quad.hpp"
#include "agol/words.hpp"

namespace agol {

struct Mat3 {
    mpz_class m[3][3];

    static Mat3 identity();
    Mat3 operator*(const Mat3& o) const;
    bool operator==(const Mat3& o) const;
    bool operator!=(const Mat3& o) const { return !(*this == o); }

    QuadVec3 apply(const QuadVec3& v) const;
    mpz_class trace() const;
    mpz_class det() const;
    std::string to_string() const;  // rows separated by ';'
};

// i in {1, 2, 3}; throws BadIndex otherwise.
Mat3 generator(int i);
// generator(i)^k, k >= 0.
Mat3 generator_power(int i, long k);

// The product over blocks (p, p', q) of generator(1)^p generator(3)^p'
// generator(2)^q, blocks[0] leftmost.
Mat3 word_matrix(const ParamWord& w);
// A single block's matrix.
Mat3 block_matrix(long p, long pp, long q);

// t^3 + c2 t^2 + c1 t + c0.
struct CharPoly {
    mpz_class c2, c1, c0;
    QuadExt eval(const QuadExt& t) const;
};
CharPoly char_poly(const Mat3& m);

// True when lambda is a quadratic irrational root of char_poly(m) strictly
// dominant over the other two eigenvalues, v is strictly positive, and
// m v = lambda v exactly.
bool verify_eigenpair(const Mat3& m, const QuadExt& lambda, const QuadVec3& v);

// Sign of (m v)[0] - (m v)[2].
int compare_13(const Mat3& m, const QuadVec3& v);

}  // namespace agol
