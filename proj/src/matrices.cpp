#include "agol/matrices.hpp"

#include "agol/errors.hpp"

namespace agol {

Mat3 Mat3::identity() {
    Mat3 r;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) r.m[i][j] = (i == j) ? 1 : 0;
    }
    return r;
}

Mat3 Mat3::operator*(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            mpz_class acc = 0;
            for (int k = 0; k < 3; ++k) acc += m[i][k] * o.m[k][j];
            r.m[i][j] = acc;
        }
    }
    return r;
}

bool Mat3::operator==(const Mat3& o) const {
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            if (m[i][j] != o.m[i][j]) return false;
        }
    }
    return true;
}

QuadVec3 Mat3::apply(const QuadVec3& v) const {
    QuadVec3 r;
    for (int i = 0; i < 3; ++i) {
        r[i] = QuadExt(m[i][0]) * v[0] + QuadExt(m[i][1]) * v[1] + QuadExt(m[i][2]) * v[2];
    }
    return r;
}

mpz_class Mat3::trace() const { return m[0][0] + m[1][1] + m[2][2]; }

mpz_class Mat3::det() const {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

std::string Mat3::to_string() const {
    std::string out;
    for (int i = 0; i < 3; ++i) {
        if (i) out += ";";
        for (int j = 0; j < 3; ++j) {
            if (j) out += ",";
            out += m[i][j].get_str();
        }
    }
    return out;
}

Mat3 generator(int i) {
    Mat3 r = Mat3::identity();
    switch (i) {
        case 1:
            r.m[0][1] = 1;
            return r;
        case 2:
            r.m[1][0] = 1;
            r.m[1][2] = 1;
            return r;
        case 3:
            r.m[2][1] = 1;
            return r;
        default:
            throw BadIndex("generator index " + std::to_string(i));
    }
}

Mat3 generator_power(int i, long k) {
    if (k < 0) throw BadIndex("negative power");
    // All three generators are unipotent with a single off-diagonal pattern,
    // so the k-th power just scales that pattern.
    Mat3 g = generator(i);
    Mat3 r = Mat3::identity();
    for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) {
            if (a != b && g.m[a][b] != 0) r.m[a][b] = k;
        }
    }
    return r;
}

Mat3 block_matrix(long p, long pp, long q) {
    Mat3 r;
    r.m[0][0] = 1 + mpz_class(p) * q;
    r.m[0][1] = p;
    r.m[0][2] = mpz_class(p) * q;
    r.m[1][0] = q;
    r.m[1][1] = 1;
    r.m[1][2] = q;
    r.m[2][0] = mpz_class(pp) * q;
    r.m[2][1] = pp;
    r.m[2][2] = 1 + mpz_class(pp) * q;
    return r;
}

Mat3 word_matrix(const ParamWord& w) {
    Mat3 r = Mat3::identity();
    for (const auto& b : w.blocks) r = r * block_matrix(b[0], b[1], b[2]);
    return r;
}

CharPoly char_poly(const Mat3& m) {
    CharPoly p;
    p.c2 = -m.trace();
    // Sum of principal 2x2 minors.
    p.c1 = (m.m[0][0] * m.m[1][1] - m.m[0][1] * m.m[1][0]) +
           (m.m[0][0] * m.m[2][2] - m.m[0][2] * m.m[2][0]) +
           (m.m[1][1] * m.m[2][2] - m.m[1][2] * m.m[2][1]);
    p.c0 = -m.det();
    return p;
}

QuadExt CharPoly::eval(const QuadExt& t) const {
    return ((t + QuadExt(c2)) * t + QuadExt(c1)) * t + QuadExt(c0);
}

bool verify_eigenpair(const Mat3& m, const QuadExt& lambda, const QuadVec3& v) {
    if (!lambda.is_quadratic_irrational()) return false;
    if (!(lambda > QuadExt(1))) return false;
    CharPoly cp = char_poly(m);
    if (!cp.eval(lambda).is_zero()) return false;
    // The other roots are the Galois conjugate and a rational root r with
    // lambda * conj * r = det. Dominance needs |conj| < lambda and |r| < lambda.
    QuadExt conj(lambda.a(), -lambda.b(), lambda.c(), lambda.d());
    QuadExt abs_conj = conj.sign() < 0 ? -conj : conj;
    if (!(abs_conj < lambda)) return false;
    QuadExt prod = lambda * conj;
    if (prod.is_zero()) return false;
    QuadExt r = QuadExt(m.det()) / prod;
    QuadExt abs_r = r.sign() < 0 ? -r : r;
    if (!(abs_r < lambda)) return false;
    for (const QuadExt& x : v) {
        if (!(x > QuadExt(0))) return false;
    }
    QuadVec3 mv = m.apply(v);
    for (int i = 0; i < 3; ++i) {
        if (mv[i] != lambda * v[i]) return false;
    }
    return true;
}

int compare_13(const Mat3& m, const QuadVec3& v) {
    QuadVec3 mv = m.apply(v);
    return mv[0].cmp(mv[2]);
}

}  // namespace agol
