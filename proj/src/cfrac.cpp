#include "agol/cfrac.hpp"

#include "agol/errors.hpp"

namespace agol {

namespace {

// Purely periodic [ov(c1, ..., cm)]. The tail y satisfies y = (Ay + B)/(Cy + D)
// with (A B; C D) the product of the convergent matrices (c_i 1; 1 0), so
// C y^2 + (D - A) y - B = 0. Entries >= 1 force y > 1 and put the conjugate
// root in (-1, 0), so the positive root is the value.
QuadExt periodic_tail(const std::vector<mpz_class>& period) {
    mpz_class A = 1, B = 0, C = 0, D = 1;
    for (const mpz_class& c : period) {
        mpz_class A2 = A * c + B, C2 = C * c + D;
        B = A;
        D = C;
        A = A2;
        C = C2;
    }
    // C >= 1 once at least one partial quotient has been absorbed.
    QuadExt disc_root = QuadExt::sqrt_int((A - D) * (A - D) + 4 * B * C);
    QuadExt y = (QuadExt(A - D) + disc_root) / QuadExt(2 * C);
    QuadExt other = (QuadExt(A - D) - disc_root) / QuadExt(2 * C);
    if (!(y > QuadExt(1)) || !(other > QuadExt(-1)) || !(other < QuadExt(0))) {
        throw InvalidCF("periodic tail outside the reduced range");
    }
    return y;
}

}  // namespace

QuadExt eval_periodic_cf(const PeriodicCF& cf) {
    if (cf.period.empty()) throw InvalidCF("empty period");
    for (const mpz_class& c : cf.period) {
        if (c < 1) throw InvalidCF("period entry < 1");
    }
    for (std::size_t i = 0; i < cf.preperiod.size(); ++i) {
        if (cf.preperiod[i] < (i == 0 ? 0 : 1)) throw InvalidCF("preperiod entry out of range");
    }
    QuadExt x = periodic_tail(cf.period);
    for (auto it = cf.preperiod.rbegin(); it != cf.preperiod.rend(); ++it) {
        x = QuadExt(*it) + QuadExt(1) / x;
    }
    return x;
}

QuadExt initial_height(const ParamWord& w) {
    validate(w);
    PeriodicCF cf;
    cf.preperiod = {0};
    for (const auto& b : w.blocks) {
        cf.period.emplace_back(b[0] + b[1]);
        cf.period.emplace_back(b[2]);
    }
    return eval_periodic_cf(cf);
}

RectangleData rectangle_data(const ParamWord& word) {
    validate(word);
    const std::size_t n = word.size();
    RectangleData r;
    r.w.reserve(n + 1);
    r.h.reserve(n + 1);
    r.w.push_back(QuadExt(1));
    r.h.push_back(initial_height(word));
    for (std::size_t j = 0; j < n; ++j) {
        const auto& b = word.blocks[j];
        QuadExt wj = r.w[j] - QuadExt(b[0] + b[1]) * r.h[j];
        QuadExt hj = r.h[j] - QuadExt(b[2]) * wj;
        if (!(wj > QuadExt(0)) || !(hj > QuadExt(0))) {
            throw InvalidCF("rectangle recursion left the positive cone");
        }
        r.w.push_back(wj);
        r.h.push_back(hj);
    }
    r.lambda = QuadExt(1) / r.w[n];
    QuadExt num(0), den(0);
    for (std::size_t j = 0; j < n; ++j) {
        num = num + QuadExt(word.blocks[j][0]) * r.h[j];
        den = den + QuadExt(word.blocks[j][0] + word.blocks[j][1]) * r.h[j];
    }
    r.s = num / den;
    return r;
}

QuadExt split_ratio(const ParamWord& word) { return rectangle_data(word).s; }

QuadVec3 normalized_eigenvector(const ParamWord& word) {
    RectangleData r = rectangle_data(word);
    return {r.s, r.h[0], QuadExt(1) - r.s};
}

}  // namespace agol
