#include "heegner1/lll.hpp"

#include "heegner1/errors.hpp"

namespace heegner1 {

namespace {

mpz_class dot(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
    mpz_class s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

mpz_class roundQ(const mpq_class& q) {
    // nearest integer, ties toward +inf
    mpq_class shifted = q + mpq_class(1, 2);
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), shifted.get_num().get_mpz_t(), shifted.get_den().get_mpz_t());
    return fl;
}

} // namespace

void lllReduce(std::vector<std::vector<mpz_class>>& b, const mpq_class& delta) {
    size_t n = b.size();
    if (n < 2) return;

    std::vector<std::vector<mpq_class>> mu(n, std::vector<mpq_class>(n, mpq_class(0)));
    std::vector<mpq_class> B(n);

    auto computeGSO = [&]() {
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = 0; j < i; ++j) {
                mpq_class acc = mpq_class(dot(b[i], b[j]));
                for (size_t l = 0; l < j; ++l) acc -= mu[j][l] * mu[i][l] * B[l];
                if (B[j] == 0) throw Error("linearly dependent LLL input");
                mu[i][j] = acc / B[j];
            }
            mpq_class acc = mpq_class(dot(b[i], b[i]));
            for (size_t j = 0; j < i; ++j) acc -= mu[i][j] * mu[i][j] * B[j];
            B[i] = acc;
        }
    };
    computeGSO();

    auto red = [&](size_t k, size_t l) {
        mpq_class m = mu[k][l];
        if (m * 2 > 1 || m * 2 < -1) {
            mpz_class q = roundQ(m);
            for (size_t i = 0; i < b[k].size(); ++i) b[k][i] -= q * b[l][i];
            mu[k][l] -= mpq_class(q);
            for (size_t j = 0; j < l; ++j) mu[k][j] -= mpq_class(q) * mu[l][j];
        }
    };

    size_t k = 1;
    while (k < n) {
        red(k, k - 1);
        mpq_class lovasz = (delta - mu[k][k - 1] * mu[k][k - 1]) * B[k - 1];
        if (B[k] < lovasz) {
            // swap b[k-1], b[k] and patch the GSO data
            mpq_class m = mu[k][k - 1];
            mpq_class Bp = B[k] + m * m * B[k - 1];
            mu[k][k - 1] = m * B[k - 1] / Bp;
            B[k] = B[k - 1] * B[k] / Bp;
            B[k - 1] = Bp;
            std::swap(b[k], b[k - 1]);
            for (size_t j = 0; j + 1 < k; ++j) std::swap(mu[k][j], mu[k - 1][j]);
            for (size_t i = k + 1; i < n; ++i) {
                mpq_class t = mu[i][k];
                mu[i][k] = mu[i][k - 1] - m * t;
                mu[i][k - 1] = t + mu[k][k - 1] * mu[i][k];
            }
            k = k > 1 ? k - 1 : 1;
        } else {
            for (size_t l = k - 1; l-- > 0;) red(k, l);
            ++k;
        }
    }
}

} // namespace heegner1
