#include "cch/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "cch/errors.hpp"

namespace cch {

QMatrix multiply(const QMatrix& a, const QMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
    QMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t l = 0; l < a.cols(); ++l) {
            if (a(i, l) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, l) * b(l, j);
        }
    return c;
}

std::size_t rank(QMatrix m) {
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
        std::size_t pivot = r;
        while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != r)
            for (std::size_t j = col; j < m.cols(); ++j) std::swap(m(pivot, j), m(r, j));
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (m(i, col) == 0) continue;
            mpq_class f = m(i, col) / m(r, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return r;
}

std::size_t rank_mod2(const ZMatrix& m) {
    std::vector<std::vector<bool>> a(m.rows(), std::vector<bool>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = mpz_odd_p(m(i, j).get_mpz_t()) != 0;
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
        std::size_t pivot = r;
        while (pivot < m.rows() && !a[pivot][col]) ++pivot;
        if (pivot == m.rows()) continue;
        std::swap(a[pivot], a[r]);
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (i != r && a[i][col])
                for (std::size_t j = col; j < m.cols(); ++j) a[i][j] = a[i][j] != a[r][j];
        ++r;
    }
    return r;
}

std::vector<mpz_class> smith_invariants(ZMatrix m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<mpz_class> diag;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        // pivot: smallest nonzero |entry| in the trailing block
        bool found = false;
        std::size_t pi = t, pj = t;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (m(i, j) != 0 && (!found || abs(m(i, j)) < abs(m(pi, pj)))) {
                    found = true;
                    pi = i;
                    pj = j;
                }
        if (!found) break;
        for (std::size_t j = 0; j < cols; ++j) std::swap(m(t, j), m(pi, j));
        for (std::size_t i = 0; i < rows; ++i) std::swap(m(i, t), m(i, pj));

        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (m(i, t) == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), m(i, t).get_mpz_t(), m(t, t).get_mpz_t());
                for (std::size_t j = t; j < cols; ++j) m(i, j) -= q * m(t, j);
                if (m(i, t) != 0) {
                    clean = false;
                    for (std::size_t j = 0; j < cols; ++j) std::swap(m(t, j), m(i, j));
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (m(t, j) == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), m(t, j).get_mpz_t(), m(t, t).get_mpz_t());
                for (std::size_t i = t; i < rows; ++i) m(i, j) -= q * m(i, t);
                if (m(t, j) != 0) {
                    clean = false;
                    for (std::size_t i = 0; i < rows; ++i) std::swap(m(i, t), m(i, j));
                }
            }
            if (!clean) continue;
            // divisibility: pivot must divide the whole trailing block
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (m(i, j) % m(t, t) != 0) {
                        for (std::size_t jj = t; jj < cols; ++jj) m(t, jj) += m(i, jj);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        diag.push_back(abs(m(t, t)));
    }
    return diag;
}

ZMatrix to_integer(const QMatrix& m) {
    ZMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            check_internal(m(i, j).get_den() == 1, "differential entry " + m(i, j).get_str() + " is not integral");
            out(i, j) = m(i, j).get_num();
        }
    return out;
}

}  // namespace cch
