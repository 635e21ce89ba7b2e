#include "addgal/matrix.hpp"

#include <stdexcept>

namespace addgal {

MatrixGF MatrixGF::identity(const FieldCtx& F, std::uint32_t n) {
    MatrixGF m(F, n);
    for (std::uint32_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

MatrixGF mul(const MatrixGF& a, const MatrixGF& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimension mismatch");
    const FieldCtx& F = a.field();
    std::uint32_t n = a.dim();
    MatrixGF c(F, n);
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t k = 0; k < n; ++k) {
            elem aik = a(i, k);
            if (aik == 0) continue;
            for (std::uint32_t j = 0; j < n; ++j)
                c(i, j) = F.add(c(i, j), F.mul(aik, b(k, j)));
        }
    }
    return c;
}

MatrixGF pow(const MatrixGF& a, std::uint64_t k) {
    MatrixGF r = MatrixGF::identity(a.field(), a.dim());
    MatrixGF b = a;
    while (k) {
        if (k & 1) r = mul(r, b);
        b = mul(b, b);
        k >>= 1;
    }
    return r;
}

elem det(const MatrixGF& a) {
    const FieldCtx& F = a.field();
    std::uint32_t n = a.dim();
    if (n == 0) return 1;
    MatrixGF m = a;
    elem d = 1;
    for (std::uint32_t col = 0; col < n; ++col) {
        std::uint32_t piv = col;
        while (piv < n && m(piv, col) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            for (std::uint32_t j = 0; j < n; ++j) std::swap(m(piv, j), m(col, j));
            d = F.neg(d);
        }
        d = F.mul(d, m(col, col));
        elem inv = F.inv(m(col, col));
        for (std::uint32_t row = col + 1; row < n; ++row) {
            elem f = F.mul(m(row, col), inv);
            if (f == 0) continue;
            for (std::uint32_t j = col; j < n; ++j)
                m(row, j) = F.sub(m(row, j), F.mul(f, m(col, j)));
        }
    }
    return d;
}

bool is_invertible(const MatrixGF& a) { return det(a) != 0; }

MatrixGF inverse(const MatrixGF& a) {
    const FieldCtx& F = a.field();
    std::uint32_t n = a.dim();
    MatrixGF m = a;
    MatrixGF inv = MatrixGF::identity(F, n);
    for (std::uint32_t col = 0; col < n; ++col) {
        std::uint32_t piv = col;
        while (piv < n && m(piv, col) == 0) ++piv;
        if (piv == n) throw std::invalid_argument("matrix is singular");
        if (piv != col) {
            for (std::uint32_t j = 0; j < n; ++j) {
                std::swap(m(piv, j), m(col, j));
                std::swap(inv(piv, j), inv(col, j));
            }
        }
        elem li = F.inv(m(col, col));
        for (std::uint32_t j = 0; j < n; ++j) {
            m(col, j) = F.mul(m(col, j), li);
            inv(col, j) = F.mul(inv(col, j), li);
        }
        for (std::uint32_t row = 0; row < n; ++row) {
            if (row == col) continue;
            elem f = m(row, col);
            if (f == 0) continue;
            for (std::uint32_t j = 0; j < n; ++j) {
                m(row, j) = F.sub(m(row, j), F.mul(f, m(col, j)));
                inv(row, j) = F.sub(inv(row, j), F.mul(f, inv(col, j)));
            }
        }
    }
    return inv;
}

MatrixGF entrywise_frob_p(const MatrixGF& a, std::uint64_t i) {
    const FieldCtx& F = a.field();
    MatrixGF r = a;
    for (std::uint32_t row = 0; row < a.dim(); ++row)
        for (std::uint32_t col = 0; col < a.dim(); ++col)
            r(row, col) = F.frob_p(a(row, col), i);
    return r;
}

Poly charpoly(const MatrixGF& a) {
    const FieldCtx& F = a.field();
    std::uint32_t n = a.dim();
    if (n == 0) return Poly::one(F);

    // Hessenberg reduction by similarity transforms; exact over the field.
    MatrixGF h = a;
    for (std::uint32_t col = 0; col + 2 < n; ++col) {
        std::uint32_t piv = col + 1;
        while (piv < n && h(piv, col) == 0) ++piv;
        if (piv == n) continue;
        if (piv != col + 1) {
            for (std::uint32_t j = 0; j < n; ++j) std::swap(h(piv, j), h(col + 1, j));
            for (std::uint32_t i = 0; i < n; ++i) std::swap(h(i, piv), h(i, col + 1));
        }
        elem pinv = F.inv(h(col + 1, col));
        for (std::uint32_t row = col + 2; row < n; ++row) {
            elem f = F.mul(h(row, col), pinv);
            if (f == 0) continue;
            for (std::uint32_t j = 0; j < n; ++j)
                h(row, j) = F.sub(h(row, j), F.mul(f, h(col + 1, j)));
            for (std::uint32_t i = 0; i < n; ++i)
                h(i, col + 1) = F.add(h(i, col + 1), F.mul(f, h(i, row)));
        }
    }

    // p_k = (x - h_{k,k}) p_{k-1} - sum_m h_{m,k} (prod_{j=m+1..k} h_{j,j-1}) p_{m-1}
    std::vector<Poly> p(n + 1);
    p[0] = Poly::one(F);
    for (std::uint32_t k = 1; k <= n; ++k) {
        Poly xk(F, {F.neg(h(k - 1, k - 1)), 1});
        p[k] = mul(xk, p[k - 1]);
        elem prod = 1;
        for (std::uint32_t m = k - 1; m >= 1; --m) {
            prod = F.mul(prod, h(m, m - 1));
            if (prod == 0) break;
            elem ccoef = F.mul(h(m - 1, k - 1), prod);
            if (ccoef != 0) p[k] = sub(p[k], mul_scalar(p[m - 1], ccoef));
        }
    }
    return p[n];
}

std::uint64_t matrix_order(const MatrixGF& a, std::uint64_t cap) {
    if (a.dim() == 0) return 1;
    if (!is_invertible(a)) throw std::invalid_argument("order of a singular matrix");
    MatrixGF id = MatrixGF::identity(a.field(), a.dim());
    MatrixGF m = a;
    std::uint64_t k = 1;
    while (m != id) {
        m = mul(m, a);
        if (++k > cap) throw std::runtime_error("matrix order exceeds cap");
    }
    return k;
}

MatrixGF block(const MatrixGF& a, std::uint32_t i0, std::uint32_t j0,
               std::uint32_t rows, std::uint32_t cols) {
    if (rows != cols) throw std::invalid_argument("only square blocks are supported");
    MatrixGF b(a.field(), rows);
    for (std::uint32_t i = 0; i < rows; ++i)
        for (std::uint32_t j = 0; j < cols; ++j)
            b(i, j) = a(i0 + i, j0 + j);
    return b;
}

} // namespace addgal
