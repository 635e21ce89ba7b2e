#ifndef ADDGAL_MATRIX_HPP
#define ADDGAL_MATRIX_HPP

#include <cstdint>
#include <vector>

#include "addgal/poly.hpp"

namespace addgal {

// Square matrix over a FieldCtx, row-major. The 0x0 matrix is allowed and
// behaves as the identity of a trivial group: det = 1, charpoly = 1.
class MatrixGF {
public:
    MatrixGF() : F_(nullptr), n_(0) {}
    MatrixGF(const FieldCtx& F, std::uint32_t n) : F_(&F), n_(n), a_(std::size_t(n) * n, 0) {}

    static MatrixGF identity(const FieldCtx& F, std::uint32_t n);

    const FieldCtx& field() const { return *F_; }
    std::uint32_t dim() const { return n_; }

    elem operator()(std::uint32_t i, std::uint32_t j) const { return a_[std::size_t(i) * n_ + j]; }
    elem& operator()(std::uint32_t i, std::uint32_t j) { return a_[std::size_t(i) * n_ + j]; }
    const std::vector<elem>& entries() const { return a_; }

    friend bool operator==(const MatrixGF& a, const MatrixGF& b) {
        return a.n_ == b.n_ && a.a_ == b.a_;
    }
    friend bool operator!=(const MatrixGF& a, const MatrixGF& b) { return !(a == b); }

private:
    const FieldCtx* F_;
    std::uint32_t n_;
    std::vector<elem> a_;
};

MatrixGF mul(const MatrixGF& a, const MatrixGF& b);
MatrixGF pow(const MatrixGF& a, std::uint64_t k);
elem det(const MatrixGF& a);            // Gaussian elimination, exact
MatrixGF inverse(const MatrixGF& a);    // throws on singular input
bool is_invertible(const MatrixGF& a);

// Applies x -> x^{p^i} to every entry.
MatrixGF entrywise_frob_p(const MatrixGF& a, std::uint64_t i);

// Characteristic polynomial via Hessenberg reduction, monic of degree n.
Poly charpoly(const MatrixGF& a);

// Multiplicative order; throws on singular input or when the order
// exceeds the cap (which would indicate a bug for the sizes in scope).
std::uint64_t matrix_order(const MatrixGF& a, std::uint64_t cap = 100000000ULL);

MatrixGF block(const MatrixGF& a, std::uint32_t i0, std::uint32_t j0,
               std::uint32_t rows, std::uint32_t cols); // rows == cols submatrix

} // namespace addgal

#endif
