#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "edr/errors.hpp"
#include "edr/kaplansky.hpp"
#include "edr/matrix.hpp"
#include "edr/rings.hpp"
#include "edr/smith.hpp"

namespace edr {

/// Number of nonzero invariant factors.
template <BezoutDomainElement T>
std::size_t mxrank(const Matrix<T>& m) {
    return smith(m).d.size();
}

/// Row-space kernel generators: kermx(M) * M = 0, and every row vector X
/// with X * M = 0 is Y * kermx(M) for some Y. The matrix is the partial
/// identity (I_m - I_r) times the left transition matrix, i.e. P with its
/// first rank(M) rows zeroed.
template <BezoutDomainElement T>
Matrix<T> kermx(const Matrix<T>& m) {
    SmithResult<T> r = smith(m);
    Matrix<T> k = std::move(r.P);
    for (std::size_t i = 0; i < r.d.size(); ++i)
        for (std::size_t j = 0; j < k.cols(); ++j) k(i, j) = T{};
    return k;
}

/// Column-space mirror: M * cokermx(M) = 0 with the symmetric completeness
/// property; Q with its first rank(M) columns zeroed.
template <BezoutDomainElement T>
Matrix<T> cokermx(const Matrix<T>& m) {
    SmithResult<T> r = smith(m);
    Matrix<T> k = std::move(r.Q);
    for (std::size_t j = 0; j < r.d.size(); ++j)
        for (std::size_t i = 0; i < k.rows(); ++i) k(i, j) = T{};
    return k;
}

/// Membership of x in the ideal generated by gens, with explicit
/// coefficients: Some(ys) with x = sum gens[i]*ys[i], or None.
template <BezoutDomainElement T>
std::optional<std::vector<T>> ideal_member(const T& x, const std::vector<T>& gens) {
    T g{};
    std::vector<T> coef;
    for (const T& gen : gens) {
        ExtGcd<T> e = egcdr(g, gen);
        for (T& c : coef) c = c * e.u;
        coef.push_back(e.v);
        g = e.g;
    }
    auto q = div_opt(x, g);
    if (!q) return std::nullopt;
    for (T& c : coef) c = *q * c;
    return coef;
}

/// Solves X * M = B exactly. Through P*M*Q = D the system becomes diagonal,
/// where each unknown is a single divisibility test; returns None as soon as
/// one test fails.
template <BezoutDomainElement T>
std::optional<Matrix<T>> solve_xm_eq_b(const Matrix<T>& m, const Matrix<T>& b) {
    if (b.cols() != m.cols()) throw DimensionError("solve_xm_eq_b: column counts differ");
    SmithResult<T> r = smith(m);
    Matrix<T> c = b * r.Q;
    const std::size_t rank = r.d.size();
    Matrix<T> y(b.rows(), m.rows());
    for (std::size_t i = 0; i < c.rows(); ++i) {
        for (std::size_t j = 0; j < rank; ++j) {
            auto q = div_opt(c(i, j), r.d[j]);
            if (!q) return std::nullopt;
            y(i, j) = std::move(*q);
        }
        for (std::size_t j = rank; j < c.cols(); ++j)
            if (!is_zero(c(i, j))) return std::nullopt;
    }
    return y * r.P;
}

/// A finitely presented module: m1 relation rows over m0 generators; the
/// module presented is coker(M) = R^{m0} / im(M).
template <RingElement T>
struct Presentation {
    Matrix<T> M;

    std::size_t relations() const { return M.rows(); }
    std::size_t generators() const { return M.cols(); }

    friend bool operator==(const Presentation& a, const Presentation& b) {
        return a.M == b.M;
    }
};

/// The canonical form of a finitely presented module: free rank plus the
/// non-unit torsion invariant factors (canonical, nonzero, chained).
template <RingElement T>
struct ModuleDecomposition {
    std::size_t free_rank = 0;
    std::vector<T> torsion;

    friend bool operator==(const ModuleDecomposition& a, const ModuleDecomposition& b) {
        if (a.free_rank != b.free_rank || a.torsion.size() != b.torsion.size()) return false;
        for (std::size_t i = 0; i < a.torsion.size(); ++i)
            if (!(a.torsion[i] == b.torsion[i])) return false;
        return true;
    }
    friend bool operator!=(const ModuleDecomposition& a, const ModuleDecomposition& b) {
        return !(a == b);
    }
};

/// coker(M) ~ R^{m0 - n} + R/(d_1) + ... + R/(d_n), unit factors dropped.
template <BezoutDomainElement T>
ModuleDecomposition<T> decompose(const Presentation<T>& p) {
    SmithResult<T> r = smith(p.M);
    ModuleDecomposition<T> out;
    out.free_rank = p.generators() - r.d.size();
    for (T& x : r.d)
        if (!is_unit(x)) out.torsion.push_back(std::move(x));
    return out;
}

/// Module isomorphism is decidable over an EDR: compare the canonical
/// decompositions (torsion lists are canonical associates, so exact
/// equality).
template <BezoutDomainElement T>
bool is_isomorphic(const Presentation<T>& p1, const Presentation<T>& p2) {
    return decompose(p1) == decompose(p2);
}

/// A morphism of presented modules: phiG on generators, phiR on relations,
/// with M * phiG = phiR * N.
template <RingElement T>
struct Morphism {
    Presentation<T> src, tgt;
    Matrix<T> phiG;
    Matrix<T> phiR;
};

/// Checks that phiG descends to a morphism of the presented modules, i.e.
/// that X * N = M * phiG is solvable, and packages the solution as phiR.
template <BezoutDomainElement T>
std::optional<Morphism<T>> morphism_make(const Presentation<T>& src, const Presentation<T>& tgt,
                                         const Matrix<T>& phi_g) {
    if (phi_g.rows() != src.generators() || phi_g.cols() != tgt.generators())
        throw DimensionError("morphism_make: phiG has wrong shape");
    auto phi_r = solve_xm_eq_b(tgt.M, src.M * phi_g);
    if (!phi_r) return std::nullopt;
    return Morphism<T>{src, tgt, phi_g, std::move(*phi_r)};
}

/// A chain complex given by its boundary matrices d_1, d_2, ... where d_k
/// has shape (dim C_k) x (dim C_{k-1}) and acts on row vectors. Dimension
/// chaining and d_{k+1} * d_k = 0 are validated at construction.
template <RingElement T>
class ChainComplex {
public:
    explicit ChainComplex(std::vector<Matrix<T>> boundaries) : b_(std::move(boundaries)) {
        if (b_.empty()) throw DomainError("chain complex needs at least one boundary matrix");
        for (std::size_t k = 1; k < b_.size(); ++k) {
            if (b_[k].cols() != b_[k - 1].rows())
                throw DimensionError("chain complex: boundary dimensions do not chain");
            if (!is_zero_matrix(b_[k] * b_[k - 1]))
                throw DomainError("chain complex: d.d != 0");
        }
    }

    /// Highest degree with cells: d_1..d_N are stored, so this is N.
    std::size_t top_degree() const { return b_.size(); }
    std::size_t dim(std::size_t k) const {
        if (k == 0) return b_[0].cols();
        if (k <= b_.size()) return b_[k - 1].rows();
        return 0;
    }
    /// The boundary d_k, 1 <= k <= top_degree().
    const Matrix<T>& boundary(std::size_t k) const { return b_.at(k - 1); }

private:
    std::vector<Matrix<T>> b_;
};

/// H_k = ker d_k / im d_{k+1}: a presentation of the kernel (a free module
/// on the nonzero rows of kermx) by the boundary rows of the next degree,
/// re-expressed in kernel coordinates, then decomposed. d_0 is the zero map
/// from C_0.
template <BezoutDomainElement T>
ModuleDecomposition<T> homology(const ChainComplex<T>& c, std::size_t k) {
    if (k > c.top_degree()) return {};
    const std::size_t dim_k = c.dim(k);
    Matrix<T> kbasis;
    if (k == 0) {
        kbasis = Matrix<T>::identity(dim_k);
    } else {
        SmithResult<T> r = smith(c.boundary(k));
        const std::size_t rank = r.d.size();
        kbasis = Matrix<T>(dim_k - rank, dim_k);
        for (std::size_t i = 0; i < kbasis.rows(); ++i)
            for (std::size_t j = 0; j < dim_k; ++j) kbasis(i, j) = r.P(rank + i, j);
    }
    Matrix<T> rel(0, kbasis.rows());
    if (k < c.top_degree()) {
        auto x = solve_xm_eq_b(kbasis, c.boundary(k + 1));
        require_internal(x.has_value(), "homology: boundary image escapes the kernel");
        rel = std::move(*x);
    }
    return decompose(Presentation<T>{std::move(rel)});
}

}  // namespace edr
