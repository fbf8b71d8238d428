#pragma once
//
// Dense and factored matrix primitives shared by every other module.
//
// Storage order: DenseMatrix is Eigen's default column-major layout, so
// entry (i, j) of an m x n matrix lives at data()[i + j*m]. Reference
// snapshots on disk use the same order.
//

#include <Eigen/Core>

#include <cstddef>
#include <span>

#include "dlra/error.hpp"

namespace dlra {

using DenseMatrix = Eigen::MatrixXd;
using Vector      = Eigen::VectorXd;
using Index       = Eigen::Index;

/// U = C * S * D^T with C m x r, S r x r, D n x r.
///
/// The orthonormal flags record whether C (resp. D) currently has
/// orthonormal columns; operations that stack blocks clear them.
/// A width-zero factorization is a valid representation of the zero matrix.
struct LowRankFactors
{
    DenseMatrix C;
    DenseMatrix S;
    DenseMatrix D;
    bool        c_orthonormal = false;
    bool        d_orthonormal = false;

    LowRankFactors() = default;
    LowRankFactors(DenseMatrix c, DenseMatrix s, DenseMatrix d,
                   bool c_ortho = false, bool d_ortho = false);

    /// width-zero factors of an m x n zero matrix
    static LowRankFactors zero(Index m, Index n);

    Index rows() const { return C.rows(); }
    Index cols() const { return D.rows(); }
    Index rank() const { return S.rows(); }
    bool  orthonormal() const { return c_orthonormal && d_orthonormal; }

    DenseMatrix dense() const;

    /// throws DimensionError if the factor shapes are inconsistent
    void check_shapes() const;
};

/// left * diag(sigma) * right^T with sigma non-increasing and non-negative.
struct SVDTriple
{
    DenseMatrix left;
    Vector      sigma;
    DenseMatrix right;
};

struct QRFactors
{
    DenseMatrix Q;  ///< m x k, orthonormal columns
    DenseMatrix R;  ///< k x k, upper triangular
};

/// Thin Householder QR of an m x k matrix, k <= m.
///
/// Q always has k orthonormal columns. When M is rank-deficient the extra
/// columns complete an orthonormal basis and the matching rows of R vanish.
QRFactors orthonormalize(const DenseMatrix& M);

/// Orthonormal basis containing range(M), min(rows, cols) columns. A wide M
/// gets a basis of the whole column space.
DenseMatrix range_basis(const DenseMatrix& M);

/// Thin SVD of a small dense matrix (cores and thin blocks only).
///
/// Each left singular vector is signed so its largest-magnitude entry is
/// non-negative; the right vector is flipped with it.
SVDTriple svd_dense(const DenseMatrix& M);

/// Best rank-r1 approximation of U in the Frobenius norm.
LowRankFactors truncate_to_rank(const LowRankFactors& U, Index r1);

/// Smallest r >= 1 with sum_{i>r} sigma_i^2 < tol^2.
Index truncation_rank_for_tolerance(std::span<const double> sigma, double tol);
Index truncation_rank_for_tolerance(const Vector& sigma, double tol);

/// Sum of singular values squared beyond index r (zero based count r).
double tail_energy(const Vector& sigma, Index r);

/// [C addC] diag(S, addS) [D addD]^T; flags are cleared.
LowRankFactors block_concat(const LowRankFactors& U, const DenseMatrix& addC,
                            const DenseMatrix& addS, const DenseMatrix& addD);
LowRankFactors block_concat(const LowRankFactors& U, const LowRankFactors& V);

double frobenius_norm(const LowRankFactors& U);

/// Re-factor K * core * L^T with orthonormal outer factors.
///
/// K and L may be wider than they are tall; the result then has
/// width min(rows, cols of K/L) on each side.
LowRankFactors compress_factors(const DenseMatrix& K, const DenseMatrix& core,
                                const DenseMatrix& L);

/// Orthonormalize both outer factors in place of U without changing its value.
LowRankFactors orthonormalized(const LowRankFactors& U);

/// Rotate U into its SVD basis: C, D orthonormal and S diagonal, non-increasing.
LowRankFactors svd_form(const LowRankFactors& U);

bool all_finite(const DenseMatrix& M);

}  // namespace dlra
