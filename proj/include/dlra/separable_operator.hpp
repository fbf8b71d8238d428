#pragma once
//
// Affine N-separable operators F(U, t) = sum_k A_k U B_k^T + G(t), and the
// thin products the low-rank integrators are built on. Nothing here forms an
// m x n matrix except apply_dense, which exists as a full-rank reference path.
//

#include <Eigen/SparseCore>

#include <functional>
#include <vector>

#include "dlra/core_linalg.hpp"

namespace dlra {

using SparseMatrix = Eigen::SparseMatrix<double, Eigen::RowMajor>;

/// Square factor of a separable term: a row-compressed sparse part plus
/// weighted rank-one corrections, applied as  S x + sum_j w_j u_j (v_j^T x).
class FactorMatrix
{
public:
    struct OuterUpdate
    {
        Vector u;
        Vector v;
        double weight = 1.0;
    };

    FactorMatrix() = default;
    explicit FactorMatrix(SparseMatrix sparse, std::vector<OuterUpdate> updates = {});

    static FactorMatrix identity(Index size, double scale = 1.0);
    static FactorMatrix from_dense(const DenseMatrix& M, double drop_tol = 0.0);

    Index size() const { return m_sparse.rows(); }

    const SparseMatrix&             sparse() const { return m_sparse; }
    const std::vector<OuterUpdate>& outer_updates() const { return m_updates; }

    /// this * X
    DenseMatrix apply(const DenseMatrix& X) const;
    /// this^T * X
    DenseMatrix apply_transpose(const DenseMatrix& X) const;
    /// X * this^T  (row-oriented action used by the dense reference path)
    DenseMatrix apply_right_transpose(const DenseMatrix& X) const;

    DenseMatrix to_dense() const;

    FactorMatrix scaled(double s) const;

private:
    SparseMatrix             m_sparse;
    std::vector<OuterUpdate> m_updates;
};

struct SeparableTerm
{
    FactorMatrix A;  ///< acts on columns (m x m)
    FactorMatrix B;  ///< acts on rows (n x n)
};

/// F(U, t) = sum_k A_k U B_k^T + inhomogeneity(t).
///
/// Immutable once built. The inhomogeneity may be empty; when present it is
/// a time-indexed low-rank matrix (boundary data and sources).
class AffineSeparableOperator
{
public:
    using Inhomogeneity = std::function<LowRankFactors(double)>;

    AffineSeparableOperator(Index m, Index n, std::vector<SeparableTerm> terms,
                            Inhomogeneity inhomogeneity = {});

    Index rows() const { return m_rows; }
    Index cols() const { return m_cols; }
    Index num_terms() const { return static_cast<Index>(m_terms.size()); }

    const std::vector<SeparableTerm>& terms() const { return m_terms; }

    bool           has_inhomogeneity() const { return static_cast<bool>(m_inhomogeneity); }
    LowRankFactors inhomogeneity(double t) const;

    /// factor width of the inhomogeneity at time t (0 when absent)
    Index inhomogeneity_width(double t) const;

private:
    Index                      m_rows;
    Index                      m_cols;
    std::vector<SeparableTerm> m_terms;
    Inhomogeneity              m_inhomogeneity;
};

enum class PredictorKind
{
    Unconventional,
    Tangent,
    ProjectedUnconventional
};

const char* to_string(PredictorKind kind);

/// F(U, t) Q for Q n x q, without forming F(U, t).
DenseMatrix apply_thin_right(const AffineSeparableOperator& op, const LowRankFactors& U,
                             const DenseMatrix& Q, double t);

/// F(U, t)^T Q for Q m x q.
DenseMatrix apply_thin_left(const AffineSeparableOperator& op, const LowRankFactors& U,
                            const DenseMatrix& Q, double t);

/// Largest m or n accepted by the dense reference path.
inline constexpr Index dense_size_guard = 1024;

/// sum_k A_k U B_k^T + G(t) on a full matrix.
DenseMatrix apply_dense(const AffineSeparableOperator& op, const DenseMatrix& U, double t);

/// Exact factored forward Euler update U + dt F(U, t), orthonormalized.
///
/// Stacks [C, A_1 C, ..., A_N C, C_g] against [D, B_1 D, ..., B_N D, D_g] with
/// core diag(S, dt S, ..., dt S, dt S_g); no truncation.
LowRankFactors euler_update_factors(const AffineSeparableOperator& op, const LowRankFactors& U,
                                    double dt, double t);

/// Stacked (not orthonormalized) factors of U_n + dt F(U_n, t) - U_pred.
///
/// For the unconventional and projected predictors this is the direct stack
/// of width (N+2) r + w_g. For the tangent predictor it is the two-sided
/// projected form dt (I - C0 C0^T) F(U_n) (I - D0 D0^T) of width N r + w_g.
LowRankFactors residual_factors(const AffineSeparableOperator& op, const LowRankFactors& Un,
                                const LowRankFactors& Upred, double dt, double t,
                                PredictorKind kind);

/// Upper bound on the residual width for a rank-r step.
Index residual_rank_bound(const AffineSeparableOperator& op, Index r, PredictorKind kind,
                          double t);

}  // namespace dlra
