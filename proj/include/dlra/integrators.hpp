#pragma once
//
// Fixed-rank forward Euler DLRA steps and the dense reference steppers.
//

#include "dlra/core_linalg.hpp"
#include "dlra/separable_operator.hpp"

namespace dlra {

struct StepContext
{
    const AffineSeparableOperator& op;
    double                         dt;
    double                         t = 0.0;

    /// throws DimensionError unless dt > 0 and finite
    void validate() const;
};

/// Unconventional integrator: basis update by K and L steps, then a Galerkin
/// step for the core on the new bases. Rank r in, rank r out.
LowRankFactors step_unconventional(const StepContext& ctx, const LowRankFactors& U);

/// U + dt P_T(U) F(U) stored at width 2r.
LowRankFactors step_tangent(const StepContext& ctx, const LowRankFactors& U);

/// C1 C1^T (U + dt F(U)) D1 D1^T with the unconventional bases C1, D1.
LowRankFactors step_projected_unconventional(const StepContext& ctx, const LowRankFactors& U);

/// Dispatch on the predictor kind.
LowRankFactors step_fixed_rank(const StepContext& ctx, const LowRankFactors& U,
                               PredictorKind kind);

DenseMatrix step_dense_fe(const StepContext& ctx, const DenseMatrix& U);

/// Shu-Osher SSP-RK3; stages evaluated at t, t + dt and t + dt/2.
DenseMatrix step_dense_ssprk3(const StepContext& ctx, const DenseMatrix& U);

}  // namespace dlra
