#pragma once
//
// Rank-adaptive forward Euler steps: RAUC, RAST and the randomized
// predictor-corrector RAPC, with the per-step memory metric.
//

#include <optional>

#include "dlra/integrators.hpp"
#include "dlra/rsvd.hpp"

namespace dlra {

enum class AdaptiveMethod
{
    RAUC,
    RAST,
    RAPC
};

const char* to_string(AdaptiveMethod method);

/// How RAPC picks the retained rank when it removes rank.
enum class RemovalRule
{
    ToleranceBudget,  ///< smallest j with nu^2 + tail(j) <= tau^2, else keep all
    LargestAboveBand  ///< largest j with nu^2 + tail(j) > (delta tau)^2, else 1
};

struct AdaptiveConfig
{
    double         tau      = 1e-6;
    double         delta    = 0.7;
    double         tau_cull = 1e-14;
    RsvdConfig     rsvd;
    PredictorKind  predictor = PredictorKind::Unconventional;
    RemovalRule    removal   = RemovalRule::ToleranceBudget;

    /// throws ConfigError on tau <= 0, delta outside (0, 1) or tau_cull > tau
    void validate() const;
};

enum class Branch
{
    Add,
    Remove,
    Keep
};

const char* to_string(Branch branch);

struct StepReport
{
    Index                 rank_out = 0;
    Index                 memory   = 0;
    std::optional<double> nu;
    std::optional<Branch> branch;
    int                   rsvd_rounds = 0;
    /// sum of squared singular values cut away by the tolerance rule
    double                discarded_energy = 0.0;
};

struct AdaptiveStep
{
    LowRankFactors U;
    StepReport     report;
};

/// Working memory in columns: 2r | (N+1)r + extra_width | r + max(r1, r) + l + p.
/// extra_width carries the inhomogeneity factor width for RAST.
Index memory_metric(AdaptiveMethod method, Index r, Index r1, Index N, Index l, Index p,
                    Index extra_width = 0);

AdaptiveStep step_rauc(const StepContext& ctx, const LowRankFactors& U, const AdaptiveConfig& cfg);

AdaptiveStep step_rast(const StepContext& ctx, const LowRankFactors& U, const AdaptiveConfig& cfg);

/// nu^2 = sum_{i <= l+p} s_i^2 + max(0, theta - (l+p)) s_{l+p}^2
double estimate_nu(const SVDTriple& Rtilde, Index theta, Index l, Index p);

AdaptiveStep step_rapc(const StepContext& ctx, const LowRankFactors& U, const AdaptiveConfig& cfg,
                       RngStream& rng);

}  // namespace dlra
