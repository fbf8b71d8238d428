#pragma once
//
// Experiment descriptions, single runs, studies over seeds / step sizes /
// oversampling, the on-disk reference cache, and result files.
//
// Reference snapshot layout (little-endian):
//   bytes 0-7    magic "DLRAREF1"
//   bytes 8-15   uint64 rows
//   bytes 16-23  uint64 cols
//   then rows*cols float64 values, column-major (entry (i, j) at i + j*rows)
//

#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "dlra/adaptive.hpp"
#include "dlra/config.hpp"
#include "dlra/dg_problems.hpp"

namespace dlra {

enum class Method
{
    FixedUC,
    FixedTan,
    FixedProj,
    RAUC,
    RAST,
    RapcUC,
    RapcTan,
    RapcProj,
    DenseFE,
    DenseSSPRK3
};

Method      parse_method(const std::string& name);
const char* to_string(Method method);
bool        is_dense(Method method);
bool        is_fixed_rank(Method method);
bool        is_stochastic(Method method);
ProblemKind parse_problem(const std::string& name);

struct ExperimentSpec
{
    ProblemKind problem = ProblemKind::SolidBody;
    DGGrid1D    grid_x;
    DGGrid1D    grid_y;
    double      eps = 0.2;

    Method      method = Method::DenseFE;
    std::string dt_expr = "1/4096";
    double      dt      = 1.0 / 4096.0;
    double      T       = 0.0;
    std::string tau_expr;  ///< may reference dt
    double      tau = 0.0;

    std::optional<double> delta;  ///< default 0.5 for rapc_tan, else 0.7
    double      tau_cull = 1e-14;
    int         l        = 3;
    int         p        = 7;
    RemovalRule removal  = RemovalRule::ToleranceBudget;

    std::uint64_t seed = 1;
    int           runs = 1;
    Index         initial_rank_pad = 0;  ///< widen U0 to this rank (0 = leave)

    std::string reference = "compute";  ///< "compute", "none" or a snapshot path
    std::string cache_dir = "cache";
    std::string out_dir   = "results";

    std::vector<std::string> dt_list;
    std::vector<int>         p_list;
    int numerical_rank_every = 0;  ///< steps between numerical-rank samples (0 = off)

    std::string label = "experiment";

    static ExperimentSpec from_config(const KeyValueConfig& cfg);

    /// copy with a different step size; tau is re-evaluated against it
    ExperimentSpec with_dt(double new_dt) const;
    ExperimentSpec with_method(Method m) const;

    double         effective_delta() const;
    AdaptiveConfig adaptive_config(std::uint64_t seed) const;
    Index          step_count() const;

    /// throws ConfigError on inconsistent parameters
    void validate() const;
};

AssembledProblem build_problem(const ExperimentSpec& spec);

struct StepRow
{
    Index                 step = 0;
    double                time = 0.0;
    Index                 rank = 0;
    std::optional<Index>  memory;
    std::optional<double> nu;
    std::optional<Branch> branch;
    std::optional<double> discarded_energy;
};

struct NumericalRankRow
{
    Index  step;
    double time;
    Index  rank_1e8;
    Index  rank_1e10;
};

struct RunSummary
{
    double        error = 0.0;  ///< Frobenius distance to the reference; NaN without one
    Index         initial_rank = 0;
    Index         final_rank   = 0;
    Index         max_rank     = 0;
    Index         max_memory   = 0;  ///< 0 for methods without a memory metric
    Index         steps        = 0;
    Index         num_terms    = 0;
    Index         inhomogeneity_width = 0;
    int           rsvd_rounds  = 0;
    double        wall_seconds = 0.0;
    std::uint64_t seed         = 0;
};

struct RunRecord
{
    std::vector<StepRow>          rows;
    std::vector<NumericalRankRow> numerical_rank;
    RunSummary                    summary;
    DenseMatrix                   final_state;
};

/// Dense end states keyed by (problem, grid, eps, dt, T, scheme), cached on disk.
class ReferenceCache
{
public:
    explicit ReferenceCache(std::string dir);

    /// SSP-RK3 (or `scheme`) solution at spec.T with spec.dt
    DenseMatrix get(const ExperimentSpec& spec, Method scheme = Method::DenseSSPRK3);
    std::string path_for(const ExperimentSpec& spec, Method scheme) const;

private:
    std::string m_dir;
    std::mutex  m_mutex;
};

/// Time-step the method without comparing to anything.
RunRecord simulate(const ExperimentSpec& spec, std::uint64_t seed);

/// simulate + error against the reference named by spec.reference.
RunRecord run(const ExperimentSpec& spec, std::uint64_t seed, ReferenceCache* cache);

struct ConvergencePoint
{
    double dt;
    double error;
    Index  max_rank;
};

struct ConvergenceResult
{
    std::vector<ConvergencePoint> points;
    double                        slope = 0.0;
};

/// least-squares slope of log(y) against log(x)
double fitted_slope(const std::vector<double>& x, const std::vector<double>& y);

ConvergenceResult convergence_study(const ExperimentSpec& spec, const std::vector<double>& dts,
                                    ReferenceCache* cache, int threads = 1);

struct StatisticsResult
{
    double                     mean = 0.0;
    double                     std  = 0.0;  ///< N - 1 denominator
    std::vector<double>        errors;
    std::vector<std::uint64_t> seeds;
    std::vector<Index>         max_ranks;
};

/// sample mean and standard deviation (N - 1 denominator; 0 for one sample)
std::pair<double, double> mean_and_std(const std::vector<double>& xs);

using RunObserver = std::function<void(int index, const RunRecord&)>;

StatisticsResult statistics_study(const ExperimentSpec& spec, int n_runs, ReferenceCache* cache,
                                  int threads = 1, const RunObserver& observer = {});

struct SweepPoint
{
    int              p;
    StatisticsResult stats;
};

std::vector<SweepPoint> oversampling_sweep(const ExperimentSpec& spec, const std::vector<int>& ps,
                                           int n_runs, ReferenceCache* cache, int threads = 1);

/// Run fn(0..n-1) on up to `threads` workers; the first exception is rethrown.
void parallel_for(int n, int threads, const std::function<void(int)>& fn);

void        write_snapshot(const std::string& path, const DenseMatrix& M);
DenseMatrix read_snapshot(const std::string& path);

void write_step_csv(const std::string& path, const RunRecord& record);
void write_numerical_rank_csv(const std::string& path, const RunRecord& record);
void write_summary_json(const std::string& path, const ExperimentSpec& spec, const RunRecord& record);

/// Recompute every memory entry of a step CSV from its rank column.
/// Returns the number of mismatching rows; rows with an empty memory field
/// must belong to a method without a metric.
Index check_memory_column(const std::string& csv_path, Method method, Index initial_rank,
                          Index num_terms, Index l, Index p, Index inhomogeneity_width);

}  // namespace dlra
