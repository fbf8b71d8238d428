#pragma once
//
// Discontinuous-Galerkin assembly of the 2D transport test problems as
// affine separable operators.
//
// Each direction uses a uniform mesh of (-L, L) with a per-cell Legendre
// basis scaled to be orthonormal in L^2, so the mass matrix is the identity
// and the Frobenius norm of a coefficient matrix is the L^2 norm of the
// function it represents. Degree-of-freedom index = cell * (k + 1) + mode.
//
// 1D form matrices use the row = test function, column = trial function
// convention, i.e. entry (i, j) holds B(phi_j, phi_i).
//

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "dlra/core_linalg.hpp"
#include "dlra/separable_operator.hpp"

namespace dlra {

struct DGGrid1D
{
    double half_width = 1.0;  ///< domain is (-L, L)
    Index  cells      = 2;    ///< must be even so that 0 is a cell boundary
    Index  degree     = 0;

    Index  dofs() const { return cells * (degree + 1); }
    double h() const { return 2.0 * half_width / static_cast<double>(cells); }
    double cell_left(Index c) const { return -half_width + static_cast<double>(c) * h(); }
    double cell_mid(Index c) const { return cell_left(c) + 0.5 * h(); }

    /// throws DimensionError on a non-positive or odd cell count or a negative degree
    void validate() const;
};

namespace dg {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule
{
    std::vector<double> nodes;
    std::vector<double> weights;
};
GaussRule gauss_legendre(int points);

/// Legendre polynomial P_p and its derivative at xi.
double legendre(int p, double xi);
double legendre_derivative(int p, double xi);

/// Value of orthonormal basis mode p of a cell at a point inside it.
double basis_value(const DGGrid1D& grid, Index cell, Index mode, double x);

enum class Region
{
    All,
    Positive,  ///< cells right of (above) zero
    Negative
};

/// (w(z) phi_j, phi_i) over the cells in `region`.
SparseMatrix weighted_mass(const DGGrid1D& grid, const std::function<double(double)>& weight,
                           Region region = Region::All);

/// Which trace an interior flux takes.
enum class Upwind
{
    Left,   ///< flow towards +z; outflow at z = +L
    Right   ///< flow towards -z; outflow at z = -L
};

/// -(w, q') + sum_faces w_up [[q]] + outflow boundary term.
SparseMatrix transport_form(const DGGrid1D& grid, Upwind side);

/// Coefficients of the L^2 projection of the indicator of [a, b].
Vector project_indicator(const DGGrid1D& grid, double a, double b);

/// Coefficients of the L^2 projection of a smooth-per-cell function,
/// splitting cells at the given breakpoints.
Vector project_function(const DGGrid1D& grid, const std::function<double(double)>& f,
                        const std::vector<double>& breakpoints = {});

/// Coefficient vector of the constant function 1.
Vector constant_one(const DGGrid1D& grid);

/// The eight 1D forms of the solid-body rotation operator.
struct SolidBodyForms
{
    std::array<SparseMatrix, 4> x;
    std::array<SparseMatrix, 4> y;
};
SolidBodyForms solid_body_forms(const DGGrid1D& grid_x, const DGGrid1D& grid_y);

}  // namespace dg

/// Inflow traces for the solid-body problem; empty functions mean zero data.
struct InflowData
{
    std::function<double(double y, double t)> right;   ///< g_x(L, y, t), enters where y > 0
    std::function<double(double y, double t)> left;    ///< g_x(-L, y, t), enters where y < 0
    std::function<double(double x, double t)> bottom;  ///< g_y(x, -L, t), enters where x > 0
    std::function<double(double x, double t)> top;     ///< g_y(x, L, t), enters where x < 0

    bool empty() const { return !right && !left && !bottom && !top; }
};

enum class ProblemKind
{
    SolidBody,
    AdvectionRelaxation,
    RotationRelaxationSources
};

const char* to_string(ProblemKind kind);

struct AssembledProblem
{
    AffineSeparableOperator op;
    LowRankFactors          U0;
    DGGrid1D                grid_x;
    DGGrid1D                grid_y;
    ProblemKind             kind;
    std::string             label;
};

/// u_t - y u_x + x u_y = 0 with upwind fluxes; box initial data.
AssembledProblem assemble_solid_body(const DGGrid1D& grid_x, const DGGrid1D& grid_y,
                                     const InflowData& inflow = {});

/// u_t + (1/eps) y u_x + (sigma(x)/eps^2)(u - Pu) = 0; initial data chi_E(x) * 1.
AssembledProblem assemble_advection_relaxation(const DGGrid1D& grid_x, const DGGrid1D& grid_y,
                                               double eps);

/// solid-body rotation + (1/eps)(u - Pu) with a rank-one localized source.
AssembledProblem assemble_rotation_relaxation_sources(const DGGrid1D& grid_x,
                                                      const DGGrid1D& grid_y, double eps);

/// Projection of chi_{|x|<1/2}(x) chi_{|y|<1/2}(y); rank one.
LowRankFactors project_initial_box(const DGGrid1D& grid_x, const DGGrid1D& grid_y);

/// rho_bar zeta^T with rho the projection of chi_E and zeta the coefficients of 1.
LowRankFactors project_initial_rho_times_one(const DGGrid1D& grid_x, const DGGrid1D& grid_y,
                                             double e_lo = -0.2, double e_hi = 0.2);

/// Widen U to `target` columns using the next singular vectors of
/// `dense_source`, with the matching (tiny) singular values on the diagonal.
LowRankFactors pad_rank(const LowRankFactors& U, Index target, const DenseMatrix& dense_source);

/// Boundary-data matrix G_h(t); at most four columns.
LowRankFactors assemble_inflow_G(const DGGrid1D& grid_x, const DGGrid1D& grid_y,
                                 const InflowData& inflow, double t);

/// The five source intervals E_i used by the sources problem.
std::vector<std::pair<double, double>> source_intervals();

}  // namespace dlra
