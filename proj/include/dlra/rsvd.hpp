#pragma once
//
// Seeded randomized SVD of a factored matrix.
//
// Random stream: xoshiro256** (Blackman & Vigna) whose 256-bit state is
// filled from the 64-bit seed by four SplitMix64 outputs. Uniform doubles
// take the top 53 bits, u = (x >> 11) * 2^-53. Standard normals come from
// the Marsaglia polar method on 2u - 1 pairs, and the second value of each
// accepted pair is cached for the next call.
//

#include <cstdint>
#include <optional>

#include "dlra/core_linalg.hpp"

namespace dlra {

struct RsvdConfig
{
    int           l    = 3;  ///< approximation rank, >= 2
    int           p    = 7;  ///< oversampling, >= 4
    std::uint64_t seed = 0;

    /// throws ConfigError on l < 2 or p < 4
    void validate() const;
};

class RngStream
{
public:
    explicit RngStream(std::uint64_t seed = 0);

    /// independent stream for run `index` under a master seed
    static RngStream derive(std::uint64_t master, std::uint64_t index);

    std::uint64_t next_u64();
    double        uniform();  ///< in [0, 1)
    double        normal();

private:
    std::uint64_t         m_s[4];
    std::optional<double> m_spare;
};

std::uint64_t splitmix64(std::uint64_t& state);

/// seed of run `index` under a master seed; RngStream::derive uses it
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// rows x cols of i.i.d. standard normals, filled column by column.
DenseMatrix gaussian_matrix(RngStream& rng, Index rows, Index cols);

/// Rtilde = Q Q^T R as left * diag(sigma) * right^T with l + p columns.
///
/// R is touched only through R Y and R^T Q in factored form. A sketch that
/// comes back non-finite is redrawn once before NumericError is thrown.
SVDTriple randomized_svd(const LowRankFactors& R, const RsvdConfig& cfg, RngStream& rng);

}  // namespace dlra
