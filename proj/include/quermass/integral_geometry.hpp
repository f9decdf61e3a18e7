#pragma once

#include "quermass/body.hpp"
#include "quermass/quermass.hpp"

#include <cstdint>

namespace quermass {

struct SubspaceSample {
    Eigen::MatrixXd frame;  // d x m, orthonormal columns
    std::uint64_t seed_index;
};

/// Haar-distributed m-dimensional subspace of R^d: QR of a seeded Gaussian
/// matrix with the R-diagonal sign fix. Deterministic per seed.
SubspaceSample sample_subspace(int d, int m, std::uint64_t seed);

struct KubotaResult {
    int k = 0, j = 0;
    int rotations = 0;
    double lhs = 0.0;     // mean of W_{k+1,j}(K|P) over sampled subspaces
    double stderr_ = 0.0; // sample standard deviation / sqrt(rotations)
    double rhs = 0.0;     // (omega_{k+1}/omega_d) W_{d, d-1-k+j}(K)
    double rhs_stderr = 0.0;
    bool pass = false;
};

/// Monte-Carlo check of the Kubota formula. Projected dimension k+1 must be
/// 2 or 3 (exact projected routes); the right side uses the supplied
/// quermassintegrals of the body.
KubotaResult kubota_check(const ConvexBody& body, const QuermassVector& w_body, int k, int j,
                          int rotations, std::uint64_t seed);

/// Convenience overload: computes the body's quermassintegrals with the
/// automatic route first.
KubotaResult kubota_check(const ConvexBody& body, int k, int j, int rotations, std::uint64_t seed,
                          const McSteinerOptions& mc_options = {});

struct DeficitOracle {
    double value = 0.0;
    double stderr_ = 0.0;
};

/// Projection-averaged oracle for the consecutive deficit:
/// E_{d,l}(K) = (omega_d / omega_{d-l}) * mean over subspaces of
/// E_{d-l,0}(K|P). Projected dimension d-l must be 2 or 3.
DeficitOracle projected_deficit_oracle(const ConvexBody& body, int l, int rotations,
                                       std::uint64_t seed);

}  // namespace quermass
