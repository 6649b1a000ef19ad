#pragma once

#include <cstdint>
#include <random>

#include "gcorr/numerics.hpp"

namespace gcorr {

// Deterministic, splittable random source. Children derived with split()
// are independent streams whose contents depend only on (seed, stream).
class Seeded {
 public:
  explicit Seeded(std::uint64_t seed);

  std::uint64_t seed() const noexcept { return seed_; }
  Seeded split(std::uint64_t stream) const;

  double normal();
  // Uniform on the closed range [lo, hi].
  int uniform_int(int lo, int hi);
  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

// Haar-distributed n x n unitary: complex Gaussian matrix, Householder QR,
// then Q scaled column-wise by the phases of diag(R).
CMatrix haar_unitary(Eigen::Index n, Seeded& rng);

}  // namespace gcorr
