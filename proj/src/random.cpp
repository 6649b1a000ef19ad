#include "gcorr/random.hpp"

#include <cmath>

namespace gcorr {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

Seeded::Seeded(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

Seeded Seeded::split(std::uint64_t stream) const { return Seeded(splitmix64(seed_ ^ splitmix64(stream + 1))); }

double Seeded::normal() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }

int Seeded::uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

CMatrix haar_unitary(Eigen::Index n, Seeded& rng) {
  if (n == 0) return CMatrix(0, 0);
  CMatrix g(n, n);
  const double scale = 1.0 / std::sqrt(2.0);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) {
      const double re = rng.normal();
      const double im = rng.normal();
      g(i, j) = Complex(re, im) * scale;
    }
  }
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ() * CMatrix::Identity(n, n);
  const CMatrix& r = qr.matrixQR();
  for (Eigen::Index j = 0; j < n; ++j) {
    const Complex d = r(j, j);
    const double m = std::abs(d);
    if (m > 0.0) q.col(j) *= d / m;
  }
  return q;
}

}  // namespace gcorr
