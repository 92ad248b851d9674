// types.hpp
//
// Shared scalar/matrix aliases, error types, and small utilities used
// across the library. Eigen is the only math dependency.

#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace objf {

using Scalar = double;
using Index = Eigen::Index;

using Vec3 = Eigen::Vector3d;
using Vec3i = Eigen::Vector3i;
using VecX = Eigen::VectorXd;
using Mat3 = Eigen::Matrix3d;
using MatX = Eigen::MatrixXd;
using MatX3 = Eigen::Matrix<Scalar, Eigen::Dynamic, 3>;
using MatX3i = Eigen::Matrix<int, Eigen::Dynamic, 3>;
using MatX4i = Eigen::Matrix<int, Eigen::Dynamic, 4>;
using MatX8i = Eigen::Matrix<int, Eigen::Dynamic, 8>;
using SpMat = Eigen::SparseMatrix<Scalar>;
using Triplet = Eigen::Triplet<Scalar>;

// Bad or inconsistent user input: unreadable files, malformed records,
// out-of-range indices, unknown names. CLI maps these to exit code 2.
class InputError : public std::runtime_error {
public:
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// A numerical procedure failed to produce a valid result (eigensolver
// non-convergence, singular factorization). CLI maps these to exit code 3.
class NumericalError : public std::runtime_error {
public:
  explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

struct Aabb {
  Vec3 min = Vec3::Constant(std::numeric_limits<Scalar>::max());
  Vec3 max = Vec3::Constant(std::numeric_limits<Scalar>::lowest());

  Vec3 extent() const { return max - min; }
  bool valid() const { return (max.array() > min.array()).all(); }
  void expand(const Vec3& p) {
    min = min.cwiseMin(p);
    max = max.cwiseMax(p);
  }
};

// splitmix64: counter-based hash used to derive reproducible per-pixel
// sample jitter. Not a crypto hash.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Uniform double in [0,1) from a 64-bit hash value.
inline Scalar hash_to_unit(std::uint64_t h) {
  return static_cast<Scalar>(h >> 11) * 0x1.0p-53;
}

// Static-partition parallel loop. Work items must write to disjoint
// locations; result is independent of the thread count.
inline void parallel_for(Index n, int threads, const std::function<void(Index)>& fn) {
  if (threads <= 1 || n < 2) {
    for (Index i = 0; i < n; ++i) fn(i);
    return;
  }
  const int nt = static_cast<int>(std::min<Index>(threads, n));
  std::vector<std::thread> pool;
  pool.reserve(nt);
  for (int t = 0; t < nt; ++t) {
    const Index lo = n * t / nt;
    const Index hi = n * (t + 1) / nt;
    pool.emplace_back([lo, hi, &fn]() {
      for (Index i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace objf
