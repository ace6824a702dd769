// Compares the OpenMP kernels against the serial reference implementations:
// matrix products at MLP-training shapes and dense polynomial grid
// evaluation. Run with OMP_NUM_THREADS to control the parallel side.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <vector>

#include <omp.h>

#include "pointwise/linalg.hpp"
#include "pointwise/poly.hpp"

using pointwise::linalg::Matrix;

namespace {

Matrix random_matrix(int r, int c, uint64_t seed) {
  Matrix m(r, c);
  std::mt19937_64 rng(seed);
  for (double& v : m.data) v = (rng() >> 11) * 0x1.0p-53 - 0.5;
  return m;
}

double time_best_of(int reps, const std::function<void()>& fn) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
  }
  return best;
}

volatile double sink = 0.0;

void bench_matmul(int m, int k, int n) {
  const Matrix a = random_matrix(m, k, 1);
  const Matrix b = random_matrix(k, n, 2);
  const double flops = 2.0 * m * k * n;
  const double t_serial = time_best_of(5, [&] {
    Matrix c = pointwise::linalg::serial::matmul(a, b);
    sink = c(0, 0);
  });
  const double t_parallel = time_best_of(5, [&] {
    Matrix c = pointwise::linalg::matmul(a, b);
    sink = c(0, 0);
  });
  std::printf("matmul %4dx%4dx%4d  serial %8.3f ms (%6.2f GF/s)  parallel %8.3f ms (%6.2f GF/s)  speedup %.2fx\n",
              m, k, n, t_serial * 1e3, flops / t_serial * 1e-9, t_parallel * 1e3,
              flops / t_parallel * 1e-9, t_serial / t_parallel);
}

void bench_poly_grid(int degree, int samples) {
  std::vector<double> out(samples);
  const double t_serial = time_best_of(5, [&] {
    for (int i = 0; i < samples; ++i)
      out[i] = pointwise::poly::eval_g(degree, static_cast<double>(i) / (samples - 1));
    sink = out[0];
  });
  const double t_parallel = time_best_of(5, [&] {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < samples; ++i)
      out[i] = pointwise::poly::eval_g(degree, static_cast<double>(i) / (samples - 1));
    sink = out[0];
  });
  std::printf("poly grid n=%2d N=%7d    serial %8.3f ms                 parallel %8.3f ms                 speedup %.2fx\n",
              degree, samples, t_serial * 1e3, t_parallel * 1e3, t_serial / t_parallel);
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());
  bench_matmul(64, 784, 128);
  bench_matmul(64, 128, 128);
  bench_matmul(256, 784, 512);
  bench_matmul(10000, 784, 128);
  bench_poly_grid(29, 1000000);
  bench_poly_grid(64, 1000000);
  return 0;
}
