// Dense f64 kernels with scalar reference and SIMD variants selected at
// runtime. Every variant of a kernel produces bit-identical results:
//
//  - Reductions (dot, sum, max) accumulate in 16 independent lanes over the
//    main body (lane k covers indices i with i % 16 == k), combine lanes as
//    c[l] = (acc[l] + acc[8+l]) + (acc[4+l] + acc[12+l]) for l in 0..3, then
//    s = (c[0] + c[2]) + (c[1] + c[3]), then fold the tail sequentially.
//  - Multiply-adds are fused (single rounding) in all variants.
//  - exp/tanh/sigmoid follow one fixed op sequence (see scalar_math.hpp);
//    vector code evaluates the same sequence per lane.
//
// The active table is chosen once per process: AVX2 when the CPU supports it
// (x86-64), NEON on aarch64, scalar otherwise. PAMT_KERNELS=scalar|avx2|neon
// overrides the choice; tests use set_active() to compare variants.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace pamt::kern {

enum class Target { kScalar, kAvx2, kNeon };

struct KernelTable {
  const char* name;
  // s = sum_i a[i]*b[i]
  double (*dot)(const double* a, const double* b, std::size_t n);
  // s = sum_i a[i]
  double (*sum)(const double* a, std::size_t n);
  // s = max_i a[i], n >= 1, finite inputs
  double (*max)(const double* a, std::size_t n);
  // y[i] += a * x[i]
  void (*axpy)(double* y, double a, const double* x, std::size_t n);
  // y[i] *= a
  void (*scale)(double* y, double a, std::size_t n);
  // y[i] += x[i]
  void (*add)(double* y, const double* x, std::size_t n);
  // y[i] += a[i] * b[i]
  void (*mul_acc)(double* y, const double* a, const double* b, std::size_t n);
  // y[i] = exp(x[i]); y[i] = tanh(x[i]); y[i] = 1/(1+exp(-x[i]))
  void (*vexp)(double* y, const double* x, std::size_t n);
  void (*vtanh)(double* y, const double* x, std::size_t n);
  void (*vsigmoid)(double* y, const double* x, std::size_t n);
};

extern const KernelTable kScalarTable;
#if defined(__x86_64__) || defined(_M_X64)
extern const KernelTable kAvx2Table;
#endif
#if defined(__aarch64__)
extern const KernelTable kNeonTable;
#endif

// Table for a target, or nullptr if not compiled in / not supported here.
const KernelTable* table_for(Target t);
std::vector<Target> supported_targets();
const char* target_name(Target t);

// Active table (env override applied on first use).
const KernelTable& active();
// Force a target; returns false (and keeps the current one) if unsupported.
bool set_active(Target t);

inline double dot(const double* a, const double* b, std::size_t n) { return active().dot(a, b, n); }
inline double sum(const double* a, std::size_t n) { return active().sum(a, n); }
inline double max(const double* a, std::size_t n) { return active().max(a, n); }
inline void axpy(double* y, double a, const double* x, std::size_t n) { active().axpy(y, a, x, n); }
inline void scale(double* y, double a, std::size_t n) { active().scale(y, a, n); }
inline void add(double* y, const double* x, std::size_t n) { active().add(y, x, n); }
inline void mul_acc(double* y, const double* a, const double* b, std::size_t n) { active().mul_acc(y, a, b, n); }
inline void vexp(double* y, const double* x, std::size_t n) { active().vexp(y, x, n); }
inline void vtanh(double* y, const double* x, std::size_t n) { active().vtanh(y, x, n); }
inline void vsigmoid(double* y, const double* x, std::size_t n) { active().vsigmoid(y, x, n); }

}  // namespace pamt::kern
