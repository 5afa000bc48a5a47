#pragma once

#include <cstddef>

namespace xmm::kernels {

// Data-parallel inner loops behind the tensor primitives. Every kernel has a
// scalar reference implementation and may have SIMD variants; a variant is
// only admitted if it is bit-identical to the reference on all finite inputs.
// That constraint fixes the arithmetic shape of the reductions:
//
//   dot / reduce_sum: eight independent accumulator lanes over blocks of 8,
//   combined as ((l0+l4)+(l2+l6)) + ((l1+l5)+(l3+l7)) — the same tree an AVX2
//   horizontal add performs — then the remainder folded in sequentially.
//   Products are rounded before accumulation (no FMA contraction).
//
//   colmax: max(m, v) == (m > v) ? m : v per element, matching MAXPS operand
//   order.
//
// Transcendental kernels (exp, log, sigmoid) stay scalar so results never
// depend on the dispatch path.
struct Table {
  const char* name;
  float (*dot)(const float* a, const float* b, size_t n);
  float (*reduce_sum)(const float* a, size_t n);
  void (*add)(float* dst, const float* a, const float* b, size_t n);
  void (*sub)(float* dst, const float* a, const float* b, size_t n);
  void (*mul)(float* dst, const float* a, const float* b, size_t n);
  void (*scale)(float* dst, const float* a, float c, size_t n);
  // dst[i] += c * a[i]
  void (*axpy)(float* dst, const float* a, float c, size_t n);
  void (*relu)(float* dst, const float* a, size_t n);
  // dst[i] = max(dst[i], a[i])
  void (*vmax)(float* dst, const float* a, size_t n);
  // x is rows*cols row-major; out[c] = sum / max over rows of column c
  void (*colsum)(float* out, const float* x, size_t rows, size_t cols);
  void (*colmax)(float* out, const float* x, size_t rows, size_t cols);
  // v = momentum*v + g; p = p - lr*v
  void (*sgd_update)(float* p, float* v, const float* g, float momentum,
                     float lr, size_t n);
};

// Active table. Selected once per process: XMM_SIMD=scalar|avx2|auto
// (default auto = best supported).
const Table& active();
const Table& scalar_table();
const Table* avx2_table();  // nullptr when the CPU lacks AVX2

// Scalar reference, templated so the float32 training path and the float64
// gradient-check path share one definition.
namespace ref {

template <typename T>
T dot(const T* a, const T* b, size_t n) {
  T lane[8] = {};
  size_t i = 0;
  for (; i + 8 <= n; i += 8)
    for (int l = 0; l < 8; ++l) lane[l] += a[i + l] * b[i + l];
  T s = ((lane[0] + lane[4]) + (lane[2] + lane[6])) +
        ((lane[1] + lane[5]) + (lane[3] + lane[7]));
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

template <typename T>
T reduce_sum(const T* a, size_t n) {
  T lane[8] = {};
  size_t i = 0;
  for (; i + 8 <= n; i += 8)
    for (int l = 0; l < 8; ++l) lane[l] += a[i + l];
  T s = ((lane[0] + lane[4]) + (lane[2] + lane[6])) +
        ((lane[1] + lane[5]) + (lane[3] + lane[7]));
  for (; i < n; ++i) s += a[i];
  return s;
}

template <typename T>
void add(T* dst, const T* a, const T* b, size_t n) {
  for (size_t i = 0; i < n; ++i) dst[i] = a[i] + b[i];
}

template <typename T>
void sub(T* dst, const T* a, const T* b, size_t n) {
  for (size_t i = 0; i < n; ++i) dst[i] = a[i] - b[i];
}

template <typename T>
void mul(T* dst, const T* a, const T* b, size_t n) {
  for (size_t i = 0; i < n; ++i) dst[i] = a[i] * b[i];
}

template <typename T>
void scale(T* dst, const T* a, T c, size_t n) {
  for (size_t i = 0; i < n; ++i) dst[i] = a[i] * c;
}

template <typename T>
void axpy(T* dst, const T* a, T c, size_t n) {
  for (size_t i = 0; i < n; ++i) dst[i] += a[i] * c;
}

template <typename T>
void relu(T* dst, const T* a, size_t n) {
  for (size_t i = 0; i < n; ++i) dst[i] = (a[i] > T(0)) ? a[i] : T(0);
}

template <typename T>
void vmax(T* dst, const T* a, size_t n) {
  for (size_t i = 0; i < n; ++i) dst[i] = (dst[i] > a[i]) ? dst[i] : a[i];
}

template <typename T>
void colsum(T* out, const T* x, size_t rows, size_t cols) {
  for (size_t c = 0; c < cols; ++c) out[c] = T(0);
  for (size_t r = 0; r < rows; ++r) {
    const T* row = x + r * cols;
    for (size_t c = 0; c < cols; ++c) out[c] += row[c];
  }
}

template <typename T>
void colmax(T* out, const T* x, size_t rows, size_t cols) {
  for (size_t c = 0; c < cols; ++c) out[c] = x[c];
  for (size_t r = 1; r < rows; ++r) {
    const T* row = x + r * cols;
    for (size_t c = 0; c < cols; ++c)
      out[c] = (out[c] > row[c]) ? out[c] : row[c];
  }
}

template <typename T>
void sgd_update(T* p, T* v, const T* g, T momentum, T lr, size_t n) {
  for (size_t i = 0; i < n; ++i) {
    v[i] = momentum * v[i] + g[i];
    p[i] = p[i] - lr * v[i];
  }
}

}  // namespace ref

// Dispatching overloads used by the tensor primitives: float goes through the
// active table, double always through the scalar reference.
inline float dot(const float* a, const float* b, size_t n) { return active().dot(a, b, n); }
inline double dot(const double* a, const double* b, size_t n) { return ref::dot(a, b, n); }
inline float reduce_sum(const float* a, size_t n) { return active().reduce_sum(a, n); }
inline double reduce_sum(const double* a, size_t n) { return ref::reduce_sum(a, n); }
inline void add(float* d, const float* a, const float* b, size_t n) { active().add(d, a, b, n); }
inline void add(double* d, const double* a, const double* b, size_t n) { ref::add(d, a, b, n); }
inline void sub(float* d, const float* a, const float* b, size_t n) { active().sub(d, a, b, n); }
inline void sub(double* d, const double* a, const double* b, size_t n) { ref::sub(d, a, b, n); }
inline void mul(float* d, const float* a, const float* b, size_t n) { active().mul(d, a, b, n); }
inline void mul(double* d, const double* a, const double* b, size_t n) { ref::mul(d, a, b, n); }
inline void scale(float* d, const float* a, float c, size_t n) { active().scale(d, a, c, n); }
inline void scale(double* d, const double* a, double c, size_t n) { ref::scale(d, a, c, n); }
inline void axpy(float* d, const float* a, float c, size_t n) { active().axpy(d, a, c, n); }
inline void axpy(double* d, const double* a, double c, size_t n) { ref::axpy(d, a, c, n); }
inline void relu(float* d, const float* a, size_t n) { active().relu(d, a, n); }
inline void relu(double* d, const double* a, size_t n) { ref::relu(d, a, n); }
inline void vmax(float* d, const float* a, size_t n) { active().vmax(d, a, n); }
inline void vmax(double* d, const double* a, size_t n) { ref::vmax(d, a, n); }
inline void colsum(float* o, const float* x, size_t r, size_t c) { active().colsum(o, x, r, c); }
inline void colsum(double* o, const double* x, size_t r, size_t c) { ref::colsum(o, x, r, c); }
inline void colmax(float* o, const float* x, size_t r, size_t c) { active().colmax(o, x, r, c); }
inline void colmax(double* o, const double* x, size_t r, size_t c) { ref::colmax(o, x, r, c); }
inline void sgd_update(float* p, float* v, const float* g, float m, float lr, size_t n) {
  active().sgd_update(p, v, g, m, lr, n);
}
inline void sgd_update(double* p, double* v, const double* g, double m, double lr, size_t n) {
  ref::sgd_update(p, v, g, m, lr, n);
}

}  // namespace xmm::kernels
