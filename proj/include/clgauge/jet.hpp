#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace clg {

// Truncated Taylor data ("jets") of fields R^4 -> V at a point, V any
// algebra with +, -, scalar multiple and an associative product.
// Multi-indices alpha = (a0,a1,a2,a3) with |alpha| <= 3 are enumerated
// once, ordered by total order then lexicographically.

inline constexpr int kMaxJetOrder = 3;

struct MultiIndex {
  std::array<int, 4> a{};
  constexpr int order() const { return a[0] + a[1] + a[2] + a[3]; }
};

namespace detail {

constexpr int count_upto(int order) {
  // number of multi-indices with |alpha| <= order, 4 variables
  int n = 0;
  for (int t = 0; t <= order; ++t) n += (t + 1) * (t + 2) * (t + 3) / 6;
  return n;
}

constexpr int kTableSize = count_upto(kMaxJetOrder);  // 35

constexpr std::array<MultiIndex, kTableSize> make_index_list() {
  std::array<MultiIndex, kTableSize> list{};
  int pos = 0;
  for (int t = 0; t <= kMaxJetOrder; ++t)
    for (int a0 = 0; a0 <= t; ++a0)
      for (int a1 = 0; a1 + a0 <= t; ++a1)
        for (int a2 = 0; a2 + a1 + a0 <= t; ++a2) {
          int a3 = t - a0 - a1 - a2;
          list[pos++] = MultiIndex{{a0, a1, a2, a3}};
        }
  return list;
}

inline constexpr std::array<MultiIndex, kTableSize> kIndexList = make_index_list();

struct IndexLookup {
  // dense (order+1)^4 lookup; -1 marks |alpha| > kMaxJetOrder
  std::array<int, 256> slot{};
  constexpr IndexLookup() {
    for (auto& s : slot) s = -1;
    for (int i = 0; i < kTableSize; ++i) {
      const auto& m = kIndexList[i];
      slot[static_cast<std::size_t>(((m.a[0] * 4 + m.a[1]) * 4 + m.a[2]) * 4 + m.a[3])] = i;
    }
  }
};

inline constexpr IndexLookup kLookup{};

}  // namespace detail

inline constexpr int jet_size(int order) { return detail::count_upto(order); }

inline int mi_index(const MultiIndex& m) {
  for (int i = 0; i < 4; ++i)
    if (m.a[i] < 0 || m.a[i] > kMaxJetOrder)
      throw std::out_of_range("multi-index order exceeds 3");
  int s = detail::kLookup.slot[static_cast<std::size_t>(
      ((m.a[0] * 4 + m.a[1]) * 4 + m.a[2]) * 4 + m.a[3])];
  if (s < 0) throw std::out_of_range("multi-index order exceeds 3");
  return s;
}

inline const MultiIndex& mi_at(int i) { return detail::kIndexList[static_cast<std::size_t>(i)]; }

constexpr double binom(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// product of per-axis binomials C(alpha, beta)
inline double mi_binom(const MultiIndex& a, const MultiIndex& b) {
  double r = 1.0;
  for (int i = 0; i < 4; ++i) r *= binom(a.a[i], b.a[i]);
  return r;
}

template <class V>
struct Jet {
  std::array<double, 4> x{};
  int order = 0;
  std::vector<V> d;

  Jet() : d(1) {}
  Jet(const std::array<double, 4>& point, int k)
      : x(point), order(k), d(static_cast<std::size_t>(jet_size(k))) {}

  const V& value() const { return d[0]; }
  V& at(const MultiIndex& m) { return d[static_cast<std::size_t>(mi_index(m))]; }
  const V& at(const MultiIndex& m) const { return d[static_cast<std::size_t>(mi_index(m))]; }
};

namespace detail {
inline void require_same_point(const std::array<double, 4>& a,
                               const std::array<double, 4>& b) {
  for (int i = 0; i < 4; ++i)
    if (a[i] != b[i]) throw std::invalid_argument("jet base points differ");
}
}  // namespace detail

template <class V>
Jet<V> jet_const(const V& v, const std::array<double, 4>& x, int order) {
  Jet<V> j(x, order);
  j.d[0] = v;
  return j;
}

template <class V>
Jet<V> operator+(const Jet<V>& a, const Jet<V>& b) {
  detail::require_same_point(a.x, b.x);
  Jet<V> r(a.x, std::min(a.order, b.order));
  for (std::size_t i = 0; i < r.d.size(); ++i) r.d[i] = a.d[i] + b.d[i];
  return r;
}

template <class V>
Jet<V> operator-(const Jet<V>& a, const Jet<V>& b) {
  detail::require_same_point(a.x, b.x);
  Jet<V> r(a.x, std::min(a.order, b.order));
  for (std::size_t i = 0; i < r.d.size(); ++i) r.d[i] = a.d[i] - b.d[i];
  return r;
}

template <class V>
Jet<V> operator-(const Jet<V>& a) {
  Jet<V> r = a;
  for (auto& v : r.d) v = -v;
  return r;
}

template <class V, class Scalar>
Jet<V> jet_scale(const Jet<V>& a, Scalar z) {
  Jet<V> r = a;
  for (auto& v : r.d) v = v * z;
  return r;
}

// Leibniz product: D_alpha(ab) = sum_{beta<=alpha} C(alpha,beta) D_beta a D_{alpha-beta} b.
// Mismatched orders truncate to the smaller one.
template <class V>
Jet<V> jet_mul(const Jet<V>& a, const Jet<V>& b) {
  detail::require_same_point(a.x, b.x);
  Jet<V> r(a.x, std::min(a.order, b.order));
  for (std::size_t i = 0; i < r.d.size(); ++i) {
    const MultiIndex& al = mi_at(static_cast<int>(i));
    V acc{};
    MultiIndex be;
    for (be.a[0] = 0; be.a[0] <= al.a[0]; ++be.a[0])
      for (be.a[1] = 0; be.a[1] <= al.a[1]; ++be.a[1])
        for (be.a[2] = 0; be.a[2] <= al.a[2]; ++be.a[2])
          for (be.a[3] = 0; be.a[3] <= al.a[3]; ++be.a[3]) {
            MultiIndex rest{{al.a[0] - be.a[0], al.a[1] - be.a[1],
                             al.a[2] - be.a[2], al.a[3] - be.a[3]}};
            double c = mi_binom(al, be);
            acc = acc + (a.at(be) * b.at(rest)) * c;
          }
    r.d[i] = acc;
  }
  return r;
}

template <class V>
Jet<V> jet_partial(const Jet<V>& a, int mu) {
  if (a.order < 1) throw std::invalid_argument("jet_partial: order 0 jet");
  Jet<V> r(a.x, a.order - 1);
  for (std::size_t i = 0; i < r.d.size(); ++i) {
    MultiIndex m = mi_at(static_cast<int>(i));
    m.a[mu] += 1;
    r.d[i] = a.at(m);
  }
  return r;
}

// Entrywise application of a linear map on V (grade projection, dagger, ...).
template <class V, class F>
Jet<V> jet_map(const Jet<V>& a, F&& f) {
  Jet<V> r = a;
  for (auto& v : r.d) v = f(v);
  return r;
}

template <class V>
Jet<V> jet_commutator(const Jet<V>& a, const Jet<V>& b) {
  return jet_mul(a, b) - jet_mul(b, a);
}

template <class V>
double jet_norm_inf(const Jet<V>& a) {
  double m = 0.0;
  for (const auto& v : a.d) m = std::max(m, norm_inf(v));
  return m;
}

template <class V>
Jet<V> jet_truncate(const Jet<V>& a, int order) {
  if (order >= a.order) return a;
  Jet<V> r(a.x, order);
  for (std::size_t i = 0; i < r.d.size(); ++i) r.d[i] = a.d[i];
  return r;
}

}  // namespace clg
