#pragma once
// Integer vectors/matrices, rationals and Smith normal form.

#include <boost/rational.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pu {

using Int = long long;
using Q = boost::rational<Int>;
using IVec = std::vector<Int>;
using QVec = std::vector<Q>;
// boost 1.74 recurses forever on rational == int under C++20; compare with Q(...) only.

struct IMat {
  int rows = 0, cols = 0;
  std::vector<Int> a;

  IMat() = default;
  IMat(int r, int c) : rows(r), cols(c), a(size_t(r) * c, 0) {}
  static IMat identity(int n) {
    IMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static IMat from_rows(const std::vector<IVec>& rs) {
    if (rs.empty()) return {};
    IMat m(int(rs.size()), int(rs[0].size()));
    for (int i = 0; i < m.rows; ++i)
      for (int j = 0; j < m.cols; ++j) m(i, j) = rs[i][j];
    return m;
  }
  static IMat from_cols(const std::vector<IVec>& cs, int n) {
    IMat m(n, int(cs.size()));
    for (int j = 0; j < m.cols; ++j)
      for (int i = 0; i < n; ++i) m(i, j) = cs[j][i];
    return m;
  }
  Int& operator()(int i, int j) { return a[size_t(i) * cols + j]; }
  Int operator()(int i, int j) const { return a[size_t(i) * cols + j]; }
  IVec row(int i) const { return IVec(a.begin() + size_t(i) * cols, a.begin() + size_t(i + 1) * cols); }
  IVec col(int j) const {
    IVec v(rows);
    for (int i = 0; i < rows; ++i) v[i] = (*this)(i, j);
    return v;
  }
  IMat transpose() const {
    IMat t(cols, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
    return t;
  }
  auto operator<=>(const IMat&) const = default;
  bool operator==(const IMat&) const = default;
};

inline IMat operator*(const IMat& x, const IMat& y) {
  if (x.cols != y.rows) throw std::invalid_argument("matrix shape mismatch");
  IMat z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      Int v = x(i, k);
      if (v == 0) continue;
      for (int j = 0; j < y.cols; ++j) z(i, j) += v * y(k, j);
    }
  return z;
}
inline IVec operator*(const IMat& x, const IVec& v) {
  IVec r(x.rows, 0);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) r[i] += x(i, j) * v[j];
  return r;
}
inline QVec operator*(const IMat& x, const QVec& v) {
  QVec r(x.rows, Q(0));
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j)
      if (x(i, j)) r[i] += Q(x(i, j)) * v[j];
  return r;
}
inline IMat operator+(IMat x, const IMat& y) {
  for (size_t i = 0; i < x.a.size(); ++i) x.a[i] += y.a[i];
  return x;
}
inline IMat operator-(IMat x, const IMat& y) {
  for (size_t i = 0; i < x.a.size(); ++i) x.a[i] -= y.a[i];
  return x;
}
inline IMat operator-(IMat x) {
  for (auto& e : x.a) e = -e;
  return x;
}

inline Int dot(const IVec& x, const IVec& y) {
  Int s = 0;
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}
inline Q dot(const QVec& x, const IVec& y) {
  Q s = 0;
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}
inline Q dot(const QVec& x, const QVec& y) {
  Q s = 0;
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}
inline IVec operator+(IVec x, const IVec& y) {
  for (size_t i = 0; i < x.size(); ++i) x[i] += y[i];
  return x;
}
inline IVec operator-(IVec x, const IVec& y) {
  for (size_t i = 0; i < x.size(); ++i) x[i] -= y[i];
  return x;
}
inline IVec operator-(IVec x) {
  for (auto& e : x) e = -e;
  return x;
}
inline IVec operator*(Int c, IVec x) {
  for (auto& e : x) e *= c;
  return x;
}
inline QVec operator+(QVec x, const QVec& y) {
  for (size_t i = 0; i < x.size(); ++i) x[i] += y[i];
  return x;
}
inline QVec operator-(QVec x, const QVec& y) {
  for (size_t i = 0; i < x.size(); ++i) x[i] -= y[i];
  return x;
}
inline QVec operator-(QVec x) {
  for (auto& e : x) e = -e;
  return x;
}
inline QVec operator*(Q c, QVec x) {
  for (auto& e : x) e *= c;
  return x;
}
inline QVec to_q(const IVec& v) { return QVec(v.begin(), v.end()); }
inline bool is_integral(const QVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Q& q) { return q.denominator() == 1; });
}
inline IVec to_int(const QVec& v) {
  IVec r;
  for (auto& q : v) {
    if (q.denominator() != 1) throw std::domain_error("non-integral vector");
    r.push_back(q.numerator());
  }
  return r;
}
inline bool is_zero(const IVec& v) {
  return std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; });
}
inline bool is_zero(const QVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Q& x) { return x == Q(0); });
}
inline Int mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}
inline Q frac(const Q& q) {  // q mod 1, in [0,1)
  Int n = q.numerator(), d = q.denominator();
  return Q(mod(n, d), d);
}

inline std::string fmt_q(const Q& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}
template <class V>
std::string fmt_vec(const V& v) {
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    if constexpr (std::is_same_v<typename V::value_type, Q>)
      s += fmt_q(v[i]);
    else
      s += std::to_string(v[i]);
  }
  return s + "]";
}
inline std::string fmt_mat(const IMat& m) {
  std::string s = "[";
  for (int i = 0; i < m.rows; ++i) s += (i ? "," : "") + fmt_vec(m.row(i));
  return s + "]";
}

// D = U*A*V with U, V unimodular and D diagonal, d_1 | d_2 | ..., d_i >= 0.
struct Smith {
  IMat U, V, D;
  std::vector<Int> d;  // nonzero diagonal entries
  int rank() const { return int(d.size()); }
};

inline Smith smith(const IMat& A) {
  int m = A.rows, n = A.cols;
  IMat D = A, U = IMat::identity(m), V = IMat::identity(n);
  auto swap_rows = [&](IMat& M, int i, int j) {
    for (int c = 0; c < M.cols; ++c) std::swap(M(i, c), M(j, c));
  };
  auto swap_cols = [&](IMat& M, int i, int j) {
    for (int r = 0; r < M.rows; ++r) std::swap(M(r, i), M(r, j));
  };
  auto add_row = [&](IMat& M, int dst, int src, Int f) {  // row dst += f*row src
    for (int c = 0; c < M.cols; ++c) M(dst, c) += f * M(src, c);
  };
  auto add_col = [&](IMat& M, int dst, int src, Int f) {
    for (int r = 0; r < M.rows; ++r) M(r, dst) += f * M(r, src);
  };
  int t = 0;
  for (; t < std::min(m, n); ++t) {
    // pivot: smallest nonzero |entry| in the remaining block
    for (;;) {
      int pi = -1, pj = -1;
      for (int i = t; i < m; ++i)
        for (int j = t; j < n; ++j)
          if (D(i, j) && (pi < 0 || std::abs(D(i, j)) < std::abs(D(pi, pj)))) pi = i, pj = j;
      if (pi < 0) goto done;
      swap_rows(D, t, pi), swap_rows(U, t, pi);
      swap_cols(D, t, pj), swap_cols(V, t, pj);
      bool clean = true;
      for (int i = t + 1; i < m; ++i) {
        Int q = D(i, t) / D(t, t);
        if (q) add_row(D, i, t, -q), add_row(U, i, t, -q);
        if (D(i, t)) clean = false;
      }
      for (int j = t + 1; j < n; ++j) {
        Int q = D(t, j) / D(t, t);
        if (q) add_col(D, j, t, -q), add_col(V, j, t, -q);
        if (D(t, j)) clean = false;
      }
      if (!clean) continue;
      // divisibility of the rest by the pivot
      int bad = -1;
      for (int i = t + 1; i < m && bad < 0; ++i)
        for (int j = t + 1; j < n; ++j)
          if (D(i, j) % D(t, t)) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      add_row(D, t, bad, 1), add_row(U, t, bad, 1);
    }
    if (D(t, t) < 0) {
      for (int c = 0; c < n; ++c) D(t, c) = -D(t, c);
      for (int c = 0; c < m; ++c) U(t, c) = -U(t, c);
    }
  }
done:
  Smith s{U, V, D, {}};
  for (int i = 0; i < std::min(m, n); ++i)
    if (D(i, i)) s.d.push_back(D(i, i));
  return s;
}

inline IMat unimodular_inverse(const IMat& U) {
  // Gauss-Jordan over Q; result must be integral.
  int n = U.rows;
  std::vector<QVec> M(n, QVec(2 * n, Q(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) M[i][j] = U(i, j);
    M[i][n + i] = 1;
  }
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && M[p][c] == Q(0)) ++p;
    if (p == n) throw std::domain_error("singular matrix");
    std::swap(M[p], M[c]);
    Q inv = 1 / M[c][c];
    for (auto& e : M[c]) e *= inv;
    for (int r = 0; r < n; ++r)
      if (r != c && M[r][c] != Q(0)) {
        Q f = M[r][c];
        for (int k = 0; k < 2 * n; ++k) M[r][k] -= f * M[c][k];
      }
  }
  IMat R(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (M[i][n + j].denominator() != 1) throw std::domain_error("not unimodular");
      R(i, j) = M[i][n + j].numerator();
    }
  return R;
}

inline int rank_of(const IMat& A) { return smith(A).rank(); }

// Canonical representatives of Z^n / L, L = column span of B.
struct QuotientReducer {
  IMat U, Uinv;
  std::vector<Int> d;
  explicit QuotientReducer(const IMat& B) {
    Smith s = smith(B);
    U = s.U;
    Uinv = unimodular_inverse(U);
    d = s.d;
  }
  IVec reduce(const IVec& x) const {
    IVec y = U * x;
    for (size_t i = 0; i < d.size(); ++i) y[i] = mod(y[i], d[i]);
    return Uinv * y;
  }
  bool contains(const IVec& x) const {  // x in L
    IVec y = U * x;
    for (size_t i = 0; i < y.size(); ++i)
      if (i < d.size() ? y[i] % d[i] != 0 : y[i] != 0) return false;
    return true;
  }
  // invariant coordinates of x in (Q^n)/(Q-span(L) + Z^n)
  QVec torus_class(const QVec& x) const {
    QVec y = U * x, r;
    for (size_t i = d.size(); i < y.size(); ++i) r.push_back(frac(y[i]));
    return r;
  }
};

// Integer solutions of A z = b: particular solution plus kernel basis.
struct IntSolution {
  IVec particular;
  std::vector<IVec> kernel;
};
inline std::optional<IntSolution> solve_int(const IMat& A, const IVec& b) {
  Smith s = smith(A);
  IVec c = s.U * b;  // D y = c, z = V y
  IVec y(A.cols, 0);
  for (int i = 0; i < A.rows; ++i) {
    Int di = (i < A.cols) ? s.D(i, i) : 0;
    if (di == 0) {
      if (c[i] != 0) return std::nullopt;
    } else {
      if (c[i] % di) return std::nullopt;
      y[i] = c[i] / di;
    }
  }
  IntSolution r{s.V * y, {}};
  for (int j = 0; j < A.cols; ++j)
    if (j >= A.rows || s.D(j, j) == 0) r.kernel.push_back(s.V.col(j));
  return r;
}

// Solve A x = b over Q when solvable (A may be non-square).
inline std::optional<QVec> solve_q(const IMat& A, const QVec& b) {
  int m = A.rows, n = A.cols;
  std::vector<QVec> M(m, QVec(n + 1));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) M[i][j] = A(i, j);
    M[i][n] = b[i];
  }
  std::vector<int> piv;
  int r = 0;
  for (int c = 0; c < n && r < m; ++c) {
    int p = r;
    while (p < m && M[p][c] == Q(0)) ++p;
    if (p == m) continue;
    std::swap(M[p], M[r]);
    Q inv = 1 / M[r][c];
    for (auto& e : M[r]) e *= inv;
    for (int i = 0; i < m; ++i)
      if (i != r && M[i][c] != Q(0)) {
        Q f = M[i][c];
        for (int k = 0; k <= n; ++k) M[i][k] -= f * M[r][k];
      }
    piv.push_back(c);
    ++r;
  }
  for (int i = r; i < m; ++i)
    if (M[i][n] != Q(0)) return std::nullopt;
  QVec x(n, Q(0));
  for (int i = 0; i < r; ++i) x[piv[i]] = M[i][n];
  return x;
}

}  // namespace pu
