#include "rindler/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace rindler {

namespace {

constexpr int kMaxDim = 8;
constexpr double kOffNormTol = 1e-13;
constexpr int kMaxSweeps = 100;
constexpr double kPsdClampWindow = 1e-10;

void check_dim(int dim) {
  if (dim < 2 || dim > kMaxDim) {
    std::ostringstream os;
    os << "matrix dimension " << dim << " outside supported range [2, " << kMaxDim << "]";
    throw DimensionError(os.str());
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim), entries_(dim * dim, Complex{0.0, 0.0}) {
  check_dim(dim);
}

ComplexMatrix::ComplexMatrix(int dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  check_dim(dim);
  if (entries_.size() != static_cast<size_t>(dim) * dim) {
    throw DimensionError("entry count does not match dim^2");
  }
}

ComplexMatrix ComplexMatrix::identity(int dim) {
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> v) {
  ComplexMatrix m(static_cast<int>(v.size()));
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) m(i, j) = v[i] * std::conj(v[j]);
  return m;
}

Complex ComplexMatrix::trace() const {
  Complex t{0.0, 0.0};
  for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) m(i, j) = std::conj((*this)(j, i));
  return m;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix m(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) m(i, j) = std::conj((*this)(i, j));
  return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix m(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) m(i, j) = (*this)(j, i);
  return m;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
  if (other.dim_ != dim_) throw DimensionError("max_abs_diff: dimension mismatch");
  double worst = 0.0;
  for (size_t k = 0; k < entries_.size(); ++k)
    worst = std::max(worst, std::abs(entries_[k] - other.entries_[k]));
  return worst;
}

double ComplexMatrix::hermiticity_defect() const {
  double worst = 0.0;
  for (int i = 0; i < dim_; ++i)
    for (int j = i; j < dim_; ++j)
      worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return worst;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionError("operator+: dimension mismatch");
  ComplexMatrix m(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) m(i, j) = a(i, j) + b(i, j);
  return m;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionError("operator-: dimension mismatch");
  ComplexMatrix m(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) m(i, j) = a(i, j) - b(i, j);
  return m;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionError("operator*: dimension mismatch");
  const int n = a.dim();
  ComplexMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{0.0, 0.0}) continue;
      for (int j = 0; j < n; ++j) m(i, j) += aik * b(k, j);
    }
  return m;
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& a) {
  ComplexMatrix m(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) m(i, j) = s * a(i, j);
  return m;
}

ComplexMatrix operator*(double s, const ComplexMatrix& a) { return Complex{s, 0.0} * a; }

SubsystemDims SubsystemDims::qubits(int n) {
  SubsystemDims d;
  d.factors.assign(n, 2);
  return d;
}

int SubsystemDims::total() const {
  int p = 1;
  for (int f : factors) p *= f;
  return p;
}

void SubsystemDims::check_against(const ComplexMatrix& m) const {
  if (factors.empty()) throw DimensionError("SubsystemDims: no factors");
  for (int f : factors)
    if (f < 1) throw DimensionError("SubsystemDims: nonpositive factor");
  if (total() != m.dim()) throw DimensionError("SubsystemDims: product does not match matrix dim");
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  const int da = a.dim(), db = b.dim();
  ComplexMatrix m(da * db);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < da; ++j) {
      const Complex aij = a(i, j);
      for (int k = 0; k < db; ++k)
        for (int l = 0; l < db; ++l) m(i * db + k, j * db + l) = aij * b(k, l);
    }
  return m;
}

namespace {

// Decompose a composite index into per-factor digits, most significant first.
void to_digits(int index, const std::vector<int>& factors, int* digits) {
  for (int k = static_cast<int>(factors.size()) - 1; k >= 0; --k) {
    digits[k] = index % factors[k];
    index /= factors[k];
  }
}

int from_digits(const std::vector<int>& factors, const int* digits) {
  int index = 0;
  for (size_t k = 0; k < factors.size(); ++k) index = index * factors[k] + digits[k];
  return index;
}

}  // namespace

ComplexMatrix partial_trace(const ComplexMatrix& m, const SubsystemDims& dims,
                            std::span<const int> keep) {
  dims.check_against(m);
  const int n = static_cast<int>(dims.factors.size());
  if (keep.empty()) throw DimensionError("partial_trace: keep set must be nonempty");
  std::vector<bool> kept(n, false);
  for (int k : keep) {
    if (k < 0 || k >= n) throw DimensionError("partial_trace: keep index out of range");
    if (kept[k]) throw DimensionError("partial_trace: duplicate keep index");
    kept[k] = true;
  }

  std::vector<int> keep_sorted(keep.begin(), keep.end());
  std::sort(keep_sorted.begin(), keep_sorted.end());
  std::vector<int> traced;
  for (int k = 0; k < n; ++k)
    if (!kept[k]) traced.push_back(k);

  std::vector<int> keep_factors, traced_factors;
  for (int k : keep_sorted) keep_factors.push_back(dims.factors[k]);
  for (int k : traced) traced_factors.push_back(dims.factors[k]);

  int dkeep = 1;
  for (int f : keep_factors) dkeep *= f;
  int dtraced = 1;
  for (int f : traced_factors) dtraced *= f;

  ComplexMatrix out(dkeep);
  std::vector<int> di(keep_sorted.size()), dj(keep_sorted.size()), dt(traced.size());
  std::vector<int> row(n), col(n);
  for (int i = 0; i < dkeep; ++i) {
    to_digits(i, keep_factors, di.data());
    for (int j = 0; j < dkeep; ++j) {
      to_digits(j, keep_factors, dj.data());
      Complex sum{0.0, 0.0};
      for (int t = 0; t < dtraced; ++t) {
        if (!traced.empty()) to_digits(t, traced_factors, dt.data());
        for (size_t k = 0; k < keep_sorted.size(); ++k) {
          row[keep_sorted[k]] = di[k];
          col[keep_sorted[k]] = dj[k];
        }
        for (size_t k = 0; k < traced.size(); ++k) {
          row[traced[k]] = dt[k];
          col[traced[k]] = dt[k];
        }
        sum += m(from_digits(dims.factors, row.data()), from_digits(dims.factors, col.data()));
      }
      out(i, j) = sum;
    }
  }
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, const SubsystemDims& dims,
                                int subsystem) {
  dims.check_against(m);
  const int n = static_cast<int>(dims.factors.size());
  if (subsystem < 0 || subsystem >= n)
    throw DimensionError("partial_transpose: subsystem index out of range");

  ComplexMatrix out(m.dim());
  std::vector<int> row(n), col(n);
  for (int i = 0; i < m.dim(); ++i) {
    to_digits(i, dims.factors, row.data());
    for (int j = 0; j < m.dim(); ++j) {
      to_digits(j, dims.factors, col.data());
      std::swap(row[subsystem], col[subsystem]);
      out(from_digits(dims.factors, row.data()), from_digits(dims.factors, col.data())) = m(i, j);
      std::swap(row[subsystem], col[subsystem]);
    }
  }
  return out;
}

EigenResult hermitian_eigen(const ComplexMatrix& m, bool want_vectors) {
  if (!m.is_hermitian(1e-12)) {
    throw Error("hermitian_eigen: input not Hermitian within 1e-12");
  }
  const int n = m.dim();
  // Work on an exactly Hermitian copy.
  ComplexMatrix a = m;
  for (int i = 0; i < n; ++i) {
    a(i, i) = Complex{a(i, i).real(), 0.0};
    for (int j = i + 1; j < n; ++j) {
      const Complex avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
      a(i, j) = avg;
      a(j, i) = std::conj(avg);
    }
  }

  ComplexMatrix v = ComplexMatrix::identity(n);

  auto off_norm = [&]() {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
  };

  int sweep = 0;
  for (; sweep < kMaxSweeps && off_norm() > kOffNormTol; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double absb = std::abs(apq);
        if (absb < 1e-300) continue;

        // Unitary two-sided rotation G = [[c, -s e^{i phi}], [s e^{-i phi}, c]]
        // annihilating a_pq, phi = arg(a_pq). The annihilation condition is
        // t^2 - 2 theta t - 1 = 0; the smaller-magnitude root keeps |t| <= 1.
        const Complex phase = apq / absb;
        const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * absb);
        const double t = (theta >= 0.0 ? -1.0 : 1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const Complex se_pos = s * phase;             // s e^{i phi}
        const Complex se_neg = s * std::conj(phase);  // s e^{-i phi}

        // A <- A G (columns p, q)
        for (int k = 0; k < n; ++k) {
          const Complex akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp + se_neg * akq;
          a(k, q) = -se_pos * akp + c * akq;
        }
        // A <- G^dagger A (rows p, q)
        for (int k = 0; k < n; ++k) {
          const Complex apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk + se_pos * aqk;
          a(q, k) = -se_neg * apk + c * aqk;
        }
        a(p, q) = Complex{0.0, 0.0};
        a(q, p) = Complex{0.0, 0.0};
        a(p, p) = Complex{a(p, p).real(), 0.0};
        a(q, q) = Complex{a(q, q).real(), 0.0};

        if (want_vectors) {
          for (int k = 0; k < n; ++k) {
            const Complex vkp = v(k, p), vkq = v(k, q);
            v(k, p) = c * vkp + se_neg * vkq;
            v(k, q) = -se_pos * vkp + c * vkq;
          }
        }
      }
    }
  }

  if (sweep == kMaxSweeps && off_norm() > kOffNormTol)
    throw Error("hermitian_eigen: Jacobi iteration failed to converge");

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return a(i, i).real() > a(j, j).real(); });

  EigenResult res;
  res.values.resize(n);
  for (int i = 0; i < n; ++i) res.values[i] = a(order[i], order[i]).real();
  if (want_vectors) {
    ComplexMatrix vec(n);
    for (int col = 0; col < n; ++col)
      for (int rowi = 0; rowi < n; ++rowi) vec(rowi, col) = v(rowi, order[col]);
    res.vectors = std::move(vec);
  }
  return res;
}

void validate_density_matrix(const ComplexMatrix& m, const char* context) {
  std::ostringstream os;
  if (!m.is_hermitian(1e-12)) {
    os << context << ": not Hermitian (defect " << m.hermiticity_defect() << ")";
    throw NotAStateError(os.str());
  }
  const double tr_err = std::abs(m.trace() - Complex{1.0, 0.0});
  if (tr_err > 1e-12) {
    os << context << ": trace deviates from 1 by " << tr_err;
    throw NotAStateError(os.str());
  }
  const EigenResult e = hermitian_eigen(m);
  if (e.values.back() < -kPsdClampWindow) {
    os << context << ": negative eigenvalue " << e.values.back();
    throw NotAStateError(os.str());
  }
}

double von_neumann_entropy(const ComplexMatrix& m) {
  validate_density_matrix(m, "von_neumann_entropy");
  const EigenResult e = hermitian_eigen(m);
  double s = 0.0;
  for (double lam : e.values) {
    if (lam <= 0.0) continue;  // clamped window already validated
    s -= lam * std::log2(lam);
  }
  return s;
}

ComplexMatrix sqrt_psd(const ComplexMatrix& m) {
  const EigenResult e = hermitian_eigen(m, true);
  if (e.values.back() < -kPsdClampWindow) throw Error("sqrt_psd: matrix not PSD");
  const int n = m.dim();
  const ComplexMatrix& v = *e.vectors;
  ComplexMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Complex sum{0.0, 0.0};
      for (int k = 0; k < n; ++k) {
        const double lam = std::max(e.values[k], 0.0);
        sum += v(i, k) * std::sqrt(lam) * std::conj(v(j, k));
      }
      out(i, j) = sum;
    }
  return out;
}

}  // namespace rindler
