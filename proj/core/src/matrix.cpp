#include "povmkit/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace povmkit {

namespace {

std::string shape_str(const CMatrix& a) {
  std::ostringstream os;
  os << a.rows() << "x" << a.cols();
  return os.str();
}

void require_same_shape(const char* op, const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument(std::string(op) + ": dimension mismatch " + shape_str(a) +
                                " vs " + shape_str(b));
  }
}

}  // namespace

CMatrix::CMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
  rows_ = rows.size();
  cols_ = rows_ > 0 ? rows.begin()->size() : 0;
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw std::invalid_argument("CMatrix: ragged initializer rows");
    }
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::column(std::initializer_list<Complex> entries) {
  CMatrix m(entries.size(), 1);
  std::size_t i = 0;
  for (const Complex& c : entries) m(i++, 0) = c;
  return m;
}

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
  require_same_shape("add", a, b);
  CMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
  return out;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
  require_same_shape("sub", a, b);
  CMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
  return out;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("matmul: dimension mismatch " + shape_str(a) + " vs " +
                                shape_str(b));
  }
  CMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

CMatrix operator*(const Complex& c, const CMatrix& a) {
  CMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = c * a(i, j);
  return out;
}

CMatrix operator*(double c, const CMatrix& a) { return Complex(c, 0.0) * a; }

CMatrix dagger(const CMatrix& a) {
  CMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = std::conj(a(i, j));
  return out;
}

Complex trace(const CMatrix& a) {
  if (!a.is_square()) {
    throw std::invalid_argument("trace: matrix not square (" + shape_str(a) + ")");
  }
  Complex t = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

Complex trace_inner(const CMatrix& a, const CMatrix& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
    throw std::invalid_argument("trace_inner: dimension mismatch " + shape_str(a) + " vs " +
                                shape_str(b));
  }
  // Tr(A†B) = Σ_ij conj(a_ij) b_ij
  Complex t = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t += std::conj(a(i, j)) * b(i, j);
  return t;
}

double frobenius_norm(const CMatrix& a) {
  double s = 0.0;
  for (const Complex& c : a.entries()) s += std::norm(c);
  return std::sqrt(s);
}

double hermiticity_defect(const CMatrix& a) {
  if (!a.is_square()) return frobenius_norm(a) * 2.0;
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) s += std::norm(a(i, j) - std::conj(a(j, i)));
  return std::sqrt(s);
}

bool approx_equal(const CMatrix& a, const CMatrix& b, double eps) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (std::abs(a(i, j) - b(i, j)) > eps) return false;
  return true;
}

CMatrix vec(const CMatrix& x) {
  if (!x.is_square()) {
    throw std::invalid_argument("vec: matrix not square (" + shape_str(x) + ")");
  }
  const std::size_t n = x.rows();
  CMatrix v(n * n, 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) v(i * n + j, 0) = x(i, j);
  return v;
}

CMatrix unvec(const CMatrix& v, std::size_t n) {
  if (!v.is_column() || v.rows() != n * n) {
    throw std::invalid_argument("unvec: expected " + std::to_string(n * n) +
                                "x1 column, got " + shape_str(v));
  }
  CMatrix x(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) x(i, j) = v(i * n + j, 0);
  return x;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex(0.0, 0.0)) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

CMatrix direct_sum(const CMatrix& a, const CMatrix& b) {
  if ((a.rows() != a.cols()) || (b.rows() != b.cols())) {
    throw std::invalid_argument("direct_sum: blocks must be square, got " + shape_str(a) +
                                " and " + shape_str(b));
  }
  CMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
  return out;
}

CMatrix partial_transpose(const CMatrix& m, std::size_t dim_a, std::size_t dim_b) {
  if (!m.is_square() || m.rows() != dim_a * dim_b) {
    throw std::invalid_argument("partial_transpose: matrix " + shape_str(m) +
                                " does not factor as " + std::to_string(dim_a) + "x" +
                                std::to_string(dim_b));
  }
  CMatrix out(m.rows(), m.cols());
  for (std::size_t a = 0; a < dim_a; ++a)
    for (std::size_t b = 0; b < dim_b; ++b)
      for (std::size_t ap = 0; ap < dim_a; ++ap)
        for (std::size_t bp = 0; bp < dim_b; ++bp)
          out(a * dim_b + bp, ap * dim_b + b) = m(a * dim_b + b, ap * dim_b + bp);
  return out;
}

namespace {

double off_diagonal_norm(const CMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

}  // namespace

EigenResult hermitian_eigen(const CMatrix& h, double eps) {
  if (!h.is_square()) {
    throw std::invalid_argument("hermitian_eigen: matrix not square (" + shape_str(h) + ")");
  }
  const double defect = hermiticity_defect(h);
  const double scale = std::max(1.0, frobenius_norm(h));
  if (defect > eps * scale) {
    std::ostringstream os;
    os << "hermitian_eigen: input not Hermitian, defect norm " << defect;
    throw std::invalid_argument(os.str());
  }

  const std::size_t n = h.rows();
  // Symmetrize to remove the (sub-eps) defect before iterating.
  CMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = 0.5 * (h(i, j) + std::conj(h(j, i)));
  CMatrix v = CMatrix::identity(n);

  const double norm = std::max(frobenius_norm(a), 1e-300);
  const double stop = 1e-15 * norm;
  const int max_sweeps = 64;

  for (int sweep = 0; sweep < max_sweeps && off_diagonal_norm(a) > stop; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double g = std::abs(apq);
        if (g <= stop / (double)(n * n)) continue;
        const Complex phase = apq / g;  // e^{iφ}
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = 0.5 * std::atan2(2.0 * g, app - aqq);
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        // Unitary J: J(p,p)=c, J(p,q)=-s·e^{iφ}, J(q,p)=s·e^{-iφ}, J(q,q)=c.
        // Apply A ← J† A J on columns then rows, V ← V J on columns.
        const Complex sp = s * phase;
        const Complex spc = s * std::conj(phase);
        for (std::size_t i = 0; i < n; ++i) {
          const Complex aip = a(i, p);
          const Complex aiq = a(i, q);
          a(i, p) = c * aip + spc * aiq;
          a(i, q) = -sp * aip + c * aiq;
        }
        for (std::size_t j = 0; j < n; ++j) {
          const Complex apj = a(p, j);
          const Complex aqj = a(q, j);
          a(p, j) = c * apj + sp * aqj;
          a(q, j) = -spc * apj + c * aqj;
        }
        for (std::size_t i = 0; i < n; ++i) {
          const Complex vip = v(i, p);
          const Complex viq = v(i, q);
          v(i, p) = c * vip + spc * viq;
          v(i, q) = -sp * vip + c * viq;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&a](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

  EigenResult out;
  out.eigenvalues.resize(n);
  out.eigenvectors = CMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
  }
  return out;
}

}  // namespace povmkit
