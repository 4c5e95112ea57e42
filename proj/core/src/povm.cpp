#include "povmkit/povm.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "povmkit/tensors.hpp"

namespace povmkit {

std::string spherical_label(int k, int q) {
  std::ostringstream os;
  os << "k=" << k << ",q=";
  if (q > 0) os << "+";
  os << q;
  return os.str();
}

BasisSet elementary_basis(std::size_t n) {
  if (n < 1) throw std::invalid_argument("elementary_basis: N must be >= 1");
  BasisSet basis;
  basis.dim = n;
  basis.mats.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      CMatrix e(n, n);
      e(i, j) = 1.0;
      basis.mats.push_back(std::move(e));
    }
  }
  return basis;
}

BasisSet basis_from_unitary(const CMatrix& u, double eps) {
  if (!u.is_square()) throw std::invalid_argument("basis_from_unitary: U not square");
  const std::size_t nsq = u.rows();
  const std::size_t n = static_cast<std::size_t>(std::lround(std::sqrt(double(nsq))));
  if (n * n != nsq) {
    throw std::invalid_argument("basis_from_unitary: U dimension " + std::to_string(nsq) +
                                " is not a perfect square");
  }
  const double defect = frobenius_norm(dagger(u) * u - CMatrix::identity(nsq));
  if (defect > std::max(eps, 1e-10) * std::sqrt(double(nsq))) {
    std::ostringstream os;
    os << "basis_from_unitary: U not unitary, defect norm " << defect;
    throw std::invalid_argument(os.str());
  }

  BasisSet out;
  out.dim = n;
  out.mats.reserve(nsq);
  for (const CMatrix& e : elementary_basis(n).mats) {
    out.mats.push_back(unvec(u * vec(e), n));
  }
  return out;
}

PovmSet povm_from_basis(const BasisSet& basis, double eps) {
  const std::size_t n = basis.dim;
  if (n < 1 || basis.mats.size() != n * n) {
    throw std::invalid_argument("povm_from_basis: basis must hold N² matrices");
  }
  // Orthogonality with a common norm constant c > 0.
  const double tol = std::max(eps, 1e-10);
  const double c = trace_inner(basis.mats[0], basis.mats[0]).real();
  if (c <= tol) throw std::invalid_argument("povm_from_basis: degenerate basis (zero norm)");
  double trace_sum = 0.0;
  for (std::size_t a = 0; a < basis.mats.size(); ++a) {
    for (std::size_t b = a; b < basis.mats.size(); ++b) {
      const Complex inner = trace_inner(basis.mats[a], basis.mats[b]);
      const Complex expected = (a == b) ? Complex(c, 0.0) : Complex(0.0, 0.0);
      if (std::abs(inner - expected) > tol * std::max(1.0, c)) {
        std::ostringstream os;
        os << "povm_from_basis: orthogonality violated at pair (" << a << "," << b
           << "), Tr(T_a† T_b) = " << inner;
        throw std::invalid_argument(os.str());
      }
    }
    trace_sum += trace_inner(basis.mats[a], basis.mats[a]).real();
  }

  const double alpha = static_cast<double>(n) / trace_sum;
  PovmSet set;
  set.dim = n;
  set.elements.reserve(basis.mats.size());
  for (std::size_t a = 0; a < basis.mats.size(); ++a) {
    std::ostringstream label;
    label << "i=" << (a / n + 1) << ",j=" << (a % n + 1);
    set.elements.push_back(
        PovmElement{label.str(), alpha * (basis.mats[a] * dagger(basis.mats[a])), 1});
  }
  return set;
}

PovmSet spherical_povm(HalfInt j) {
  if (j.twice < 0) throw std::invalid_argument("spherical_povm: negative j");
  const std::size_t n = static_cast<std::size_t>(j.twice) + 1;
  const double norm = static_cast<double>(n * n);  // (2j+1)², fixed by completeness
  PovmSet set;
  set.dim = n;
  set.elements.reserve(n * n);
  for (const SphericalTensor& op : tensor_basis(j)) {
    set.elements.push_back(
        PovmElement{spherical_label(op.k, op.q), (1.0 / norm) * (op.mat * dagger(op.mat)), 1});
  }
  return set;
}

namespace {

// Parses "k=<int>,q=<signed int>"; returns nullopt for foreign labels.
std::optional<std::pair<int, int>> parse_spherical_label(const std::string& label) {
  int k = 0, q = 0;
  char plus = '\0';
  if (std::sscanf(label.c_str(), "k=%d,q=+%d%c", &k, &q, &plus) == 2) return {{k, q}};
  if (std::sscanf(label.c_str(), "k=%d,q=%d%c", &k, &q, &plus) == 2) return {{k, q}};
  return std::nullopt;
}

std::string merged_label(const std::vector<const PovmElement*>& members) {
  if (members.size() == 1) return members[0]->label;
  std::vector<std::pair<int, int>> kq;
  bool spherical = true;
  for (const PovmElement* e : members) {
    const auto parsed = parse_spherical_label(e->label);
    if (!parsed) {
      spherical = false;
      break;
    }
    kq.push_back(*parsed);
  }
  if (spherical && std::all_of(kq.begin(), kq.end(),
                               [&kq](const auto& p) { return p.second == kq[0].second; })) {
    std::ostringstream os;
    os << "k\xE2\x88\x88{";  // k∈{...}
    for (std::size_t i = 0; i < kq.size(); ++i) os << (i ? "," : "") << kq[i].first;
    os << "},q=";
    if (kq[0].second > 0) os << "+";
    os << kq[0].second;
    return os.str();
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < members.size(); ++i) os << (i ? "+" : "") << members[i]->label;
  return os.str();
}

}  // namespace

PovmSet coalesce_degenerate(const PovmSet& set, double eps) {
  PovmSet out;
  out.dim = set.dim;
  std::vector<std::vector<const PovmElement*>> groups;
  std::vector<CMatrix> reps;  // per-member matrix each group was keyed on
  for (const PovmElement& e : set.elements) {
    bool merged = false;
    for (std::size_t g = 0; g < groups.size(); ++g) {
      if (approx_equal(reps[g], e.mat, eps)) {
        groups[g].push_back(&e);
        merged = true;
        break;
      }
    }
    if (!merged) {
      groups.push_back({&e});
      reps.push_back(e.mat);
    }
  }
  for (const auto& group : groups) {
    PovmElement m;
    m.label = merged_label(group);
    m.mat = group[0]->mat;
    m.multiplicity = group[0]->multiplicity;
    for (std::size_t i = 1; i < group.size(); ++i) {
      m.mat = m.mat + group[i]->mat;
      m.multiplicity += group[i]->multiplicity;
    }
    out.elements.push_back(std::move(m));
  }
  return out;
}

double completeness_defect(const PovmSet& set) {
  if (set.elements.empty()) return std::sqrt(static_cast<double>(set.dim));
  CMatrix sum(set.dim, set.dim);
  for (const PovmElement& e : set.elements) sum = sum + e.mat;
  return frobenius_norm(sum - CMatrix::identity(set.dim));
}

}  // namespace povmkit
