#include "simplexharm/youngrep.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include <Eigen/SVD>

#include "simplexharm/errors.hpp"

namespace simplexharm::young {

using perm::Partition;
using perm::Permutation;

namespace {

constexpr double kPivotTolerance = 1e-9;
constexpr double kRankCutoff = 1e-8;

std::vector<StandardTableau> enumerate_tableaux(const Partition& f) {
  std::vector<StandardTableau> out;
  std::vector<std::vector<int>> rows(static_cast<size_t>(f.length()));
  const int n = f.size();
  std::function<void(int)> place = [&](int entry) {
    if (entry > n) {
      out.push_back(StandardTableau{f, rows});
      return;
    }
    for (size_t r = 0; r < rows.size(); ++r) {
      const auto len = rows[r].size();
      if (static_cast<int>(len) >= f[static_cast<int>(r)]) continue;
      if (r > 0 && rows[r - 1].size() <= len) continue;
      rows[r].push_back(entry);
      place(entry + 1);
      rows[r].pop_back();
    }
  };
  place(1);
  return out;
}

std::vector<StandardTableau> reorder(std::vector<StandardTableau> tabs,
                                     const std::vector<std::string>& symbols) {
  std::vector<StandardTableau> out;
  for (const auto& s : symbols) {
    auto it = std::find_if(tabs.begin(), tabs.end(),
                           [&](const StandardTableau& t) { return t.yamanouchi() == s; });
    if (it == tabs.end()) throw ConsistencyError("basis override names unknown tableau " + s);
    out.push_back(*it);
  }
  if (out.size() != tabs.size()) throw ConsistencyError("basis override is incomplete");
  return out;
}

int find_tableau(const std::vector<StandardTableau>& tabs, const std::vector<std::vector<int>>& rows) {
  for (size_t k = 0; k < tabs.size(); ++k)
    if (tabs[k].rows == rows) return static_cast<int>(k);
  throw ConsistencyError("swapped tableau not found in basis");
}

const std::vector<Matrix>& primed_vector_generators() {
  static const std::vector<Matrix> gens = [] {
    Matrix s1(3, 3), s2(3, 3), s3(3, 3);
    s1 << 1, 0, 0, 0, 0, -1, 0, -1, 0;
    s2 << 0, 1, 0, 1, 0, 0, 0, 0, 1;
    s3 << 1, 0, 0, 0, 0, 1, 0, 1, 0;
    return std::vector<Matrix>{s1, s2, s3};
  }();
  return gens;
}

}  // namespace

std::string StandardTableau::yamanouchi() const {
  const int n = shape.size();
  std::string out;
  for (int entry = n; entry >= 1; --entry) out += std::to_string(position(entry).first + 1);
  return out;
}

std::pair<int, int> StandardTableau::position(int entry) const {
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < rows[r].size(); ++c)
      if (rows[r][c] == entry) return {static_cast<int>(r), static_cast<int>(c)};
  throw ArgumentError("entry " + std::to_string(entry) + " not in tableau");
}

int StandardTableau::content(int entry) const {
  const auto [r, c] = position(entry);
  return c - r;
}

StandardTableau StandardTableau::transposed() const {
  const Partition conj = shape.conjugate();
  std::vector<std::vector<int>> cols(static_cast<size_t>(conj.length()));
  for (const auto& row : rows)
    for (size_t c = 0; c < row.size(); ++c) cols[c].push_back(row[c]);
  return StandardTableau{conj, std::move(cols)};
}

std::vector<StandardTableau> standard_tableaux(const Partition& f) {
  static const Partition k32({3, 2});
  static const Partition k221({2, 2, 1});
  static const std::vector<std::string> k32_order = {"22111", "21121", "21211", "12121", "12211"};

  if (f == k32) return reorder(enumerate_tableaux(f), k32_order);
  if (f == k221) {
    std::vector<StandardTableau> out;
    for (const auto& t : standard_tableaux(k32)) out.push_back(t.transposed());
    return out;
  }
  auto tabs = enumerate_tableaux(f);
  std::sort(tabs.begin(), tabs.end(), [](const StandardTableau& a, const StandardTableau& b) {
    return a.yamanouchi() > b.yamanouchi();
  });
  return tabs;
}

std::vector<int> basis_phases(const Partition& f) {
  const auto dim = standard_tableaux(f).size();
  std::vector<int> phases(dim, 1);
  if (f == Partition({2, 2})) phases[1] = -1;
  return phases;
}

ReprMatrix generator_matrix(const Partition& f, int i) {
  const int n = f.size();
  if (i < 1 || i >= n) throw ArgumentError("generator index must satisfy 1 <= i < n");
  const auto tabs = standard_tableaux(f);
  const auto phases = basis_phases(f);
  const auto dim = static_cast<Eigen::Index>(tabs.size());
  Matrix m = Matrix::Zero(dim, dim);
  for (Eigen::Index a = 0; a < dim; ++a) {
    const auto& t = tabs[static_cast<size_t>(a)];
    const int rho = t.content(i + 1) - t.content(i);
    m(a, a) = 1.0 / rho;
    if (std::abs(rho) > 1) {
      auto swapped = t.rows;
      for (auto& row : swapped)
        for (int& x : row) x = (x == i) ? i + 1 : (x == i + 1 ? i : x);
      const int b = find_tableau(tabs, swapped);
      m(a, b) = phases[static_cast<size_t>(a)] * phases[static_cast<size_t>(b)] *
                std::sqrt(1.0 - 1.0 / (static_cast<double>(rho) * rho));
    }
  }
  return ReprMatrix{f, std::move(m)};
}

Matrix rep_matrix_from_generators(const std::vector<Matrix>& generators, const Permutation& p) {
  if (static_cast<int>(generators.size()) != p.degree() - 1)
    throw ArgumentError("need n-1 generator matrices for a permutation of degree n");
  const auto dim = generators.front().rows();
  Matrix m = Matrix::Identity(dim, dim);
  for (int i : p.adjacent_word()) m = m * generators[static_cast<size_t>(i - 1)];
  return m;
}

ReprMatrix rep_matrix(const Partition& f, const Permutation& p) {
  if (f.size() != p.degree()) throw ArgumentError("rep_matrix: partition and permutation degree differ");
  if (f.size() == 1) return ReprMatrix{f, Matrix::Identity(1, 1)};
  std::vector<Matrix> gens;
  for (int i = 1; i < f.size(); ++i) gens.push_back(generator_matrix(f, i).matrix);
  return ReprMatrix{f, rep_matrix_from_generators(gens, p)};
}

Permutation coxeter_element(int n) {
  std::vector<int> word(static_cast<size_t>(n - 1));
  std::iota(word.begin(), word.end(), 1);
  return Permutation::from_word(n, word);
}

Matrix cyclic_average(const Matrix& generator, int order) {
  if (order < 1) throw ArgumentError("cyclic_average: order must be positive");
  Matrix sum = Matrix::Zero(generator.rows(), generator.cols());
  Matrix power = Matrix::Identity(generator.rows(), generator.cols());
  for (int k = 0; k < order; ++k) {
    sum += power;
    power = power * generator;
  }
  return sum / order;
}

ReprMatrix trivial_projector(const Partition& f) {
  const int n = f.size();
  if (n < 2) return ReprMatrix{f, Matrix::Identity(1, 1)};
  const auto elements = perm::cyclic_elements(n);
  const auto dim = static_cast<Eigen::Index>(standard_tableaux(f).size());
  Matrix sum = Matrix::Zero(dim, dim);
  for (const auto& h : elements) sum += rep_matrix(f, h).matrix;
  return ReprMatrix{f, sum / n};
}

Matrix eigenvalue_one_space(const Matrix& op) {
  if (op.rows() != op.cols()) throw ArgumentError("eigenvalue_one_space: matrix must be square");
  const Eigen::Index dim = op.rows();
  Matrix a = op - Matrix::Identity(dim, dim);

  Eigen::JacobiSVD<Matrix> svd(a);
  const auto& sv = svd.singularValues();
  const double largest = sv.size() > 0 ? sv(0) : 0.0;
  Eigen::Index rank = 0;
  for (Eigen::Index k = 0; k < sv.size(); ++k)
    if (sv(k) > kRankCutoff * largest && largest > 0) ++rank;
  const Eigen::Index nullity = dim - rank;

  // Reduced row echelon form with partial pivoting.
  Matrix r = a;
  std::vector<Eigen::Index> pivot_cols;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < dim && row < dim; ++col) {
    Eigen::Index best = row;
    for (Eigen::Index k = row + 1; k < dim; ++k)
      if (std::abs(r(k, col)) > std::abs(r(best, col))) best = k;
    if (std::abs(r(best, col)) < kPivotTolerance) {
      r.block(row, col, dim - row, 1).setZero();
      continue;
    }
    r.row(row).swap(r.row(best));
    r.row(row) /= r(row, col);
    for (Eigen::Index k = 0; k < dim; ++k)
      if (k != row) r.row(k) -= r(k, col) * r.row(row);
    pivot_cols.push_back(col);
    ++row;
  }
  std::vector<Eigen::Index> free_cols;
  for (Eigen::Index col = 0; col < dim; ++col)
    if (std::find(pivot_cols.begin(), pivot_cols.end(), col) == pivot_cols.end()) free_cols.push_back(col);
  if (static_cast<Eigen::Index>(free_cols.size()) != nullity)
    throw ConsistencyError("elimination and SVD disagree on the fixed-space dimension");

  Matrix basis(dim, nullity);
  for (size_t k = 0; k < free_cols.size(); ++k) {
    Vector v = Vector::Zero(dim);
    v(free_cols[k]) = 1.0;
    for (size_t p = 0; p < pivot_cols.size(); ++p)
      v(pivot_cols[p]) = -r(static_cast<Eigen::Index>(p), free_cols[k]);
    // Modified Gram-Schmidt, two passes.
    for (int pass = 0; pass < 2; ++pass)
      for (size_t q = 0; q < k; ++q) {
        const auto col = basis.col(static_cast<Eigen::Index>(q));
        v -= col.dot(v) * col;
      }
    v.normalize();
    for (Eigen::Index e = 0; e < dim; ++e) {
      if (std::abs(v(e)) > 1e-12) {
        if (v(e) < 0) v = -v;
        break;
      }
    }
    basis.col(static_cast<Eigen::Index>(k)) = v;
  }
  return basis;
}

FixedSubspace fixed_subspace(const Partition& f) {
  const int n = f.size();
  if (n < 2) return FixedSubspace{f, Matrix::Identity(1, 1)};
  const Matrix cox = rep_matrix(f, coxeter_element(n)).matrix;
  return FixedSubspace{f, eigenvalue_one_space(cox)};
}

std::vector<ReprMatrix> tetrahedral_primed_generators() {
  const Partition vec({3, 1});
  const Partition assoc({2, 1, 1});
  std::vector<ReprMatrix> out;
  for (const auto& g : primed_vector_generators()) out.push_back(ReprMatrix{vec, g});
  for (const auto& g : primed_vector_generators()) out.push_back(ReprMatrix{assoc, -g});
  return out;
}

ReprMatrix primed_rep_matrix(const Partition& f, const Permutation& p) {
  if (p.degree() != 4) throw ArgumentError("primed representation is defined on S(4)");
  const auto& base = primed_vector_generators();
  if (f == Partition({3, 1})) return ReprMatrix{f, rep_matrix_from_generators(base, p)};
  if (f == Partition({2, 1, 1})) {
    std::vector<Matrix> neg;
    for (const auto& g : base) neg.push_back(-g);
    return ReprMatrix{f, rep_matrix_from_generators(neg, p)};
  }
  throw ArgumentError("primed representation exists only for [31] and [211]");
}

double max_principal_angle_sine(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw ArgumentError("subspaces live in different dimensions");
  if (a.cols() != b.cols()) return 1.0;
  if (a.cols() == 0) return 0.0;
  const Matrix qa = Eigen::HouseholderQR<Matrix>(a).householderQ() * Matrix::Identity(a.rows(), a.cols());
  const Matrix qb = Eigen::HouseholderQR<Matrix>(b).householderQ() * Matrix::Identity(b.rows(), b.cols());
  const Matrix residual = qb - qa * (qa.transpose() * qb);
  Eigen::JacobiSVD<Matrix> svd(residual);
  return svd.singularValues()(0);
}

}  // namespace simplexharm::young
