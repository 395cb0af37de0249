#include "simplexharm/modes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "simplexharm/errors.hpp"
#include "simplexharm/parallel.hpp"

namespace simplexharm::modes {

namespace {

constexpr double kRankCutoff = 1e-8;
constexpr double kSignificant = 1e-8;

void check_two_j(int two_j) {
  if (two_j < 0 || two_j > kMaxModeTwoJ)
    throw ArgumentError("2j must lie in [0, " + std::to_string(kMaxModeTwoJ) + "]");
}

CMatrix weighted_sum(const std::vector<CMatrix>& mats, const std::vector<double>& weights, double scale) {
  CMatrix sum = CMatrix::Zero(mats.front().rows(), mats.front().cols());
  for (size_t i = 0; i < mats.size(); ++i)
    if (weights[i] != 0.0) sum += weights[i] * mats[i];
  return scale * sum;
}

long long dimension_of(const perm::Partition& f) {
  return perm::character(f, perm::Partition(std::vector<int>(static_cast<size_t>(f.size()), 1)));
}

}  // namespace

std::vector<weyl::GroupOperator> cyclic_operators() {
  const auto g = weyl::permutation_operator(young::coxeter_element(5));
  std::vector<weyl::GroupOperator> out;
  weyl::GroupOperator power = g;
  for (int k = 1; k <= 5; ++k) {
    out.push_back(power);
    power = weyl::compose(power, g);
  }
  return out;
}

CMatrix cyclic_projector(int two_j) {
  check_two_j(two_j);
  const int dim = (two_j + 1) * (two_j + 1);
  CMatrix p = CMatrix::Zero(dim, dim);
  for (const auto& op : cyclic_operators()) p += weyl::operator_matrix(two_j, op);
  return p / 5.0;
}

int numerical_rank(const CMatrix& m) {
  if (m.size() == 0) return 0;
  const Eigen::JacobiSVD<CMatrix> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) <= 1e-14) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > kRankCutoff * sv(0)) ++rank;
  return rank;
}

CMatrix range_basis(const CMatrix& p) {
  const int rank = numerical_rank(p);
  CMatrix residual = p;
  CMatrix basis(p.rows(), rank);
  std::vector<bool> used(static_cast<size_t>(p.cols()), false);
  for (int k = 0; k < rank; ++k) {
    Eigen::Index best = -1;
    double best_norm = 0;
    for (Eigen::Index c = 0; c < residual.cols(); ++c) {
      if (used[static_cast<size_t>(c)]) continue;
      const double n = residual.col(c).norm();
      if (n > best_norm * (1.0 + 1e-9)) {
        best_norm = n;
        best = c;
      }
    }
    if (best < 0 || best_norm < 1e-12) throw ConsistencyError("range_basis: rank deficit during pivoting");
    used[static_cast<size_t>(best)] = true;
    Eigen::VectorXcd v = residual.col(best);
    for (int pass = 0; pass < 2; ++pass)
      for (int i = 0; i < k; ++i) v -= basis.col(i) * basis.col(i).dot(v);
    v.normalize();
    basis.col(k) = v;
    residual -= v * (v.adjoint() * residual);
  }
  for (int k = 0; k < rank; ++k) {
    for (Eigen::Index i = 0; i < basis.rows(); ++i) {
      const Complex x = basis(i, k);
      if (std::abs(x) > kSignificant) {
        basis.col(k) *= std::conj(x) / std::abs(x);
        basis(i, k) = Complex(std::abs(x), 0.0);
        break;
      }
    }
  }
  return basis;
}

ModeBasis periodic_basis(int two_j) {
  return ModeBasis{two_j, range_basis(cyclic_projector(two_j)), {}};
}

ModeBasis excluded_basis(int two_j) {
  const CMatrix p = cyclic_projector(two_j);
  return ModeBasis{two_j, range_basis(CMatrix::Identity(p.rows(), p.cols()) - p), {}};
}

const std::vector<perm::Permutation>& all_permutations_s5() {
  static const std::vector<perm::Permutation> perms = [] {
    std::vector<int> images{1, 2, 3, 4, 5};
    std::vector<perm::Permutation> out;
    do {
      out.push_back(perm::Permutation::from_images(images));
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
  }();
  return perms;
}

std::vector<CMatrix> s5_operator_matrices(int two_j) {
  check_two_j(two_j);
  const auto& perms = all_permutations_s5();
  std::vector<CMatrix> out(perms.size());
  parallel_for(perms.size(), [&](size_t i) {
    out[i] = weyl::operator_matrix(two_j, weyl::permutation_operator(perms[i]));
  });
  return out;
}

CMatrix isotypic_projector(int two_j, const perm::Partition& f) {
  if (f.size() != 5) throw ArgumentError("isotypic_projector expects a partition of 5");
  const auto mats = s5_operator_matrices(two_j);
  std::vector<double> weights;
  for (const auto& p : all_permutations_s5()) weights.push_back(static_cast<double>(perm::character(f, perm::cycle_type(p))));
  return weighted_sum(mats, weights, static_cast<double>(dimension_of(f)) / 120.0);
}

std::vector<std::vector<CMatrix>> young_operators(int two_j, const perm::Partition& f) {
  if (f.size() != 5) throw ArgumentError("young_operators expects a partition of 5");
  const auto mats = s5_operator_matrices(two_j);
  const auto& perms = all_permutations_s5();
  std::vector<young::Matrix> reps;
  for (const auto& p : perms) reps.push_back(young::rep_matrix(f, p).matrix);
  const auto d = static_cast<int>(reps.front().rows());
  const double scale = static_cast<double>(d) / 120.0;
  std::vector<std::vector<CMatrix>> out(static_cast<size_t>(d), std::vector<CMatrix>(static_cast<size_t>(d)));
  for (int r = 0; r < d; ++r)
    for (int s = 0; s < d; ++s) {
      std::vector<double> weights;
      for (const auto& rep : reps) weights.push_back(rep(r, s));
      out[static_cast<size_t>(r)][static_cast<size_t>(s)] = weighted_sum(mats, weights, scale);
    }
  return out;
}

CMatrix young_operator(int two_j, const perm::Partition& f, int r, int s) {
  if (f.size() != 5) throw ArgumentError("young_operator expects a partition of 5");
  const auto d = static_cast<int>(young::standard_tableaux(f).size());
  if (r < 0 || r >= d || s < 0 || s >= d) throw ArgumentError("Young operator index out of range");
  const auto mats = s5_operator_matrices(two_j);
  std::vector<double> weights;
  for (const auto& p : all_permutations_s5()) weights.push_back(young::rep_matrix(f, p).matrix(r, s));
  return weighted_sum(mats, weights, static_cast<double>(d) / 120.0);
}

int young_rank(int two_j, const perm::Partition& f, int r) {
  return numerical_rank(young_operator(two_j, f, r, r));
}

ModeBasis tagged_periodic_basis(int two_j) {
  const CMatrix cyclic = cyclic_projector(two_j);
  const auto mats = s5_operator_matrices(two_j);
  const auto& perms = all_permutations_s5();
  ModeBasis out{two_j, CMatrix(cyclic.rows(), 0), {}};
  for (const auto& f : perm::partitions(5)) {
    if (perm::trivial_multiplicity(f) == 0) continue;
    std::vector<double> weights;
    for (const auto& p : perms) weights.push_back(static_cast<double>(perm::character(f, perm::cycle_type(p))));
    const CMatrix isotypic = weighted_sum(mats, weights, static_cast<double>(dimension_of(f)) / 120.0);
    const CMatrix block = range_basis(isotypic * cyclic);
    const Eigen::Index start = out.coefficients.cols();
    out.coefficients.conservativeResize(Eigen::NoChange, start + block.cols());
    out.coefficients.rightCols(block.cols()) = block;
    for (Eigen::Index c = 0; c < block.cols(); ++c) out.tags.push_back(f);
  }
  return out;
}

std::vector<SU2Element> sample_points(int count, std::uint64_t seed) {
  if (count < 0) throw ArgumentError("sample count must be non-negative");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<SU2Element> out;
  out.reserve(static_cast<size_t>(count));
  while (static_cast<int>(out.size()) < count) {
    su2::Point4 x{normal(rng), normal(rng), normal(rng), normal(rng)};
    const double n = x.norm();
    if (n < 1e-6) continue;
    x = {x.x0 / n, x.x1 / n, x.x2 / n, x.x3 / n};
    out.push_back(su2::su2_from_point(x));
  }
  return out;
}

Complex evaluate_harmonic(int two_j, const Eigen::VectorXcd& coefficients, const SU2Element& u) {
  const CMatrix d = su2::wigner_d(two_j, u);
  const int n = two_j + 1;
  if (coefficients.size() != n * n) throw ArgumentError("coefficient vector has wrong length");
  Complex sum(0, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) sum += coefficients(a * n + b) * d(a, b);
  return sum;
}

double verify_invariance(const ModeBasis& basis, int num_points, std::uint64_t seed,
                         const std::vector<weyl::GroupOperator>& group) {
  const auto points = sample_points(num_points, seed);
  std::vector<double> worst(points.size(), 0.0);
  const int n = basis.two_j + 1;
  parallel_for(points.size(), [&](size_t i) {
    const CMatrix d0 = su2::wigner_d(basis.two_j, points[i]);
    std::vector<CMatrix> moved;
    for (const auto& g : group) moved.push_back(su2::wigner_d(basis.two_j, weyl::act_on_point(g, points[i])));
    for (int c = 0; c < basis.count(); ++c) {
      Complex base(0, 0);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) base += basis.coefficients(a * n + b, c) * d0(a, b);
      for (const auto& dg : moved) {
        Complex value(0, 0);
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) value += basis.coefficients(a * n + b, c) * dg(a, b);
        worst[i] = std::max(worst[i], std::abs(value - base));
      }
    }
  });
  return worst.empty() ? 0.0 : *std::max_element(worst.begin(), worst.end());
}

double verify_invariance(const ModeBasis& basis, int num_points, std::uint64_t seed) {
  return verify_invariance(basis, num_points, seed, cyclic_operators());
}

CircleMode circle_mode(const reduction::O2Label& label) {
  const auto reduced = reduction::o2_reduce(label);
  const bool allowed = reduced.trivial_multiplicity > 0;
  return CircleMode{label, allowed, allowed ? "periodic" : "excluded by selection rule", reduced.f};
}

Complex circle_harmonic(const reduction::O2Label& label, double phi) {
  const double norm = 1.0 / std::sqrt(2.0 * std::numbers::pi);
  const Complex plus = norm * std::polar(1.0, label.m * phi);
  if (label.m == 0) return plus;
  const Complex minus = norm * std::polar(1.0, -label.m * phi);
  const double sign = label.epsilon * (label.m % 2 == 0 ? 1.0 : -1.0);
  return std::sqrt(0.5) * (plus + sign * minus);
}

Sphere2Mode sphere2_modes(const reduction::O3Label& label) {
  Sphere2Mode out;
  out.label = label;
  for (const auto& f : perm::partitions(4)) {
    const int m = reduction::multiplicity_o3_s4(label, f);
    if (m == 0) continue;
    const auto fixed = young::fixed_subspace(f);
    out.periodic_count += m * fixed.dimension();
    out.components.push_back(SphereComponent{f, m, fixed.basis});
  }
  out.allowed = out.periodic_count > 0;
  out.status = out.allowed ? "periodic" : "excluded by selection rule";
  return out;
}

}  // namespace simplexharm::modes
