#include "nuclearity/lowest_weight_rep.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numbers>
#include <string>

#include "nuclearity/error.hpp"
#include "nuclearity/interval_geometry.hpp"

namespace nuclearity::lwrep {

namespace {

using cd = std::complex<double>;

void check_dims(const std::vector<int>& dims, int block) {
  if (dims.empty()) throw Error(ErrorKind::InvalidInput, "no truncation dimensions given");
  if (block < 1) throw Error(ErrorKind::InvalidInput, "block must be positive");
  const int smallest = *std::min_element(dims.begin(), dims.end());
  if (4 * block > smallest) {
    throw Error(ErrorKind::InvalidInput, "block " + std::to_string(block) + " exceeds min(dims)/4");
  }
}

template <class F>
auto sweep(const std::vector<int>& dims, F f) {
  using R = decltype(f(0));
  std::vector<std::future<R>> futures;
  futures.reserve(dims.size());
  for (int n : dims) futures.push_back(std::async(std::launch::async, f, n));
  std::vector<R> out;
  out.reserve(dims.size());
  for (auto& fut : futures) out.push_back(fut.get());
  return out;
}

Matrix diagonal_exp(const Matrix& diag, double t) {
  return (t * diag.diagonal().array()).exp().matrix().asDiagonal();
}

double block_max_abs(const Matrix& m, int block) { return m.topLeftCorner(block, block).cwiseAbs().maxCoeff(); }

double block_min_eigenvalue(const Matrix& m, int block) {
  const Matrix b = m.topLeftCorner(block, block);
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (b + b.transpose()), Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

VerificationReport make_report(std::string name, const std::vector<int>& dims, int block, double tolerance) {
  VerificationReport r;
  r.identity_name = std::move(name);
  r.dims_tested = dims;
  r.block = block;
  r.tolerance = tolerance;
  return r;
}

// e^{c K2} xi by its Taylor series, stopped before the support reaches the truncation edge.
Vector taylor_exp_apply(const Matrix& k2, double c, const Vector& xi, int support) {
  const int n = static_cast<int>(k2.rows());
  Vector sum = xi;
  Vector term = xi;
  for (int k = 1; k < n - support; ++k) {
    term = (c / k) * (k2 * term);
    sum += term;
  }
  return sum;
}

std::vector<Vector> kdc_test_vectors(int n, int block) {
  std::vector<Vector> family;
  auto unit = [n](std::initializer_list<std::pair<int, double>> entries) {
    Vector v = Vector::Zero(n);
    for (auto [i, x] : entries) v(i) = x;
    return Vector(v / v.norm());
  };
  family.push_back(unit({{0, 1.0}}));
  family.push_back(unit({{1, 1.0}}));
  family.push_back(unit({{0, 1.0}, {1, 1.0}}));
  family.push_back(unit({{0, 1.0}, {2, -1.0}}));
  family.push_back(unit({{block - 1, 1.0}}));
  Vector flat = Vector::Zero(n);
  flat.head(block).setOnes();
  family.push_back(flat / flat.norm());
  return family;
}

}  // namespace

GeneratorSet build_generators(double alpha, int N) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw Error(ErrorKind::BadWeight, "alpha must be positive");
  if (N < 8) throw Error(ErrorKind::TooSmall, "truncation dimension must be at least 8");
  GeneratorSet g;
  g.alpha = alpha;
  g.dim = N;
  g.L0 = Matrix::Zero(N, N);
  g.Lplus = Matrix::Zero(N, N);
  for (int n = 0; n < N; ++n) g.L0(n, n) = alpha + n;
  for (int n = 0; n + 1 < N; ++n) g.Lplus(n + 1, n) = std::sqrt((n + 1.0) * (n + 2.0 * alpha));
  g.Lminus = g.Lplus.transpose();
  const Matrix sym = 0.5 * (g.Lplus + g.Lminus);
  g.H = g.L0 - sym;
  g.Hprime = g.L0 + sym;
  g.K2 = -sym;
  g.K1 = 0.5 * (g.Lplus - g.Lminus);
  return g;
}

Matrix symmetric_exp(const Matrix& m, double t) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(m);
  const Vector w = (t * es.eigenvalues().array()).exp().matrix();
  return es.eigenvectors() * w.asDiagonal() * es.eigenvectors().transpose();
}

Eigen::MatrixXcd represent(const sl2::Mat2& x, const GeneratorSet& g) {
  const double p = x(0, 0);
  const double q = x(0, 1);
  const double r = x(1, 0);
  const cd i(0.0, 1.0);
  return (i * q) * g.H.cast<cd>() - (i * r) * g.Hprime.cast<cd>() + (2.0 * p) * g.K1.cast<cd>();
}

std::complex<double> vacuum_coefficient(const sl2::CMat2& g, double alpha) {
  sl2::CMat2 p;
  p << 1.0, 1.0, cd(0.0, 1.0), cd(0.0, -1.0);
  const sl2::CMat2 gd = p.inverse() * g * p;
  return std::pow(gd(1, 1), -2.0 * alpha);
}

VerificationReport verify_m1_truncated(double alpha, double s, const std::vector<int>& dims, int block,
                                       double tolerance) {
  if (!(s > 0.0)) throw Error(ErrorKind::NonPositiveParameter, "m1 requires s > 0");
  check_dims(dims, block);
  const double a = std::tanh(0.5 * s);
  const double b = std::sinh(s);
  VerificationReport r = make_report("m1", dims, block, tolerance);
  r.residuals = sweep(dims, [&](int n) {
    const GeneratorSet g = build_generators(alpha, n);
    const Matrix lhs = diagonal_exp(g.L0, -2.0 * s);
    const Matrix ea = symmetric_exp(g.H, -a);
    const Matrix rhs = ea * symmetric_exp(g.Hprime, -b) * ea;
    return block_max_abs(lhs - rhs, block);
  });
  r.details = {{"alpha", alpha}, {"s", s}, {"a", a}, {"a_prime", 0.5 * b}};
  finalize(r);
  return r;
}

VerificationReport verify_t2_equals_t1(double alpha, double s, const std::vector<int>& dims, int block,
                                       double tolerance) {
  const geometry::SymmetricSubinterval sub = geometry::symmetric_subinterval(s);
  check_dims(dims, block);
  struct Point {
    double residual;
    double gt_slack;
  };
  const std::vector<Point> points = sweep(dims, [&](int n) {
    const GeneratorSet g = build_generators(alpha, n);
    const Matrix t1 = diagonal_exp(g.L0, -2.0 * s);
    const Matrix ea = symmetric_exp(g.H, -sub.a);
    const Matrix t2 = ea * symmetric_exp(g.Hprime, -2.0 * sub.a_prime) * ea;
    const Matrix joint = symmetric_exp(Matrix(sub.a * g.H + sub.a_prime * g.Hprime), -2.0);
    return Point{block_max_abs(t2 - t1, block), t2.trace() - joint.trace()};
  });
  VerificationReport r = make_report("t2", dims, block, tolerance);
  double min_slack = std::numeric_limits<double>::infinity();
  for (const Point& p : points) {
    r.residuals.push_back(p.residual);
    min_slack = std::min(min_slack, p.gt_slack);
  }
  r.details = {{"alpha", alpha}, {"s", s}, {"a", sub.a}, {"a_prime", sub.a_prime}, {"golden_thompson_min_slack", min_slack}};
  finalize(r);
  if (min_slack < -1e-10) {
    r.verdict = false;
    r.notes.push_back("Golden-Thompson slack negative");
  }
  return r;
}

VerificationReport verify_t2_equals_t1(double alpha, double s, int N, int block, double tolerance) {
  return verify_t2_equals_t1(alpha, s, std::vector<int>{N}, block, tolerance);
}

NuclearNormResult nuclear_norm_of_T(double alpha, double t, int N) {
  if (!(t > 0.0)) throw Error(ErrorKind::NonPositiveParameter, "nuclear_norm_of_T requires t > 0");
  const GeneratorSet g = build_generators(alpha, N);
  const Matrix e1 = symmetric_exp(g.H, -t);
  const Matrix p = e1 * symmetric_exp(g.Hprime, -2.0 * t) * e1;
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (p + p.transpose()), Eigen::EigenvaluesOnly);
  const Vector& w = es.eigenvalues();
  const double threshold = 10.0 * std::numeric_limits<double>::epsilon() * w.cwiseAbs().maxCoeff();
  NuclearNormResult out;
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    if (w(i) > threshold) {
      out.value += std::sqrt(w(i));
    } else {
      ++out.dropped_count;
      out.dropped_mass += std::sqrt(std::max(w(i), 0.0));
    }
  }
  const double s = 2.0 * std::asinh(t);
  out.closed_form = std::exp(-s * alpha) / -std::expm1(-s);
  return out;
}

VerificationReport verify_operator_inequalities(double alpha, double param, const std::vector<int>& dims, int block,
                                                Inequality which, double tolerance) {
  check_dims(dims, block);
  if (which == Inequality::M2) {
    if (!(param > 0.0)) throw Error(ErrorKind::ParameterOutOfRange, "m2 requires s > 0");
    const double s = param;
    VerificationReport r = make_report("m2", dims, block, tolerance);
    const std::vector<double> mins = sweep(dims, [&](int n) {
      const GeneratorSet g = build_generators(alpha, n);
      const Matrix diff = symmetric_exp(g.H, -2.0 * std::tanh(0.5 * s)) - diagonal_exp(g.L0, -2.0 * s);
      return block_min_eigenvalue(diff, block);
    });
    for (std::size_t i = 0; i < dims.size(); ++i) {
      r.residuals.push_back(std::max(0.0, -mins[i]));
      r.details.emplace_back("min_eigenvalue_N" + std::to_string(dims[i]), mins[i]);
    }
    finalize(r);
    return r;
  }
  if (which == Inequality::KoBound) {
    if (!(param > 0.0)) throw Error(ErrorKind::ParameterOutOfRange, "KO bound requires half-length R > 0");
    const double rr = param;
    VerificationReport r = make_report("ko", dims, block, tolerance);
    const std::vector<double> mins = sweep(dims, [&](int n) {
      const GeneratorSet g = build_generators(alpha, n);
      const Matrix k_interval = 0.5 * (rr * g.H - g.Hprime / rr);
      return block_min_eigenvalue(Matrix(2.0 * rr * g.H - k_interval), block);
    });
    for (std::size_t i = 0; i < dims.size(); ++i) {
      r.residuals.push_back(std::max(0.0, -mins[i]));
      r.details.emplace_back("min_eigenvalue_N" + std::to_string(dims[i]), mins[i]);
    }
    finalize(r);
    return r;
  }

  const double lambda = param;
  if (!(lambda > 0.0 && lambda < 0.25)) throw Error(ErrorKind::ParameterOutOfRange, "kdc requires 0 < lambda < 1/4");
  if (block < 3) throw Error(ErrorKind::InvalidInput, "kdc requires block >= 3");
  const double c = 2.0 * std::numbers::pi * lambda;
  const double time = std::tan(c) * 2.0;  // d_I = 2 for I = (-1, 1)
  struct Point {
    double max_ratio;
    double e0_norm;
  };
  const std::vector<Point> points = sweep(dims, [&](int n) {
    const GeneratorSet g = build_generators(alpha, n);
    const Matrix eh = symmetric_exp(g.H, -time);
    Point p{0.0, 0.0};
    const std::vector<Vector> family = kdc_test_vectors(n, block);
    for (std::size_t i = 0; i < family.size(); ++i) {
      const double norm = (eh * taylor_exp_apply(g.K2, c, family[i], block)).norm();
      p.max_ratio = std::max(p.max_ratio, norm);
      if (i == 0) p.e0_norm = norm;
    }
    return p;
  });
  const sl2::LieBasis& b = sl2::LieBasis::standard();
  const sl2::CMat2 half = sl2::expm(sl2::CMat2(c * sl2::complexified(b.k2)));
  const sl2::CMat2 heat = sl2::expm(sl2::CMat2(-2.0 * time * sl2::complexified(b.h)));
  const double e0_exact = std::sqrt(std::abs(vacuum_coefficient(half * heat * half, alpha)));
  VerificationReport r = make_report("kdc", dims, block, tolerance);
  r.details = {{"alpha", alpha}, {"lambda", lambda}, {"bw_time", time}, {"e0_exact_norm", e0_exact}};
  for (std::size_t i = 0; i < dims.size(); ++i) {
    r.residuals.push_back(std::max(0.0, points[i].max_ratio - 1.0));
    r.details.emplace_back("max_ratio_N" + std::to_string(dims[i]), points[i].max_ratio);
    r.details.emplace_back("e0_error_N" + std::to_string(dims[i]), std::abs(points[i].e0_norm - e0_exact));
  }
  finalize(r);
  return r;
}

GlwResult glw_spectrum(double alpha_target, int N, int n_eigs) {
  if (!(alpha_target >= 1.0)) throw Error(ErrorKind::ParameterOutOfRange, "GLW requires alpha_target >= 1");
  if (N < 8) throw Error(ErrorKind::TooSmall, "truncation dimension must be at least 8");
  if (n_eigs < 1 || n_eigs > N / 4) throw Error(ErrorKind::InvalidInput, "n_eigs must lie in [1, N/4]");
  GlwResult out;
  out.alpha_target = alpha_target;
  out.lambda = 0.5 * alpha_target * (alpha_target - 1.0);

  // Ritz space spanned by H e_0 .. H e_{N-1}; one extra row keeps the products exact.
  const GeneratorSet g = build_generators(1.0, N + 1);
  const Matrix gram = (g.H * g.H).topLeftCorner(N, N);
  const Matrix stiffness = (g.H * g.L0 * g.H).topLeftCorner(N, N) + out.lambda * g.H.topLeftCorner(N, N);
  Eigen::LLT<Matrix> llt(gram);
  if (llt.info() != Eigen::Success) throw Error(ErrorKind::SingularH, "Gram matrix of the range of H is not positive");
  Eigen::GeneralizedSelfAdjointEigenSolver<Matrix> es(stiffness, gram, Eigen::EigenvaluesOnly | Eigen::Ax_lBx);
  if (es.info() != Eigen::Success) throw Error(ErrorKind::SingularH, "generalized eigensolver failed");
  for (int i = 0; i < n_eigs; ++i) out.eigenvalues.push_back(es.eigenvalues()(i));

  // Commutation relations of (A, L0 + lambda H^-1, K2 - lambda H^-1) on xi_j = H e_j.
  const int m = std::min(n_eigs + 2, 10);
  const GeneratorSet e = build_generators(1.0, m + 4);
  const double lam = out.lambda;
  double worst = 0.0;
  for (int i = 0; i < m; ++i) {
    const Vector hi = e.H.col(i);
    const Vector ui = Vector::Unit(m + 4, i);
    const Vector l_i = e.L0 * hi + lam * ui;
    const Vector k_i = e.K2 * hi - lam * ui;
    const Vector a_i = e.K1 * hi;
    for (int j = 0; j < m; ++j) {
      const Vector hj = e.H.col(j);
      const Vector uj = Vector::Unit(m + 4, j);
      const Vector l_j = e.L0 * hj + lam * uj;
      const Vector k_j = e.K2 * hj - lam * uj;
      const Vector a_j = e.K1 * hj;
      const double comm1 = -a_i.dot(l_j) - l_i.dot(a_j);
      const double target1 = hi.dot(e.K2 * hj) - lam * e.H(i, j);
      const double comm2 = l_i.dot(k_j) - k_i.dot(l_j);
      const double target2 = -hi.dot(a_j);
      const double scale = std::max({1.0, std::abs(target1), std::abs(target2)});
      worst = std::max({worst, std::abs(comm1 - target1) / scale, std::abs(comm2 - target2) / scale});
    }
  }
  out.ka_residual = worst;
  return out;
}

VerificationReport verify_glw(double alpha_target, const std::vector<int>& dims, int n_eigs, double tolerance) {
  if (dims.empty()) throw Error(ErrorKind::InvalidInput, "no truncation dimensions given");
  const std::vector<GlwResult> results = sweep(dims, [&](int n) { return glw_spectrum(alpha_target, n, n_eigs); });
  VerificationReport r = make_report("glw", dims, n_eigs, tolerance);
  bool monotone = true;
  double ka = 0.0;
  for (std::size_t k = 0; k < results.size(); ++k) {
    double dev = 0.0;
    for (int i = 0; i < n_eigs; ++i) {
      const double ev = results[k].eigenvalues[i];
      dev = std::max(dev, std::abs(ev - (alpha_target + i)));
      if (k > 0) {
        const double prev = results[k - 1].eigenvalues[i];
        if (ev > prev + kRoundoffFloor * std::max(1.0, std::abs(prev))) monotone = false;
      }
      r.details.emplace_back("eigenvalue_" + std::to_string(i) + "_N" + std::to_string(dims[k]), ev);
    }
    r.residuals.push_back(dev);
    ka = std::max(ka, results[k].ka_residual);
  }
  r.details.emplace_back("alpha_target", alpha_target);
  r.details.emplace_back("lambda", results.front().lambda);
  r.details.emplace_back("ka_commutator_residual", ka);
  r.details.emplace_back("eigenvalues_non_increasing_in_N", monotone ? 1.0 : 0.0);
  finalize(r);
  if (!monotone) {
    r.verdict = false;
    r.notes.push_back("Ritz values increased with N");
  }
  if (ka > 1e-10) {
    r.verdict = false;
    r.notes.push_back("deformed commutation relations violated");
  }
  return r;
}

}  // namespace nuclearity::lwrep
