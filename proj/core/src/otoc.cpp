// Copyright 2026 The scramble Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "scramble/otoc.hpp"

#include <cmath>
#include <unsupported/Eigen/KroneckerProduct>

#include "scramble/error.hpp"

namespace scramble {
namespace {

constexpr double kUnitaryTol = 1e-9;

void require_unitary(const DenseOperator& u, const char* name) {
  const Matrix prod = u.matrix() * u.matrix().adjoint();
  const double err = (prod - Matrix::Identity(u.dim(), u.dim())).cwiseAbs().maxCoeff();
  if (err > kUnitaryTol) {
    throw InvalidArgument(std::string("otoc: operator ") + name + " is not unitary (|UU^+ - I| = " +
                          std::to_string(err) + ")");
  }
}

IntegratorConfig single_time(const IntegratorConfig& cfg, double t) {
  IntegratorConfig out = cfg;
  out.t_max = t;
  out.sample_every = 1;
  out.sample_every = static_cast<int>(std::max<long>(1, out.step_count()));
  return out;
}

// Final state of a possibly non-Hermitian operator.
DenseOperator evolve_to_end(const GeneratorSpec& gen, const DenseOperator& x0,
                            const IntegratorConfig& cfg) {
  DenseOperator last;
  evolve_general_observed(gen, x0, cfg, [&last](double, const DenseOperator& x) { last = x; });
  return last;
}

OtocPoint make_point(double t, double f, double f_identity) {
  OtocPoint p;
  p.t = t;
  p.f = f;
  p.f_identity = f_identity;
  p.f_corrected = corrected_ratio(f, f_identity);
  p.corrected_valid = !std::isnan(p.f_corrected);
  return p;
}

}  // namespace

double corrected_ratio(double f, double f_identity) {
  if (!(std::abs(f_identity) >= kCorrectedFloor)) return kInvalidValue;
  return f / f_identity;
}

bool backward_adjoint_is_forward_state(const ModelSpec& model) {
  for (const auto& l : local_lindblad_ops(model)) {
    if ((l.op - l.op.adjoint()).cwiseAbs().maxCoeff() != 0.0) return false;
  }
  return true;
}

Complex pauli_sandwich_trace(const Matrix& x, const PauliString& p, const Matrix& y) {
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << p.n_sites());
  if (x.rows() != dim || x.cols() != dim || y.rows() != dim || y.cols() != dim) {
    throw InvalidArgument("pauli_sandwich_trace: dimension mismatch");
  }
  const PauliAction act = pauli_action(p);
  const std::vector<Complex>& phase = act.phase;
  const Matrix xt = x.transpose();
  const auto f = static_cast<Eigen::Index>(act.flip);
  // sum_{k,m} x(m^f, k^f) phi(k) conj(phi(m)) y(k, m)
  Complex total(0.0, 0.0);
  for (Eigen::Index m = 0; m < dim; ++m) {
    Complex col(0.0, 0.0);
    const Complex* ycol = y.col(m).data();
    const Complex* xcol = xt.col(m ^ f).data();
    for (Eigen::Index k = 0; k < dim; ++k) {
      col += xcol[k ^ f] * phase[static_cast<std::size_t>(k)] * ycol[k];
    }
    total += col * std::conj(phase[static_cast<std::size_t>(m)]);
  }
  return total * std::norm(p.coefficient());
}

OtocPoint otoc_closed_form(const ModelSpec& model, const DenseOperator& a, const DenseOperator& b,
                           double t, const IntegratorConfig& cfg) {
  model.validate();
  require_same_shape(a, b, "otoc_closed_form");
  if (a.n_sites() != model.n_sites) throw InvalidArgument("otoc_closed_form: operator size mismatch");
  require_unitary(a, "A");
  require_unitary(b, "B");
  const IntegratorConfig run = single_time(cfg, t);
  const int n = model.n_sites;
  const double rho0 = std::ldexp(1.0, -n);

  const DenseOperator x = evolve_to_end({model, Direction::kBackward, Picture::kAdjoint}, b.adjoint(), run);
  const DenseOperator y = evolve_to_end({model, Direction::kForward, Picture::kState}, b * Complex(rho0), run);

  const Matrix ay = a.matrix() * y.matrix() * a.matrix().adjoint();
  const double f = trace_product(x, DenseOperator(n, ay)).real();
  const double f_identity = trace_product(x, y).real();
  return make_point(run.t_max, f, f_identity);
}

OtocPoint otoc_protocol(const ModelSpec& model, const DenseOperator& a, const DenseOperator& b,
                        double t, const IntegratorConfig& cfg) {
  model.validate();
  require_same_shape(a, b, "otoc_protocol");
  if (a.n_sites() != model.n_sites) throw InvalidArgument("otoc_protocol: operator size mismatch");
  if (model.n_sites + 1 > kMaxSites + 1) {
    throw InvalidArgument("otoc_protocol: register of " + std::to_string(model.n_sites + 1) +
                          " qubits exceeds the limit of " + std::to_string(kMaxSites + 1));
  }
  require_unitary(a, "A");
  require_unitary(b, "B");
  const IntegratorConfig run = single_time(cfg, t);
  const long steps = run.step_count();
  const int n = model.n_sites;
  const int reg = n + 1;
  const Eigen::Index sys_dim = a.dim();

  // Control qubit is the last (least significant) factor.
  const Matrix id_c = Matrix::Identity(2, 2);
  Matrix p0 = Matrix::Zero(2, 2);
  Matrix p1 = Matrix::Zero(2, 2);
  p0(0, 0) = 1.0;
  p1(1, 1) = 1.0;
  const Matrix id_s = Matrix::Identity(sys_dim, sys_dim);
  auto on_system = [&](const Matrix& m) -> Matrix { return Eigen::kroneckerProduct(m, id_c).eval(); };

  const Matrix u1 = Eigen::kroneckerProduct(id_s, p0).eval() + Eigen::kroneckerProduct(b.matrix(), p1).eval();
  const Matrix u5 = Eigen::kroneckerProduct(b.matrix(), p0).eval() + Eigen::kroneckerProduct(id_s, p1).eval();
  const Matrix h = on_system(build_hamiltonian(model).matrix());
  std::vector<Matrix> ops;
  for (const auto& l : build_lindblad_ops(model)) ops.push_back(on_system(l.matrix()));
  const double gamma = model.channel.is_trivial() ? 0.0 : model.channel.gamma;
  const auto forward = std::make_shared<const DenseLindbladian>(h, ops, gamma, Picture::kState);
  const auto backward = std::make_shared<const DenseLindbladian>(-h, ops, gamma, Picture::kState);
  auto rhs = [](std::shared_ptr<const DenseLindbladian> g) {
    return [g = std::move(g)](const Matrix& x, Matrix& out) { g->apply(x, out); };
  };

  Matrix plus = Matrix::Constant(2, 2, Complex(0.5, 0.0));
  const Matrix rho_init = Eigen::kroneckerProduct(id_s * std::ldexp(1.0, -n), plus).eval();
  Matrix sx_c = Matrix::Zero(2, 2);
  sx_c(0, 1) = 1.0;
  sx_c(1, 0) = 1.0;
  const DenseOperator measure(reg, Eigen::kroneckerProduct(id_s, sx_c).eval());

  auto run_protocol = [&](const Matrix& a_sys) {
    const Matrix u3 = on_system(a_sys);
    DenseOperator rho(reg, u1 * rho_init * u1.adjoint());
    Rk4Stepper fwd(reg, rhs(forward), rho, run.dt);
    fwd.advance(steps);
    rho = DenseOperator(reg, u3 * fwd.state().matrix() * u3.adjoint());
    Rk4Stepper bwd(reg, rhs(backward), rho, run.dt);
    bwd.advance(steps);
    const DenseOperator rho_f(reg, u5 * bwd.state().matrix() * u5.adjoint());
    return trace_product(measure, rho_f).real();
  };

  const double f = run_protocol(a.matrix());
  const double f_identity = run_protocol(id_s);
  return make_point(run.t_max, f, f_identity);
}

OtocHeatmaps otoc_heatmap(const ModelSpec& model, int b_site, const std::vector<int>& a_sites,
                          const IntegratorConfig& cfg, const SampleObserver& on_backward) {
  model.validate();
  const int n = model.n_sites;
  if (b_site < 1 || b_site > n) throw InvalidArgument("b_site out of range");
  if (a_sites.empty()) throw InvalidArgument("a_sites is empty");
  for (int s : a_sites) {
    if (s < 1 || s > n) throw InvalidArgument("a_site " + std::to_string(s) + " out of range");
  }
  const std::vector<double> times = cfg.sample_times();
  OtocHeatmaps out{HeatmapSeries(times, a_sites, "otoc"),
                   HeatmapSeries(times, a_sites, "otoc_identity"),
                   HeatmapSeries(times, a_sites, "otoc_corrected")};
  const ConfigSnapshot snap = describe_run(model, cfg);
  out.f.config = out.f_identity.config = out.f_corrected.config = snap;
  out.f.config.emplace_back("b_site", std::to_string(b_site));

  const DenseOperator b = pauli_on_site(PauliLetter::Z, b_site, n);
  const double rho0 = std::ldexp(1.0, -n);
  std::vector<PauliString> as;
  for (int s : a_sites) {
    std::string word(static_cast<std::size_t>(n), 'I');
    word[static_cast<std::size_t>(s - 1)] = 'Z';
    as.push_back(PauliString::from_string(word));
  }

  std::size_t ti = 0;
  auto record = [&](const Matrix& x, const Matrix& y, double scale) {
    const double f_id = scale * (x.cwiseProduct(y.transpose())).sum().real();
    for (std::size_t si = 0; si < as.size(); ++si) {
      const double f = scale * pauli_sandwich_trace(x, as[si], y).real();
      out.f.at(ti, si) = f;
      out.f_identity.at(ti, si) = f_id;
      out.f_corrected.at(ti, si) = corrected_ratio(f, f_id);
    }
    ++ti;
  };

  const GeneratorSpec backward{model, Direction::kBackward, Picture::kAdjoint};
  if (backward_adjoint_is_forward_state(model)) {
    // Both trajectories come from the same generator, and B rho0 = B / 2^N.
    evolve_observed(backward, b, cfg, [&](double t, const DenseOperator& x) {
      if (on_backward) on_backward(t, x);
      record(x.matrix(), x.matrix(), rho0);
    });
  } else {
    evolve_pair_observed(backward, b, {model, Direction::kForward, Picture::kState}, b * Complex(rho0),
                         cfg, [&](double t, const DenseOperator& x, const DenseOperator& y) {
                           if (on_backward) on_backward(t, x);
                           record(x.matrix(), y.matrix(), 1.0);
                         });
  }
  return out;
}

}  // namespace scramble
