#include "opucmat/measures.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "opucmat/kernels.hpp"

namespace opucmat {

CircleMeasure::CircleMeasure(std::function<double(double)> w, std::vector<CircleAtom> a,
                             std::size_t nodes)
    : weight(std::move(w)), atoms(std::move(a)) {
  if (!weight) throw std::invalid_argument("CircleMeasure: empty weight");
  if (nodes < 16) throw std::invalid_argument("CircleMeasure: need at least 16 nodes");
  for (auto& atom : atoms) {
    if (!(atom.mass > 0.0) || !std::isfinite(atom.mass))
      throw std::invalid_argument("CircleMeasure: atom mass must be positive");
    atom.theta = std::fmod(atom.theta, two_pi);
    if (atom.theta < 0.0) atom.theta += two_pi;
  }
  double h = two_pi / static_cast<double>(nodes);
  theta.resize(nodes);
  zre.resize(nodes);
  zim.resize(nodes);
  qw.resize(nodes);
  for (std::size_t k = 0; k < nodes; ++k) {
    theta[k] = (static_cast<double>(k) + 0.5) * h;
    zre[k] = std::cos(theta[k]);
    zim[k] = std::sin(theta[k]);
    double wk = weight(theta[k]);
    if (!std::isfinite(wk))
      throw std::invalid_argument("CircleMeasure: weight not finite on the grid");
    qw[k] = wk * h;
  }
}

bool CircleMeasure::nonnegative_on_grid() const {
  for (double w : qw)
    if (w < 0.0) return false;
  return true;
}

CircleMeasure lebesgue_measure(std::size_t nodes) {
  return CircleMeasure([](double) { return 1.0; }, {}, nodes);
}

namespace {

// f * z^k on the grid, multiplying componentwise; on the unit circle
// z^{-1} = conj z, so negative powers flip the sign of zim.
void mul_grid_power(std::vector<double>& re, std::vector<double>& im,
                    const CircleMeasure& m, int k) {
  if (k == 0) return;
  std::vector<double> bim = m.zim;
  if (k < 0) {
    for (double& v : bim) v = -v;
    k = -k;
  }
  for (int j = 0; j < k; ++j)
    kern::cmul_inplace(re.data(), im.data(), m.zre.data(), bim.data(), re.size());
}

}  // namespace

CircleEval eval_on_circle(const LaurentPoly& f, const CircleMeasure& m) {
  CircleEval ev;
  std::size_t n = m.nodes();
  ev.re.resize(n);
  ev.im.resize(n);
  kern::horner(f.c.data(), f.c.size(), m.zre.data(), m.zim.data(), n, ev.re.data(),
               ev.im.data());
  mul_grid_power(ev.re, ev.im, m, f.min_power);
  ev.at_atoms.reserve(m.atoms.size());
  for (const auto& atom : m.atoms)
    ev.at_atoms.push_back(f.eval(cplx(std::cos(atom.theta), std::sin(atom.theta))));
  return ev;
}

cplx circle_inner(const CircleEval& f, const CircleEval& g, const CircleMeasure& m) {
  cplx r = kern::dot_sesq(m.qw.data(), f.re.data(), f.im.data(), g.re.data(), g.im.data(),
                          m.nodes());
  for (std::size_t j = 0; j < m.atoms.size(); ++j)
    r += m.atoms[j].mass * f.at_atoms[j] * std::conj(g.at_atoms[j]);
  return r;
}

cplx circle_inner(const LaurentPoly& f, const LaurentPoly& g, const CircleMeasure& m) {
  return circle_inner(eval_on_circle(f, m), eval_on_circle(g, m), m);
}

cplx circle_inner(const ComplexPoly& f, const ComplexPoly& g, const CircleMeasure& m) {
  return circle_inner(LaurentPoly(f), LaurentPoly(g), m);
}

CMat2 vector_inner(const LaurentPoly& f1, const LaurentPoly& f2, const LaurentPoly& g1,
                   const LaurentPoly& g2, const CircleMeasure& m) {
  CircleEval e1 = eval_on_circle(f1, m);
  CircleEval e2 = eval_on_circle(f2, m);
  CircleEval h1 = eval_on_circle(g1, m);
  CircleEval h2 = eval_on_circle(g2, m);
  return {circle_inner(e1, h1, m), circle_inner(e1, h2, m), circle_inner(e2, h1, m),
          circle_inner(e2, h2, m)};
}

CircleMeasure symmetric_measure(const CircleMeasure& m) {
  auto w = m.weight;
  auto reflected = [w](double theta) { return w(two_pi - theta); };
  std::vector<CircleAtom> atoms;
  atoms.reserve(m.atoms.size());
  for (const auto& atom : m.atoms) {
    double t = atom.theta == 0.0 ? 0.0 : two_pi - atom.theta;
    atoms.push_back({t, atom.mass});
  }
  return CircleMeasure(reflected, std::move(atoms), m.nodes());
}

ProjectedPair project_measures(const CircleMeasure& m) {
  auto w = m.weight;
  ProjectedPair p;
  p.nu1.weight = [w](double x) { return w(std::acos(x)) / std::sqrt(1.0 - x * x); };
  p.nu2.weight = [w](double x) { return w(two_pi - std::acos(x)) / std::sqrt(1.0 - x * x); };
  for (const auto& atom : m.atoms) {
    IntervalAtom ia{std::cos(atom.theta), atom.mass};
    if (atom.theta <= pi)
      p.nu1.atoms.push_back(ia);
    else
      p.nu2.atoms.push_back(ia);
  }
  return p;
}

MatrixMeasure::MatrixMeasure(std::function<double(double)> rho_in,
                             std::function<double(double)> sigma_in,
                             std::vector<MatrixAtom> atoms_in, std::size_t nodes)
    : rho(std::move(rho_in)), sigma(std::move(sigma_in)), atoms(std::move(atoms_in)) {
  if (!rho || !sigma) throw std::invalid_argument("MatrixMeasure: empty density");
  if (nodes < 16) throw std::invalid_argument("MatrixMeasure: need at least 16 nodes");
  double h = two_pi / static_cast<double>(nodes);
  x.resize(nodes);
  s.resize(nodes);
  rho_g.resize(nodes);
  sigma_g.resize(nodes);
  w11.resize(nodes);
  w12.resize(nodes);
  w22.resize(nodes);
  for (std::size_t k = 0; k < nodes; ++k) {
    double theta = (static_cast<double>(k) + 0.5) * h;
    x[k] = std::cos(theta);
    s[k] = std::abs(std::sin(theta));
    rho_g[k] = rho(x[k]);
    sigma_g[k] = sigma(x[k]);
    if (!std::isfinite(rho_g[k]) || !std::isfinite(sigma_g[k]))
      throw std::invalid_argument("MatrixMeasure: density not finite on the grid");
    // h/2 folds the full-circle pullback of int_{-1}^{1} dx; the extra 1/2 is
    // the prefactor of dOmega.
    double base = 0.25 * h * s[k];
    w11[k] = base * rho_g[k];
    w12[k] = base * s[k] * sigma_g[k];
    w22[k] = base * s[k] * s[k] * rho_g[k];
  }
}

MatrixMeasure associated_matrix_measure(const CircleMeasure& m) {
  auto w = m.weight;
  auto rho = [w](double x) {
    double t = std::acos(x);
    return (w(t) + w(two_pi - t)) / std::sqrt(1.0 - x * x);
  };
  auto sigma = [w](double x) {
    double t = std::acos(x);
    return (w(t) - w(two_pi - t)) / std::sqrt(1.0 - x * x);
  };
  // Atoms at theta and 2pi - theta land on the same x; masses merge there.
  std::vector<MatrixAtom> atoms;
  for (const auto& atom : m.atoms) {
    double xa = std::cos(atom.theta);
    double sa = std::abs(std::sin(atom.theta));
    double sgn = atom.theta <= pi ? 1.0 : -1.0;  // nu1 vs nu2 contribution
    Mat2 mass = 0.5 * atom.mass *
                Mat2{1.0, sgn * sa, sgn * sa, sa * sa};
    bool merged = false;
    for (auto& existing : atoms) {
      if (std::abs(existing.x - xa) <= 1e-12) {
        existing.mass = existing.mass + mass;
        merged = true;
        break;
      }
    }
    if (!merged) atoms.push_back({xa, mass});
  }
  return MatrixMeasure(rho, sigma, std::move(atoms), m.nodes());
}

Mat2 matrix_inner(const MatPoly2& F, const MatPoly2& G, const MatrixMeasure& om) {
  std::size_t n = om.nodes();
  std::vector<double> fg[2][2], gg[2][2];
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      fg[i][j].resize(n);
      gg[i][j].resize(n);
      kern::horner_real(F(i, j).c.data(), F(i, j).c.size(), om.x.data(), n, fg[i][j].data());
      kern::horner_real(G(i, j).c.data(), G(i, j).c.size(), om.x.data(), n, gg[i][j].data());
    }
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r(i, j) = kern::dot3(om.w11.data(), fg[i][0].data(), gg[j][0].data(), n) +
                kern::dot3(om.w12.data(), fg[i][0].data(), gg[j][1].data(), n) +
                kern::dot3(om.w12.data(), fg[i][1].data(), gg[j][0].data(), n) +
                kern::dot3(om.w22.data(), fg[i][1].data(), gg[j][1].data(), n);
  for (const auto& atom : om.atoms) {
    Mat2 fa = F.eval(atom.x);
    Mat2 ga = G.eval(atom.x);
    r = r + fa * atom.mass * transpose(ga);
  }
  return r;
}

PositivityReport positivity_check(const MatrixMeasure& om) {
  PositivityReport rep;
  for (std::size_t k = 0; k < om.nodes(); ++k) {
    bool bad = !(std::abs(om.sigma_g[k]) <= om.rho_g[k]);
    if (bad) {
      rep.ok = false;
      ++rep.weight_violation_count;
      if (rep.weight_violations.size() < 16)
        rep.weight_violations.push_back({om.x[k], om.rho_g[k], om.sigma_g[k]});
    }
  }
  for (std::size_t j = 0; j < om.atoms.size(); ++j) {
    const Mat2& a = om.atoms[j].mass;
    double scale = max_abs(a);
    bool symmetric = std::abs(a(0, 1) - a(1, 0)) <= 1e-12 * std::max(1.0, scale);
    bool psd = a(0, 0) >= 0.0 && a(1, 1) >= 0.0 &&
               det(a) >= -1e-13 * std::max(1.0, scale * scale);
    if (!symmetric || !psd) {
      rep.ok = false;
      rep.atom_violations.push_back({j, a});
    }
  }
  return rep;
}

}  // namespace opucmat
