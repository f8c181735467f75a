#include "nessprobe/quadratic_lindblad.hpp"

#include <array>
#include <utility>

namespace nessprobe {

namespace {

using LinearOp = Eigen::Matrix<cplx, 4, 1>;  // coefficients on (a1, a2, a1', a2')

constexpr int kModeOf[4] = {0, 1, 0, 1};
constexpr bool kCreation[4] = {false, false, true, true};

// [l_i, l_j] as a c-number.
double commutator(int i, int j) {
  if (kModeOf[i] != kModeOf[j] || kCreation[i] == kCreation[j]) return 0.0;
  return kCreation[i] ? -1.0 : 1.0;
}

double commutator(LadderOp p, LadderOp q) {
  return commutator(static_cast<int>(p), static_cast<int>(q));
}

// Normal-ordered basis representation of l_i l_j: (monomial, constant).
std::pair<Monomial, double> product(int i, int j) {
  const LadderOp x = static_cast<LadderOp>(i);
  const LadderOp y = static_cast<LadderOp>(j);
  using L = LadderOp;
  using M = Monomial;
  auto is = [&](L a, L b) { return (x == a && y == b) || (x == b && y == a); };
  if (x == L::a1 && y == L::a1) return {M::a1_a1, 0.0};
  if (x == L::a1d && y == L::a1d) return {M::a1d_a1d, 0.0};
  if (x == L::a1d && y == L::a1) return {M::n1, 0.0};
  if (x == L::a1 && y == L::a1d) return {M::n1, 1.0};
  if (x == L::a2 && y == L::a2) return {M::a2_a2, 0.0};
  if (x == L::a2d && y == L::a2d) return {M::a2d_a2d, 0.0};
  if (x == L::a2d && y == L::a2) return {M::n2, 0.0};
  if (x == L::a2 && y == L::a2d) return {M::n2, 1.0};
  if (is(L::a1, L::a2)) return {M::a1_a2, 0.0};
  if (is(L::a1, L::a2d)) return {M::a1_a2d, 0.0};
  if (is(L::a1d, L::a2)) return {M::a1d_a2, 0.0};
  return {M::a1d_a2d, 0.0};  // a1' a2' in either order
}

constexpr std::array<std::pair<LadderOp, LadderOp>, 10> kFactors = {{
    {LadderOp::a1d, LadderOp::a1},
    {LadderOp::a1, LadderOp::a1},
    {LadderOp::a1d, LadderOp::a1d},
    {LadderOp::a2d, LadderOp::a2},
    {LadderOp::a2, LadderOp::a2},
    {LadderOp::a2d, LadderOp::a2d},
    {LadderOp::a1, LadderOp::a2},
    {LadderOp::a1, LadderOp::a2d},
    {LadderOp::a1d, LadderOp::a2},
    {LadderOp::a1d, LadderOp::a2d},
}};

LinearOp basis_op(LadderOp op) {
  LinearOp v = LinearOp::Zero();
  v(static_cast<int>(op)) = 1.0;
  return v;
}

// Dual generator acting on a single ladder operator.
LinearOp dual_linear(const QuadraticLindbladian& lb, LadderOp x) {
  using namespace std::complex_literals;
  LinearOp out = LinearOp::Zero();
  const int k = kModeOf[static_cast<int>(x)];
  if (kCreation[static_cast<int>(x)]) {
    // i[H, a_k'] = i sum_j h_jk a_j'
    for (int j = 0; j < 2; ++j) out(2 + j) += 1i * lb.hamiltonian(j, k);
  } else {
    // i[H, a_k] = -i sum_l h_kl a_l
    for (int l = 0; l < 2; ++l) out(l) += -1i * lb.hamiltonian(k, l);
  }
  for (const auto& t : lb.terms) {
    // rate/2 ([X, Q] P + [P, X] Q)
    out += 0.5 * t.rate * commutator(x, t.right) * basis_op(t.left);
    out += 0.5 * t.rate * commutator(t.left, x) * basis_op(t.right);
  }
  return out;
}

// Accumulates (u . l)(v . l) into a basis row plus constant.
void accumulate_product(const LinearOp& u, const LinearOp& v, CVec10& row, cplx& constant) {
  for (int i = 0; i < 4; ++i) {
    if (u(i) == cplx{}) continue;
    for (int j = 0; j < 4; ++j) {
      if (v(j) == cplx{}) continue;
      const auto [mono, c] = product(i, j);
      row(index(mono)) += u(i) * v(j);
      constant += u(i) * v(j) * c;
    }
  }
}

}  // namespace

CVec10 unit_observable(Monomial m) {
  CVec10 v = CVec10::Zero();
  v(index(m)) = 1.0;
  return v;
}

ObservableGenerator assemble_observable_generator(const QuadraticLindbladian& lindbladian) {
  ObservableGenerator gen;
  gen.m.setZero();
  gen.w.setZero();
  for (int k = 0; k < 10; ++k) {
    const auto [x, y] = kFactors[k];
    CVec10 row = CVec10::Zero();
    cplx constant = 0.0;
    accumulate_product(dual_linear(lindbladian, x), basis_op(y), row, constant);
    accumulate_product(basis_op(x), dual_linear(lindbladian, y), row, constant);
    for (const auto& t : lindbladian.terms) {
      constant += t.rate * commutator(t.left, x) * commutator(y, t.right);
    }
    gen.m.row(k) = row.transpose();
    gen.w(k) = constant;
  }
  return gen;
}

QuadraticLindbladian thermal_lindbladian(const SystemParams& params, const ThermalBathPair& baths) {
  params.validate();
  baths.validate();
  QuadraticLindbladian lb;
  lb.hamiltonian << params.omega1, params.lambda, params.lambda, params.omega2();
  const double g = params.gamma;
  lb.terms = {
      {g * (baths.n1 + 1.0), LadderOp::a1d, LadderOp::a1},
      {g * baths.n1, LadderOp::a1, LadderOp::a1d},
      {g * (baths.n2 + 1.0), LadderOp::a2d, LadderOp::a2},
      {g * baths.n2, LadderOp::a2, LadderOp::a2d},
  };
  return lb;
}

QuadraticLindbladian squeezed_lindbladian(const SystemParams& params, const SqueezedBath& bath) {
  params.validate();
  bath.validate();
  QuadraticLindbladian lb;
  lb.hamiltonian << params.omega1, params.lambda, params.lambda, params.omega2();
  const double g = params.gamma;
  const double big_n = bath.occupation();
  const cplx m_squeeze = bath.squeeze();
  lb.terms = {
      {g * (big_n + 1.0), LadderOp::a1d, LadderOp::a1},
      {g * big_n, LadderOp::a1, LadderOp::a1d},
      {-g * m_squeeze, LadderOp::a1d, LadderOp::a1d},
      {-g * std::conj(m_squeeze), LadderOp::a1, LadderOp::a1},
  };
  return lb;
}

CVec10 moments_from_ladder(const LadderCovariance& cm) {
  const CMat4& s = cm.sigma;
  CVec10 v;
  v(index(Monomial::n1)) = s(0, 0) - 0.5;
  v(index(Monomial::a1_a1)) = s(0, 1);
  v(index(Monomial::a1d_a1d)) = s(1, 0);
  v(index(Monomial::n2)) = s(2, 2) - 0.5;
  v(index(Monomial::a2_a2)) = s(2, 3);
  v(index(Monomial::a2d_a2d)) = s(3, 2);
  v(index(Monomial::a1_a2)) = s(0, 3);
  v(index(Monomial::a1_a2d)) = s(0, 2);
  v(index(Monomial::a1d_a2)) = s(1, 3);
  v(index(Monomial::a1d_a2d)) = s(1, 2);
  return v;
}

CVec10 moments_from_quadrature(const QuadratureCovariance& cm) {
  return moments_from_ladder(cm_transform(cm));
}

}  // namespace nessprobe
