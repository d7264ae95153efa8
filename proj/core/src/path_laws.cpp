#include "fuzzytop/path_laws.hpp"

namespace fuzzytop {

namespace {

const Rational kZero(0);
const Rational kOne(1);
const Rational kHalf(1, 2);

bool agree(const PathExpr& a, const PathExpr& b, long grid) {
  for (long i = 0; i <= grid; ++i) {
    const Rational u(i, grid);
    if (!(eval_path(a, u) == eval_path(b, u))) return false;
  }
  return true;
}

template <class F>
bool all_grid(long grid, F f) {
  for (long i = 0; i <= grid; ++i) {
    const Rational eta(i, grid);
    for (long j = 0; j <= grid; ++j) {
      if (!f(eta, Rational(j, grid))) return false;
    }
  }
  return true;
}

}  // namespace

bool law_htransform_reverse(const PathExpr& gamma, const Rational& t, long grid) {
  const PathExpr lhs = PathExpr::reverse(PathExpr::htransform(t, gamma));
  const PathExpr rhs = PathExpr::htransform(t, PathExpr::reverse(gamma));
  return agree(lhs, rhs, grid) && normal_form(lhs) == normal_form(rhs);
}

bool law_htransform_concat(const std::vector<PathExpr>& parts, const Rational& t, long grid) {
  std::vector<PathExpr> moved;
  moved.reserve(parts.size());
  for (const auto& p : parts) moved.push_back(PathExpr::htransform(t, p));
  const PathExpr lhs = PathExpr::htransform(t, PathExpr::concat(parts));
  const PathExpr rhs = PathExpr::concat(std::move(moved));
  return agree(lhs, rhs, grid) && normal_form(lhs) == normal_form(rhs);
}

bool law_chi_flip(const PathExpr& rho, const Rational& s, const Rational& t, long grid) {
  return all_grid(grid, [&](const Rational& eta, const Rational& x) {
    return chi_eval(rho, s, t, eta, x) == chi_eval(rho, t, s, eta, kOne - x);
  });
}

bool law_boundary_restrictions(const PathExpr& rho, const Rational& s, const Rational& t, long grid) {
  const PathExpr rs = PathExpr::htransform(s, rho);
  const PathExpr rt = PathExpr::htransform(t, rho);
  for (long i = 0; i <= grid; ++i) {
    const Rational eta(i, grid);
    if (!(chi_eval(rho, s, t, eta, kZero) == eval_path(rs, eta))) return false;
    if (!(chi_eval(rho, s, t, eta, kOne) == eval_path(rt, eta))) return false;
  }
  return true;
}

bool law_path_restriction(const PathExpr& gamma, const Rational& s, const Rational& t, const Rational& a,
                          const Rational& b, long grid) {
  const PathNormalForm restricted = normal_form(gamma).restrict(a, b);
  return all_grid(grid, [&](const Rational& eta, const Rational& x) {
    return chi_eval(gamma, s, t, a + eta * (b - a), x) == chi_eval(restricted, s, t, eta, x);
  });
}

bool law_constant(const CylPoint& p, const Rational& s, const Rational& t, long grid) {
  const PathExpr c = PathExpr::constant(p);
  return all_grid(grid, [&](const Rational& eta, const Rational& x) {
    return chi_eval(c, s, t, eta, x) == chi_eval(c, s, t, kZero, x);
  });
}

bool law_relative_endpoints(const PathExpr& rho, const Rational& s, const Rational& t) {
  const PathExpr p = chi_boundary(rho, s, t, 0);
  const PathExpr q = chi_boundary(rho, s, t, 1);
  // The DSL node and the vertical closed form describe the same boundary path.
  if (!(normal_form(p) == normal_form(PathExpr::chi_boundary(rho, s, t, 0)))) return false;
  if (!(normal_form(q) == normal_form(PathExpr::chi_boundary(rho, s, t, 1)))) return false;
  const PathExpr rt = PathExpr::htransform(t, rho);
  try {
    const PathExpr square = PathExpr::concat({PathExpr::reverse(p), PathExpr::htransform(s, rho), q});
    return square.start() == rt.start() && square.finish() == rt.finish();
  } catch (const DomainError&) {
    return false;
  }
}

bool law_functoriality_pasting(const PathExpr& gamma, const PathExpr& delta, const Rational& s, const Rational& t,
                               long grid) {
  const PathExpr both = PathExpr::concat({gamma, delta});
  return all_grid(grid, [&](const Rational& eta, const Rational& x) {
    const CylPoint pasted = eta <= kHalf ? chi_eval(gamma, s, t, Rational(2) * eta, x)
                                         : chi_eval(delta, s, t, Rational(2) * eta - kOne, x);
    return chi_eval(both, s, t, eta, x) == pasted;
  });
}

}  // namespace fuzzytop
