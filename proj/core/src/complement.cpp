#include "fuzzytop/complement.hpp"

namespace fuzzytop {

namespace {

const Rational kOne(1);

void check_grid(long grid) {
  if (grid < 1) throw DomainError("grid resolution must be positive");
}

bool same_pointwise(const PathExpr& a, const PathExpr& b, long grid) {
  for (long i = 0; i <= grid; ++i) {
    const Rational u(i, grid);
    if (!(eval_path(a, u) == eval_path(b, u))) return false;
  }
  return true;
}

}  // namespace

PathExpr FunctorEval::object_path(const std::string& y, const std::string& z, const Rational& beta) const {
  return functor_object_path(fuzzy_, y, z, beta);
}

CylPoint FunctorEval::morphism_eval(const std::string& y, const PathExpr& gamma, const Rational& eta,
                                    const Rational& x) const {
  const Rational& fy = fuzzy_.at(y);
  return chi_eval(gamma, fy, kOne - fy, eta, x);
}

bool is_complement(const FuzzySet& f, const FuzzySet& g, const Rational& beta, long grid) {
  require_same_ground(f.ground(), g.ground());
  check_level(beta);
  check_grid(grid);
  if (beta.is_zero()) throw DomainError("probe level 0 cannot separate fuzzy sets");
  const FunctorEval ff(f);
  const FunctorEval fg(g);
  for (const auto& y : f.ground()->elements()) {
    const PathExpr pg = fg.object_path(y, y, beta);
    const PathExpr pf_inv = PathExpr::reverse(ff.object_path(y, y, beta));
    if (!(normal_form(pg) == normal_form(pf_inv))) return false;
    if (!same_pointwise(pg, pf_inv, grid)) return false;
  }
  return true;
}

bool check_constant_inverse(const FuzzySet& f, const std::string& y, const std::string& z, const Rational& beta,
                            long grid) {
  check_grid(grid);
  const PathExpr direct = functor_object_path(fz_complement(f), y, z, beta);
  const PathExpr inverted = PathExpr::reverse(functor_object_path(f, y, z, beta));
  return normal_form(direct) == normal_form(inverted) && same_pointwise(direct, inverted, grid);
}

bool check_functoriality(const FuzzySet& f, const std::string& y, const PathExpr& gamma, const PathExpr& delta,
                         long grid) {
  check_grid(grid);
  const PathExpr both = PathExpr::concat({gamma, delta});
  const FunctorEval fe(f);
  const Rational zero(0);
  const Rational half(1, 2);
  for (long j = 0; j <= grid; ++j) {
    const Rational x(j, grid);
    if (!(fe.morphism_eval(y, gamma, kOne, x) == fe.morphism_eval(y, delta, zero, x))) return false;
  }
  for (long i = 0; i <= grid; ++i) {
    const Rational eta(i, grid);
    for (long j = 0; j <= grid; ++j) {
      const Rational x(j, grid);
      const CylPoint pasted = eta <= half ? fe.morphism_eval(y, gamma, Rational(2) * eta, x)
                                          : fe.morphism_eval(y, delta, Rational(2) * eta - kOne, x);
      if (!(fe.morphism_eval(y, both, eta, x) == pasted)) return false;
    }
  }
  return true;
}

ComplementReport complement_report(const FuzzySet& f, const FuzzySet& g) {
  require_same_ground(f.ground(), g.ground());
  ComplementReport r{false, false, false, std::nullopt, complement_compat(f)};
  r.inversion = is_complement(f, g);
  r.direct = true;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (g.at(i) != kOne - f.at(i)) {
      r.direct = false;
      r.mismatch = f.ground()->name(i);
      break;
    }
  }
  r.cylinder_compatible = r.compat.equal;
  return r;
}

}  // namespace fuzzytop
