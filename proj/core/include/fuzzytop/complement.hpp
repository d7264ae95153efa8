#pragma once

#include <optional>
#include <string>

#include "fuzzytop/path.hpp"

namespace fuzzytop {

/// The functor induced by a fuzzy set, evaluated on objects and morphisms.
class FunctorEval {
 public:
  explicit FunctorEval(FuzzySet fuzzy) : fuzzy_(std::move(fuzzy)) {}

  [[nodiscard]] const FuzzySet& fuzzy() const { return fuzzy_; }
  [[nodiscard]] PathExpr object_path(const std::string& y, const std::string& z, const Rational& beta) const;
  /// chi(gamma, F(y), 1 - F(y)) at (eta, x).
  [[nodiscard]] CylPoint morphism_eval(const std::string& y, const PathExpr& gamma, const Rational& eta,
                                       const Rational& x) const;

 private:
  FuzzySet fuzzy_;
};

/// Grid resolution used for the pointwise halves of the checks below.
inline constexpr long kDefaultGrid = 64;

/// Decides G = 1 - F through path inversion of the object paths at probe beta.
/// Rejects beta = 0, which cannot tell any two fuzzy sets apart.
bool is_complement(const FuzzySet& f, const FuzzySet& g, const Rational& beta = Rational(1, 2),
                   long grid = kDefaultGrid);

/// The object path of 1 - F at (y, (z, beta)) is the reverse of that of F.
bool check_constant_inverse(const FuzzySet& f, const std::string& y, const std::string& z, const Rational& beta,
                            long grid = kDefaultGrid);

/// The morphism evaluation of gamma * delta is the halving pasting of the two
/// morphism evaluations. Throws DomainError if the paths are not composable.
bool check_functoriality(const FuzzySet& f, const std::string& y, const PathExpr& gamma, const PathExpr& delta,
                         long grid = kDefaultGrid);

struct ComplementReport {
  bool inversion = false;
  bool direct = false;
  bool cylinder_compatible = false;
  std::optional<std::string> mismatch;  // first y with G(y) != 1 - F(y)
  CompatReport compat;                  // Psi*(1 - F) against the set complement of Psi*(F)
};

ComplementReport complement_report(const FuzzySet& f, const FuzzySet& g);

}  // namespace fuzzytop
