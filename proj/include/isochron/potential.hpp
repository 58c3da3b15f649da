#pragma once

// Potentials G with restoring force g = G', normalized so that
// G(0) = g(0) = 0 and g'(0) = 1, and satisfying x g(x) > 0 on an open
// domain (lo, hi) around 0.

#include <array>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "isochron/series.hpp"

namespace isochron {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// G and the first two derivatives of g at a point.
struct Jet {
  double G;
  double g;
  double dg;
  double d2g;
};

/// Open interval, ends may be infinite.
struct Interval {
  double lo;
  double hi;
  bool contains(double x) const { return x > lo && x < hi; }
};

/// Highest Taylor order of g the models are asked for.
inline constexpr int kMaxTaylorOrder = 16;

class PotentialModel {
 public:
  virtual ~PotentialModel() = default;

  virtual double G(double x) const = 0;
  virtual Jet jet(double x) const = 0;
  virtual Interval domain() const = 0;
  /// Supremum of energies carrying closed orbits (may be +inf).
  virtual double critical_energy() const = 0;
  /// Taylor coefficients of g at 0 through x^order (order <= kMaxTaylorOrder).
  virtual RealSeries taylor(int order) const = 0;
  /// Exact rational Taylor data when the model admits it.
  virtual std::optional<RationalSeries> exact_taylor(int /*order*/) const { return std::nullopt; }
};

/// Shared, immutable handle to a model.
class Potential {
 public:
  Potential(std::shared_ptr<const PotentialModel> model, std::string name);

  double G(double x) const;
  double g(double x) const { return jet(x).g; }
  Jet jet(double x) const;

  /// d/dx(G/g^2) = (g^2 - 2 G g')/g^3, replaced by its Taylor polynomial
  /// for |x| < 1e-4 where the direct form cancels.
  double phi(double x) const;

  Interval domain() const { return domain_; }
  double critical_energy() const { return c_bar_; }
  bool contains(double x) const { return domain_.contains(x); }
  const std::string& name() const { return name_; }

  RealSeries taylor(int order) const;
  std::optional<RationalSeries> exact_taylor(int order) const;

  const PotentialModel& model() const { return *model_; }
  std::shared_ptr<const PotentialModel> shared_model() const { return model_; }

 private:
  void require_inside(double x) const;

  std::shared_ptr<const PotentialModel> model_;
  std::string name_;
  Interval domain_;
  double c_bar_;
  RealSeries phi0_;
};

inline constexpr double kPhiSurrogateRadius = 1e-4;

/// Urabe function h (odd, |h| < 1) with h' and h'', plus optionally its
/// antiderivative H; X ranges over (-x_max, x_max).
struct HSpec {
  std::string name;
  std::function<std::array<double, 3>(double)> h;
  std::function<double(double)> H;  ///< empty: integrated numerically
  RealSeries h_taylor;              ///< Taylor series of h at 0
  double x_max = kInf;
};

// Family descriptors.
struct Harmonic {};
struct Urabe {
  double alpha;
};
struct Isotonic {
  double alpha;
};
struct ThreeParam {
  double alpha, beta, gamma;
};
struct Stillinger {
  double alpha, gamma;
};
struct BolotinMcKay {
  double alpha;
};
struct SeriesFamily {
  RationalSeries g;
};
struct FromH {
  HSpec spec;
};

using FamilySpec = std::variant<Harmonic, Urabe, Isotonic, ThreeParam, Stillinger, BolotinMcKay, SeriesFamily, FromH>;

/// Closed-form (or series / h-generated) potential for a family. Throws
/// ContractViolation naming the violated parameter constraint.
Potential make_family(const FamilySpec& spec);

/// Parses the family grammar:
///   harmonic | urabe:alpha=A | isotonic:alpha=A | three:alpha=A,beta=B,gamma=C
///   stillinger:alpha=A,gamma=C | bmk:alpha=A | series:a2=p/q,a3=...
///   h:preset=NAME,alpha=A[,beta=B]   (NAME in zero, urabe, three, isotonic, bmk, others1, others2)
/// In series specs aK is the coefficient of x^K in g.
FamilySpec parse_family(std::string_view text);

/// Built-in h-functions by name; parameters as in parse_family.
HSpec h_preset(std::string_view name, double alpha, std::optional<double> beta = std::nullopt);

/// Urabe construction: x = X + H(X), G = X^2/2, g = X/(1 + h(X)).
/// tol is the inversion accuracy of X(x). Throws ContractViolation when
/// |h| >= 1 is detected on a sample of the domain.
Potential potential_from_h(const HSpec& spec, double tol = 4e-16);

/// G(gamma x)/gamma^2. T for the result at c equals T for P at gamma^2 c.
Potential scale_potential(const Potential& P, double gamma);

/// Taylor data of g at 0: exact when available, floating always.
struct TaylorData {
  std::optional<RationalSeries> exact;
  RealSeries real;
};
TaylorData taylor_of(const Potential& P, int order);

}  // namespace isochron
