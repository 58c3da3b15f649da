#include "isochron/potential.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "isochron/isochrone_series.hpp"
#include "models.hpp"

namespace isochron {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

class ScaledModel final : public PotentialModel {
 public:
  ScaledModel(std::shared_ptr<const PotentialModel> inner, double gamma) : inner_(std::move(inner)), gamma_(gamma) {}

  double G(double x) const override { return inner_->G(gamma_ * x) / (gamma_ * gamma_); }

  Jet jet(double x) const override {
    const Jet j = inner_->jet(gamma_ * x);
    return {j.G / (gamma_ * gamma_), j.g / gamma_, j.dg, gamma_ * j.d2g};
  }

  Interval domain() const override {
    const Interval d = inner_->domain();
    if (gamma_ > 0) return {d.lo / gamma_, d.hi / gamma_};
    return {d.hi / gamma_, d.lo / gamma_};
  }

  double critical_energy() const override { return inner_->critical_energy() / (gamma_ * gamma_); }

  RealSeries taylor(int order) const override {
    RealSeries g = inner_->taylor(order);
    double p = 1.0;
    for (int k = 1; k <= order; ++k, p *= gamma_) g[k] *= p;
    return g;
  }

  std::optional<RationalSeries> exact_taylor(int order) const override {
    auto g = inner_->exact_taylor(order);
    if (!g) return g;
    const Rational gamma(gamma_);
    Rational p(1);
    for (int k = 1; k <= order; ++k, p *= gamma) (*g)[k] *= p;
    return g;
  }

 private:
  std::shared_ptr<const PotentialModel> inner_;
  double gamma_;
};

std::string describe(const FamilySpec& spec) {
  struct Visitor {
    std::string operator()(const Harmonic&) const { return "harmonic"; }
    std::string operator()(const Urabe& f) const { return "urabe:alpha=" + fmt(f.alpha); }
    std::string operator()(const Isotonic& f) const { return "isotonic:alpha=" + fmt(f.alpha); }
    std::string operator()(const ThreeParam& f) const {
      return "three:alpha=" + fmt(f.alpha) + ",beta=" + fmt(f.beta) + ",gamma=" + fmt(f.gamma);
    }
    std::string operator()(const Stillinger& f) const {
      return "stillinger:alpha=" + fmt(f.alpha) + ",gamma=" + fmt(f.gamma);
    }
    std::string operator()(const BolotinMcKay& f) const { return "bmk:alpha=" + fmt(f.alpha); }
    std::string operator()(const SeriesFamily& f) const {
      std::string out = "series:";
      bool first = true;
      for (int k = 2; k <= f.g.order(); ++k) {
        if (f.g[k] == 0) continue;
        out += (first ? "a" : ",a") + std::to_string(k) + "=" + to_string(f.g[k]);
        first = false;
      }
      return first ? "series:" : out;
    }
    std::string operator()(const FromH& f) const { return f.spec.name; }
  };
  return std::visit(Visitor{}, spec);
}

std::map<std::string, std::string> parse_params(std::string_view body, const std::string& family) {
  std::map<std::string, std::string> out;
  if (body.empty()) return out;
  std::stringstream ss{std::string(body)};
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw ContractViolation(family + ": expected key=value, got '" + item + "'");
    const std::string key = item.substr(0, eq);
    if (!out.emplace(key, item.substr(eq + 1)).second) throw ContractViolation(family + ": duplicate key " + key);
  }
  return out;
}

double to_double(const std::string& text, const std::string& key) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || !std::isfinite(v)) {
    throw ContractViolation("parameter " + key + ": '" + text + "' is not a finite number");
  }
  return v;
}

class Params {
 public:
  Params(std::map<std::string, std::string> p, std::string family) : p_(std::move(p)), family_(std::move(family)) {}
  double take(const std::string& key) {
    auto it = p_.find(key);
    if (it == p_.end()) throw ContractViolation(family_ + " needs parameter " + key);
    const double v = to_double(it->second, key);
    p_.erase(it);
    return v;
  }
  std::optional<double> maybe(const std::string& key) {
    if (!p_.count(key)) return std::nullopt;
    return take(key);
  }
  std::optional<std::string> text(const std::string& key) {
    auto it = p_.find(key);
    if (it == p_.end()) return std::nullopt;
    std::string v = it->second;
    p_.erase(it);
    return v;
  }
  std::map<std::string, std::string>& rest() { return p_; }
  void done() const {
    if (!p_.empty()) throw ContractViolation(family_ + ": unknown parameter " + p_.begin()->first);
  }

 private:
  std::map<std::string, std::string> p_;
  std::string family_;
};

}  // namespace

Potential::Potential(std::shared_ptr<const PotentialModel> model, std::string name)
    : model_(std::move(model)), name_(std::move(name)) {
  if (!model_) throw ContractViolation("null potential model");
  domain_ = model_->domain();
  c_bar_ = model_->critical_energy();
  if (!domain_.contains(0.0)) throw ContractViolation("potential domain must contain 0");
  phi0_ = phi_series(taylor(5));
}

void Potential::require_inside(double x) const {
  if (!domain_.contains(x)) {
    throw OutOfRange("x = " + fmt(x) + " outside the domain (" + fmt(domain_.lo) + ", " + fmt(domain_.hi) + ") of " +
                     name_);
  }
}

double Potential::G(double x) const {
  require_inside(x);
  return model_->G(x);
}

Jet Potential::jet(double x) const {
  require_inside(x);
  return model_->jet(x);
}

double Potential::phi(double x) const {
  require_inside(x);
  if (std::abs(x) < kPhiSurrogateRadius) return series_eval(phi0_, x);
  const Jet j = model_->jet(x);
  return (j.g * j.g - 2.0 * j.G * j.dg) / (j.g * j.g * j.g);
}

RealSeries Potential::taylor(int order) const {
  RealSeries g = model_->taylor(order);
  // rounding in the models' derivatives at 0 is snapped back to the normalization
  if (std::abs(g[0]) > 1e-12 || (order >= 1 && std::abs(g[1] - 1.0) > 1e-12)) {
    throw ContractViolation(name_ + " is not normalized: g(0) = " + fmt(g[0]) + ", g'(0) = " + fmt(g[1]));
  }
  g[0] = 0.0;
  if (order >= 1) g[1] = 1.0;
  return g;
}

std::optional<RationalSeries> Potential::exact_taylor(int order) const { return model_->exact_taylor(order); }

Potential make_family(const FamilySpec& spec) {
  struct Visitor {
    std::shared_ptr<const PotentialModel> operator()(const Harmonic&) const { return detail::harmonic_model(); }
    std::shared_ptr<const PotentialModel> operator()(const Urabe& f) const { return detail::urabe_model(f.alpha); }
    std::shared_ptr<const PotentialModel> operator()(const Isotonic& f) const {
      return detail::isotonic_model(f.alpha);
    }
    std::shared_ptr<const PotentialModel> operator()(const ThreeParam& f) const {
      return detail::three_param_model(f.alpha, f.beta, f.gamma);
    }
    std::shared_ptr<const PotentialModel> operator()(const Stillinger& f) const {
      return detail::stillinger_model(f.alpha, f.gamma);
    }
    std::shared_ptr<const PotentialModel> operator()(const BolotinMcKay& f) const {
      return detail::stillinger_model(f.alpha, 1.0);
    }
    std::shared_ptr<const PotentialModel> operator()(const SeriesFamily& f) const {
      return detail::series_model(f.g);
    }
    std::shared_ptr<const PotentialModel> operator()(const FromH& f) const {
      return detail::from_h_model(f.spec, 4e-16);
    }
  };
  return Potential(std::visit(Visitor{}, spec), describe(spec));
}

FamilySpec parse_family(std::string_view text) {
  const auto colon = text.find(':');
  const std::string family(text.substr(0, colon));
  Params p(parse_params(colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1), family),
           family);
  FamilySpec out;
  if (family == "harmonic") {
    out = Harmonic{};
  } else if (family == "urabe") {
    out = Urabe{p.take("alpha")};
  } else if (family == "isotonic") {
    out = Isotonic{p.take("alpha")};
  } else if (family == "three") {
    const double a = p.take("alpha"), b = p.take("beta");
    out = ThreeParam{a, b, p.maybe("gamma").value_or(1.0)};
  } else if (family == "stillinger") {
    const double a = p.take("alpha");
    out = Stillinger{a, p.maybe("gamma").value_or(1.0)};
  } else if (family == "bmk") {
    out = BolotinMcKay{p.take("alpha")};
  } else if (family == "series") {
    std::map<int, Rational> coeffs;
    int top = 1;
    for (const auto& [key, value] : p.rest()) {
      if (key.size() < 2 || key[0] != 'a') throw ContractViolation("series: unknown parameter " + key);
      int k = 0;
      try {
        std::size_t used = 0;
        k = std::stoi(key.substr(1), &used);
        if (used != key.size() - 1) k = -1;
      } catch (const std::exception&) {
        k = -1;
      }
      if (k < 2 || k > 64) throw ContractViolation("series: coefficient index in " + key + " must be in 2..64");
      coeffs[k] = parse_rational(value);
      top = std::max(top, k);
    }
    p.rest().clear();
    RationalSeries g(top);
    g[1] = 1;
    for (const auto& [k, v] : coeffs) g[k] = v;
    out = SeriesFamily{g};
  } else if (family == "h") {
    const auto preset = p.text("preset");
    if (!preset) throw ContractViolation("h needs parameter preset");
    const double alpha = *preset == "zero" ? p.maybe("alpha").value_or(0.0) : p.take("alpha");
    const auto beta = p.maybe("beta");
    out = FromH{h_preset(*preset, alpha, beta)};
    std::get<FromH>(out).spec.name = std::string(text);
  } else {
    throw ContractViolation("unknown family '" + family + "'");
  }
  p.done();
  return out;
}

Potential potential_from_h(const HSpec& spec, double tol) {
  return Potential(detail::from_h_model(spec, tol), spec.name);
}

Potential scale_potential(const Potential& P, double gamma) {
  if (gamma == 0.0) throw ContractViolation("scale factor must be nonzero");
  return Potential(detail::scaled_model(P.shared_model(), gamma), P.name() + "|scale=" + fmt(gamma));
}

TaylorData taylor_of(const Potential& P, int order) { return {P.exact_taylor(order), P.taylor(order)}; }

namespace detail {

std::shared_ptr<const PotentialModel> scaled_model(std::shared_ptr<const PotentialModel> inner, double gamma) {
  return std::make_shared<ScaledModel>(std::move(inner), gamma);
}

}  // namespace detail

}  // namespace isochron
