#include "isochron/ode_oracle.hpp"

#include <algorithm>
#include <array>
#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <string>

#include "isochron/period.hpp"
#include "roots.hpp"

namespace isochron {

namespace {

using State = std::array<double, 2>;
namespace odeint = boost::numeric::odeint;

}  // namespace

SimResult simulate_period(const Potential& P, double c, const SimConfig& cfg) {
  if (!(cfg.tol > 0) || !(cfg.step > 0) || !(cfg.max_time > 0)) {
    throw ContractViolation("simulation needs tol > 0, step > 0 and max_time > 0");
  }
  const Orbit orbit = turning_points(P, c);
  const auto rhs = [&P](const State& s, State& d, double) {
    d[0] = s[1];
    d[1] = -P.g(s[0]);
  };

  // absolute tolerance on the scale of the orbit so the drift is relative to c
  const double scale = std::min(std::sqrt(2.0 * c), std::min(orbit.b, -orbit.a));
  auto stepper = odeint::make_dense_output(cfg.tol * scale, cfg.tol, odeint::runge_kutta_dopri5<State>());
  stepper.initialize(State{orbit.b, 0.0}, 0.0, cfg.step);

  // y at time t inside the last step
  const auto y_at = [&stepper](double t) {
    State s;
    stepper.calc_state(t, s);
    return s[1];
  };

  SimResult out{0.0, 0.0, 0.0, false, 0};
  bool half_seen = false;
  while (stepper.current_time() < cfg.max_time) {
    stepper.do_step(rhs);
    ++out.steps;
    const double y0 = stepper.previous_state()[1], y1 = stepper.current_state()[1];
    const double t0 = stepper.previous_time(), t1 = stepper.current_time();
    if (!half_seen && y0 < 0 && y1 >= 0) {
      // left turning point, y from - to +
      out.half_period = detail::bracketed_root(y_at, t0, t1, y0, y1, "half-period crossing");
      half_seen = true;
    } else if (half_seen && y0 > 0 && y1 <= 0) {
      // back on {y = 0, x > 0}, y from + to -
      out.T = detail::bracketed_root(y_at, t0, t1, y0, y1, "return crossing");
      State s;
      stepper.calc_state(out.T, s);
      out.energy_drift = std::abs(0.5 * s[1] * s[1] + P.G(s[0]) - c) / c;
      out.drift_warning = out.energy_drift > 100 * cfg.tol;
      return out;
    }
  }
  throw NumericFailure("no return to the section before t = " + std::to_string(cfg.max_time) + " for " + P.name() +
                       " at c = " + std::to_string(c));
}

}  // namespace isochron
