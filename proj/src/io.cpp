#include "isochron/io.hpp"

#include <cstdio>

namespace isochron {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string scan_csv(const ScanTable& scan) {
  std::string out = "c,T,Tprime\n";
  for (const auto& r : scan.rows) {
    out += format_double(r.c) + ',' + format_double(r.T) + ',' + format_double(r.T_prime) + '\n';
  }
  return out;
}

nlohmann::json scan_json(const ScanTable& scan) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : scan.rows) rows.push_back({{"c", r.c}, {"T", r.T}, {"Tprime", r.T_prime}});
  return {{"rows", rows}, {"spread", scan.spread()}, {"trend", to_string(scan.trend())}};
}

nlohmann::json report_json(const IsochronyReport& r) {
  nlohmann::json series = {{"available", r.series.available}, {"exact", r.series.exact}, {"order", r.series.order}};
  if (!r.series.available) {
    series["verdict"] = "unavailable";
  } else if (r.series.mismatch_order) {
    series["verdict"] = "mismatch at order " + std::to_string(*r.series.mismatch_order);
    series["mismatch_order"] = *r.series.mismatch_order;
    series["mismatch_residual"] = *r.series.mismatch_residual;
  } else {
    series["verdict"] = "isochronous to order " + std::to_string(r.series.order);
  }
  const auto& o = r.options;
  return {
      {"family", r.family},
      {"series_verdict", series},
      {"pointwise_residual", r.pointwise_residual},
      {"distance_residual", r.distance_residual},
      {"scan_spread", r.scan_spread},
      {"scan_trend", to_string(r.scan_trend)},
      {"decided_by", r.decided_by},
      {"verdict", to_string(r.verdict)},
      {"tolerances",
       {{"residual", o.residual_tol}, {"distance", o.distance_tol}, {"spread", o.spread_tol}, {"margin", o.margin},
        {"series", o.series_tol}}},
      {"grids",
       {{"x", {{"kind", "chebyshev"}, {"points", o.grid_points}, {"hi", r.x_max}}},
        {"distance", {{"kind", "uniform"}, {"points", o.distance_points}, {"hi", r.x_max}}},
        {"energy", {{"kind", "uniform"}, {"points", o.scan_count}, {"c_max", r.c_max}, {"nodes", o.nodes}}}}},
  };
}

nlohmann::json RunManifest::to_json() const {
  nlohmann::json j = {{"command", command},       {"family", family}, {"parameters", parameters},
                      {"tolerances", tolerances}, {"nodes", nodes},   {"version", version}};
  j["seed"] = seed ? nlohmann::json(*seed) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json rational_json(const Rational& r) { return to_string(r); }

}  // namespace isochron
