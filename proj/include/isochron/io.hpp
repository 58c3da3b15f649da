#pragma once

// Serialization of scans, reports and coefficient tables.

#include <json.hpp>
#include <string>

#include "isochron/criteria.hpp"
#include "isochron/period.hpp"

namespace isochron {

/// 17 significant digits, round-trips every double.
std::string format_double(double v);

/// Header "c,T,Tprime" then one row per sample.
std::string scan_csv(const ScanTable& scan);

nlohmann::json scan_json(const ScanTable& scan);
nlohmann::json report_json(const IsochronyReport& report);

/// What produced an output file. Carries no clock or host data so equal
/// invocations give equal bytes.
struct RunManifest {
  std::string command;
  std::string family;
  nlohmann::json parameters = nlohmann::json::object();
  nlohmann::json tolerances = nlohmann::json::object();
  int nodes = 0;
  std::optional<unsigned> seed;
  std::string version = ISOCHRON_VERSION;

  nlohmann::json to_json() const;
};

/// Rational rendered as "p/q", for exact tables.
nlohmann::json rational_json(const Rational& r);

}  // namespace isochron
