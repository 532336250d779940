#pragma once

#include <json.hpp>

#include "mfib/certificate.hpp"
#include "mfib/regularity.hpp"
#include "mfib/sweep.hpp"

// JSON encodings shared by the CLI and the acceptance report. Rationals are
// strings "p/q" (or "p"), complex scalars are [re, im].
namespace mfib::io {

using nlohmann::json;

json rational_json(const Rational& r);
json rational_vector_json(const RationalVector& v);
json complex_json(Complex z);
json complex_vector_json(const Eigen::VectorXcd& v);
json real_vector_json(const Eigen::VectorXd& v);

json chamber_json(const ChamberReport& c, const std::string& orbit_label);
json certificate_json(const FiberCertificate& c);
json sweep_json(const FiberSweep& s, bool include_certificates = true);
json grid_json(const GridClassification& g);

}  // namespace mfib::io
