#ifndef HANKEL_JSONIO_HPP
#define HANKEL_JSONIO_HPP

#include <string>

#include "json.hpp"

#include "hankel/bernstein.hpp"
#include "hankel/coefficients.hpp"
#include "hankel/maminda.hpp"
#include "hankel/parametrization.hpp"
#include "hankel/pipelines.hpp"
#include "hankel/series.hpp"
#include "hankel/ykc.hpp"

namespace hankel {

// Insertion-ordered documents so field order (and therefore the emitted
// bytes) is stable run to run.
using json = nlohmann::ordered_json;

/// {"num", "den", "approx"}; num/den are JSON integers when they fit,
/// decimal strings otherwise, and approx is advisory only.
json rational_to_json(const Rational& q);

/// Accepts a JSON integer, a string like "-5/7" or "0.25", or an object
/// with "num"/"den" (integers or decimal strings).
Rational rational_from_json(const json& j);

/// Real values use the rational encoding; complex ones {"re": ..., "im": ...}.
json gaussian_to_json(const GaussianRational& g);
GaussianRational gaussian_from_json(const json& j);

/// Series literal {"order": N, "coeffs": [...]}, coefficients from z^0;
/// trailing zero coefficients may be omitted on input.
json series_to_json(const TruncatedSeries& f);
TruncatedSeries series_from_json(const json& j);

/// Polynomial file {"bidegree": [m,n], "terms": [{"i","j","num","den"}]};
/// only nonzero terms are written, in lexicographic (i,j) order.
json poly_to_json(const BivariatePoly& f);
BivariatePoly poly_from_json(const json& j);

/// {"schema_version": 1, "kind": ..., "timestamp": ...}; the timestamp is
/// the only field of any emitted document that varies between identical
/// runs.
json report_envelope(const std::string& kind);

json phi_report_to_json(const PhiPropertyReport& rep);
json ykc_to_json(const YkcInput& inp, const YkcResult& closed, const YkcResult* oracle);
json coeffs_to_json(const CoeffVec& v);
json sample_to_json(const CuboidSample& s);  // one stream line, no envelope
json cert_report_to_json(const CertificationReport& rep);
json theorem_report_to_json(const TheoremReport& rep);

std::string iso_timestamp_utc();

/// Parses the file at path; throws std::runtime_error when unreadable.
json load_json_file(const std::string& path);

}  // namespace hankel

#endif
