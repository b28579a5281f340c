#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "recess/convex_set.hpp"
#include "recess/counterexample.hpp"
#include "recess/recession.hpp"

namespace recess::io {

using Json = nlohmann::ordered_json;

/**
 * Reads {"dim", "norm", "set": {"type": ...}} with rationals as "p/q"
 * strings (plain integers are also accepted). Errors are Error(Parse) whose
 * message names the line and the JSON pointer of the offending field.
 */
ConvexSet parse_set(std::string_view text);
ConvexSet load_set(const std::string& path);

Json set_to_json(const ConvexSet& set);

/// Comma-separated rationals, e.g. "1,0,-1/2".
Vector parse_vector(std::string_view text);

Json to_json(const Rational& q);
Json to_json(const Vector& v);
Json to_json(const Scalar& s);
/// Binding indices are written 1-based.
Json to_json(const RayLength& len);
Json to_json(const RecessionCone& cone);
Json to_json(const CoveragePoint& p);
Json to_json(const ContradictionCertificate& cert);
Json to_json(const MidpointCertificate& cert);
Json to_json(const LimitDirection& limit);
Json to_json(const WitnessPoint& w);
Json to_json(const DenseRestrictionWitness& w);
Json to_json(const RecessionReport& report, const ConvexSet& set);

ContradictionCertificate certificate_from_json(const Json& j);

}  // namespace recess::io
