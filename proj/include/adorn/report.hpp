#pragma once

#include <json.hpp>

#include "adorn/abelian.hpp"
#include "adorn/alexander.hpp"
#include "adorn/derived.hpp"
#include "adorn/presentation.hpp"
#include "adorn/seifert.hpp"
#include "adorn/zoo.hpp"

// JSON encodings of engine results. Integers that do not fit in 64 bits
// are written as decimal strings.
namespace adorn::report {

using json = nlohmann::json;

json integer(const Integer& z);
Integer integer_from(const json& j);

json to_json(const AbelianInvariants& inv);
AbelianInvariants invariants_from(const json& j);
json to_json(const PresentationStats& s);
json to_json(const GroupPresentation& p);
GroupPresentation presentation_from(const json& j);
json to_json(const SeriesLimits& lim);
json to_json(const StageReport& s);
json to_json(const SeriesVerdict& v);
json to_json(const SeriesResult& r);
json to_json(const LaurentPoly& p);  // {"text", "coefficients" (lowest exponent first), "low"}
json to_json(const KnotReport& r);
json to_json(const SeifertClassification& c);
json to_json(const FreeProductVerdict& v);
json to_json(const CertificateResult& c);

}  // namespace adorn::report
