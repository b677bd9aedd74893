#pragma once

#include <nlohmann/json.hpp>

#include "spinnet/exactnum.hpp"
#include "spinnet/identities.hpp"
#include "spinnet/network.hpp"
#include "spinnet/projective.hpp"
#include "spinnet/symmetry.hpp"
#include "spinnet/verify.hpp"
#include "spinnet/wigner.hpp"

namespace spinnet::json {

using nlohmann::json;

json spin(Spin s);
json value(const SqrtRational& v);
/// ["a","b","x","c","d","y"]
json sixj(const SixJ& s);
SixJ sixj_from(const json& j);

json quadruple(const CanonicalQuadruple& q);
/// {rsym3_holds, max_r, kappa_twice, rsym5_holds}; absent values are null.
json regularization(const RegularizationReport& r);
RegularizationReport regularization_from(const json& j);

/// {points:[id], lines:[id], incidence:[[p,l]], labels:{points:{}, lines:{}}}
json incidence(const IncidenceStructure& s);
/// Throws ParseError on schema mismatch and MalformedStructure on bad data.
IncidenceStructure incidence_from(const json& j);

json complex(const SimplicialComplex4& c);
SimplicialComplex4 complex_from(const json& j);

/// {symbol_spins: {a: "1", b: "3/2", ...}}
json labeling(const SymbolSpins& spins);
SymbolSpins labeling_from(const json& j);

/// {instance, lhs, rhs, equal, form}
json record(const VerifyRecord& r);

}  // namespace spinnet::json
