#pragma once

#include <nlohmann/json.hpp>

#include "twistq/classify.hpp"
#include "twistq/qchar.hpp"
#include "twistq/relcheck.hpp"

namespace twistq {

using Json = nlohmann::json;

Json to_json(const TwistedType& t);
Json to_json(const CartanData& cd);
Json to_json(const SpectralParam& p);
Json to_json(const RationalFn& f);
Json to_json(const LWeight& x);
Json to_json(const GenMonomial& m);
Json to_json(const ClassifyReport& r);
Json to_json(const A22Result& r);
Json to_json(const QCharacter& c);
Json to_json(const DeltaSupport& d);
Json to_json(const CheckResult& r);
Json to_json(const SuiteReport& r);

// Inverse of to_json(LWeight); used by tests and batch files.
LWeight lweight_from_json(const Json& j, const TwistedType& t);

}  // namespace twistq
