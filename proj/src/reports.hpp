#pragma once

// JSON documents produced by the C API. Keys are sorted and rationals are
// strings, so equal inputs serialize to identical bytes.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wakimoto/chi_series.hpp"
#include "wakimoto/classifier.hpp"
#include "wakimoto/span_engine.hpp"
#include "wakimoto/super_module.hpp"
#include "wakimoto/weyl.hpp"

namespace wakimoto::reports {

using Json = nlohmann::json;

Json cfg_json(const ClosureConfig& cfg);
Json vector_json(const FermionVec& v);
Json vector_json(const WeylVec& v);
Json word_json(const OperatorWord& w);

Json classify_json(const ChiSeries& chi, const Verdict& verdict);
Json verify_json(const ChiSeries& chi, const Verdict& verdict, const VerificationReport& report);
Json schur_json(int r, const std::vector<Rational>& xs);
Json enumerate_json(const Rational& max_weight, bool ambient);
Json probe_json(const ChiSeries& chi, const ProbeEvidence& evidence);

/// Clifford, superalgebra and Weyl relation suites on one chi, plus a seeded
/// batch of random F~ combinations; `passed` summarizes all of them.
Json relations_json(const ChiSeries& chi, const ClosureConfig& cfg, std::uint64_t seed);

std::string dump(const Json& j);

}  // namespace wakimoto::reports
