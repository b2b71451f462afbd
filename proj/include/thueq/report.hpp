#pragma once

#include "thueq/descent.hpp"
#include "thueq/dioph.hpp"
#include "thueq/measure.hpp"
#include "thueq/rouche.hpp"

#include <json.hpp>

#include <string>

namespace thueq::report {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "thueq-report/1";
inline constexpr const char* kToolVersion = "1.0.0";

json rat(const Rat& x);
json quad(const quadfield::QuadInt& x);
json solution(const dioph::Solution& s);
json cert(const rouche::EnclosureCert& c);
json step(const descent::StepRecord& s);
json chain(const descent::DescentChain& c);
json constants(const measure::MeasureConstants& m);
json proof(const measure::ProofReport& p);
json corollary(const measure::CorollaryLin& c);
json corollary(const measure::CorollaryEps& c);

struct VerifyConfig {
    Rat tmin = 100;
    int rmax = 60;
    int kmax = 11;
    bool timing = false;
};

struct VerifyResult {
    json doc;
    bool proven = false;
};

VerifyResult verify_all(const VerifyConfig& cfg);

}  // namespace thueq::report
