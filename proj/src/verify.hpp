#pragma once

#include <string>

namespace su3f {

// Suite names: tables, genfun, sums, modular, propP, oblades, all.
struct VerifyOptions {
    std::string suite = "all";
    int max_level = -1;   // negative: use the suite default
    int max_weight = -1;  // negative: use the suite default
    bool seed_fault = false;
};

struct VerifyResult {
    bool ok = true;
    std::string text;
};

// Runs one named invariant suite and collects its report text.
// Throws std::invalid_argument on an unknown suite name.
VerifyResult run_verify(const VerifyOptions& opt);

}  // namespace su3f
