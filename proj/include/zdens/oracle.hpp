#pragma once

namespace zdens::oracle {

/// Constant pipeline re-evaluated end to end in >= 40-digit arithmetic
/// (MPFR).  Results are rounded to double at the very end only.  Used by
/// tests to certify the double-precision pipeline; never on the hot path.
struct Breakdown {
    double c_of_sigma;
    double c1;
    double c2;
    double c3;
    double k_final;
    double k_limit;
};

Breakdown k_final_oracle(double sigma, double log_T0);

} // namespace zdens::oracle
