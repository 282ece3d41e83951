#include "zdens/oracle.hpp"

#include <mpfr.h>

#include <utility>

namespace zdens::oracle {

namespace {

constexpr mpfr_prec_t kPrec = 160; // ~48 decimal digits

/// Small value-semantics wrapper over mpfr_t, enough for the pipeline.
class Big {
public:
    Big() { mpfr_init2(v_, kPrec); mpfr_set_zero(v_, 1); }
    Big(double x) : Big() { mpfr_set_d(v_, x, MPFR_RNDN); }
    Big(const Big& o) : Big() { mpfr_set(v_, o.v_, MPFR_RNDN); }
    Big(Big&& o) noexcept : Big() { mpfr_swap(v_, o.v_); }
    Big& operator=(Big o) { mpfr_swap(v_, o.v_); return *this; }
    ~Big() { mpfr_clear(v_); }

    double d() const { return mpfr_get_d(v_, MPFR_RNDN); }

    friend Big operator+(const Big& a, const Big& b) { Big r; mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
    friend Big operator-(const Big& a, const Big& b) { Big r; mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
    friend Big operator*(const Big& a, const Big& b) { Big r; mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
    friend Big operator/(const Big& a, const Big& b) { Big r; mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }

    friend Big log(const Big& a) { Big r; mpfr_log(r.v_, a.v_, MPFR_RNDN); return r; }
    friend Big exp(const Big& a) { Big r; mpfr_exp(r.v_, a.v_, MPFR_RNDN); return r; }
    friend Big sqrt(const Big& a) { Big r; mpfr_sqrt(r.v_, a.v_, MPFR_RNDN); return r; }
    friend Big pow(const Big& a, const Big& b) { Big r; mpfr_pow(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
    friend Big neg(const Big& a) { Big r; mpfr_neg(r.v_, a.v_, MPFR_RNDN); return r; }
    friend bool operator<(const Big& a, const Big& b) { return mpfr_cmp(a.v_, b.v_) < 0; }

    static Big pi() { Big r; mpfr_const_pi(r.v_, MPFR_RNDN); return r; }

private:
    mpfr_t v_;
};

Big c_sigma_ln_big(const Big& sigma, const Big& ln_x0) {
    const Big s = Big(2.0) * sigma - Big(1.0);
    const Big bracket = s * s * s + Big(3.0) * s * s / ln_x0
                      + Big(6.0) * s / (ln_x0 * ln_x0)
                      + Big(6.0) / (ln_x0 * ln_x0 * ln_x0);
    return sigma / (Big(2.0) * s * s * s * s) * bracket;
}

} // namespace

Breakdown k_final_oracle(double sigma_d, double log_T0_d) {
    const Big sigma(sigma_d);
    const Big lt(log_T0_d);
    const Big one(1.0), two(2.0), half(0.5), quarter(0.25);
    const Big pi = Big::pi();
    const Big s = two * sigma - one;

    const Big m0 = sqrt(one + (two / Big(3.0)) * sqrt(Big(6.0) / Big(5.0)));
    const Big two_pi_m0 = two * pi * m0;
    const Big llt = log(lt);
    const Big ratio = llt / lt;
    const Big inv_T0 = exp(neg(lt));

    Big ln_x0 = s * lt;
    const Big ln433 = log(Big(433.0));
    if (ln_x0 < ln433) ln_x0 = ln433;

    const Big c_of_sigma = c_sigma_ln_big(sigma, ln_x0);
    const Big k_sup = quarter + s / (Big(4.0) * (two - two * sigma));

    const Big a1 = s + ratio;
    const Big a2 = two * sigma + ratio;
    const Big c1 = Big(1.36) * (half + two_pi_m0 * inv_T0) * a1 * a1 * a1 * c_of_sigma
                 + two_pi_m0 * (k_sup / lt) * a2 * a2;

    const Big c2 = two * c1
                 + Big(166.34) / s * (one - pow(two, one - two * sigma))
                   * inv_T0 / (lt * lt * lt);

    const Big denom = one - pow(half, Big(4.0) * sigma * (one - sigma));
    const Big c3 = c2 / denom;

    const Big arg_factor = Big(1.25) - sigma + one / lt;
    const Big k = c3 / (two * pi)
                + Big(17.29) / (two * pi * lt * lt) * arg_factor
                + Big(0.05) / (Big(4.0) * pi * lt * lt);

    const Big klim = Big(0.68) * sigma * s * s / denom / (two * pi);

    Breakdown out;
    out.c_of_sigma = c_of_sigma.d();
    out.c1 = c1.d();
    out.c2 = c2.d();
    out.c3 = c3.d();
    out.k_final = k.d();
    out.k_limit = klim.d();
    return out;
}

} // namespace zdens::oracle
