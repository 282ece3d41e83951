#include "zdens/extreal.hpp"

#include <cmath>
#include <cstdlib>

#include <fmt/core.h>

#include "zdens/errors.hpp"

namespace zdens {

namespace {
constexpr double kLn10 = 2.302585092994045684;
// relative ln_mag agreement below which opposite-sign addition cancels to zero
constexpr double kCancelEps = 1e-15;
} // namespace

ExtReal ExtReal::from_double(double x) {
    if (!std::isfinite(x)) throw DomainError("ExtReal: non-finite input");
    ExtReal r;
    if (x == 0.0) return r;
    r.sign_ = x > 0 ? 1 : -1;
    r.ln_mag_ = std::log(std::fabs(x));
    return r;
}

ExtReal ExtReal::from_log10(double l, int sign) {
    if (sign < -1 || sign > 1) throw DomainError("ExtReal: sign must be in {-1,0,1}");
    if (sign == 0) return ExtReal{};
    if (!std::isfinite(l)) throw DomainError("ExtReal: non-finite log10 exponent");
    ExtReal r;
    r.sign_ = sign;
    r.ln_mag_ = l * kLn10;
    return r;
}

ExtReal ExtReal::from_ln(double ln_mag, int sign) {
    if (sign < -1 || sign > 1) throw DomainError("ExtReal: sign must be in {-1,0,1}");
    if (sign == 0) return ExtReal{};
    if (!std::isfinite(ln_mag)) throw DomainError("ExtReal: non-finite ln magnitude");
    ExtReal r;
    r.sign_ = sign;
    r.ln_mag_ = ln_mag;
    return r;
}

double ExtReal::log10_mag() const { return ln_mag_ / kLn10; }

double ExtReal::to_double() const {
    if (sign_ == 0) return 0.0;
    return sign_ * std::exp(ln_mag_);
}

ExtReal ExtReal::operator-() const {
    ExtReal r = *this;
    r.sign_ = -r.sign_;
    return r;
}

ExtReal operator*(const ExtReal& a, const ExtReal& b) {
    ExtReal r;
    r.sign_ = a.sign_ * b.sign_;
    if (r.sign_ == 0) return ExtReal{};
    r.ln_mag_ = a.ln_mag_ + b.ln_mag_;
    return r;
}

ExtReal operator+(const ExtReal& a, const ExtReal& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    const ExtReal& hi = (a.ln_mag_ >= b.ln_mag_) ? a : b;
    const ExtReal& lo = (a.ln_mag_ >= b.ln_mag_) ? b : a;
    if (a.sign_ == b.sign_) {
        ExtReal r;
        r.sign_ = a.sign_;
        r.ln_mag_ = hi.ln_mag_ + std::log1p(std::exp(lo.ln_mag_ - hi.ln_mag_));
        return r;
    }
    // opposite signs: cancel to canonical zero when magnitudes agree to ~ulp
    const double diff = hi.ln_mag_ - lo.ln_mag_;
    const double scale = std::fmax(1.0, std::fabs(hi.ln_mag_));
    if (diff <= kCancelEps * scale) return ExtReal{};
    ExtReal r;
    r.sign_ = hi.sign_;
    r.ln_mag_ = hi.ln_mag_ + std::log1p(-std::exp(-diff));
    return r;
}

ExtReal operator-(const ExtReal& a, const ExtReal& b) { return a + (-b); }

ExtReal ExtReal::pow(double p) const {
    if (sign_ == 0) {
        if (p == 0.0) return from_double(1.0);
        if (p < 0.0) throw DomainError("ExtReal: 0 to a negative power");
        return ExtReal{};
    }
    if (sign_ < 0 && p != std::nearbyint(p))
        throw DomainError("ExtReal: negative base with fractional exponent");
    ExtReal r;
    r.sign_ = sign_ < 0 ? (static_cast<long long>(std::nearbyint(p)) % 2 == 0 ? 1 : -1) : 1;
    r.ln_mag_ = ln_mag_ * p;
    if (p == 0.0) { r.sign_ = 1; r.ln_mag_ = 0.0; }
    return r;
}

int ExtReal::cmp(const ExtReal& a, const ExtReal& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
    if (a.sign_ == 0) return 0;
    if (a.ln_mag_ == b.ln_mag_) return 0;
    const bool a_less = (a.ln_mag_ < b.ln_mag_);
    // for negative values, larger magnitude means smaller value
    return (a_less != (a.sign_ < 0)) ? -1 : 1;
}

std::string ExtReal::str() const {
    if (sign_ == 0) return "0";
    return fmt::format("{}10^{:.12g}", sign_ < 0 ? "-" : "+", log10_mag());
}

ExtReal ExtReal::parse(std::string_view text) {
    if (text.empty()) throw ParseError("ExtReal: empty string");
    if (text == "0") return ExtReal{};
    int sign = 1;
    std::string_view body = text;
    if (body.front() == '+' || body.front() == '-') {
        sign = body.front() == '-' ? -1 : 1;
        body.remove_prefix(1);
    }
    if (body.substr(0, 3) == "10^") {
        body.remove_prefix(3);
        std::string exp_str(body);
        char* end = nullptr;
        const double l = std::strtod(exp_str.c_str(), &end);
        if (end == exp_str.c_str() || *end != '\0')
            throw ParseError(fmt::format("ExtReal: bad exponent '{}'", exp_str));
        return from_log10(l, sign);
    }
    std::string plain(text);
    char* end = nullptr;
    const double v = std::strtod(plain.c_str(), &end);
    if (end == plain.c_str() || *end != '\0')
        throw ParseError(fmt::format("ExtReal: cannot parse '{}'", plain));
    return from_double(v);
}

} // namespace zdens
