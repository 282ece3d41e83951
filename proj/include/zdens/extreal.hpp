#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace zdens {

/// Signed real number stored as sign + natural log of magnitude, so that
/// quantities like T^{0.96} at T = 10^{10^6} stay representable and
/// comparable.  Zero is canonical: sign 0, ln_mag ignored everywhere.
class ExtReal {
public:
    constexpr ExtReal() = default;

    static ExtReal from_double(double x);
    /// sign * 10^l.  Throws DomainError for non-finite l or sign outside {-1,0,1}.
    static ExtReal from_log10(double l, int sign);
    /// sign * e^{ln_mag}.
    static ExtReal from_ln(double ln_mag, int sign);

    int sign() const { return sign_; }
    /// Natural log of |value|; only meaningful when sign() != 0.
    double ln_mag() const { return ln_mag_; }
    double log10_mag() const;
    bool is_zero() const { return sign_ == 0; }

    /// May overflow to +-inf for |log10| > ~308.
    double to_double() const;

    ExtReal operator-() const;
    friend ExtReal operator*(const ExtReal& a, const ExtReal& b);
    friend ExtReal operator+(const ExtReal& a, const ExtReal& b);
    friend ExtReal operator-(const ExtReal& a, const ExtReal& b);

    /// ln_mag scales by p.  Negative base with fractional p -> DomainError.
    ExtReal pow(double p) const;

    /// Total order consistent with the represented real values.
    static int cmp(const ExtReal& a, const ExtReal& b);

    friend bool operator==(const ExtReal& a, const ExtReal& b) { return cmp(a, b) == 0; }
    friend bool operator<(const ExtReal& a, const ExtReal& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const ExtReal& a, const ExtReal& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const ExtReal& a, const ExtReal& b) { return cmp(a, b) > 0; }
    friend bool operator>=(const ExtReal& a, const ExtReal& b) { return cmp(a, b) >= 0; }

    /// Textual form "+10^<exponent to 12 significant digits>", or "0".
    std::string str() const;
    /// Accepts the str() form and plain decimal literals.
    static ExtReal parse(std::string_view text);

private:
    int sign_ = 0;
    double ln_mag_ = 0.0;
};

} // namespace zdens
