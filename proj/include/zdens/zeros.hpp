#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace zdens {

/// Ordinates of zeta zeros on the critical line, strictly ascending.
struct ZeroDataset {
    std::vector<double> ordinates;

    std::size_t size() const { return ordinates.size(); }
    bool empty() const { return ordinates.empty(); }
};

/// One decimal ordinate per line; '#' starts a comment line; blank lines
/// ignored.  Non-numeric content throws ParseError with the line number,
/// a non-ascending pair throws ParseError with both values.
ZeroDataset parse_zeros(std::istream& stream);
ZeroDataset parse_zeros_file(const std::string& path);

std::string serialize_zeros(const ZeroDataset& ds);

/// N(T) restricted to the dataset: ordinates <= T (inclusive), binary search.
/// For T beyond the last ordinate the value is only a lower bound.
std::size_t zero_count(const ZeroDataset& ds, double T);

/// N(sigma, T) over the dataset.  Every verified zero has beta = 1/2, so this
/// is identically 0 for sigma > 1/2; it exists to make the audit contract
/// explicit.  sigma <= 1/2 throws DomainError.
std::size_t empirical_nsigma(const ZeroDataset& ds, double sigma, double T);

/// Riemann-von Mangoldt main term (T/2pi) ln(T/(2 pi e)) + 7/8.  T >= 2.
double rvm_main_term(double T);

} // namespace zdens
