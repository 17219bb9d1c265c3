#ifndef CXOSC_IO_HPP
#define CXOSC_IO_HPP

#include "cxosc/fock.hpp"
#include "cxosc/poly.hpp"

#include <json.hpp>

#include <complex>
#include <string>
#include <string_view>
#include <vector>

namespace cxosc {

/// Parses "a", "bi", "a+bi", "a-bi" (no spaces; "i" alone means 1i).
std::complex<double> parse_complex(std::string_view text);

/// Comma-separated list of complex literals.
std::vector<std::complex<double>> parse_complex_list(std::string_view text);

/// Shortest round-tripping literal in the same "a+bi" syntax.
std::string format_complex(std::complex<double> z);

template <class Real>
nlohmann::ordered_json poly_to_json(const DensePoly<Real>& f)
{
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    for (const auto& c : f.coeffs())
        coeffs.push_back({double(c.real()), double(c.imag())});
    nlohmann::ordered_json out;
    out["coeffs"] = std::move(coeffs);
    return out;
}

/// Reads {"coeffs": [[re, im], ...]}.
DensePoly<double> poly_from_json(const nlohmann::json& j);

inline nlohmann::ordered_json complex_to_json(std::complex<double> z)
{
    return nlohmann::ordered_json::array({z.real(), z.imag()});
}

/// CSV with a header row of column block indices and one "re,im" cell per
/// entry (quoted, because the cell itself contains a comma).
std::string matrix_to_csv(const CMatrix& m, int block_size = 1);

nlohmann::ordered_json matrix_to_json(const CMatrix& m);

} // namespace cxosc

#endif // CXOSC_IO_HPP
