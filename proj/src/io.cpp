#include "cxosc/io.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace cxosc {

namespace {

double parse_real(std::string_view text, std::string_view whole)
{
    if (text == "" || text == "+")
        return 1.0;
    if (text == "-")
        return -1.0;
    if (text.front() == '+')
        text.remove_prefix(1);
    double value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end)
        throw std::invalid_argument("malformed complex literal '" + std::string(whole) + "'");
    return value;
}

std::string shortest(double v)
{
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

} // namespace

std::complex<double> parse_complex(std::string_view text)
{
    if (text.empty())
        throw std::invalid_argument("empty complex literal");
    if (text.back() != 'i' && text.back() != 'j')
        return {parse_real(text, text), 0.0};

    const std::string_view body = text.substr(0, text.size() - 1);
    std::size_t split = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        const char c = body[k];
        if ((c == '+' || c == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    if (split == std::string_view::npos)
        return {0.0, parse_real(body, text)};
    const std::string_view re = body.substr(0, split);
    if (re.empty())
        throw std::invalid_argument("malformed complex literal '" + std::string(text) + "'");
    return {parse_real(re, text), parse_real(body.substr(split), text)};
}

std::vector<std::complex<double>> parse_complex_list(std::string_view text)
{
    std::vector<std::complex<double>> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        while (!piece.empty() && piece.front() == ' ')
            piece.remove_prefix(1);
        while (!piece.empty() && piece.back() == ' ')
            piece.remove_suffix(1);
        out.push_back(parse_complex(piece));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}

std::string format_complex(std::complex<double> z)
{
    if (z.imag() == 0)
        return shortest(z.real());
    std::string out = shortest(z.real());
    if (!(z.imag() < 0))
        out += '+';
    out += shortest(z.imag());
    out += 'i';
    return out;
}

DensePoly<double> poly_from_json(const nlohmann::json& j)
{
    std::vector<std::complex<double>> c;
    for (const auto& cell : j.at("coeffs"))
        c.emplace_back(cell.at(0).get<double>(), cell.at(1).get<double>());
    return DensePoly<double>(std::move(c));
}

std::string matrix_to_csv(const CMatrix& m, int block_size)
{
    if (block_size < 1)
        block_size = 1;
    auto label = [block_size](Eigen::Index k) {
        return std::to_string(k / block_size) + ":" + std::to_string(k % block_size);
    };
    std::ostringstream os;
    os << "block";
    for (Eigen::Index c = 0; c < m.cols(); ++c)
        os << ',' << label(c);
    os << '\n';
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        os << label(r);
        for (Eigen::Index c = 0; c < m.cols(); ++c)
            os << ",\"" << shortest(m(r, c).real()) << ',' << shortest(m(r, c).imag()) << '"';
        os << '\n';
    }
    return os.str();
}

nlohmann::ordered_json matrix_to_json(const CMatrix& m)
{
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c)
            row.push_back(complex_to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    nlohmann::ordered_json out;
    out["rows"] = m.rows();
    out["cols"] = m.cols();
    out["entries"] = std::move(rows);
    return out;
}

} // namespace cxosc
