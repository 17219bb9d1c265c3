#include "cxosc/report.hpp"

#include <stdexcept>

namespace cxosc {

const Check& Report::at(const std::string& name) const
{
    for (const auto& c : checks_)
        if (c.name == name)
            return c;
    throw std::out_of_range("report '" + suite_ + "' has no check named '" + name + "'");
}

nlohmann::ordered_json Report::to_json() const
{
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& c : checks_) {
        nlohmann::ordered_json j;
        j["name"] = c.name;
        j["kind"] = c.bound == Check::Bound::upper ? "max_residual" : "min_magnitude";
        j["value"] = c.value;
        j["tol"] = c.tol;
        j["count"] = c.count;
        j["pass"] = c.pass();
        if (!c.note.empty())
            j["note"] = c.note;
        checks.push_back(std::move(j));
    }
    nlohmann::ordered_json out;
    out["suite"] = suite_;
    out["checks"] = std::move(checks);
    out["max_residual"] = max_residual();
    out["pass"] = pass();
    return out;
}

} // namespace cxosc
