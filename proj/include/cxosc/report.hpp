#ifndef CXOSC_REPORT_HPP
#define CXOSC_REPORT_HPP

#include <json.hpp>

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace cxosc {

/*
 * One named numerical check. An upper-bound check passes when value ≤ tol
 * (a residual); a lower-bound check passes when value > tol (a quantity
 * that must stay away from zero). `count` is the number of instances
 * folded into `value`; a check with count 0 is vacuous and passes.
 */
struct Check {
    enum class Bound { upper, lower };

    std::string name;
    double value = 0;
    double tol = 0;
    Bound bound = Bound::upper;
    long count = 0;
    std::string note;

    Check() = default;
    Check(std::string name_, double value_, double tol_, Bound bound_ = Bound::upper, long count_ = 0,
          std::string note_ = {})
        : name(std::move(name_)), value(value_), tol(tol_), bound(bound_), count(count_), note(std::move(note_))
    {
    }

    /// Folds one more residual into an upper-bound check.
    void absorb(double residual)
    {
        const bool poisoned = count > 0 && value != value; // NaN sticks once seen
        if (!poisoned && (count == 0 || residual != residual || residual > value))
            value = residual;
        ++count;
    }

    bool pass() const
    {
        if (count == 0)
            return true;
        if (!(value == value)) // NaN
            return false;
        return bound == Bound::upper ? value <= tol : value > tol;
    }
};

class Report {
public:
    explicit Report(std::string suite) : suite_(std::move(suite)) {}

    void add(Check c) { checks_.push_back(std::move(c)); }

    void merge(const Report& other)
    {
        for (const auto& c : other.checks_) {
            Check copy = c;
            copy.name = other.suite_ + "." + c.name;
            checks_.push_back(std::move(copy));
        }
    }

    const std::string& suite() const { return suite_; }
    const std::vector<Check>& checks() const { return checks_; }

    const Check& at(const std::string& name) const;

    double max_residual() const
    {
        double worst = 0;
        for (const auto& c : checks_)
            if (c.bound == Check::Bound::upper && c.count > 0)
                worst = std::max(worst, c.value);
        return worst;
    }

    bool pass() const
    {
        return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.pass(); });
    }

    nlohmann::ordered_json to_json() const;

private:
    std::string suite_;
    std::vector<Check> checks_;
};

} // namespace cxosc

#endif // CXOSC_REPORT_HPP
