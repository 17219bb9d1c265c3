#ifndef CXOSC_SUITES_HPP
#define CXOSC_SUITES_HPP

#include "cxosc/params.hpp"
#include "cxosc/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cxosc {

struct SuiteOptions {
    int degree = 20;         ///< largest polynomial degree / truncation exercised
    std::uint64_t seed = 0;  ///< drives the randomized property checks
    int random_pairs = 100;  ///< polynomial pairs for the adjointness check
};

/// Names accepted by run_suite: all, algebra, hermite, orthogonality, bargmann, blocks.
const std::vector<std::string>& suite_names();

/// Runs one named suite (or all of them) at the requested precision.
/// `Real` is double or long double; matrix-based checks always run in double.
template <class Real>
Report run_suite(const std::string& name, const AlgebraParams& p, const SuiteOptions& opts);

extern template Report run_suite<double>(const std::string&, const AlgebraParams&, const SuiteOptions&);
extern template Report run_suite<long double>(const std::string&, const AlgebraParams&, const SuiteOptions&);

} // namespace cxosc

#endif // CXOSC_SUITES_HPP
