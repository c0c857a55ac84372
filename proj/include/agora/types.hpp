#ifndef AGORA_TYPES_HPP
#define AGORA_TYPES_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace agora {

using GoodIndex = std::size_t;
using AgentId = std::size_t;

constexpr GoodIndex kNoGood = static_cast<GoodIndex>(-1);

// Raised on invalid configuration: bad bounds, unknown goods, malformed
// input files, infeasible requirements.
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an agent's optimization problem is ill-posed at the given
// prices (e.g. zero price on a demanded good).
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

struct Good {
    std::string label;
    bool numeraire = false;   // price pinned at 1.0, never re-cleared
    // Per-good clearing bracket overrides; NaN means "use session default".
    double price_lo = -1.0;
    double price_hi = -1.0;
};

} // namespace agora

#endif
