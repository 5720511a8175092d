#ifndef MOOLAB_CORE_ERROR_HPP
#define MOOLAB_CORE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace moo {

/// Invalid configuration or unresolved name. The CLI maps this to exit code 2
/// (usage/config error); everything else maps to 1.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace moo

#endif
