#ifndef TSD_ERROR_HPP
#define TSD_ERROR_HPP

#include <stdexcept>
#include <string>

namespace tsd {

/// Error raised by library operations; carries the module that produced it
/// so callers (notably the CLI) can surface it with context.
class Error : public std::runtime_error {
public:
    Error(std::string module, const std::string& message)
        : std::runtime_error(module + ": " + message), module_(std::move(module)) {}

    const std::string& module() const { return module_; }

private:
    std::string module_;
};

}  // namespace tsd

#endif
