#ifndef LAF_ERRORS_HPP
#define LAF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace laf {

/// Invalid input: bad spec files, grammar violations, mismatched rings,
/// out-of-range arguments. Maps to CLI exit code 1.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// A computation that could not be completed: tolerance/cluster failures,
/// internal consistency violations, refused minor budgets. Exit code 2.
class compute_error : public std::runtime_error {
public:
    explicit compute_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace laf

#endif
