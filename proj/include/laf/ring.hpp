#ifndef LAF_RING_HPP
#define LAF_RING_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "laf/errors.hpp"

namespace laf {

enum class RingKind { laurent, polynomial };

/// The ambient coefficient ring of a Poly: k[v1^±,...] or k[v1,...],
/// k = exact rationals. Variable names are unique and nonempty.
struct RingDescriptor {
    RingKind kind;
    std::vector<std::string> vars;

    std::size_t arity() const { return vars.size(); }

    /// Index of a variable, or npos.
    std::size_t index_of(const std::string& name) const {
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return i;
        return static_cast<std::size_t>(-1);
    }

    bool operator==(const RingDescriptor& o) const {
        return kind == o.kind && vars == o.vars;
    }
};

using RingPtr = std::shared_ptr<const RingDescriptor>;

inline RingPtr make_ring(RingKind kind, std::vector<std::string> vars) {
    if (vars.empty()) throw input_error("ring needs at least one variable");
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (vars[i].empty()) throw input_error("empty variable name");
        for (std::size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j])
                throw input_error("duplicate variable name '" + vars[i] + "'");
    }
    return std::make_shared<RingDescriptor>(RingDescriptor{kind, std::move(vars)});
}

inline RingPtr laurent_ring(std::vector<std::string> vars) {
    return make_ring(RingKind::laurent, std::move(vars));
}
inline RingPtr polynomial_ring(std::vector<std::string> vars) {
    return make_ring(RingKind::polynomial, std::move(vars));
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a == b || (a && b && *a == *b);
}

inline void require_same_ring(const RingPtr& a, const RingPtr& b, const char* op) {
    if (!same_ring(a, b))
        throw input_error(std::string("ring mismatch in ") + op);
}

} // namespace laf

#endif
