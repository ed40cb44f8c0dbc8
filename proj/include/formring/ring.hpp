#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "formring/errors.hpp"
#include "formring/field.hpp"

namespace formring {

// Ring descriptor: variable names plus coefficient field. Variable count is
// fixed at construction. Compared by value, so independently constructed
// descriptors over the same variables and field are compatible.
template <CoefficientField F>
struct Ring {
    std::vector<std::string> vars;
    F field;

    int nvars() const { return static_cast<int>(vars.size()); }

    std::optional<int> var_index(const std::string& name) const {
        for (int i = 0; i < nvars(); ++i)
            if (vars[i] == name) return i;
        return std::nullopt;
    }

    bool operator==(const Ring& o) const { return vars == o.vars && field == o.field; }
};

template <CoefficientField F>
using RingPtr = std::shared_ptr<const Ring<F>>;

template <CoefficientField F>
RingPtr<F> make_ring(std::vector<std::string> vars, F field) {
    if (vars.empty()) throw InputError("a ring needs at least one variable");
    for (std::size_t i = 0; i < vars.size(); ++i)
        for (std::size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j]) throw InputError("duplicate variable name: " + vars[i]);
    return std::make_shared<const Ring<F>>(Ring<F>{std::move(vars), std::move(field)});
}

template <CoefficientField F>
bool same_ring(const RingPtr<F>& a, const RingPtr<F>& b) {
    return a == b || *a == *b;
}

template <CoefficientField F>
void require_same_ring(const RingPtr<F>& a, const RingPtr<F>& b, const char* what) {
    if (!same_ring(a, b)) throw InputError(std::string("ring mismatch in ") + what);
}

}  // namespace formring
