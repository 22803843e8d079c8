#include "halasz/mult_func.hpp"

#include <cmath>

#include "halasz/errors.hpp"

namespace halasz {

void MultFuncSpec::validate() const {
    if (name.empty()) throw validation_error("multiplicative function needs a name");
    if (kappa < 1) throw validation_error("kappa must be a positive integer, got " + std::to_string(kappa));
    if (!rule) throw validation_error("spec '" + name + "' has no prime-power rule");
    if (!std::isfinite(twist)) throw validation_error("spec '" + name + "' has non-finite twist");
}

} // namespace halasz
