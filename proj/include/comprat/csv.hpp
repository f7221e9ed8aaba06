#pragma once

#include <ostream>
#include <string>

#include "comprat/real.hpp"

namespace comprat {

/// Decimal digits carried by CSV output at a given precision: bits / 3.3.
long csv_digits(long precision_bits);

/// Canonical scientific rendering used by every emitter (round-to-nearest).
std::string format_real(const Real& x, long precision_bits);

} // namespace comprat
