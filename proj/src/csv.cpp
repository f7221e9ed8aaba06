#include "comprat/csv.hpp"

namespace comprat {

long csv_digits(long precision_bits) { return static_cast<long>(precision_bits / 3.3); }

std::string format_real(const Real& x, long precision_bits) {
    return x.str(csv_digits(precision_bits));
}

} // namespace comprat
