#pragma once

#include <string>

namespace hafield {

/// Scientific notation with 9 significant digits, independent of locale.
/// Non-finite values print as "nan", "inf", "-inf".
std::string format_sci(double v);

/// v rounded to 9 significant digits (what format_sci prints).
double round_sig9(double v);

}  // namespace hafield
