#pragma once

#include <iosfwd>
#include <string>

#include "motss/bounds.hpp"

namespace motss {

/// Instance file format:
///   bounds m_1,...,m_k M_1,...,M_k
///   p_1,...,p_k        (one line per time step)
/// Plain decimal with optional exponent; NaN and infinite tokens are
/// rejected.
InputSequence parse_instance(std::istream& in);
InputSequence parse_instance_file(const std::string& path);

void write_instance(const InputSequence& seq, std::ostream& out);
void write_instance_file(const InputSequence& seq, const std::string& path);

/// %.17g — enough significant digits for an exact double round-trip.
std::string format_real(double x);

}  // namespace motss
