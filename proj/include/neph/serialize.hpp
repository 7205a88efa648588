#pragma once

#include <iosfwd>
#include <string>

#include "neph/subord.hpp"

namespace neph::serialize {

// All emitted reals use 17-significant-digit decimal, so identical inputs
// produce bit-identical files.
std::string format_real(double x);

std::string to_json(const subord::BetaRoot& root);
std::string to_json(const subord::ContainmentReport& report);

// Scan data as CSV with the fixed header "theta,d1,d2,d".
void write_scan_csv(const subord::ContainmentReport& report, std::ostream& out);

// Parse a BetaRoot previously written by to_json (the --cache file).
subord::BetaRoot beta_root_from_json(const std::string& text);

} // namespace neph::serialize
