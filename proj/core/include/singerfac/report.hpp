#pragma once

#include <string>

#include "singerfac/charcount.hpp"

namespace singerfac {

// Serialization of report values.  Counts are emitted as decimal strings in
// JSON so arbitrary-precision values survive round-trips.
std::string to_json(const CountReport& report, int indent = -1);
std::string to_json(const std::vector<CountReport>& reports, int indent = -1);
std::string to_json(const EnnolaReport& report, int indent = -1);
std::string to_json(const ConjectureReport& report, int indent = -1);

// RFC-4180-style CSV.
std::string csv_header();
std::string csv_row(const CountReport& report);

// One human-readable line.
std::string to_text(const CountReport& report);

CountReport make_report(const GroupParams& params, int ell);

}  // namespace singerfac
