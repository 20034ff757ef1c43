#pragma once

#include <string>

#include "fps/identities.hpp"
#include "fps/inversion.hpp"
#include "fps/series.hpp"

namespace fps {

// Wire formats. Every number travels as an exact decimal string "p" or
// "p/q"; JSON numbers are rejected on input so nothing can round-trip
// through a float.
//
//   series:   {"order": N, "coeffs": ["c0", "c1", ...]}   (N+1 entries)
//   sequence: {"offset": 0|1, "values": ["v1", ...]}

std::string series_to_json(const Series& s);
Series series_from_json(const std::string& text);

std::string sequence_to_json(const RationalSequence& s);
RationalSequence sequence_from_json(const std::string& text);

std::string report_to_json(const SuiteReport& report);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace fps
