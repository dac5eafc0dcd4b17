#pragma once

namespace stirmode {

inline constexpr long kDefaultMaxRowN = 5000;

// Largest n for which Stirling rows may be built. B_5000 already has tens
// of thousands of digits; callers wanting larger rows opt in explicitly.
long max_row_n();
void set_max_row_n(long n);

}  // namespace stirmode
