#pragma once

#include <cstdint>

namespace tdc::alloc {

// Heap accounting fed by the replaced global operator new/delete.
// Counters are process-wide.

std::int64_t current_bytes();
std::int64_t peak_bytes();

/// Sets the peak to the current value and returns the previous peak.
std::int64_t reset_peak();

/// Raises the peak to at least `value`.
void merge_peak(std::int64_t value);

} // namespace tdc::alloc
