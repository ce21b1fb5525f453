#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

namespace tdc {

/// Measurements of one phase: wall time, heap bytes at entry (offset) and the
/// peak heap usage above that offset, custom key/value statistics and nested
/// sub-phases in execution order.
struct PhaseStats {
    std::string name;
    double time_ms = 0;
    std::int64_t mem_offset = 0;
    std::int64_t mem_peak = 0;
    std::vector<std::pair<std::string, std::string>> stats;
    std::vector<PhaseStats> sub;

    const PhaseStats* find(std::string_view sub_name) const;
    const std::string* stat(std::string_view key) const;
};

/// RAII phase. Phases opened while another phase is open on the same thread
/// become its children. Memory figures come from the global allocation
/// tracker.
class StatPhase {
public:
    explicit StatPhase(std::string name);
    ~StatPhase();

    StatPhase(const StatPhase&) = delete;
    StatPhase& operator=(const StatPhase&) = delete;

    template<typename T>
    void log_stat(std::string key, const T& value) {
        if constexpr(std::is_convertible_v<T, std::string>) {
            data_.stats.emplace_back(std::move(key), std::string(value));
        } else {
            data_.stats.emplace_back(std::move(key), std::to_string(value));
        }
    }

    /// Attaches a statistic to the innermost open phase of this thread, if any.
    template<typename T>
    static void log(std::string key, const T& value) {
        if(auto p = current()) p->log_stat(std::move(key), value);
    }

    /// Closes the phase (idempotent) and returns its measurements.
    const PhaseStats& finish();

    static StatPhase* current();

private:
    PhaseStats data_;
    StatPhase* parent_;
    std::chrono::steady_clock::time_point start_;
    std::int64_t saved_peak_ = 0;
    bool done_ = false;
};

/// Runs `body` inside a phase named `name` and returns its measurements.
PhaseStats phase(std::string name, const std::function<void()>& body);

/// Stats file: {"title": ..., "phases": [ {name, timeMs, memOff, memPeak, stats, sub} ]}
std::string stats_to_json(const std::string& title, const std::vector<PhaseStats>& phases);

/// Parses a stats file produced by stats_to_json.
std::pair<std::string, std::vector<PhaseStats>> stats_from_json(const std::string& json);

} // namespace tdc
