#include <tdc/core/stats.hpp>

#include <algorithm>

#include <json.hpp>

#include <tdc/util/alloc_tracker.hpp>
#include <tdc/util/error.hpp>

namespace tdc {

namespace {
thread_local StatPhase* tl_current = nullptr;
}

const PhaseStats* PhaseStats::find(std::string_view sub_name) const {
    for(const auto& s : sub) {
        if(s.name == sub_name) return &s;
    }
    return nullptr;
}

const std::string* PhaseStats::stat(std::string_view key) const {
    for(const auto& [k, v] : stats) {
        if(k == key) return &v;
    }
    return nullptr;
}

StatPhase::StatPhase(std::string name) : parent_(tl_current) {
    data_.name = std::move(name);
    data_.stats.reserve(4);
    tl_current = this;
    data_.mem_offset = alloc::current_bytes();
    saved_peak_ = alloc::reset_peak();
    start_ = std::chrono::steady_clock::now();
}

StatPhase::~StatPhase() { finish(); }

StatPhase* StatPhase::current() { return tl_current; }

const PhaseStats& StatPhase::finish() {
    if(done_) return data_;
    done_ = true;
    const auto end = std::chrono::steady_clock::now();
    const auto peak = alloc::peak_bytes();
    data_.time_ms = std::chrono::duration<double, std::milli>(end - start_).count();
    data_.mem_peak = std::max<std::int64_t>(0, peak - data_.mem_offset);
    alloc::merge_peak(saved_peak_);
    if(tl_current == this) tl_current = parent_;
    if(parent_) parent_->data_.sub.push_back(data_);
    return data_;
}

PhaseStats phase(std::string name, const std::function<void()>& body) {
    StatPhase p(std::move(name));
    body();
    return p.finish();
}

namespace {

nlohmann::ordered_json to_json(const PhaseStats& p) {
    nlohmann::ordered_json j;
    j["name"] = p.name;
    j["timeMs"] = p.time_ms;
    j["memOff"] = p.mem_offset;
    j["memPeak"] = p.mem_peak;
    auto stats = nlohmann::ordered_json::object();
    for(const auto& [k, v] : p.stats) stats[k] = v;
    j["stats"] = std::move(stats);
    auto sub = nlohmann::ordered_json::array();
    for(const auto& s : p.sub) sub.push_back(to_json(s));
    j["sub"] = std::move(sub);
    return j;
}

PhaseStats from_json(const nlohmann::json& j) {
    PhaseStats p;
    p.name = j.at("name").get<std::string>();
    p.time_ms = j.at("timeMs").get<double>();
    p.mem_offset = j.at("memOff").get<std::int64_t>();
    p.mem_peak = j.at("memPeak").get<std::int64_t>();
    for(const auto& [k, v] : j.at("stats").items()) p.stats.emplace_back(k, v.get<std::string>());
    for(const auto& s : j.at("sub")) p.sub.push_back(from_json(s));
    return p;
}

} // namespace

std::string stats_to_json(const std::string& title, const std::vector<PhaseStats>& phases) {
    nlohmann::ordered_json j;
    j["title"] = title;
    auto arr = nlohmann::ordered_json::array();
    for(const auto& p : phases) arr.push_back(to_json(p));
    j["phases"] = std::move(arr);
    return j.dump(2);
}

std::pair<std::string, std::vector<PhaseStats>> stats_from_json(const std::string& json) {
    try {
        auto j = nlohmann::json::parse(json);
        std::vector<PhaseStats> phases;
        for(const auto& p : j.at("phases")) phases.push_back(from_json(p));
        return {j.at("title").get<std::string>(), std::move(phases)};
    } catch(const nlohmann::json::exception& e) {
        throw DataError(std::string("invalid stats json: ") + e.what());
    }
}

} // namespace tdc
