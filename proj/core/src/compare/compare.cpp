#include <tdc/compare/compare.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>

#include <json.hpp>

#include <tdc/compare/sha256.hpp>
#include <tdc/core/builtin.hpp>
#include <tdc/util/alloc_tracker.hpp>

namespace tdc {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

/// Runs `f` and returns the heap peak it caused above the entry level.
template<typename F>
std::int64_t tracked(F&& f) {
    const auto base = alloc::current_bytes();
    const auto saved = alloc::reset_peak();
    try {
        f();
    } catch(...) {
        alloc::merge_peak(saved);
        throw;
    }
    const auto peak = alloc::peak_bytes() - base;
    alloc::merge_peak(saved);
    return peak < 0 ? 0 : peak;
}

Bytes read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if(!in) throw std::runtime_error("cannot read " + p.string());
    return Bytes(std::istreambuf_iterator<char>(in), {});
}

void write_file(const std::filesystem::path& p, ByteView data) {
    std::ofstream out(p, std::ios::binary);
    out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
    if(!out) throw std::runtime_error("cannot write " + p.string());
}

std::string substitute(std::string tmpl, const std::string& in, const std::string& out) {
    auto replace_all = [&](const std::string& key, const std::string& value) {
        for(std::size_t pos = 0; (pos = tmpl.find(key, pos)) != std::string::npos; pos += value.size()) {
            tmpl.replace(pos, key.size(), value);
        }
    };
    replace_all("{in}", "'" + in + "'");
    replace_all("{out}", "'" + out + "'");
    return tmpl;
}

std::string program_of(const std::string& cmd) {
    const auto b = cmd.find_first_not_of(' ');
    if(b == std::string::npos) return {};
    return cmd.substr(b, cmd.find(' ', b) - b);
}

void run_internal(const CompareEntry& e, ByteView input, const std::string& input_sha, CompareRow& row,
                  const Registry& registry) {
    const auto spec = parse_spec(e.spec);
    Bytes compressed, restored;
    auto start = Clock::now();
    row.c_mem = tracked([&] { compressed = compress_with_header(spec, input, registry); });
    row.c_time_ms = elapsed_ms(start);
    row.output_bytes = compressed.size();
    start = Clock::now();
    row.d_mem = tracked([&] { restored = decompress_with_header(compressed, std::nullopt, registry); });
    row.d_time_ms = elapsed_ms(start);
    row.ok = true;
    row.chk = sha256_hex(restored) == input_sha;
}

void run_external(const CompareEntry& e, ByteView input, const std::string& input_sha, CompareRow& row,
                  const std::string& work_dir) {
    namespace fs = std::filesystem;
    const fs::path dir(work_dir);
    const fs::path in = dir / "tdc_compare_input";
    const fs::path packed = dir / "tdc_compare_packed";
    const fs::path unpacked = dir / "tdc_compare_unpacked";
    write_file(in, input);
    auto start = Clock::now();
    if(std::system(substitute(e.compress_cmd, in.string(), packed.string()).c_str()) != 0) {
        throw std::runtime_error("compress command failed");
    }
    row.c_time_ms = elapsed_ms(start);
    row.output_bytes = static_cast<std::size_t>(fs::file_size(packed));
    start = Clock::now();
    if(std::system(substitute(e.decompress_cmd, packed.string(), unpacked.string()).c_str()) != 0) {
        throw std::runtime_error("decompress command failed");
    }
    row.d_time_ms = elapsed_ms(start);
    row.ok = true;
    row.chk = sha256_hex(read_file(unpacked)) == input_sha;
    std::error_code ec;
    fs::remove(in, ec);
    fs::remove(packed, ec);
    fs::remove(unpacked, ec);
}

std::string pad_left(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string rate_text(double rate) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", rate);
    return buf;
}

constexpr std::size_t kNameWidth = 33;
constexpr std::size_t kColWidth = 10;

} // namespace

std::vector<CompareEntry> default_compare_suite() {
    const char* specs[] = {
        "lz78u(t=5,huff)",
        "lcpcomp(t=5,heap,compact)",
        "lcpcomp(t=5,arrays,compact)",
        "lcpcomp(t=5,arrays,scans(a=25))",
        "lzss_lcp(t=5,bit)",
        "huff",
        "lzw",
        "lz78",
        "bwtzip",
        "bwt",
        "rle",
        "mtf",
    };
    std::vector<CompareEntry> out;
    for(const char* s : specs) out.push_back(CompareEntry{s, s, {}, {}});
    return out;
}

std::vector<CompareEntry> parse_external_config(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch(const nlohmann::json::exception& e) {
        throw SpecError(std::string("compare config: ") + e.what());
    }
    if(!j.is_object()) throw SpecError("compare config: expected an object");
    std::vector<std::string> allow;
    if(j.contains("allow")) {
        for(const auto& a : j.at("allow")) {
            if(!a.is_string()) throw SpecError("compare config: allow entries must be strings");
            allow.push_back(a.get<std::string>());
        }
    }
    std::vector<CompareEntry> out;
    if(!j.contains("external")) return out;
    for(const auto& e : j.at("external")) {
        if(!e.is_object() || !e.contains("name") || !e.contains("compress") || !e.contains("decompress") ||
           !e.at("name").is_string() || !e.at("compress").is_string() || !e.at("decompress").is_string()) {
            throw SpecError("compare config: external entries need string fields name, compress, decompress");
        }
        CompareEntry entry{e.at("name").get<std::string>(), {}, e.at("compress").get<std::string>(),
                           e.at("decompress").get<std::string>()};
        for(const auto* cmd : {&entry.compress_cmd, &entry.decompress_cmd}) {
            const auto prog = program_of(*cmd);
            if(std::find(allow.begin(), allow.end(), prog) == allow.end()) {
                throw SpecError("compare config: program '" + prog + "' is not in the allow list");
            }
        }
        out.push_back(std::move(entry));
    }
    return out;
}

CompareReport run_compare(const std::string& input_name, ByteView input, const std::vector<CompareEntry>& entries,
                          const std::string& work_dir, const Registry& registry) {
    CompareReport report;
    report.input_name = input_name;
    report.input_bytes = input.size();
    report.input_sha256 = sha256_hex(input);
    for(const auto& e : entries) {
        CompareRow row;
        row.name = e.name;
        try {
            if(e.external()) {
                run_external(e, input, report.input_sha256, row, work_dir);
            } else {
                run_internal(e, input, report.input_sha256, row, registry);
            }
            row.c_rate = input.empty() ? 0.0 : 100.0 * static_cast<double>(row.output_bytes) /
                                                     static_cast<double>(input.size());
        } catch(const std::exception& ex) {
            row.ok = false;
            row.chk = false;
            row.error = ex.what();
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

CompareReport run_compare(const std::string& input_name, ByteView input, const std::vector<CompareEntry>& entries,
                          const std::string& work_dir) {
    return run_compare(input_name, input, entries, work_dir, default_registry());
}

std::string format_bytes(std::int64_t bytes) {
    if(bytes < 0) return "-";
    static const char* kUnits[] = {"KiB", "MiB", "GiB", "TiB"};
    if(bytes < 1024) return std::to_string(bytes) + "B";
    double v = static_cast<double>(bytes) / 1024.0;
    std::size_t u = 0;
    while(v >= 1024.0 && u + 1 < std::size(kUnits)) {
        v /= 1024.0;
        ++u;
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.1f%s", v, kUnits[u]);
    return buf;
}

std::string format_time(double ms) {
    char buf[32];
    if(ms >= 1000.0) {
        std::snprintf(buf, sizeof(buf), "%.1fs", ms / 1000.0);
    } else {
        std::snprintf(buf, sizeof(buf), "%.1fms", ms);
    }
    return buf;
}

std::string format_compare_table(const CompareReport& report) {
    std::ostringstream out;
    out << report.input_name << " (" << format_bytes(static_cast<std::int64_t>(report.input_bytes))
        << ", sha256=" << report.input_sha256 << ")\n\n";
    const std::string header = pad_left("Compressor", kNameWidth) + " | " + pad_left("C Time", kColWidth) + " | " +
                               pad_left("C Memory", kColWidth) + " | " + pad_left("C Rate", kColWidth) + " | " +
                               pad_left("D Time", kColWidth) + " | " + pad_left("D Memory", kColWidth) + " | chk |";
    out << header << '\n' << std::string(header.size(), '-') << '\n';
    for(const auto& r : report.rows) {
        out << pad_left(r.name, kNameWidth) << " | ";
        if(!r.ok) {
            out << "ERROR: " << r.error << '\n';
            continue;
        }
        out << pad_left(format_time(r.c_time_ms), kColWidth) << " | " << pad_left(format_bytes(r.c_mem), kColWidth)
            << " | " << pad_left(rate_text(r.c_rate), kColWidth) << " | "
            << pad_left(format_time(r.d_time_ms), kColWidth) << " | " << pad_left(format_bytes(r.d_mem), kColWidth)
            << " | " << (r.chk ? " OK" : "BAD") << " |\n";
    }
    return out.str();
}

std::string compare_report_json(const CompareReport& report) {
    nlohmann::json rows = nlohmann::json::array();
    for(const auto& r : report.rows) {
        nlohmann::json row = {
            {"name", r.name},
            {"ok", r.ok},
            {"chk", r.chk},
            {"cTimeMs", r.c_time_ms},
            {"cMem", r.c_mem},
            {"cRate", r.c_rate},
            {"outputBytes", r.output_bytes},
            {"dTimeMs", r.d_time_ms},
            {"dMem", r.d_mem},
        };
        if(!r.error.empty()) row["error"] = r.error;
        rows.push_back(std::move(row));
    }
    nlohmann::json j = {
        {"input", report.input_name},
        {"inputBytes", report.input_bytes},
        {"sha256", report.input_sha256},
        {"rows", std::move(rows)},
    };
    return j.dump(2);
}

} // namespace tdc
