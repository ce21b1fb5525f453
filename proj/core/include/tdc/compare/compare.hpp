#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <tdc/core/registry.hpp>
#include <tdc/util/bytes.hpp>

namespace tdc {

/// One row of a comparison: an internal spec or an external command pair.
/// Command templates substitute `{in}` and `{out}` with file paths.
struct CompareEntry {
    std::string name;
    std::string spec;
    std::string compress_cmd;
    std::string decompress_cmd;

    bool external() const { return spec.empty(); }
};

struct CompareRow {
    std::string name;
    bool ok = false;            // both phases ran
    bool chk = false;           // sha256 of the roundtrip matches the input
    std::string error;
    double c_time_ms = 0;
    double d_time_ms = 0;
    std::int64_t c_mem = -1;    // tracked heap peak, -1 for external tools
    std::int64_t d_mem = -1;
    std::size_t output_bytes = 0;
    double c_rate = 0;          // output / input in percent
};

struct CompareReport {
    std::string input_name;
    std::size_t input_bytes = 0;
    std::string input_sha256;
    std::vector<CompareRow> rows;
};

/// Internal compressors with the parameters of the reference comparison.
std::vector<CompareEntry> default_compare_suite();

/// Parses `{"allow": [program...], "external": [{name, compress, decompress}]}`.
/// Entries whose program is not in `allow` are rejected with SpecError.
std::vector<CompareEntry> parse_external_config(const std::string& json_text);

/// Runs the entries sequentially. Failures are reported in their row.
/// `work_dir` holds the temporary files of external entries.
CompareReport run_compare(const std::string& input_name, ByteView input, const std::vector<CompareEntry>& entries,
                          const std::string& work_dir, const Registry& registry);
CompareReport run_compare(const std::string& input_name, ByteView input, const std::vector<CompareEntry>& entries,
                          const std::string& work_dir = "/tmp");

std::string format_bytes(std::int64_t bytes);
std::string format_time(double ms);

/// Aligned text table: a title line, an empty line, the column header, a
/// dash rule and one line per entry.
std::string format_compare_table(const CompareReport& report);
std::string compare_report_json(const CompareReport& report);

} // namespace tdc
