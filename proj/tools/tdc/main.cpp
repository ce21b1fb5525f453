#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <tdc/compare/compare.hpp>
#include <tdc/core/builtin.hpp>
#include <tdc/core/header.hpp>
#include <tdc/core/stats.hpp>
#include <tdc/util/error.hpp>

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

tdc::Bytes read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if(!in) throw UsageError("cannot open input file '" + path + "'");
    return tdc::Bytes(std::istreambuf_iterator<char>(in), {});
}

void write_file(const std::string& path, tdc::ByteView data) {
    if(path == "-") {
        std::fwrite(data.data(), 1, data.size(), stdout);
        std::fflush(stdout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
    if(!out) throw std::runtime_error("cannot write output file '" + path + "'");
}

void write_text(const std::string& path, const std::string& text) {
    write_file(path, tdc::as_view(text));
}

struct Options {
    std::string algorithm;
    std::string output;
    std::string input;
    std::string generate;
    bool decompress = false;
    bool stats = false;
    bool raw = false;
    bool list = false;
};

struct CompareOptions {
    std::string input;
    std::string generate;
    std::vector<std::string> specs;
    std::string external_config;
    std::string json_path;
    std::string work_dir = "/tmp";
    bool no_default = false;
};

void print_list() {
    const auto& r = tdc::default_registry();
    for(const char* type : {"compressor", "coder", "lcpcomp_strategy", "lcpcomp_dec", "lz78u_strategy", "generator"}) {
        std::cout << "[" << type << "]\n";
        for(const auto* meta : r.list(type)) {
            std::string line = "  " + meta->id();
            if(!meta->params().empty()) {
                line += "(";
                bool first = true;
                for(const auto& p : meta->params()) {
                    if(!first) line += ", ";
                    first = false;
                    line += p.name;
                    if(!p.alias.empty()) line += "|" + p.alias;
                    if(p.default_value) line += " = " + *p.default_value;
                }
                line += ")";
            }
            std::cout << line;
            if(!meta->description().empty()) std::cout << "  -- " << meta->description();
            std::cout << '\n';
        }
        for(const auto& [id, text] : r.aliases(type)) std::cout << "  " << id << "  = " << text << '\n';
    }
}

tdc::Bytes load_input(const std::string& input, const std::string& generate, std::string& name) {
    if(!generate.empty()) {
        if(!input.empty()) throw UsageError("give either an input file or --generate, not both");
        name = generate;
        return tdc::generate(generate);
    }
    if(input.empty()) throw UsageError("no input file given");
    name = input;
    return read_file(input);
}

std::string default_output(const Options& o, const std::string& input_name) {
    if(!o.output.empty()) return o.output;
    if(!o.generate.empty() && o.algorithm.empty()) return "-";
    if(o.decompress) {
        const std::string ext = ".tdc";
        if(input_name.size() > ext.size() && input_name.ends_with(ext)) {
            return input_name.substr(0, input_name.size() - ext.size());
        }
        return input_name + ".out";
    }
    if(!o.generate.empty()) throw UsageError("-o is required when compressing generated input");
    return input_name + ".tdc";
}

int run_main(const Options& o) {
    if(o.list) {
        print_list();
        return 0;
    }
    std::string name;
    const tdc::Bytes input = load_input(o.input, o.generate, name);
    const std::string out_path = default_output(o, name);

    if(!o.decompress && o.algorithm.empty()) {
        if(o.generate.empty()) throw UsageError("compression requires -a SPEC");
        write_file(out_path, input);
        return 0;
    }

    std::optional<tdc::AlgorithmSpec> spec;
    if(!o.algorithm.empty()) spec = tdc::parse_spec(o.algorithm);
    if(o.decompress && o.raw && !spec) throw UsageError("--raw decompression requires -a SPEC");

    const auto& registry = tdc::default_registry();
    tdc::Bytes output;
    std::string title = o.algorithm;
    std::vector<tdc::PhaseStats> phases;
    {
        tdc::StatPhase root(o.decompress ? "Decompress" : "Compress");
        if(o.decompress) {
            if(o.raw) {
                output = tdc::instantiate(registry.resolve(*spec, tdc::Compressor::kType), registry)->decompress(input);
            } else {
                title = serialize(tdc::read_header(input).spec);
                output = tdc::decompress_with_header(input, spec, registry);
            }
        } else if(o.raw) {
            output = tdc::instantiate(registry.resolve(*spec, tdc::Compressor::kType), registry)->compress(input);
        } else {
            output = tdc::compress_with_header(*spec, input, registry);
        }
        root.log_stat("input_bytes", input.size());
        root.log_stat("output_bytes", output.size());
        phases.push_back(root.finish());
    }
    write_file(out_path, output);
    if(o.stats) {
        const std::string base = out_path == "-" ? "tdc" : out_path;
        write_text(base + ".stats.json", tdc::stats_to_json(title, phases));
    }
    return 0;
}

int run_compare_cmd(const CompareOptions& o) {
    std::string name;
    const tdc::Bytes input = load_input(o.input, o.generate, name);
    std::vector<tdc::CompareEntry> entries;
    if(o.specs.empty() && !o.no_default) entries = tdc::default_compare_suite();
    for(const auto& s : o.specs) entries.push_back(tdc::CompareEntry{s, s, {}, {}});
    if(!o.external_config.empty()) {
        const auto text = read_file(o.external_config);
        auto ext = tdc::parse_external_config(tdc::to_string(text));
        entries.insert(entries.end(), ext.begin(), ext.end());
    }
    const auto report = tdc::run_compare(name, input, entries, o.work_dir);
    std::cout << tdc::format_compare_table(report) << std::flush;
    if(!o.json_path.empty()) write_text(o.json_path, tdc::compare_report_json(report));
    for(const auto& row : report.rows) {
        if(!row.ok || !row.chk) return kExitData;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"tdc: modular lossless compression"};
    app.require_subcommand(0, 1);

    Options opt;
    app.add_option("input", opt.input, "input file");
    app.add_option("-a,--algorithm", opt.algorithm, "compressor spec, e.g. 'bwt:rle:mtf:encode(huff)'");
    app.add_option("-o,--output", opt.output, "output file ('-' for stdout)");
    app.add_flag("-d,--decompress", opt.decompress, "decompress; -a overrides the header spec");
    app.add_flag("--stats", opt.stats, "write <output>.stats.json with the phase tree");
    app.add_option("--generate", opt.generate, "use a generated string as input, e.g. 'fib(20)'");
    app.add_flag("--raw", opt.raw, "no header; decompression then requires -a");
    app.add_flag("--list", opt.list, "list registered algorithms");

    CompareOptions cmp;
    auto* compare = app.add_subcommand("compare", "compare compressors on one input");
    compare->add_option("input", cmp.input, "input file");
    compare->add_option("--generate", cmp.generate, "use a generated string as input");
    compare->add_option("-a,--algorithm", cmp.specs, "compressor spec (repeatable); default: the built-in suite");
    compare->add_flag("--no-default", cmp.no_default, "do not add the built-in suite");
    compare->add_option("--external", cmp.external_config, "JSON config with allowed external commands");
    compare->add_option("--json", cmp.json_path, "write the report as JSON");
    compare->add_option("--work-dir", cmp.work_dir, "directory for temporary files of external commands");

    try {
        app.parse(argc, argv);
    } catch(const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if(compare->parsed()) return run_compare_cmd(cmp);
        return run_main(opt);
    } catch(const UsageError& e) {
        std::cerr << "tdc: " << e.what() << '\n';
        return kExitUsage;
    } catch(const tdc::SpecError& e) {
        std::cerr << "tdc: " << e.what() << '\n';
        return kExitUsage;
    } catch(const tdc::DataError& e) {
        std::cerr << "tdc: " << e.what() << '\n';
        return kExitData;
    } catch(const std::exception& e) {
        std::cerr << "tdc: " << e.what() << '\n';
        return kExitData;
    }
}
