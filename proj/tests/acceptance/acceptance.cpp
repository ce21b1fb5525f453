// Acceptance checks: prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.
//
// Usage: tdc_acceptance [path-to-tdc-binary]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <tdc/classic/bwt.hpp>
#include <tdc/classic/lz78.hpp>
#include <tdc/classic/lzss_lcp.hpp>
#include <tdc/coders/coders.hpp>
#include <tdc/compare/compare.hpp>
#include <tdc/core/builtin.hpp>
#include <tdc/gen/generators.hpp>
#include <tdc/lcpcomp/lcpcomp.hpp>
#include <tdc/lz78u/lz78u.hpp>
#include <tdc/succinct/bit_vector.hpp>
#include <tdc/textds/text.hpp>
#include <tdc/textds/textds.hpp>

#include "../common/corpus.hpp"
#include "../common/oracles.hpp"

namespace {

using namespace tdc;
using Clock = std::chrono::steady_clock;

struct Check {
    std::vector<std::string> failures;

    void expect(bool cond, const std::string& what) {
        if(!cond && failures.size() < 20) failures.push_back(what);
        if(!cond && failures.size() == 20) failures.push_back("(further failures omitted)");
    }
    bool ok() const { return failures.empty(); }
};

template<typename T>
std::string join(const std::vector<T>& v) {
    std::ostringstream s;
    for(std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
    return s.str();
}

std::vector<index_t> one_based(std::vector<index_t> v) {
    for(auto& x : v) ++x;
    return v;
}

const Bytes kRunning = make_text(as_view("aaababaaabaababa"));

// 1 -------------------------------------------------------------------------

void golden_vectors(Check& c, double& budget_ms) {
    budget_ms = 1000;
    TextDS ds(kRunning);
    const auto sa = ds.require_sa().to_vector();
    const auto isa = ds.require_isa().to_vector();
    const auto lcp = ds.require_lcp().to_vector();
    const auto& bwt = ds.require_bwt();
    c.expect(one_based(sa) == std::vector<index_t>{17, 16, 7, 1, 8, 11, 2, 14, 5, 9, 12, 3, 15, 6, 10, 13, 4},
             "SA row: " + join(one_based(sa)));
    c.expect(lcp == std::vector<index_t>{0, 0, 1, 5, 2, 4, 6, 1, 3, 4, 3, 5, 0, 2, 3, 2, 4}, "LCP row: " + join(lcp));
    c.expect(one_based(isa) == std::vector<index_t>{4, 7, 12, 17, 9, 14, 3, 5, 10, 15, 6, 11, 16, 8, 13, 2, 1},
             "ISA row: " + join(one_based(isa)));
    c.expect(to_string(bwt) == std::string("abb\0ababbaaaaaaaa", 17), "BWT row");

    const auto lzss = render_factors(kRunning, lzss_lcp_factorize(ds, 2));
    c.expect(lzss == "a (1,2) b (3,3) (2,4) (3,5) $", "lzss_lcp: " + lzss);

    TextDS ds2(kRunning);
    const auto heap = LcpcompHeapStrategy().factorize(ds2, 2);
    const auto lcpcomp = render_factors(kRunning, with_literal_runs(kRunning.size(), heap));
    c.expect(lcpcomp == "a (11,6) a (5,2) (8,4) ba$", "lcpcomp heap: " + lcpcomp);

    TextDS ds3(kRunning);
    std::vector<std::vector<index_t>> rows;
    const auto arrays = LcpcompArraysStrategy().factorize(ds3, 2, nullptr,
                                                          [&](const std::vector<index_t>& l) { rows.push_back(l); });
    const auto rendered = render_factors(kRunning, with_literal_runs(kRunning.size(), arrays));
    c.expect(rendered == "a (11,6) a (5,2) (8,4) ba$", "lcpcomp arrays: " + rendered);
    const std::vector<std::vector<index_t>> expected_rows = {
        {0, 0, 0, 1, 2, 4, 0, 1, 0, 4, 3, 0, 0, 0, 3, 2, 0},
        {0, 0, 0, 1, 2, 0, 0, 0, 0, 2, 0, 0, 0, 0, 1, 0, 0},
        {0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    };
    c.expect(rows.size() == expected_rows.size(), "LCP evolution has " + std::to_string(rows.size()) + " rows");
    for(std::size_t i = 0; i < std::min(rows.size(), expected_rows.size()); ++i) {
        c.expect(rows[i] == expected_rows[i], "LCP row " + std::to_string(i + 1) + ": " + join(rows[i]));
    }

    const auto lz78 = oracle::lz78_render(lz78_factorize(kRunning));
    c.expect(lz78 == "(0,a)(1,a)(0,b)(1,b)(2,a)(3,a)(4,a)(6,$)", "LZ78: " + lz78);

    TextDS ds4(kRunning);
    SuffixTree st(ds4);
    const auto lz78u = render_lz78u(kRunning, lz78u_factorize_stream(st).factors);
    c.expect(lz78u == "(0,a)(1,a)(0,ba)(3,a)(1,ba)(5,ba)(0,$)", "LZ78U: " + lz78u);
}

// 2 -------------------------------------------------------------------------

void oracle_equivalence(Check& c, double& budget_ms) {
    budget_ms = 60000;
    std::mt19937_64 rng(20240601);
    const unsigned sigmas[] = {2, 4, 26};
    std::size_t strings = 0;
    for(int round = 0; round < 400; ++round) {
        for(unsigned sigma : sigmas) {
            const std::size_t n = 1 + rng() % 256;
            const Bytes t = oracle::random_text(rng, n, sigma);
            ++strings;
            const std::string tag = " (sigma=" + std::to_string(sigma) + ", n=" + std::to_string(n) + ")";

            TextDS ds(t);
            const auto sa = ds.require_sa().to_vector();
            const auto naive_sa = oracle::suffix_array(t);
            c.expect(sa == naive_sa, "SA mismatch" + tag);
            c.expect(ds.require_lcp().to_vector() == oracle::lcp_array(t, naive_sa), "LCP mismatch" + tag);

            std::vector<bool> bits(n + rng() % 300);
            BitVector bv(bits.size());
            for(std::size_t i = 0; i < bits.size(); ++i) {
                bits[i] = (rng() % (1 + sigma)) == 0;
                bv.set(i, bits[i]);
            }
            RankSelect rs(bv);
            for(std::size_t i = 0; i <= bits.size(); ++i) {
                if(rs.rank1(i) != oracle::rank1(bits, i)) {
                    c.expect(false, "rank1(" + std::to_string(i) + ") mismatch" + tag);
                    break;
                }
            }
            for(std::size_t k = 1; k <= rs.ones(); ++k) {
                if(rs.select1(k) != oracle::select1(bits, k)) {
                    c.expect(false, "select1(" + std::to_string(k) + ") mismatch" + tag);
                    break;
                }
            }

            if(n <= 64) {
                for(index_t theta : {1u, 2u, 3u}) {
                    TextDS d(t);
                    const auto heap = LcpcompHeapStrategy().factorize(d, theta);
                    const auto naive = oracle::lcpcomp(t, theta);
                    c.expect(heap == naive, "lcpcomp heap vs greedy oracle, theta=" + std::to_string(theta) + tag);
                }
            }

            c.expect(lz78_factorize(t) == oracle::lz78(t), "LZ78 mismatch" + tag);
            SuffixTree st(ds);
            const auto naive_u = oracle::lz78u(t);
            c.expect(same_factors(t, lz78u_factorize_stream(st).factors, naive_u), "LZ78U stream mismatch" + tag);
            c.expect(same_factors(t, lz78u_factorize_offline(st).factors, naive_u), "LZ78U offline mismatch" + tag);
        }
    }
    c.expect(strings >= 1000, "only " + std::to_string(strings) + " strings");
}

// 3 and 4 -------------------------------------------------------------------

const char* kCoders[] = {"bit", "gamma", "delta", "vbyte", "huff", "sle"};

std::vector<std::string> roundtrip_specs() {
    std::vector<std::string> specs = {"bwt", "rle", "mtf", "bwtzip", "bwt:rle", "mtf:rle:encode(gamma)"};
    for(const char* c : kCoders) {
        const std::string k(c);
        specs.push_back("encode(" + k + ")");
        specs.push_back("lz78(" + k + ")");
        specs.push_back("lzw(" + k + ")");
        specs.push_back("lzss_lcp(t=3," + k + ")");
        specs.push_back("lcpcomp(coder=" + k + ",t=4,comp=heap)");
        specs.push_back("lcpcomp(coder=" + k + ",t=4,comp=arrays)");
        specs.push_back("lz78u(coder=" + k + ",comp=plain(" + k + "))");
        specs.push_back("lz78u(coder=" + k + ",comp=buffering(" + k + "))");
    }
    return specs;
}

void roundtrip_suite(Check& c, double& budget_ms, const std::vector<corpus::Item>& items) {
    budget_ms = 120000;
    const auto specs = roundtrip_specs();
    for(const auto& item : items) {
        for(const auto& spec : specs) {
            try {
                const Bytes packed = compress_with_header(spec, item.data);
                const Bytes back = decompress_with_header(packed);
                c.expect(back == item.data, spec + " on " + item.name + ": roundtrip differs");
            } catch(const std::exception& e) {
                c.expect(false, spec + " on " + item.name + ": " + e.what());
            }
        }
        // decoder equivalence on the same stream
        const Bytes text = make_text(item.data);
        TextDS ds(text);
        const auto refs = LcpcompHeapStrategy().factorize(ds, 4);
        const auto coder = make_bit_coder();
        const auto stream = lcpcomp_parse(lcpcomp_encode(text, refs, 4, *coder), *coder);
        const Bytes compact = CompactDecoder().decode(stream);
        c.expect(compact == text, "compact decoder on " + item.name);
        for(std::size_t alpha : {1u, 6u, 25u, 60u}) {
            c.expect(ScansDecoder(alpha).decode(stream) == compact,
                     "scans(a=" + std::to_string(alpha) + ") differs from compact on " + item.name);
        }
    }
}

void decrease_key_instrumentation(Check& c, double& budget_ms, const std::vector<corpus::Item>& items) {
    budget_ms = 120000;
    std::size_t decreases = 0, streams = 0;
    for(const auto& item : items) {
        const Bytes text = make_text(item.data);
        for(index_t theta : {2u, 4u, 5u}) {
            for(int which = 0; which < 2; ++which) {
                TextDS ds(text);
                LcpcompFactorizeStats stats;
                const auto refs = which == 0 ? LcpcompHeapStrategy().factorize(ds, theta, &stats)
                                             : LcpcompArraysStrategy().factorize(ds, theta, &stats);
                decreases += stats.decrease_count;
                c.expect(stats.double_decrease_count == 0,
                         item.name + ": " + std::to_string(stats.double_decrease_count) + " double decreases");
                const auto coder = make_bit_coder();
                const auto stream = lcpcomp_parse(lcpcomp_encode(text, refs, theta, *coder), *coder);
                for(int dec = 0; dec < 2; ++dec) {
                    try {
                        LcpcompDecodeStats ds_stats;
                        const Bytes out = dec == 0 ? CompactDecoder().decode(stream, &ds_stats)
                                                   : ScansDecoder(6).decode(stream, &ds_stats);
                        c.expect(out == text, item.name + ": restored text differs");
                        ++streams;
                    } catch(const std::exception& e) {
                        c.expect(false, item.name + ": unresolved stream: " + e.what());
                    }
                }
            }
        }
    }
    c.expect(decreases > 0, "no decrease_key events observed; instrumentation not exercised");
    c.expect(streams > 0, "no streams decoded");
}

// 5 -------------------------------------------------------------------------

void factor_count_dominance(Check& c, double& budget_ms, std::string& detail) {
    budget_ms = 600000;
    std::size_t comparisons = 0;
    std::ostringstream s;
    for(std::uint64_t file = 0; file < 10; ++file) {
        const Bytes text = make_text(repetitive_text(1 << 20, 1000 + file));
        TextDS ds(text, DSMode::plain);
        ds.require(TextDS::SA | TextDS::ISA | TextDS::LCP);
        for(index_t theta : {4u, 8u, 12u, 16u, 20u, 22u}) {
            const auto lcpcomp = LcpcompArraysStrategy().factorize(ds, theta).size();
            const auto lzss = count_references(lzss_lcp_factorize(ds, theta));
            ++comparisons;
            if(file == 0) s << " t=" << theta << " lcpcomp=" << lcpcomp << " lzss_lcp=" << lzss;
            c.expect(lcpcomp <= lzss, "file " + std::to_string(file) + " theta " + std::to_string(theta) +
                                          ": lcpcomp " + std::to_string(lcpcomp) + " > lzss_lcp " +
                                          std::to_string(lzss));
        }
    }
    detail = std::to_string(comparisons) + " comparisons; file 0:" + s.str();
}

// 6 -------------------------------------------------------------------------

void pipeline_quality(Check& c, double& budget_ms, std::string& detail) {
    budget_ms = 60000;
    unsigned k = 1;
    while(run_rich_word(k).size() < (1u << 20)) ++k;
    for(const auto& [name, data] : {std::pair<std::string, Bytes>{"repetitive", repetitive_text(1 << 20, 42)},
                                    std::pair<std::string, Bytes>{"run_rich", run_rich_word(k)}}) {
        Bytes input = data;
        if(input.size() > (1u << 20)) input.resize(1u << 20);
        const auto bzip = make_compressor("bwt:rle:mtf:encode(huff)")->compress(input).size();
        const auto huff = make_compressor("encode(huff)")->compress(input).size();
        detail += name + " " + std::to_string(input.size()) + "B: bwt:rle:mtf:encode(huff)=" + std::to_string(bzip) +
                  " encode(huff)=" + std::to_string(huff) + "; ";
        c.expect(bzip < huff, name + ": pipeline output not smaller");
    }
}

// 7 -------------------------------------------------------------------------

void lz78u_equality(Check& c, double& budget_ms, const std::vector<corpus::Item>& items) {
    budget_ms = 120000;
    for(const auto& item : items) {
        const Bytes text = make_text(item.data);
        TextDS ds(text);
        SuffixTree st(ds);
        const auto a = lz78u_factorize_stream(st);
        const auto b = lz78u_factorize_offline(st);
        bool equal = a.factors.size() == b.factors.size();
        for(std::size_t i = 0; equal && i < a.factors.size(); ++i) {
            equal = a.factors[i].ref == b.factors[i].ref && a.factors[i].begin == b.factors[i].begin &&
                    a.factors[i].len == b.factors[i].len;
        }
        c.expect(equal, item.name + ": stream and offline factor lists differ");
    }
}

// 8 -------------------------------------------------------------------------

Bytes slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return Bytes(std::istreambuf_iterator<char>(in), {});
}

void cli_contract(Check& c, double& budget_ms, const std::string& tdc_binary, std::string& detail) {
    budget_ms = 120000;
    namespace fs = std::filesystem;
    const Bytes ex = to_bytes("aaababaaabaababa");
    auto starts_with = [](const Bytes& b, std::string_view p) {
        return b.size() >= p.size() && std::equal(p.begin(), p.end(), b.begin());
    };
    c.expect(starts_with(compress_with_header("bwt", ex), "bwt%"), "library header for bwt");
    c.expect(starts_with(compress_with_header("bwt:rle", ex), "bwt:rle%"), "library header for bwt:rle");

    if(!tdc_binary.empty()) {
        const fs::path dir = fs::temp_directory_path() / ("tdc_acceptance_" + std::to_string(::getpid()));
        fs::create_directories(dir);
        const fs::path in = dir / "ex.txt";
        std::ofstream(in, std::ios::binary).write("aaababaaabaababa", 16);
        const std::string q = "'" + tdc_binary + "'";
        const int rc1 = std::system((q + " -a bwt -o '" + (dir / "bwt.tdc").string() + "' '" + in.string() + "'").c_str());
        const int rc2 =
            std::system((q + " -a 'bwt:rle' -o '" + (dir / "rle.tdc").string() + "' '" + in.string() + "'").c_str());
        const int rc3 = std::system((q + " -d '" + (dir / "bwt.tdc").string() + "' -o '" + (dir / "back.txt").string() +
                                     "'").c_str());
        c.expect(rc1 == 0 && rc2 == 0 && rc3 == 0, "tdc invocation failed");
        const Bytes bwt_file = slurp(dir / "bwt.tdc");
        c.expect(starts_with(bwt_file, "bwt%"), "bwt.tdc does not begin with bwt%");
        c.expect(bwt_file.size() == 4 + 17, "bwt.tdc body is not 17 bytes");
        c.expect(starts_with(slurp(dir / "rle.tdc"), "bwt:rle%"), "rle.tdc does not begin with bwt:rle%");
        c.expect(slurp(dir / "back.txt") == ex, "tdc -d did not restore ex.txt");
        std::error_code ec;
        fs::remove_all(dir, ec);
        detail += "cli binary checked; ";
    } else {
        detail += "cli binary not given, library headers only; ";
    }

    // every registered compressor with default parameters, plus aliases and the reference suite
    std::vector<CompareEntry> entries = default_compare_suite();
    for(const auto* meta : default_registry().list(Compressor::kType)) {
        entries.push_back(CompareEntry{meta->id(), meta->id(), {}, {}});
    }
    for(const auto& [id, text] : default_registry().aliases(Compressor::kType)) {
        entries.push_back(CompareEntry{id, id, {}, {}});
    }
    const Bytes input = repetitive_text(1 << 20, 7);
    const auto report = run_compare("repetitive_1MiB", input, entries);
    std::size_t passed = 0;
    for(const auto& row : report.rows) {
        c.expect(row.ok && row.chk, "compare chk failed for " + row.name + (row.error.empty() ? "" : ": " + row.error));
        if(row.ok && row.chk) ++passed;
    }
    const std::string table = format_compare_table(report);
    c.expect(table.find("Compressor |     C Time |   C Memory |     C Rate |     D Time |   D Memory | chk |") !=
                 std::string::npos,
             "compare table header layout");
    detail += std::to_string(passed) + "/" + std::to_string(report.rows.size()) + " compare rows with passing chk";
}

} // namespace

int main(int argc, char** argv) {
    const std::string tdc_binary = argc > 1 ? argv[1] : "";
    const auto full = corpus::edge_cases(true);

    struct Criterion {
        int id;
        std::string title;
        std::function<void(Check&, double&, std::string&)> run;
    };
    std::vector<Criterion> criteria = {
        {1, "golden vectors", [](Check& c, double& b, std::string&) { golden_vectors(c, b); }},
        {2, "oracle equivalence", [](Check& c, double& b, std::string&) { oracle_equivalence(c, b); }},
        {3, "roundtrip suite", [&](Check& c, double& b, std::string&) { roundtrip_suite(c, b, full); }},
        {4, "decrease-key and decoder instrumentation", [&](Check& c, double& b, std::string&) { decrease_key_instrumentation(c, b, full); }},
        {5, "factor-count dominance", [](Check& c, double& b, std::string& d) { factor_count_dominance(c, b, d); }},
        {6, "pipeline quality", [](Check& c, double& b, std::string& d) { pipeline_quality(c, b, d); }},
        {7, "streaming/offline LZ78U equality", [&](Check& c, double& b, std::string&) { lz78u_equality(c, b, full); }},
        {8, "CLI contract", [&](Check& c, double& b, std::string& d) { cli_contract(c, b, tdc_binary, d); }},
    };
    
    int failed = 0;
    for(const auto& cr : criteria) {
        Check check;
        double budget_ms = 0;
        std::string detail;
        const auto start = Clock::now();
        try {
            cr.run(check, budget_ms, detail);
        } catch(const std::exception& e) {
            check.expect(false, std::string("exception: ") + e.what());
        }
        const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        if(budget_ms > 0 && ms > budget_ms) {
            check.expect(false, "runtime " + std::to_string(ms) + " ms exceeds " + std::to_string(budget_ms) + " ms");
        }
        const bool ok = check.ok();
        if(!ok) ++failed;
        char timing[64];
        std::snprintf(timing, sizeof(timing), "%.1f ms", ms);
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << cr.id << ": " << cr.title << " (" << timing << ")";
        if(!detail.empty()) std::cout << " [" << detail << "]";
        std::cout << '\n';
        for(const auto& f : check.failures) std::cout << "    " << f << '\n';
        std::cout << std::flush;
    }
    return failed == 0 ? 0 : 1;
}
