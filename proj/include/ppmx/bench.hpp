#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "ppmx/stats.hpp"

namespace ppmx {

struct bench_plan {
    std::filesystem::path corpus_dir;
    std::filesystem::path out_dir;
    std::vector<int> classic_orders = {1, 2, 3, 4, 5, 6};
    std::vector<int> ccm_bits = {6, 10, 14, 18, 21, 24};
    int pitch = 0; // 0 = per-file auto, else forced (clamped to each order)
};

struct bench_run {
    std::string file;
    run_stats stats;
};

// `runs` sorted by (file, mode, order); `rows` hold, per file and classic
// order, the comparison against the largest ccm order that still undercuts
// the classic trie size (files/orders without such a ccm run get no row).
struct bench_result {
    std::vector<bench_run> runs;
    std::vector<tradeoff_row> rows;
};

// Compresses every corpus file at every configured order (files x configs in
// parallel) and derives the trade-off rows. Throws errc::bad_config when the
// corpus yields no runs at all; unreadable or empty files are skipped with a
// warning on stderr.
bench_result run_bench(const bench_plan& plan);

// "1..6" (inclusive range) or "6,10,14" or "3"; sorted and deduplicated.
std::vector<int> parse_order_list(const std::string& text);

// AVG/MAX/MIN of one summary column; avg is rounded to two decimals the way
// the tables print it, max/min are element values.
struct column_summary {
    double avg = 0.0;
    double max = 0.0;
    double min = 0.0;
};
column_summary summarize(std::span<const double> values);

void write_runs_csv(const bench_result& r, const std::filesystem::path& path);
void write_gains_csv(const bench_result& r, const bench_plan& plan,
                     const std::filesystem::path& path);

// Renders fig_bps.svg, fig_escapes.svg and fig_tradeoff.svg into out_dir by
// re-reading the two CSVs, so the plots are a pure function of the CSV files.
void write_figures(const std::filesystem::path& out_dir);

// Minimal CSV (no quoting; the writers never emit delimiters inside fields).
struct csv_table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};
csv_table read_csv(const std::filesystem::path& path);

std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

} // namespace ppmx
