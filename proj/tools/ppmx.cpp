// Command-line front end: compress/decompress single files and run corpus
// benchmarks that emit the trade-off tables (CSV) and figures (SVG).
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ppmx/bench.hpp"
#include "ppmx/ppm_codec.hpp"

namespace {

int cmd_compress(const std::string& mode, int order, int pitch, const std::string& in,
                 const std::string& out) {
    ppmx::model_config cfg;
    cfg.mode = mode == "ccm" ? ppmx::trie_mode::ccm : ppmx::trie_mode::classic;
    cfg.order = order;
    cfg.pitch = pitch;

    const auto input = ppmx::read_file(in);
    const ppmx::encode_result res = ppmx::encode(input, cfg);
    ppmx::write_file(out, res.bytes);

    const auto& s = res.stats;
    std::printf("%s: %llu -> %zu bytes, %.4f bits/symbol, %llu nodes", in.c_str(),
                static_cast<unsigned long long>(s.input_bytes), res.bytes.size(),
                s.bits_per_symbol, static_cast<unsigned long long>(s.node_count));
    if (cfg.mode == ppmx::trie_mode::ccm)
        std::printf(" (normalized %.2f, pitch %d)", s.normalized_nodes, s.pitch);
    std::printf(", %.4f escapes/symbol\n", s.escapes_per_symbol);

    if (ppmx::state_hashing_enabled()) {
        const ppmx::decode_result back = ppmx::decode_verbose(res.bytes);
        const bool ok = back.bytes == input && back.state_hashes == res.state_hashes;
        std::printf("state-hash check: %s (%zu positions)\n", ok ? "ok" : "MISMATCH",
                    res.state_hashes.size());
        if (!ok)
            return 1;
    }
    return 0;
}

int cmd_decompress(const std::string& in, const std::string& out) {
    const auto bytes = ppmx::read_file(in);
    const auto decoded = ppmx::decode(bytes);
    ppmx::write_file(out, decoded);
    std::printf("%s: %zu -> %zu bytes\n", in.c_str(), bytes.size(), decoded.size());
    return 0;
}

int cmd_bench(const ppmx::bench_plan& plan) {
    std::filesystem::create_directories(plan.out_dir);
    const ppmx::bench_result res = ppmx::run_bench(plan);
    ppmx::write_runs_csv(res, plan.out_dir / "runs.csv");
    ppmx::write_gains_csv(res, plan, plan.out_dir / "gains.csv");
    ppmx::write_figures(plan.out_dir);
    std::printf("%zu runs, %zu trade-off rows -> %s/{runs.csv,gains.csv,fig_*.svg}\n",
                res.runs.size(), res.rows.size(), plan.out_dir.string().c_str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ppmx: PPM compressor with classic and compressed-context models"};
    app.require_subcommand(1);

    std::string mode = "classic", input, output;
    int order = 3, pitch = 0;
    auto* comp = app.add_subcommand("compress", "compress a file");
    comp->add_option("--mode", mode, "context model")
        ->check(CLI::IsMember({"classic", "ccm"}))
        ->capture_default_str();
    comp->add_option("--order", order, "max context length (symbols or bits)")
        ->check(CLI::Range(1, 64))
        ->capture_default_str();
    comp->add_option("--pitch", pitch, "ccm shortening step in bits (default: auto)")
        ->check(CLI::Range(1, 64));
    comp->add_option("input", input, "file to compress")->required();
    comp->add_option("output", output, "compressed file to write")->required();

    auto* dec = app.add_subcommand("decompress", "decompress a file");
    dec->add_option("input", input, "compressed file")->required();
    dec->add_option("output", output, "file to write")->required();

    std::string corpus, out_dir, classic_orders = "1..6", ccm_bits = "6,10,14,18,21,24";
    std::string pitch_policy = "auto";
    auto* bench = app.add_subcommand("bench", "benchmark a corpus directory");
    bench->add_option("--corpus", corpus, "directory of input files")->required();
    bench->add_option("--out", out_dir, "directory for CSV/SVG results")->required();
    bench->add_option("--classic-orders", classic_orders, "e.g. 1..6 or 2,4")
        ->capture_default_str();
    bench->add_option("--ccm-bits", ccm_bits, "e.g. 6,10,14 or 4..24")
        ->capture_default_str();
    bench->add_option("--pitch", pitch_policy, "auto or a fixed bit count")
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (comp->parsed())
            return cmd_compress(mode, order, pitch, input, output);
        if (dec->parsed())
            return cmd_decompress(input, output);
        ppmx::bench_plan plan;
        plan.corpus_dir = corpus;
        plan.out_dir = out_dir;
        plan.classic_orders = ppmx::parse_order_list(classic_orders);
        plan.ccm_bits = ppmx::parse_order_list(ccm_bits);
        plan.pitch = pitch_policy == "auto" ? 0 : ppmx::parse_order_list(pitch_policy).at(0);
        return cmd_bench(plan);
    } catch (const ppmx::error& e) {
        std::cerr << "error: " << e.what() << " [" << ppmx::errc_name(e.code()) << "]\n";
        return ppmx::exit_code(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
