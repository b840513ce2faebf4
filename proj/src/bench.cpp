#include "ppmx/bench.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>

#include "ppmx/ppm_codec.hpp"

namespace fs = std::filesystem;

namespace ppmx {

std::vector<std::uint8_t> read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw error(errc::io_error, "cannot open " + path.string());
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    if (in.bad())
        throw error(errc::io_error, "read failed on " + path.string());
    return bytes;
}

void write_file(const fs::path& path, std::span<const std::uint8_t> bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw error(errc::io_error, "cannot create " + path.string());
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out)
        throw error(errc::io_error, "write failed on " + path.string());
}

std::vector<int> parse_order_list(const std::string& text) {
    auto parse_int = [&](const std::string& tok) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw error(errc::bad_config, "bad order list element '" + tok + "'");
        }
        if (used != tok.size() || v < 1 || v > 64)
            throw error(errc::bad_config, "bad order list element '" + tok + "'");
        return v;
    };

    std::vector<int> out;
    if (const auto dots = text.find(".."); dots != std::string::npos) {
        const int lo = parse_int(text.substr(0, dots));
        const int hi = parse_int(text.substr(dots + 2));
        if (lo > hi)
            throw error(errc::bad_config, "empty order range '" + text + "'");
        for (int v = lo; v <= hi; ++v)
            out.push_back(v);
    } else {
        std::stringstream ss(text);
        std::string tok;
        while (std::getline(ss, tok, ','))
            out.push_back(parse_int(tok));
        if (out.empty())
            throw error(errc::bad_config, "empty order list");
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

column_summary summarize(std::span<const double> values) {
    if (values.empty())
        throw error(errc::bad_config, "summarize of empty column");
    column_summary s;
    s.avg = round2(std::accumulate(values.begin(), values.end(), 0.0) /
                   static_cast<double>(values.size()));
    s.max = *std::max_element(values.begin(), values.end());
    s.min = *std::min_element(values.begin(), values.end());
    return s;
}

namespace {

std::string fmt(double v, int prec) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", prec, v);
    return buf;
}

struct bench_job {
    std::size_t file_idx;
    trie_mode mode;
    int order;
};

} // namespace

bench_result run_bench(const bench_plan& plan) {
    for (int k : plan.classic_orders)
        if (k < 1 || k > 16)
            throw error(errc::bad_config, "classic order out of range: " + std::to_string(k));
    for (int b : plan.ccm_bits)
        if (b < 1 || b > 64)
            throw error(errc::bad_config, "ccm bit-order out of range: " + std::to_string(b));

    if (!fs::is_directory(plan.corpus_dir))
        throw error(errc::io_error,
                    "corpus directory not found: " + plan.corpus_dir.string());

    // Corpus scan: regular, nonempty, CSV-safe files, in name order.
    std::vector<std::string> names;
    std::vector<std::vector<std::uint8_t>> contents;
    {
        std::vector<fs::path> paths;
        for (const auto& entry : fs::directory_iterator(plan.corpus_dir))
            if (entry.is_regular_file())
                paths.push_back(entry.path());
        std::sort(paths.begin(), paths.end());
        for (const auto& p : paths) {
            const std::string name = p.filename().string();
            if (name.find_first_of(",\"\n") != std::string::npos) {
                std::cerr << "warning: skipping '" << name << "' (name breaks CSV)\n";
                continue;
            }
            std::vector<std::uint8_t> bytes;
            try {
                bytes = read_file(p);
            } catch (const error& e) {
                std::cerr << "warning: skipping " << name << ": " << e.what() << "\n";
                continue;
            }
            if (bytes.empty()) {
                std::cerr << "warning: skipping empty file " << name << "\n";
                continue;
            }
            names.push_back(name);
            contents.push_back(std::move(bytes));
        }
    }

    // Job list in final report order: (file, classic orders asc, ccm bits asc).
    std::vector<bench_job> jobs;
    for (std::size_t f = 0; f < names.size(); ++f) {
        for (int k : plan.classic_orders)
            jobs.push_back({f, trie_mode::classic, k});
        for (int b : plan.ccm_bits)
            jobs.push_back({f, trie_mode::ccm, b});
    }
    if (jobs.empty())
        throw error(errc::bad_config, "no benchmark inputs in " + plan.corpus_dir.string());

    std::vector<run_stats> stats(jobs.size());
    std::vector<std::string> failures(jobs.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(jobs.size()); ++i) {
        const bench_job& j = jobs[i];
        model_config cfg;
        cfg.mode = j.mode;
        cfg.order = j.order;
        if (j.mode == trie_mode::ccm && plan.pitch > 0)
            cfg.pitch = std::min(plan.pitch, j.order);
        try {
            stats[i] = encode(contents[j.file_idx], cfg).stats;
        } catch (const std::exception& e) {
            failures[i] = e.what();
        }
    }

    bench_result res;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        if (!failures[i].empty()) {
            std::cerr << "warning: " << names[jobs[i].file_idx] << " order "
                      << jobs[i].order << ": " << failures[i] << "\n";
            continue;
        }
        res.runs.push_back({names[jobs[i].file_idx], stats[i]});
    }
    if (res.runs.empty())
        throw error(errc::bad_config, "benchmark produced no results");

    // Trade-off rows: per file, compare each classic order against the
    // largest ccm order whose normalized trie still fits under it.
    for (const auto& name : names) {
        std::map<int, const run_stats*> classic, ccm;
        std::map<int, double> classic_sizes, ccm_sizes;
        for (const auto& r : res.runs) {
            if (r.file != name)
                continue;
            if (r.stats.mode == trie_mode::classic) {
                classic[r.stats.order] = &r.stats;
                classic_sizes[r.stats.order] = static_cast<double>(r.stats.node_count);
            } else {
                ccm[r.stats.order] = &r.stats;
                ccm_sizes[r.stats.order] = r.stats.normalized_nodes;
            }
        }
        if (ccm.empty())
            continue;
        for (const auto& [k, cs] : classic) {
            try {
                const int bits = pick_ccm_order(classic_sizes, ccm_sizes, k);
                tradeoff_row row = gains(*cs, *ccm.at(bits));
                row.file = name;
                res.rows.push_back(row);
            } catch (const error&) {
                // no qualifying ccm run for this (file, order); leave the cell empty
            }
        }
    }
    return res;
}

void write_runs_csv(const bench_result& r, const fs::path& path) {
    std::ostringstream out;
    out << "file,mode,order,pitch,nodes,normalized_nodes,bits_per_symbol,"
           "bps_excl_header,escapes_per_symbol\n";
    for (const auto& run : r.runs) {
        const auto& s = run.stats;
        out << run.file << ',' << (s.mode == trie_mode::ccm ? "ccm" : "classic") << ','
            << s.order << ',' << s.pitch << ',' << s.node_count << ','
            << fmt(s.normalized_nodes, 2) << ',' << fmt(s.bits_per_symbol, 6) << ','
            << fmt(s.bps_excl_header, 6) << ',' << fmt(s.escapes_per_symbol, 6) << '\n';
    }
    const std::string text = out.str();
    write_file(path, {reinterpret_cast<const std::uint8_t*>(text.data()), text.size()});
}

void write_gains_csv(const bench_result& r, const bench_plan& plan, const fs::path& path) {
    std::ostringstream out;
    out << "file";
    for (int k : plan.classic_orders)
        out << ",o" << k << "_ccm_bits,o" << k << "_mem_gain_pct,o" << k
            << "_comp_gain_pct";
    out << '\n';

    std::vector<std::string> files;
    for (const auto& row : r.rows)
        if (files.empty() || files.back() != row.file)
            files.push_back(row.file);

    std::map<int, std::vector<double>> mem_cols, comp_cols;
    for (const auto& file : files) {
        out << file;
        for (int k : plan.classic_orders) {
            const tradeoff_row* cell = nullptr;
            for (const auto& row : r.rows)
                if (row.file == file && row.classic_order == k)
                    cell = &row;
            if (cell == nullptr) {
                out << ",,,";
            } else {
                out << ',' << cell->ccm_bits << ',' << fmt(cell->memory_gain_pct, 2)
                    << ',' << fmt(cell->compression_gain_pct, 2);
                mem_cols[k].push_back(cell->memory_gain_pct);
                comp_cols[k].push_back(cell->compression_gain_pct);
            }
        }
        out << '\n';
    }

    const char* labels[3] = {"AVG.", "MAX.", "MIN."};
    for (int which = 0; which < 3; ++which) {
        out << labels[which];
        for (int k : plan.classic_orders) {
            if (mem_cols[k].empty()) {
                out << ",,,";
                continue;
            }
            const column_summary m = summarize(mem_cols[k]);
            const column_summary c = summarize(comp_cols[k]);
            const double mv = which == 0 ? m.avg : which == 1 ? m.max : m.min;
            const double cv = which == 0 ? c.avg : which == 1 ? c.max : c.min;
            out << ",," << fmt(mv, 2) << ',' << fmt(cv, 2);
        }
        out << '\n';
    }
    const std::string text = out.str();
    write_file(path, {reinterpret_cast<const std::uint8_t*>(text.data()), text.size()});
}

csv_table read_csv(const fs::path& path) {
    const auto bytes = read_file(path);
    csv_table t;
    std::string line;
    std::istringstream in(std::string(bytes.begin(), bytes.end()));
    bool first = true;
    while (std::getline(in, line)) {
        std::vector<std::string> fields;
        std::string field;
        std::istringstream ls(line);
        while (std::getline(ls, field, ','))
            fields.push_back(field);
        if (!line.empty() && line.back() == ',')
            fields.emplace_back();
        if (first) {
            t.header = std::move(fields);
            first = false;
        } else {
            t.rows.push_back(std::move(fields));
        }
    }
    return t;
}

// ---- SVG figures ----------------------------------------------------------

namespace {

const char* const palette[] = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#393b79", "#637939",
    "#8c6d31", "#843c39", "#7b4173", "#3182bd", "#e6550d", "#31a354",
};
constexpr int palette_size = 18;

struct scale {
    double d0, d1, r0, r1;
    double operator()(double v) const {
        const double span = d1 - d0;
        return r0 + (span == 0.0 ? 0.5 : (v - d0) / span) * (r1 - r0);
    }
};

struct svg_canvas {
    std::ostringstream s;

    svg_canvas(int w, int h) {
        s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\""
          << h << "\" viewBox=\"0 0 " << w << ' ' << h
          << "\" font-family=\"sans-serif\" font-size=\"11\">\n"
          << "<rect width=\"" << w << "\" height=\"" << h << "\" fill=\"white\"/>\n";
    }

    void line(double x1, double y1, double x2, double y2, const std::string& color,
              const std::string& dash = "") {
        s << "<line x1=\"" << fmt(x1, 1) << "\" y1=\"" << fmt(y1, 1) << "\" x2=\""
          << fmt(x2, 1) << "\" y2=\"" << fmt(y2, 1) << "\" stroke=\"" << color << "\"";
        if (!dash.empty())
            s << " stroke-dasharray=\"" << dash << "\"";
        s << "/>\n";
    }

    void polyline(const std::vector<std::pair<double, double>>& pts,
                  const std::string& color) {
        s << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (const auto& [x, y] : pts)
            s << fmt(x, 1) << ',' << fmt(y, 1) << ' ';
        s << "\"/>\n";
    }

    void circle(double x, double y, double r, const std::string& color) {
        s << "<circle cx=\"" << fmt(x, 1) << "\" cy=\"" << fmt(y, 1) << "\" r=\"" << r
          << "\" fill=\"" << color << "\"/>\n";
    }

    void text(double x, double y, const std::string& str, const std::string& anchor = "start",
              const std::string& color = "#333") {
        s << "<text x=\"" << fmt(x, 1) << "\" y=\"" << fmt(y, 1) << "\" fill=\"" << color
          << "\" text-anchor=\"" << anchor << "\">" << str << "</text>\n";
    }

    std::string finish() {
        s << "</svg>\n";
        return s.str();
    }
};

void save_svg(svg_canvas& c, const fs::path& path) {
    const std::string text = c.finish();
    write_file(path, {reinterpret_cast<const std::uint8_t*>(text.data()), text.size()});
}

struct series_point {
    int order;
    double value;
};

// One panel of per-file lines over order, with axes and ticks.
void draw_panel(svg_canvas& c, double px, double py, double pw, double ph,
                const std::string& title,
                const std::map<std::string, std::vector<series_point>>& series,
                const std::map<std::string, int>& color_of) {
    double vmax = 0.0;
    int omin = 1 << 30, omax = 0;
    for (const auto& [file, pts] : series) {
        for (const auto& p : pts) {
            vmax = std::max(vmax, p.value);
            omin = std::min(omin, p.order);
            omax = std::max(omax, p.order);
        }
    }
    if (series.empty()) {
        c.text(px + pw / 2, py + ph / 2, "no data", "middle");
        return;
    }
    vmax = vmax <= 0.0 ? 1.0 : vmax * 1.05;
    const scale sx{static_cast<double>(omin), static_cast<double>(omax), px, px + pw};
    const scale sy{0.0, vmax, py + ph, py};

    c.line(px, py, px, py + ph, "#333");
    c.line(px, py + ph, px + pw, py + ph, "#333");
    c.text(px + pw / 2, py - 8, title, "middle");
    for (int i = 0; i <= 4; ++i) {
        const double v = vmax * i / 4;
        c.line(px - 3, sy(v), px, sy(v), "#333");
        c.text(px - 6, sy(v) + 4, fmt(v, 2), "end");
        if (i > 0)
            c.line(px, sy(v), px + pw, sy(v), "#eee");
    }
    std::vector<int> orders;
    for (const auto& [file, pts] : series)
        for (const auto& p : pts)
            orders.push_back(p.order);
    std::sort(orders.begin(), orders.end());
    orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
    for (int o : orders) {
        c.line(sx(o), py + ph, sx(o), py + ph + 3, "#333");
        c.text(sx(o), py + ph + 15, std::to_string(o), "middle");
    }
    for (const auto& [file, pts] : series) {
        const std::string color = palette[color_of.at(file) % palette_size];
        std::vector<std::pair<double, double>> xy;
        for (const auto& p : pts)
            xy.emplace_back(sx(p.order), sy(p.value));
        c.polyline(xy, color);
        for (const auto& [x, y] : xy)
            c.circle(x, y, 2.5, color);
    }
}

// fig_bps.svg / fig_escapes.svg: two panels (classic, ccm) + file legend.
void line_figure(const csv_table& runs, const std::string& column,
                 const std::string& what, const fs::path& path) {
    std::size_t col = 0, file_c = 0, mode_c = 0, order_c = 0;
    for (std::size_t i = 0; i < runs.header.size(); ++i) {
        if (runs.header[i] == column) col = i;
        if (runs.header[i] == "file") file_c = i;
        if (runs.header[i] == "mode") mode_c = i;
        if (runs.header[i] == "order") order_c = i;
    }
    std::map<std::string, std::vector<series_point>> classic, ccm;
    std::map<std::string, int> color_of;
    for (const auto& row : runs.rows) {
        const std::string& file = row[file_c];
        if (!color_of.count(file))
            color_of[file] = static_cast<int>(color_of.size());
        auto& dst = row[mode_c] == "ccm" ? ccm : classic;
        dst[file].push_back({std::stoi(row[order_c]), std::stod(row[col])});
    }

    svg_canvas c(1180, 420);
    draw_panel(c, 70, 45, 390, 310, what + ", classic (order in symbols)", classic,
               color_of);
    draw_panel(c, 560, 45, 390, 310, what + ", ccm (order in bits)", ccm, color_of);
    double ly = 50;
    for (const auto& [file, idx] : color_of) {
        c.line(980, ly - 4, 1000, ly - 4, palette[idx % palette_size]);
        c.text(1006, ly, file.substr(0, 18));
        ly += 16;
    }
    save_svg(c, path);
}

// fig_tradeoff.svg: memory gain vs compression gain, one dot per table cell.
void tradeoff_figure(const csv_table& gains, const fs::path& path) {
    struct dot {
        double m, c;
        int k;
    };
    std::vector<dot> dots;
    std::vector<int> ks;
    for (std::size_t col = 1; col + 2 < gains.header.size(); col += 3) {
        // columns come in triples: oK_ccm_bits, oK_mem_gain_pct, oK_comp_gain_pct
        const std::string& h = gains.header[col];
        ks.push_back(std::stoi(h.substr(1, h.find('_') - 1)));
    }
    for (const auto& row : gains.rows) {
        if (row.empty() || row[0] == "AVG." || row[0] == "MAX." || row[0] == "MIN.")
            continue;
        for (std::size_t i = 0; i < ks.size(); ++i) {
            const std::size_t base = 1 + i * 3;
            if (base + 2 >= row.size() || row[base + 1].empty())
                continue;
            dots.push_back({std::stod(row[base + 1]), std::stod(row[base + 2]), ks[i]});
        }
    }

    svg_canvas c(760, 480);
    const double px = 80, py = 45, pw = 480, ph = 370;
    if (dots.empty()) {
        c.text(px + pw / 2, py + ph / 2, "no trade-off rows", "middle");
        save_svg(c, path);
        return;
    }
    double mlo = dots[0].m, mhi = dots[0].m, clo = dots[0].c, chi = dots[0].c;
    for (const auto& d : dots) {
        mlo = std::min(mlo, d.m), mhi = std::max(mhi, d.m);
        clo = std::min(clo, d.c), chi = std::max(chi, d.c);
    }
    mlo = std::min(mlo, 0.0) - 2, mhi = std::max(mhi, 0.0) + 2;
    clo = std::min(clo, 0.0) - 1, chi = std::max(chi, 0.0) + 1;
    const scale sx{mlo, mhi, px, px + pw};
    const scale sy{clo, chi, py + ph, py};

    c.line(px, py, px, py + ph, "#333");
    c.line(px, py + ph, px + pw, py + ph, "#333");
    c.line(sx(0), py, sx(0), py + ph, "#999", "4,3");
    c.line(px, sy(0), px + pw, sy(0), "#999", "4,3");
    for (int i = 0; i <= 4; ++i) {
        const double mv = mlo + (mhi - mlo) * i / 4;
        c.line(sx(mv), py + ph, sx(mv), py + ph + 3, "#333");
        c.text(sx(mv), py + ph + 15, fmt(mv, 1), "middle");
        const double cv = clo + (chi - clo) * i / 4;
        c.line(px - 3, sy(cv), px, sy(cv), "#333");
        c.text(px - 6, sy(cv) + 4, fmt(cv, 1), "end");
    }
    c.text(px + pw / 2, py + ph + 32, "memory gain, %", "middle");
    c.text(px + pw / 2, py - 10, "space saved vs compression sacrificed", "middle");
    c.text(18, py + ph / 2, "compression gain, %", "middle");

    std::sort(ks.begin(), ks.end());
    for (const auto& d : dots) {
        const auto ki = std::find(ks.begin(), ks.end(), d.k) - ks.begin();
        c.circle(sx(d.m), sy(d.c), 3.5, palette[ki % palette_size]);
    }
    double ly = py + 10;
    for (std::size_t i = 0; i < ks.size(); ++i) {
        c.circle(px + pw + 30, ly - 4, 3.5, palette[i % palette_size]);
        c.text(px + pw + 40, ly, "classic order " + std::to_string(ks[i]));
        ly += 16;
    }
    save_svg(c, path);
}

} // namespace

void write_figures(const fs::path& out_dir) {
    const csv_table runs = read_csv(out_dir / "runs.csv");
    line_figure(runs, "bits_per_symbol", "bits/symbol", out_dir / "fig_bps.svg");
    line_figure(runs, "escapes_per_symbol", "escapes/symbol", out_dir / "fig_escapes.svg");
    tradeoff_figure(read_csv(out_dir / "gains.csv"), out_dir / "fig_tradeoff.svg");
}

} // namespace ppmx
