// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 tfkit contributors

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <iostream>
#include <string>

#include "tfkit/cwt.hpp"
#include "tfkit/errors.hpp"
#include "tfkit/fft.hpp"
#include "tfkit/grid_io.hpp"
#include "tfkit/render.hpp"
#include "tfkit/signal_io.hpp"
#include "tfkit/stft.hpp"
#include "tfkit/stockwell.hpp"
#include "tfkit/synth.hpp"
#include "tfkit/tfgrid.hpp"
#include "tfkit/window.hpp"
#include "tfkit/wvd.hpp"

namespace {

using json = nlohmann::json;

tfkit::SignalFormat parse_signal_format(const std::string& name) {
    if (name == "wav") return tfkit::SignalFormat::wav_pcm16_mono;
    if (name == "raw") return tfkit::SignalFormat::raw_f64;
    if (name == "csv") return tfkit::SignalFormat::csv;
    throw CLI::ValidationError("format", "unknown signal format: " + name);
}

tfkit::SignalFormat format_from_path(const std::string& path, const std::string& explicit_format) {
    if (!explicit_format.empty()) return parse_signal_format(explicit_format);
    const auto ext = std::filesystem::path(path).extension().string();
    if (ext == ".wav") return tfkit::SignalFormat::wav_pcm16_mono;
    if (ext == ".csv") return tfkit::SignalFormat::csv;
    return tfkit::SignalFormat::raw_f64;
}

struct GenOptions {
    std::string kind = "tone";
    double f_start = 440.0;
    double f_end = 880.0;
    double center_time = 0.5;
    double width = 0.1;
    double amplitude = 1.0;
    double duration = 1.0;
    double sample_rate = 8000.0;
    std::uint64_t seed = 0;
    std::vector<std::string> steps;
    std::string out;
    std::string format;
};

int run_gen(const GenOptions& opt) {
    tfkit::SignalSpec spec;
    if (opt.kind == "tone") spec.kind = tfkit::SignalKind::tone;
    else if (opt.kind == "linear_chirp") spec.kind = tfkit::SignalKind::linear_chirp;
    else if (opt.kind == "gaussian_pulse") spec.kind = tfkit::SignalKind::gaussian_pulse;
    else if (opt.kind == "freq_step") spec.kind = tfkit::SignalKind::freq_step;
    else if (opt.kind == "sine_burst") spec.kind = tfkit::SignalKind::sine_burst;
    else if (opt.kind == "white_noise") spec.kind = tfkit::SignalKind::white_noise;
    else throw CLI::ValidationError("--kind", "unknown signal kind: " + opt.kind);

    spec.f_start = opt.f_start;
    spec.f_end = opt.f_end;
    spec.center_time = opt.center_time;
    spec.width = opt.width;
    spec.amplitude = opt.amplitude;
    spec.duration = opt.duration;
    spec.sample_rate = opt.sample_rate;
    spec.seed = opt.seed;
    for (const auto& s : opt.steps) {
        const auto colon = s.find(':');
        if (colon == std::string::npos)
            throw CLI::ValidationError("--step", "expected TIME:FREQ, got " + s);
        spec.steps.push_back({std::stod(s.substr(0, colon)), std::stod(s.substr(colon + 1))});
    }

    const auto signal = tfkit::synthesize(spec);
    tfkit::save_signal(signal, opt.out, format_from_path(opt.out, opt.format));
    return 0;
}

struct TransformOptions {
    std::string method;
    std::string in;
    std::string in_format;
    double sample_rate = 0.0;
    std::string out;
    std::string out_format = "tfgrid";
    bool db = false;

    // stft / gabor
    std::string window = "hann";
    std::size_t window_length = 0;
    double alpha = 0.0;
    std::size_t hop = 0;
    std::size_t nfft = 0;

    // cwt
    double fc = 1.0;
    double f_min = 0.0;
    double f_max = 0.0;
    int voices = 12;
    std::string boundary = "circular";

    // stockwell
    double f_lo = 0.0;
    double f_hi = 0.0;

    // wvd family
    bool no_upsample = false;
    std::size_t max_lag = 0;
    std::size_t nfft_lag = 0;
    std::size_t time_kernel_len = 0;
    std::size_t freq_kernel_len = 0;
};

tfkit::BoundaryMode parse_boundary(const std::string& name) {
    if (name == "circular") return tfkit::BoundaryMode::circular;
    if (name == "zeropad") return tfkit::BoundaryMode::zero_pad;
    throw CLI::ValidationError("--boundary", "unknown boundary mode: " + name);
}

tfkit::TFGrid compute_transform(const TransformOptions& opt, const tfkit::RealSignal& x) {
    const double fs = x.sample_rate;

    if (opt.method == "stft" || opt.method == "gabor") {
        std::size_t hop = opt.hop ? opt.hop : 1;
        if (opt.method == "gabor" || (opt.window == "gaussian" && opt.window_length == 0)) {
            if (opt.alpha <= 0.0)
                throw std::invalid_argument("gabor / gaussian stft: --alpha must be positive");
            const auto w = tfkit::make_gaussian_window(opt.alpha, fs);
            const std::size_t nfft = opt.nfft ? opt.nfft : tfkit::detail::next_pow2(w.size());
            return tfkit::gabor(x, opt.alpha, hop, nfft);
        }
        if (opt.window_length == 0)
            throw std::invalid_argument("stft: --window-length is required");
        tfkit::WindowKind kind;
        if (opt.window == "rectangular") kind = tfkit::WindowKind::rectangular;
        else if (opt.window == "hann") kind = tfkit::WindowKind::hann;
        else if (opt.window == "gaussian") kind = tfkit::WindowKind::gaussian;
        else throw std::invalid_argument("stft: unknown window " + opt.window);
        const auto w = tfkit::make_window(kind, opt.window_length, opt.alpha, fs);
        const std::size_t nfft = opt.nfft ? opt.nfft : tfkit::detail::next_pow2(w.size());
        return tfkit::spectrogram(tfkit::stft(x, w, hop, nfft));
    }
    if (opt.method == "cwt") {
        tfkit::MorletParams params{opt.fc, opt.alpha > 0.0 ? opt.alpha : 0.02};
        const double f_min = opt.f_min > 0.0 ? opt.f_min : fs / 128.0;
        const double f_max = opt.f_max > 0.0 ? opt.f_max : fs / 2.0 * 0.9;
        const auto grid = tfkit::make_scale_grid(params, f_min, f_max, opt.voices);
        auto result = tfkit::cwt(x, params, grid, parse_boundary(opt.boundary));
        if (result.truncated)
            std::cerr << "tfkit: warning: wavelet support truncated to 4x the signal length\n";
        return tfkit::scalogram(result);
    }
    if (opt.method == "stockwell") {
        const double f_lo = opt.f_lo;
        const double f_hi = opt.f_hi > 0.0 ? opt.f_hi : fs / 2.0;
        return tfkit::stockwell_power(
            tfkit::stockwell(x, f_lo, f_hi, parse_boundary(opt.boundary)));
    }
    if (opt.method == "wvd" || opt.method == "spwvd") {
        tfkit::WvdOptions options;
        options.upsample = !opt.no_upsample;
        options.max_lag = opt.max_lag;
        options.nfft_lag = opt.nfft_lag;
        if (opt.method == "wvd") return tfkit::wvd(x, options);
        auto plain = tfkit::wvd(x, options);
        tfkit::SmoothingKernel kernel = tfkit::default_smoothing_kernel(plain.n_time, plain.n_freq);
        if (opt.time_kernel_len) kernel.time_kernel = tfkit::gaussian_kernel(opt.time_kernel_len);
        if (opt.freq_kernel_len) kernel.freq_kernel = tfkit::gaussian_kernel(opt.freq_kernel_len);
        return tfkit::smooth_grid(plain, kernel);
    }
    throw std::invalid_argument("unknown transform method: " + opt.method);
}

int run_transform(const TransformOptions& opt) {
    const auto signal =
        tfkit::load_signal(opt.in, format_from_path(opt.in, opt.in_format), opt.sample_rate);
    tfkit::TFGrid grid = compute_transform(opt, signal);
    if (opt.db) grid = tfkit::to_db(grid);
    tfkit::write_grid(grid, opt.out,
                      opt.out_format == "csv" ? tfkit::GridFileFormat::csv
                                              : tfkit::GridFileFormat::tfgrid);
    return 0;
}

struct RenderOptions {
    std::string in;
    std::string out;
    std::string colormap = "viridis";
    double db_floor = -120.0;
    std::string normalize = "max";
    bool log_freq = false;
    bool db = false;
    std::size_t width = 512;
    std::size_t height = 512;
};

int run_render(const RenderOptions& opt) {
    tfkit::TFGrid grid = tfkit::read_grid(opt.in);
    if (opt.db && grid.scale == tfkit::ScaleTag::linear) grid = tfkit::to_db(grid, opt.db_floor);

    tfkit::RenderSpec spec;
    spec.colormap = opt.colormap == "gray" ? tfkit::Colormap::grayscale : tfkit::Colormap::viridis;
    spec.db_floor = opt.db_floor;
    spec.normalize = opt.normalize == "abs" ? tfkit::Normalize::absolute : tfkit::Normalize::grid_max;
    spec.log_freq_axis = opt.log_freq || grid.log_freq_hint;
    spec.image_width = opt.width;
    spec.image_height = opt.height;
    tfkit::render(grid, spec, opt.out);
    return 0;
}

struct GalleryOptions {
    std::string out_dir;
    double sample_rate = 2048.0;
    double duration = 0.5;
    std::size_t image_size = 384;
};

int run_gallery(const GalleryOptions& opt) {
    namespace fs = std::filesystem;
    fs::create_directories(opt.out_dir);
    const double fs_rate = opt.sample_rate;
    const double dur = opt.duration;

    auto make = [&](tfkit::SignalKind kind) {
        tfkit::SignalSpec s;
        s.kind = kind;
        s.sample_rate = fs_rate;
        s.duration = dur;
        return s;
    };

    std::vector<std::pair<std::string, tfkit::RealSignal>> signals;
    {
        auto s = make(tfkit::SignalKind::tone);
        s.f_start = fs_rate * 0.15;
        signals.emplace_back("tone", tfkit::synthesize(s));

        auto t1 = make(tfkit::SignalKind::tone);
        t1.f_start = fs_rate * 0.07;
        auto t2 = make(tfkit::SignalKind::tone);
        t2.f_start = fs_rate * 0.28;
        signals.emplace_back("two_tone", tfkit::mix({tfkit::synthesize(t1), tfkit::synthesize(t2)}));

        s = make(tfkit::SignalKind::linear_chirp);
        s.f_start = fs_rate * 0.02;
        s.f_end = fs_rate * 0.45;
        signals.emplace_back("sweep", tfkit::synthesize(s));

        s = make(tfkit::SignalKind::gaussian_pulse);
        s.f_start = fs_rate * 0.25;
        s.center_time = dur / 2.0;
        s.width = dur / 50.0;
        signals.emplace_back("pulse", tfkit::synthesize(s));

        s = make(tfkit::SignalKind::sine_burst);
        s.f_start = fs_rate * 0.12;
        s.center_time = dur / 2.0;
        s.width = dur / 8.0;
        signals.emplace_back("burst", tfkit::synthesize(s));

        s = make(tfkit::SignalKind::freq_step);
        s.f_start = fs_rate * 0.1;
        s.steps = {{dur / 3.0, fs_rate * 0.25}, {2.0 * dur / 3.0, fs_rate * 0.17}};
        signals.emplace_back("steps", tfkit::synthesize(s));

        auto carrier = make(tfkit::SignalKind::tone);
        carrier.f_start = fs_rate * 0.06;
        auto sweep = make(tfkit::SignalKind::linear_chirp);
        sweep.f_start = fs_rate * 0.15;
        sweep.f_end = fs_rate * 0.4;
        auto blip = make(tfkit::SignalKind::sine_burst);
        blip.f_start = fs_rate * 0.45;
        blip.center_time = dur * 0.7;
        blip.width = dur / 12.0;
        signals.emplace_back("composite",
                             tfkit::mix({tfkit::synthesize(carrier), tfkit::synthesize(sweep),
                                         tfkit::synthesize(blip)}));
    }

    tfkit::RenderSpec spec;
    spec.image_width = opt.image_size;
    spec.image_height = opt.image_size;

    std::size_t emitted = 0;
    for (const auto& [name, x] : signals) {
        const double fs = x.sample_rate;

        // STFT panel: Hann window of ~1/16 of the signal.
        {
            const auto w = tfkit::make_window(tfkit::WindowKind::hann, x.size() / 16);
            auto grid = tfkit::spectrogram(tfkit::stft(x, w, 4, tfkit::detail::next_pow2(w.size()) * 2));
            tfkit::RenderSpec panel = spec;
            tfkit::render(tfkit::to_db(grid, -60.0), panel,
                          (fs::path(opt.out_dir) / (name + "__stft.ppm")).string());
            ++emitted;
        }
        // Scalogram panel on a log axis.
        {
            tfkit::MorletParams params{1.0, 0.02};
            auto scale_grid = tfkit::make_scale_grid(params, fs / 64.0, fs * 0.47, 12);
            auto grid = tfkit::scalogram(tfkit::cwt(x, params, scale_grid));
            tfkit::RenderSpec panel = spec;
            panel.log_freq_axis = true;
            tfkit::render(tfkit::to_db(grid, -60.0), panel,
                          (fs::path(opt.out_dir) / (name + "__cwt.ppm")).string());
            ++emitted;
        }
        // Stockwell panel.
        {
            auto grid = tfkit::stockwell_power(tfkit::stockwell(x, 0.0, fs * 0.47));
            tfkit::render(tfkit::to_db(grid, -60.0), spec,
                          (fs::path(opt.out_dir) / (name + "__stockwell.ppm")).string());
            ++emitted;
        }
        // WVD and its smoothed variant share one distribution.
        {
            auto plain = tfkit::wvd(x);
            tfkit::render(tfkit::to_db(plain, -60.0), spec,
                          (fs::path(opt.out_dir) / (name + "__wvd.ppm")).string());
            ++emitted;
            auto kernel = tfkit::default_smoothing_kernel(plain.n_time, plain.n_freq);
            auto smoothed = tfkit::smooth_grid(plain, kernel);
            tfkit::render(tfkit::to_db(smoothed, -60.0), spec,
                          (fs::path(opt.out_dir) / (name + "__spwvd.ppm")).string());
            ++emitted;
        }
    }
    std::cout << "gallery: wrote " << emitted << " images to " << opt.out_dir << "\n";
    return 0;
}

struct ReportOptions {
    std::string in;
    double f1 = 0.0;
    double f2 = 0.0;
};

int run_report(const ReportOptions& opt) {
    const auto grid = tfkit::read_grid(opt.in);
    const auto report = tfkit::cross_term_report(grid, opt.f1, opt.f2);
    json j;
    j["midpoint_freq_hz"] = report.midpoint_freq;
    j["auto_peak_1"] = report.auto_peak_1;
    j["auto_peak_2"] = report.auto_peak_2;
    j["cross_peak"] = report.cross_peak;
    j["cross_to_auto_ratio"] =
        report.cross_peak / (0.5 * (report.auto_peak_1 + report.auto_peak_2));
    j["oscillation_rate_hz"] = report.oscillation_rate;
    j["cross_energy"] = report.cross_energy;
    j["cross_term_present"] = report.cross_term_present;
    std::cout << j.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"time-frequency analysis toolkit: STFT/Gabor, Morlet CWT, Stockwell, WVD, SPWVD"};
    app.require_subcommand(1);

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "synthesize a test signal");
    gen_cmd->add_option("--kind", gen.kind,
                        "tone | linear_chirp | gaussian_pulse | freq_step | sine_burst | white_noise");
    gen_cmd->add_option("--f-start", gen.f_start, "start / carrier frequency, Hz");
    gen_cmd->add_option("--f-end", gen.f_end, "end frequency (linear_chirp), Hz");
    gen_cmd->add_option("--center-time", gen.center_time, "pulse / burst center, s");
    gen_cmd->add_option("--width", gen.width, "pulse RMS width or burst gate length, s");
    gen_cmd->add_option("--amplitude", gen.amplitude, "peak amplitude");
    gen_cmd->add_option("--duration", gen.duration, "signal length, s");
    gen_cmd->add_option("--sample-rate", gen.sample_rate, "sample rate, Hz");
    gen_cmd->add_option("--seed", gen.seed, "noise seed");
    gen_cmd->add_option("--step", gen.steps, "freq_step boundary TIME:FREQ (repeatable)");
    gen_cmd->add_option("--out", gen.out, "output file")->required();
    gen_cmd->add_option("--format", gen.format, "wav | raw | csv (default: by extension)");

    TransformOptions tr;
    auto* tr_cmd = app.add_subcommand("transform", "compute a time-frequency grid");
    tr_cmd->add_option("--method", tr.method, "stft | gabor | cwt | stockwell | wvd | spwvd")
        ->required()
        ->check(CLI::IsMember({"stft", "gabor", "cwt", "stockwell", "wvd", "spwvd"}));
    tr_cmd->add_option("--in", tr.in, "input signal file")->required();
    tr_cmd->add_option("--in-format", tr.in_format, "wav | raw | csv (default: by extension)");
    tr_cmd->add_option("--sample-rate", tr.sample_rate, "sample rate for raw/csv inputs, Hz");
    tr_cmd->add_option("--out", tr.out, "output grid file")->required();
    tr_cmd->add_option("--format", tr.out_format, "tfgrid | csv")
        ->check(CLI::IsMember({"tfgrid", "csv"}));
    tr_cmd->add_flag("--db", tr.db, "convert to dB before writing");
    tr_cmd->add_option("--window", tr.window, "rectangular | hann | gaussian");
    tr_cmd->add_option("--window-length", tr.window_length, "window length, samples");
    tr_cmd->add_option("--alpha", tr.alpha, "gaussian width (gabor/stft) or Morlet alpha, 1/s^2");
    tr_cmd->add_option("--hop", tr.hop, "frame hop, samples (default 1)");
    tr_cmd->add_option("--nfft", tr.nfft, "transform length (default: next power of two)");
    tr_cmd->add_option("--fc", tr.fc, "Morlet center frequency, Hz");
    tr_cmd->add_option("--fmin", tr.f_min, "lowest CWT frequency, Hz");
    tr_cmd->add_option("--fmax", tr.f_max, "highest CWT frequency, Hz");
    tr_cmd->add_option("--voices", tr.voices, "voices per octave (default 12)");
    tr_cmd->add_option("--boundary", tr.boundary, "circular | zeropad")
        ->check(CLI::IsMember({"circular", "zeropad"}));
    tr_cmd->add_option("--flo", tr.f_lo, "Stockwell band low edge, Hz");
    tr_cmd->add_option("--fhi", tr.f_hi, "Stockwell band high edge, Hz");
    tr_cmd->add_flag("--no-upsample", tr.no_upsample, "skip the 2x interpolation before the WVD");
    tr_cmd->add_option("--max-lag", tr.max_lag, "WVD lag window half-length, samples");
    tr_cmd->add_option("--nfft-lag", tr.nfft_lag, "WVD lag transform length");
    tr_cmd->add_option("--time-kernel-len", tr.time_kernel_len, "SPWVD time kernel length");
    tr_cmd->add_option("--freq-kernel-len", tr.freq_kernel_len, "SPWVD frequency kernel length");

    RenderOptions rd;
    auto* rd_cmd = app.add_subcommand("render", "rasterize a grid to a PPM heatmap");
    rd_cmd->add_option("--in", rd.in, "input tfgrid file")->required();
    rd_cmd->add_option("--out", rd.out, "output PPM file")->required();
    rd_cmd->add_option("--colormap", rd.colormap, "viridis | gray")
        ->check(CLI::IsMember({"viridis", "gray"}));
    rd_cmd->add_flag("--db", rd.db, "convert linear grids to dB before rendering");
    rd_cmd->add_option("--db-floor", rd.db_floor, "dB clipping floor (default -120)");
    rd_cmd->add_option("--normalize", rd.normalize, "max | abs")
        ->check(CLI::IsMember({"max", "abs"}));
    rd_cmd->add_flag("--log-freq", rd.log_freq, "logarithmic frequency axis");
    rd_cmd->add_option("--width", rd.width, "image width, pixels");
    rd_cmd->add_option("--height", rd.height, "image height, pixels");

    GalleryOptions gal;
    auto* gal_cmd = app.add_subcommand("gallery", "render the synthetic-signal comparison set");
    gal_cmd->add_option("--out", gal.out_dir, "output directory")->required();
    gal_cmd->add_option("--sample-rate", gal.sample_rate, "sample rate, Hz");
    gal_cmd->add_option("--duration", gal.duration, "per-signal duration, s");
    gal_cmd->add_option("--image-size", gal.image_size, "panel width and height, pixels");

    ReportOptions rp;
    auto* rp_cmd = app.add_subcommand("report", "cross-term measurements for a two-component grid");
    rp_cmd->add_option("--in", rp.in, "input tfgrid file")->required();
    rp_cmd->add_option("--f1", rp.f1, "lower component frequency, Hz")->required();
    rp_cmd->add_option("--f2", rp.f2, "upper component frequency, Hz")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // help/version exit clean; usage errors exit 2
    }

    try {
        if (gen_cmd->parsed()) return run_gen(gen);
        if (tr_cmd->parsed()) return run_transform(tr);
        if (rd_cmd->parsed()) return run_render(rd);
        if (gal_cmd->parsed()) return run_gallery(gal);
        if (rp_cmd->parsed()) return run_report(rp);
    } catch (const std::exception& e) {
        std::cerr << "tfkit: error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
