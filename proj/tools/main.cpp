// stripsym: command-line front end for strip-partitioned Z-detector models.
// Subcommands: stats, check, decode, simulate, bench, deform, export.
// Exit codes: 0 success, 1 failed check / negative result, 2 usage or parse error.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "stripsym/decoder.hpp"
#include "stripsym/detector_model.hpp"
#include "stripsym/families.hpp"
#include "stripsym/pauli.hpp"
#include "stripsym/sim.hpp"

using nlohmann::json;
using namespace stripsym;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw UsageError("cannot open output file: " + out_path);
    out << text;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    return parts;
}

std::vector<FamilyId> parse_families_arg(const std::string& arg) {
    if (arg == "all") {
        return {std::begin(kAllFamilies), std::end(kAllFamilies)};
    }
    std::vector<FamilyId> out;
    for (const std::string& name : split(arg, ',')) {
        const auto id = parse_family(name);
        if (!id) throw UsageError("unknown family: " + name);
        out.push_back(*id);
    }
    return out;
}

std::vector<uint32_t> parse_sizes_arg(const std::string& arg) {
    std::vector<uint32_t> out;
    for (const std::string& tok : split(arg, ',')) {
        try {
            size_t pos = 0;
            const unsigned long v = std::stoul(tok, &pos);
            if (pos != tok.size() || v < 2 || v > 1000) throw std::invalid_argument(tok);
            out.push_back(static_cast<uint32_t>(v));
        } catch (const std::exception&) {
            throw UsageError("bad size: " + tok);
        }
    }
    return out;
}

std::vector<double> parse_probs_arg(const std::string& arg) {
    std::vector<double> out;
    for (const std::string& tok : split(arg, ',')) {
        try {
            size_t pos = 0;
            const double v = std::stod(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw UsageError("bad probability: " + tok);
        }
    }
    return out;
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

template <typename T>
std::string join_ints(const std::vector<T>& v, char sep = ';') {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

// Shared --family/--L/--file model source.
struct ModelSource {
    std::string family;
    uint32_t L = 0;
    std::string file;

    bool from_file() const { return !file.empty(); }

    void validate() const {
        if (from_file() && (!family.empty() || L != 0)) {
            throw UsageError("give either --file or --family/--L, not both");
        }
        if (!from_file() && (family.empty() || L == 0)) {
            throw UsageError("a model source is required: --family with --L, or --file");
        }
    }

    FamilyId family_id() const {
        const auto id = parse_family(family);
        if (!id) throw UsageError("unknown family: " + family);
        return *id;
    }

    DetectorModel load() const {
        validate();
        if (from_file()) return read_detmodel_file(file);
        if (L < 2) throw UsageError("L must be at least 2");
        return build(family_id(), L).model;
    }

    std::string label() const { return from_file() ? file : family; }
};

void add_model_source(CLI::App* cmd, ModelSource& src) {
    cmd->add_option("--family", src.family, "code family (XZZX, DWCC, X3Z3, DSR, CSR, HCSR)");
    cmd->add_option("--L", src.L, "linear size (>= 2)");
    cmd->add_option("--file", src.file, "DETMODEL v1 file");
}

// ---------------------------------------------------------------------------

int run_stats(const std::string& families_arg, const std::string& sizes_arg,
              const std::string& format, const std::string& out_path) {
    const auto rows = table1(parse_families_arg(families_arg), parse_sizes_arg(sizes_arg));
    std::ostringstream os;
    if (format == "json") {
        json arr = json::array();
        for (const Table1Row& r : rows) {
            arr.push_back({{"family", family_name(r.family)},
                           {"L", r.L},
                           {"m", r.stats.m},
                           {"min_dets", r.stats.min_dets},
                           {"max_dets", r.stats.max_dets},
                           {"off_block", r.stats.off_block},
                           {"non_local", r.stats.non_local},
                           {"n_det", r.stats.n_det},
                           {"n_fault", r.stats.n_fault}});
        }
        os << arr.dump(2) << "\n";
    } else {
        os << "family,L,m,min_dets,max_dets,off_block,non_local,n_det,n_fault\n";
        for (const Table1Row& r : rows) {
            os << family_name(r.family) << ',' << r.L << ',' << r.stats.m << ','
               << r.stats.min_dets << ',' << r.stats.max_dets << ',' << r.stats.off_block << ','
               << r.stats.non_local << ',' << r.stats.n_det << ',' << r.stats.n_fault << "\n";
        }
    }
    emit(os.str(), out_path);
    return 0;
}

int run_check(const ModelSource& src, bool virtual_boundaries, const std::string& format,
              const std::string& out_path) {
    const DetectorModel model = src.load();
    const SymmetryReport rep = check_strip_symmetric(model, virtual_boundaries);

    std::ostringstream os;
    if (format == "json") {
        json j = {{"source", src.label()},
                  {"strip_symmetric", rep.strip_symmetric},
                  {"condition_block_diagonal", rep.condition_block_diagonal},
                  {"condition_one_form", rep.condition_one_form},
                  {"augmented", rep.augmented},
                  {"one_form_per_strip", rep.one_form_per_strip},
                  {"non_local_faults", rep.non_local_faults},
                  {"odd_weight_faults", rep.odd_weight_faults}};
        os << j.dump(2) << "\n";
    } else {
        os << "key,value\n";
        os << "strip_symmetric," << bool_str(rep.strip_symmetric) << "\n";
        os << "condition_block_diagonal," << bool_str(rep.condition_block_diagonal) << "\n";
        os << "condition_one_form," << bool_str(rep.condition_one_form) << "\n";
        os << "augmented," << bool_str(rep.augmented) << "\n";
        os << "non_local_faults," << join_ints(rep.non_local_faults) << "\n";
        os << "odd_weight_faults," << join_ints(rep.odd_weight_faults) << "\n";
        for (size_t s = 0; s < rep.one_form_per_strip.size(); ++s) {
            os << "one_form_strip_" << s << ','
               << bool_str(rep.one_form_per_strip[s]) << "\n";
        }
    }
    emit(os.str(), out_path);
    return rep.strip_symmetric ? 0 : 1;
}

int run_decode(const ModelSource& src, const std::string& syndrome_arg,
               const std::string& decoder, double p, const std::string& format,
               const std::string& out_path) {
    const NoiseModel noise = [&] {
        try {
            return NoiseModel(p);
        } catch (const std::exception& e) {
            throw UsageError(e.what());
        }
    }();

    src.validate();
    BitVector s;
    try {
        s = BitVector::from_string(syndrome_arg);
    } catch (const std::exception&) {
        throw UsageError("--syndrome must be a string of 0s and 1s");
    }

    DecodeResult r;
    try {
        if (src.from_file()) {
            const DetectorModel model = src.load();
            if (s.size() != model.n_det()) {
                throw UsageError("syndrome length does not match the detector count");
            }
            r = decoder == "monolithic" ? decode_monolithic(model, s, noise)
                                        : decode_stripwise(model, s, noise);
        } else {
            const FamilyModel fm = build(src.family_id(), src.L);
            if (s.size() != fm.model.n_det()) {
                throw UsageError("syndrome length does not match the detector count");
            }
            r = decoder == "monolithic" ? decode_monolithic(fm, s, noise)
                                        : decode_stripwise(fm, s, noise);
        }
    } catch (const UsageError&) {
        throw;
    } catch (const std::runtime_error& e) {
        std::cerr << "decode failed: " << e.what() << "\n";
        return 1;
    }

    std::ostringstream os;
    if (format == "json") {
        json j = {{"source", src.label()},
                  {"decoder", decoder},
                  {"correction", r.correction.str()},
                  {"weight", r.weight},
                  {"per_strip_weights", r.per_strip_weights},
                  {"logical_parities", r.logical_parities}};
        os << j.dump(2) << "\n";
    } else {
        os << "key,value\n";
        os << "correction," << r.correction.str() << "\n";
        os << "weight," << r.weight << "\n";
        os << "per_strip_weights," << join_ints(r.per_strip_weights) << "\n";
        os << "logical_parities," << join_ints(r.logical_parities) << "\n";
    }
    emit(os.str(), out_path);
    return 0;
}

int run_simulate(const std::string& family_arg, uint32_t L, const std::string& probs_arg,
                 uint64_t shots, uint64_t seed, const std::string& decoder,
                 const std::string& format, const std::string& out_path) {
    SimConfig cfg;
    const auto id = parse_family(family_arg);
    if (!id) throw UsageError("unknown family: " + family_arg);
    cfg.family = *id;
    cfg.L = L;
    cfg.p_values = parse_probs_arg(probs_arg);
    cfg.shots = shots;
    cfg.seed = seed;
    cfg.decoder = decoder == "monolithic" ? DecoderMode::Monolithic : DecoderMode::Stripwise;
    for (double p : cfg.p_values) {
        if (!(p >= 0.0 && p < 0.5)) throw UsageError("every p must lie in [0, 0.5)");
    }
    if (cfg.shots < 1) throw UsageError("--shots must be at least 1");
    if (L < 2) throw UsageError("L must be at least 2");

    const auto points = run_sim(cfg);
    std::ostringstream os;
    if (format == "json") {
        json arr = json::array();
        for (const SimPoint& pt : points) {
            arr.push_back({{"family", family_arg},
                           {"L", L},
                           {"p", pt.p},
                           {"shots", pt.shots},
                           {"failures", pt.failures},
                           {"estimate", pt.estimate},
                           {"stderr", pt.std_error},
                           {"analytic", pt.analytic}});
        }
        os << arr.dump(2) << "\n";
    } else {
        os << "family,L,p,shots,failures,estimate,stderr,analytic\n";
        for (const SimPoint& pt : points) {
            os << family_arg << ',' << L << ',' << fmt_double(pt.p) << ',' << pt.shots << ','
               << pt.failures << ',' << fmt_double(pt.estimate) << ','
               << fmt_double(pt.std_error) << ',' << fmt_double(pt.analytic) << "\n";
        }
    }
    emit(os.str(), out_path);
    return 0;
}

int run_bench(const ModelSource& src, double alpha, uint32_t repeats, const std::string& format,
              const std::string& out_path) {
    const DetectorModel model = src.load();
    const BenchReport rep = [&] {
        try {
            return bench(model, alpha, repeats);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }();

    const std::string family = src.from_file() ? "file" : src.family;
    const uint32_t L = src.from_file() ? 0 : src.L;
    std::ostringstream os;
    if (format == "json") {
        json j = {{"family", family},
                  {"L", L},
                  {"alpha", rep.alpha},
                  {"N", rep.n_total},
                  {"m", rep.m},
                  {"n_per_strip", rep.n_per_strip},
                  {"mono_work", rep.mono_work},
                  {"strip_work", rep.strip_work},
                  {"ratio", rep.measured_ratio},
                  {"predicted_balanced", rep.predicted_balanced_speedup}};
        if (rep.wall_mono_seconds) {
            j["wall_mono_seconds"] = *rep.wall_mono_seconds;
            j["wall_strip_seconds"] = *rep.wall_strip_seconds;
            j["repeats"] = repeats;
        }
        os << j.dump(2) << "\n";
    } else {
        os << "family,L,alpha,N,m,mono_work,strip_work,ratio,predicted_balanced\n";
        os << family << ',' << L << ',' << fmt_double(rep.alpha) << ',' << rep.n_total << ','
           << rep.m << ',' << fmt_double(rep.mono_work) << ',' << fmt_double(rep.strip_work)
           << ',' << fmt_double(rep.measured_ratio) << ','
           << fmt_double(rep.predicted_balanced_speedup) << "\n";
    }
    emit(os.str(), out_path);
    return 0;
}

std::vector<uint32_t> parse_strip_list(const std::string& arg, const char* what) {
    std::vector<uint32_t> out;
    for (const std::string& tok : split(arg, ',')) {
        try {
            size_t pos = 0;
            const unsigned long v = std::stoul(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument(tok);
            out.push_back(static_cast<uint32_t>(v));
        } catch (const std::exception&) {
            throw UsageError(std::string("bad ") + what + ": " + tok);
        }
    }
    return out;
}

// One Pauli string per line, letters I/X/Y/Z; '#' comments and blanks skipped.
std::vector<PauliString> read_pauli_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open Pauli file: " + path);
    std::vector<PauliString> out;
    std::string line;
    while (std::getline(in, line)) {
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        while (!line.empty() && (line.back() == ' ' || line.back() == '\r' || line.back() == '\t')) {
            line.pop_back();
        }
        if (line.empty()) continue;
        try {
            out.push_back(PauliString::from_string(line));
        } catch (const std::exception&) {
            throw UsageError("bad Pauli line: " + line);
        }
    }
    return out;
}

int run_deform(const std::string& family_arg, uint32_t L, const std::string& cliffords_arg,
               const std::string& basis, const std::string& detectors_file,
               const std::string& det_strips_arg, const std::string& qubit_strips_arg,
               const std::string& format, const std::string& out_path) {
    std::vector<Clifford> cycle;
    for (const std::string& name : split(cliffords_arg, ',')) {
        try {
            cycle.push_back(parse_clifford(name));
        } catch (const std::exception&) {
            throw UsageError("bad Clifford (use I, H, HS): " + name);
        }
    }

    DomainAssignment assignment;
    std::vector<PauliString> detectors;
    std::vector<uint32_t> det_strips;
    std::string source_label;

    if (!detectors_file.empty()) {
        if (!family_arg.empty()) throw UsageError("give either --family or --detectors-file");
        if (det_strips_arg.empty() || qubit_strips_arg.empty()) {
            throw UsageError("--detectors-file needs --det-strips and --qubit-strips");
        }
        detectors = read_pauli_file(detectors_file);
        det_strips = parse_strip_list(det_strips_arg, "detector strip");
        assignment.strip_of_qubit = parse_strip_list(qubit_strips_arg, "qubit strip");
        if (det_strips.size() != detectors.size()) {
            throw UsageError("--det-strips length does not match the detector count");
        }
        if (!detectors.empty() && assignment.strip_of_qubit.size() != detectors[0].n_qubits()) {
            throw UsageError("--qubit-strips length does not match the qubit count");
        }
        uint32_t n_strips = 0;
        for (uint32_t s : assignment.strip_of_qubit) n_strips = std::max(n_strips, s + 1);
        for (uint32_t s : det_strips) n_strips = std::max(n_strips, s + 1);
        for (uint32_t s = 0; s < n_strips; ++s) {
            assignment.clifford_of_strip.push_back(cycle[s % cycle.size()]);
        }
        source_label = detectors_file;
    } else {
        if (family_arg.empty()) {
            throw UsageError("a parent is required: --family with --L, or --detectors-file");
        }
        const auto id = parse_family(family_arg);
        if (!id) throw UsageError("unknown family: " + family_arg);
        if (L < 2) throw UsageError("L must be at least 2");
        if (basis != "X" && basis != "Z") throw UsageError("--basis must be X or Z");
        assignment.strip_of_qubit = family_qubit_strips(*id, L);
        const uint32_t n_strips = family_strip_count(*id, L);
        for (uint32_t s = 0; s < n_strips; ++s) {
            assignment.clifford_of_strip.push_back(cycle[s % cycle.size()]);
        }
        family_chain_detectors(*id, L, basis[0], detectors, det_strips);
        source_label = family_arg;
    }

    DeformReport rep;
    try {
        rep = deform_and_check(detectors, det_strips, assignment);
    } catch (const std::invalid_argument& e) {
        std::cerr << "deform check failed: " << e.what() << "\n";
        return 1;
    }

    std::ostringstream os;
    if (format == "json") {
        std::vector<std::string> axes;
        for (char a : rep.parent_axis_per_strip) axes.emplace_back(1, a);
        std::vector<std::string> cliffs;
        for (Clifford c : assignment.clifford_of_strip) cliffs.push_back(clifford_name(c));
        json j = {{"source", source_label},
                  {"basis", basis},
                  {"cliffords", cliffs},
                  {"parent_axes", axes},
                  {"parent_strip_symmetric", rep.parent.strip_symmetric},
                  {"incidence_equal", rep.incidence_equal},
                  {"deformed_strip_symmetric", rep.deformed.strip_symmetric},
                  {"ok", rep.ok}};
        os << j.dump(2) << "\n";
    } else {
        os << "key,value\n";
        os << "parent_strip_symmetric," << bool_str(rep.parent.strip_symmetric) << "\n";
        os << "incidence_equal," << bool_str(rep.incidence_equal) << "\n";
        os << "deformed_strip_symmetric," << bool_str(rep.deformed.strip_symmetric) << "\n";
        os << "ok," << bool_str(rep.ok) << "\n";
    }
    emit(os.str(), out_path);
    return rep.ok ? 0 : 1;
}

int run_export(const std::string& family_arg, uint32_t L, const std::string& format,
               const std::string& out_path) {
    const auto id = parse_family(family_arg);
    if (!id) throw UsageError("unknown family: " + family_arg);
    if (L < 2) throw UsageError("L must be at least 2");
    const FamilyModel fm = build(*id, L);

    std::ostringstream os;
    if (format == "json") {
        json faults = json::array();
        for (uint32_t f = 0; f < fm.model.n_fault(); ++f) faults.push_back(fm.model.support(f));
        json j = {{"family", family_arg},
                  {"L", L},
                  {"n_det", fm.model.n_det()},
                  {"n_fault", fm.model.n_fault()},
                  {"strip_of_detector", fm.model.detector_strips()},
                  {"fault_supports", faults},
                  {"logical_strips", fm.logical_strips},
                  {"logical_faults", fm.logical_faults}};
        os << j.dump(2) << "\n";
    } else {
        write_detmodel(os, fm.model, {"family=" + family_arg + " L=" + std::to_string(L)});
    }
    emit(os.str(), out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"strip-partitioned Z-detector models: construction, symmetry checks, exact ML "
                 "decoding, simulation, and work-ratio benchmarks"};
    app.require_subcommand(1);

    int exit_code = 0;

    // stats
    auto* stats_cmd = app.add_subcommand("stats", "strip statistics per family and size");
    auto stats_families = std::make_shared<std::string>("all");
    auto stats_sizes = std::make_shared<std::string>("3,4,5");
    auto stats_format = std::make_shared<std::string>("csv");
    auto stats_out = std::make_shared<std::string>();
    stats_cmd->add_option("--families", *stats_families, "comma list of families, or 'all'");
    stats_cmd->add_option("--L", *stats_sizes, "comma list of sizes");
    stats_cmd->add_option("--format", *stats_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    stats_cmd->add_option("--out", *stats_out, "output path (default stdout)");
    stats_cmd->callback([=, &exit_code] {
        exit_code = run_stats(*stats_families, *stats_sizes, *stats_format, *stats_out);
    });

    // check
    auto* check_cmd = app.add_subcommand("check", "verify strip symmetry of a model");
    auto check_src = std::make_shared<ModelSource>();
    auto check_virtual = std::make_shared<bool>(false);
    auto check_format = std::make_shared<std::string>("csv");
    auto check_out = std::make_shared<std::string>();
    add_model_source(check_cmd, *check_src);
    check_cmd->add_flag("--virtual-boundaries", *check_virtual,
                        "augment weight-1 boundary faults with virtual detectors");
    check_cmd->add_option("--format", *check_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    check_cmd->add_option("--out", *check_out, "output path (default stdout)");
    check_cmd->callback([=, &exit_code] {
        exit_code = run_check(*check_src, *check_virtual, *check_format, *check_out);
    });

    // decode
    auto* decode_cmd = app.add_subcommand("decode", "decode one syndrome");
    auto decode_src = std::make_shared<ModelSource>();
    auto decode_syndrome = std::make_shared<std::string>();
    auto decode_decoder = std::make_shared<std::string>("stripwise");
    auto decode_p = std::make_shared<double>(0.1);
    auto decode_format = std::make_shared<std::string>("csv");
    auto decode_out = std::make_shared<std::string>();
    add_model_source(decode_cmd, *decode_src);
    decode_cmd->add_option("--syndrome", *decode_syndrome, "detector outcomes as 0/1 string")
        ->required();
    decode_cmd->add_option("--decoder", *decode_decoder, "monolithic or stripwise")
        ->check(CLI::IsMember({"monolithic", "stripwise"}));
    decode_cmd->add_option("--p", *decode_p, "per-fault flip probability in [0, 0.5)");
    decode_cmd->add_option("--format", *decode_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    decode_cmd->add_option("--out", *decode_out, "output path (default stdout)");
    decode_cmd->callback([=, &exit_code] {
        exit_code = run_decode(*decode_src, *decode_syndrome, *decode_decoder, *decode_p,
                               *decode_format, *decode_out);
    });

    // simulate
    auto* sim_cmd = app.add_subcommand("simulate", "Monte-Carlo logical error rate");
    auto sim_family = std::make_shared<std::string>();
    auto sim_L = std::make_shared<uint32_t>(0);
    auto sim_probs = std::make_shared<std::string>();
    auto sim_shots = std::make_shared<uint64_t>(100000);
    auto sim_seed = std::make_shared<uint64_t>(0);
    auto sim_decoder = std::make_shared<std::string>("stripwise");
    auto sim_format = std::make_shared<std::string>("csv");
    auto sim_out = std::make_shared<std::string>();
    sim_cmd->add_option("--family", *sim_family, "code family")->required();
    sim_cmd->add_option("--L", *sim_L, "linear size")->required();
    sim_cmd->add_option("--p", *sim_probs, "comma list of flip probabilities")->required();
    sim_cmd->add_option("--shots", *sim_shots, "shots per point");
    sim_cmd->add_option("--seed", *sim_seed, "base RNG seed (required for reproducibility)")
        ->required();
    sim_cmd->add_option("--decoder", *sim_decoder, "monolithic or stripwise")
        ->check(CLI::IsMember({"monolithic", "stripwise"}));
    sim_cmd->add_option("--format", *sim_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sim_cmd->add_option("--out", *sim_out, "output path (default stdout)");
    sim_cmd->callback([=, &exit_code] {
        exit_code = run_simulate(*sim_family, *sim_L, *sim_probs, *sim_shots, *sim_seed,
                                 *sim_decoder, *sim_format, *sim_out);
    });

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "strip-wise vs monolithic work ratio");
    auto bench_src = std::make_shared<ModelSource>();
    auto bench_alpha = std::make_shared<double>(2.0);
    auto bench_repeats = std::make_shared<uint32_t>(0);
    auto bench_format = std::make_shared<std::string>("csv");
    auto bench_out = std::make_shared<std::string>();
    add_model_source(bench_cmd, *bench_src);
    bench_cmd->add_option("--alpha", *bench_alpha, "decoder runtime exponent (> 1)");
    bench_cmd->add_option("--repeats", *bench_repeats,
                          "also time a synthetic workload this many times");
    bench_cmd->add_option("--format", *bench_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    bench_cmd->add_option("--out", *bench_out, "output path (default stdout)");
    bench_cmd->callback([=, &exit_code] {
        exit_code = run_bench(*bench_src, *bench_alpha, *bench_repeats, *bench_format, *bench_out);
    });

    // deform
    auto* deform_cmd =
        app.add_subcommand("deform", "domain-wise Clifford deformation consistency check");
    auto deform_family = std::make_shared<std::string>();
    auto deform_L = std::make_shared<uint32_t>(0);
    auto deform_cliffords = std::make_shared<std::string>("H");
    auto deform_basis = std::make_shared<std::string>("X");
    auto deform_dets_file = std::make_shared<std::string>();
    auto deform_det_strips = std::make_shared<std::string>();
    auto deform_qubit_strips = std::make_shared<std::string>();
    auto deform_format = std::make_shared<std::string>("csv");
    auto deform_out = std::make_shared<std::string>();
    deform_cmd->add_option("--family", *deform_family, "code family for the strip layout");
    deform_cmd->add_option("--L", *deform_L, "linear size");
    deform_cmd->add_option("--cliffords", *deform_cliffords,
                           "comma list of I/H/HS, cycled across strips");
    deform_cmd->add_option("--basis", *deform_basis, "parent link-detector basis, X or Z");
    deform_cmd->add_option("--detectors-file", *deform_dets_file,
                           "parent detectors, one Pauli string (IXYZ letters) per line");
    deform_cmd->add_option("--det-strips", *deform_det_strips,
                           "comma list: strip of each detector (with --detectors-file)");
    deform_cmd->add_option("--qubit-strips", *deform_qubit_strips,
                           "comma list: strip of each qubit (with --detectors-file)");
    deform_cmd->add_option("--format", *deform_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    deform_cmd->add_option("--out", *deform_out, "output path (default stdout)");
    deform_cmd->callback([=, &exit_code] {
        exit_code = run_deform(*deform_family, *deform_L, *deform_cliffords, *deform_basis,
                               *deform_dets_file, *deform_det_strips, *deform_qubit_strips,
                               *deform_format, *deform_out);
    });

    // export
    auto* export_cmd = app.add_subcommand("export", "write a family model as DETMODEL v1");
    auto export_family = std::make_shared<std::string>();
    auto export_L = std::make_shared<uint32_t>(0);
    auto export_format = std::make_shared<std::string>("detmodel");
    auto export_out = std::make_shared<std::string>();
    export_cmd->add_option("--family", *export_family, "code family")->required();
    export_cmd->add_option("--L", *export_L, "linear size")->required();
    export_cmd->add_option("--format", *export_format, "detmodel or json")
        ->check(CLI::IsMember({"detmodel", "json"}));
    export_cmd->add_option("--out", *export_out, "output path (default stdout)");
    export_cmd->callback([=, &exit_code] {
        exit_code = run_export(*export_family, *export_L, *export_format, *export_out);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
