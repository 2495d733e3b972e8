#include "stripsym/detector_model.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace stripsym {

DetectorModel::DetectorModel(uint32_t n_det,
                             std::vector<std::vector<uint32_t>> fault_supports,
                             std::vector<uint32_t> strip_of_detector,
                             uint32_t n_strips)
    : n_det_(n_det),
      supports_(std::move(fault_supports)),
      strip_of_det_(std::move(strip_of_detector)) {
    if (strip_of_det_.size() != n_det_) {
        throw std::invalid_argument("DetectorModel: strip map size does not match detector count");
    }
    uint32_t max_strip = 0;
    for (uint32_t s : strip_of_det_) max_strip = std::max(max_strip, s + 1);
    n_strips_ = n_strips ? n_strips : max_strip;
    if (n_strips_ < max_strip) {
        throw std::invalid_argument("DetectorModel: declared strip count below referenced indices");
    }
    for (auto& sup : supports_) {
        std::sort(sup.begin(), sup.end());
        if (std::adjacent_find(sup.begin(), sup.end()) != sup.end()) {
            throw std::invalid_argument("DetectorModel: duplicate detector in fault support");
        }
        if (!sup.empty() && sup.back() >= n_det_) {
            throw std::invalid_argument("DetectorModel: detector index out of range in fault support");
        }
    }
    dets_of_strip_.resize(n_strips_);
    for (uint32_t d = 0; d < n_det_; ++d) dets_of_strip_[strip_of_det_[d]].push_back(d);
}

const std::vector<uint32_t>& DetectorModel::support(uint32_t fault) const {
    if (fault >= supports_.size()) throw std::out_of_range("DetectorModel: fault index out of range");
    return supports_[fault];
}

uint32_t DetectorModel::strip_of_detector(uint32_t det) const {
    if (det >= n_det_) throw std::out_of_range("DetectorModel: detector index out of range");
    return strip_of_det_[det];
}

const std::vector<uint32_t>& DetectorModel::detectors_of_strip(uint32_t strip) const {
    if (strip >= n_strips_) throw std::out_of_range("DetectorModel: strip index out of range");
    return dets_of_strip_[strip];
}

BitMatrix incidence_matrix(const DetectorModel& model) {
    BitMatrix h(model.n_det(), model.n_fault());
    for (uint32_t f = 0; f < model.n_fault(); ++f) {
        for (uint32_t d : model.support(f)) h.set(d, f, true);
    }
    return h;
}

FaultClass fault_strip(const DetectorModel& model, uint32_t fault) {
    const auto& sup = model.support(fault);
    if (sup.empty()) return {FaultClass::kOrphan, 0};
    const uint32_t strip = model.strip_of_detector(sup[0]);
    for (uint32_t d : sup) {
        if (model.strip_of_detector(d) != strip) return {FaultClass::kNonLocal, 0};
    }
    return {FaultClass::kStrip, strip};
}

StripStats strip_stats(const DetectorModel& model) {
    StripStats st;
    st.n_det = model.n_det();
    st.n_fault = model.n_fault();

    bool first = true;
    for (uint32_t s = 0; s < model.n_strips(); ++s) {
        const uint32_t n = static_cast<uint32_t>(model.detectors_of_strip(s).size());
        if (n == 0) continue;
        ++st.m;
        if (first) {
            st.min_dets = st.max_dets = n;
            first = false;
        } else {
            st.min_dets = std::min(st.min_dets, n);
            st.max_dets = std::max(st.max_dets, n);
        }
    }

    for (uint32_t f = 0; f < model.n_fault(); ++f) {
        const auto& sup = model.support(f);
        if (sup.empty()) continue;
        // Canonical assignment: strip of the lowest-indexed flipped detector.
        const uint32_t home = model.strip_of_detector(sup[0]);
        bool local = true;
        for (uint32_t d : sup) {
            if (model.strip_of_detector(d) != home) {
                ++st.off_block;
                local = false;
            }
        }
        if (!local) ++st.non_local;
    }
    return st;
}

BlockDecomposition block_decompose(const DetectorModel& model) {
    const uint32_t n_strips = model.n_strips();

    std::vector<std::vector<uint32_t>> faults_of_strip(n_strips);
    BlockDecomposition out;
    for (uint32_t f = 0; f < model.n_fault(); ++f) {
        const FaultClass fc = fault_strip(model, f);
        switch (fc.kind) {
            case FaultClass::kOrphan:
                out.orphan_faults.push_back(f);
                break;
            case FaultClass::kStrip:
                faults_of_strip[fc.strip].push_back(f);
                break;
            case FaultClass::kNonLocal:
                throw std::invalid_argument("block_decompose: fault " + std::to_string(f) +
                                            " is non-local (spans multiple strips)");
        }
    }

    std::vector<uint32_t> det_pos(model.n_det());
    for (uint32_t s = 0; s < n_strips; ++s) {
        const auto& dets = model.detectors_of_strip(s);
        for (uint32_t i = 0; i < dets.size(); ++i) det_pos[dets[i]] = i;
        out.row_perm.insert(out.row_perm.end(), dets.begin(), dets.end());
        out.col_perm.insert(out.col_perm.end(), faults_of_strip[s].begin(), faults_of_strip[s].end());
        if (dets.empty()) continue;

        Block b;
        b.strip = s;
        b.det_ids = dets;
        b.fault_ids = faults_of_strip[s];
        b.h = BitMatrix(static_cast<uint32_t>(dets.size()),
                        static_cast<uint32_t>(b.fault_ids.size()));
        for (uint32_t c = 0; c < b.fault_ids.size(); ++c) {
            for (uint32_t d : model.support(b.fault_ids[c])) b.h.set(det_pos[d], c, true);
        }
        out.blocks.push_back(std::move(b));
    }
    out.col_perm.insert(out.col_perm.end(), out.orphan_faults.begin(), out.orphan_faults.end());
    return out;
}

BitMatrix assemble_blocks(const BlockDecomposition& decomp, uint32_t n_det, uint32_t n_fault) {
    BitMatrix h(n_det, n_fault);
    uint32_t row_off = 0;
    uint32_t col_off = 0;
    for (const Block& b : decomp.blocks) {
        for (uint32_t r = 0; r < b.h.rows(); ++r) {
            for (uint32_t c = 0; c < b.h.cols(); ++c) {
                if (b.h.get(r, c)) h.set(row_off + r, col_off + c, true);
            }
        }
        row_off += b.h.rows();
        col_off += b.h.cols();
    }
    return h;
}

std::vector<bool> check_one_form(const DetectorModel& model) {
    std::vector<bool> ok(model.n_strips(), true);
    std::vector<uint8_t> parity(model.n_strips(), 0);
    for (uint32_t f = 0; f < model.n_fault(); ++f) {
        const auto& sup = model.support(f);
        for (uint32_t d : sup) parity[model.strip_of_detector(d)] ^= 1;
        for (uint32_t d : sup) {
            const uint32_t s = model.strip_of_detector(d);
            if (parity[s]) ok[s] = false;
            parity[s] = 0;
        }
    }
    return ok;
}

DetectorModel augment_virtual_boundaries(const DetectorModel& model) {
    std::vector<std::vector<uint32_t>> weight1_of_strip(model.n_strips());
    for (uint32_t f = 0; f < model.n_fault(); ++f) {
        const FaultClass fc = fault_strip(model, f);
        if (fc.kind == FaultClass::kNonLocal) {
            throw std::invalid_argument("augment_virtual_boundaries: fault " + std::to_string(f) +
                                        " is non-local");
        }
        if (fc.kind == FaultClass::kStrip && model.support(f).size() == 1) {
            weight1_of_strip[fc.strip].push_back(f);
        }
    }

    std::vector<std::vector<uint32_t>> supports;
    supports.reserve(model.n_fault());
    for (uint32_t f = 0; f < model.n_fault(); ++f) supports.push_back(model.support(f));
    std::vector<uint32_t> strips = model.detector_strips();

    uint32_t next_det = model.n_det();
    for (uint32_t s = 0; s < model.n_strips(); ++s) {
        if (weight1_of_strip[s].empty()) continue;
        const uint32_t virt = next_det++;
        strips.push_back(s);
        for (uint32_t f : weight1_of_strip[s]) supports[f].push_back(virt);
    }

    DetectorModel out(next_det, std::move(supports), std::move(strips), model.n_strips());
    if (!model.det_labels.empty()) {
        out.det_labels = model.det_labels;
        for (uint32_t d = model.n_det(); d < next_det; ++d) {
            out.det_labels.push_back("virtual:" + std::to_string(out.strip_of_detector(d)));
        }
    }
    out.fault_labels = model.fault_labels;
    return out;
}

SymmetryReport check_strip_symmetric(const DetectorModel& model, bool use_virtual_boundaries) {
    SymmetryReport rep;

    bool has_non_local = false;
    for (uint32_t f = 0; f < model.n_fault(); ++f) {
        if (fault_strip(model, f).kind == FaultClass::kNonLocal) {
            has_non_local = true;
            break;
        }
    }

    DetectorModel augmented_model(0, {}, {});
    const DetectorModel* m = &model;
    if (use_virtual_boundaries && !has_non_local) {
        augmented_model = augment_virtual_boundaries(model);
        m = &augmented_model;
        rep.augmented = true;
    }

    // Route 2: left-kernel strip indicators plus the 0-or-2 column rule.
    rep.one_form_per_strip = check_one_form(*m);
    bool one_form_all = true;
    for (bool b : rep.one_form_per_strip) one_form_all = one_form_all && b;

    bool pair_creating = true;   // every support size in {0, 2}
    bool common_strip = true;    // nonzero supports confined to one strip
    for (uint32_t f = 0; f < m->n_fault(); ++f) {
        const auto& sup = m->support(f);
        if (sup.size() != 0 && sup.size() != 2) {
            pair_creating = false;
            rep.odd_weight_faults.push_back(f);
        }
        if (sup.empty()) continue;
        const uint32_t s0 = m->strip_of_detector(sup[0]);
        for (uint32_t d : sup) {
            if (m->strip_of_detector(d) != s0) {
                common_strip = false;
                if (rep.non_local_faults.empty() || rep.non_local_faults.back() != f) {
                    rep.non_local_faults.push_back(f);
                }
                break;
            }
        }
    }
    rep.condition_one_form = one_form_all && pair_creating && common_strip;

    // Route 1: classify via fault_strip, then verify the permuted matrix is
    // genuinely block diagonal by reassembling it.
    bool block_diagonal = false;
    if (common_strip) {
        const BlockDecomposition decomp = block_decompose(*m);
        const BitMatrix permuted = permute(incidence_matrix(*m), decomp.row_perm, decomp.col_perm);
        block_diagonal = permuted == assemble_blocks(decomp, m->n_det(), m->n_fault());
    }
    rep.condition_block_diagonal = common_strip && pair_creating && block_diagonal;

    if (rep.condition_block_diagonal != rep.condition_one_form) {
        throw std::logic_error("check_strip_symmetric: equivalent conditions disagree");
    }
    rep.strip_symmetric = rep.condition_block_diagonal;
    return rep;
}

namespace {

// Strips comments and splits the stream into whitespace-separated tokens.
std::vector<std::string> tokenize(std::istream& in) {
    std::vector<std::string> tokens;
    std::string line;
    while (std::getline(in, line)) {
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
    }
    return tokens;
}

uint32_t parse_u32(const std::string& tok, const char* what) {
    try {
        size_t pos = 0;
        const unsigned long v = std::stoul(tok, &pos);
        if (pos != tok.size() || v > 0xFFFFFFFFul) throw std::invalid_argument(tok);
        return static_cast<uint32_t>(v);
    } catch (const std::exception&) {
        throw std::runtime_error(std::string("DETMODEL parse: bad ") + what + " '" + tok + "'");
    }
}

}  // namespace

DetectorModel read_detmodel(std::istream& in) {
    const std::vector<std::string> toks = tokenize(in);
    size_t i = 0;
    auto need = [&](const char* what) -> const std::string& {
        if (i >= toks.size()) throw std::runtime_error(std::string("DETMODEL parse: missing ") + what);
        return toks[i++];
    };

    if (need("header") != "DETMODEL" || need("version") != "v1") {
        throw std::runtime_error("DETMODEL parse: expected 'DETMODEL v1' header");
    }
    if (need("dets keyword") != "dets") throw std::runtime_error("DETMODEL parse: expected 'dets'");
    const uint32_t n_det = parse_u32(need("detector count"), "detector count");
    if (need("faults keyword") != "faults") throw std::runtime_error("DETMODEL parse: expected 'faults'");
    const uint32_t n_fault = parse_u32(need("fault count"), "fault count");

    std::vector<uint32_t> strips(n_det, 0);
    std::vector<bool> strip_seen(n_det, false);
    std::vector<std::vector<uint32_t>> supports(n_fault);
    std::vector<bool> fault_seen(n_fault, false);

    while (i < toks.size()) {
        const std::string kw = toks[i++];
        if (kw == "strip") {
            const uint32_t d = parse_u32(need("detector index"), "detector index");
            const uint32_t s = parse_u32(need("strip index"), "strip index");
            if (d >= n_det) throw std::runtime_error("DETMODEL parse: detector index out of range");
            if (strip_seen[d]) throw std::runtime_error("DETMODEL parse: duplicate strip line");
            strip_seen[d] = true;
            strips[d] = s;
        } else if (kw == "fault") {
            const uint32_t f = parse_u32(need("fault index"), "fault index");
            if (f >= n_fault) throw std::runtime_error("DETMODEL parse: fault index out of range");
            if (fault_seen[f]) throw std::runtime_error("DETMODEL parse: duplicate fault line");
            fault_seen[f] = true;
            while (i < toks.size() && toks[i] != "strip" && toks[i] != "fault") {
                supports[f].push_back(parse_u32(toks[i++], "detector index"));
            }
        } else {
            throw std::runtime_error("DETMODEL parse: unexpected token '" + kw + "'");
        }
    }

    for (uint32_t d = 0; d < n_det; ++d) {
        if (!strip_seen[d]) {
            throw std::runtime_error("DETMODEL parse: missing strip line for detector " +
                                     std::to_string(d));
        }
    }
    for (uint32_t f = 0; f < n_fault; ++f) {
        if (!fault_seen[f]) {
            throw std::runtime_error("DETMODEL parse: missing fault line for fault " +
                                     std::to_string(f));
        }
    }
    return DetectorModel(n_det, std::move(supports), std::move(strips));
}

DetectorModel read_detmodel_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open detector-model file: " + path);
    return read_detmodel(in);
}

void write_detmodel(std::ostream& out,
                    const DetectorModel& model,
                    const std::vector<std::string>& header_comments) {
    out << "DETMODEL v1\n";
    for (const std::string& c : header_comments) out << "# " << c << "\n";
    out << "dets " << model.n_det() << "\n";
    out << "faults " << model.n_fault() << "\n";
    for (uint32_t d = 0; d < model.n_det(); ++d) {
        out << "strip " << d << " " << model.strip_of_detector(d) << "\n";
    }
    for (uint32_t f = 0; f < model.n_fault(); ++f) {
        out << "fault " << f;
        for (uint32_t d : model.support(f)) out << " " << d;
        out << "\n";
    }
}

}  // namespace stripsym
