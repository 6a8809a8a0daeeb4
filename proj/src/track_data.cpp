#include "agol/track_data.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <gmpxx.h>
#include <nlohmann/json.hpp>

#include "agol/errors.hpp"

namespace agol {

namespace {

// Mirrors data/tracks.json; kept in sync by a test.
const char* kEmbedded = R"json({
  "version": 1,
  "tracks": {
    "torus": {
      "switches": [
        [[0, 0], [2, 0], [4, 0]],
        [[0, 1], [2, 1], [5, 0]],
        [[1, 0], [3, 0], [5, 1]],
        [[1, 1], [3, 1], [4, 1]]
      ],
      "branches": 6,
      "marked": [2, 4, 3]
    },
    "sphere": {
      "switches": [
        [[2, 0], [0, 1], [5, 1]],
        [[5, 0], [6, 0], [1, 0]],
        [[8, 0], [0, 0], [7, 0]],
        [[3, 0], [4, 1], [1, 1]],
        [[2, 1], [4, 0], [7, 1]],
        [[3, 1], [6, 1], [8, 1]]
      ],
      "branches": 9,
      "marked": [0, 1, 6]
    },
    "sphere_block": {
      "switches": [
        [[0, 1], [2, 0], [7, 1]],
        [[5, 0], [6, 0], [1, 0]],
        [[8, 0], [0, 0], [7, 0]],
        [[8, 1], [2, 1], [4, 1]],
        [[5, 1], [3, 0], [4, 0]],
        [[6, 1], [3, 1], [1, 1]]
      ],
      "branches": 9,
      "marked": [2, 1, 3]
    },
    "sphere_exit": {
      "switches": [
        [[0, 1], [2, 0], [7, 1]],
        [[1, 0], [3, 0], [5, 0]],
        [[7, 0], [2, 1], [8, 0]],
        [[0, 0], [4, 1], [5, 1]],
        [[6, 0], [4, 0], [8, 1]],
        [[6, 1], [3, 1], [1, 1]]
      ],
      "branches": 9,
      "marked": [0, 1, 3]
    },
    "sphere_onesided": {
      "switches": [
        [[4, 0], [5, 1], [1, 0]],
        [[6, 0], [5, 0], [2, 0]],
        [[8, 0], [0, 0], [7, 0]],
        [[4, 1], [3, 0], [8, 1]],
        [[7, 1], [0, 1], [2, 1]],
        [[6, 1], [3, 1], [1, 1]]
      ],
      "branches": 9,
      "marked": [0, 1, 3]
    }
  }
})json";

nlohmann::json active_data() {
    const char* path = std::getenv("AGOL_TRACKS");
    std::string text;
    if (path != nullptr && *path != '\0') {
        std::ifstream in(path);
        if (!in) throw EncodingError(std::string("cannot open AGOL_TRACKS file ") + path);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    } else {
        text = kEmbedded;
    }
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) throw EncodingError("track data is not valid JSON");
    if (!j.is_object() || j.value("version", 0) != 1 || !j.contains("tracks") || !j["tracks"].is_object())
        throw EncodingError("track data must be a version-1 object with a tracks map");
    return j;
}

TrackEncoding parse_encoding(const nlohmann::json& spec) {
    if (!spec.is_object() || !spec.contains("switches") || !spec.contains("branches") ||
        !spec.contains("marked"))
        throw EncodingError("track entry needs switches, branches, marked");
    TrackEncoding enc;
    enc.branches = spec["branches"].get<int>();
    if (enc.branches <= 0) throw EncodingError("branch count must be positive");
    for (const auto& sw : spec["switches"]) {
        if (!sw.is_array() || sw.size() != 3) throw EncodingError("switch needs three slots");
        std::array<std::pair<int, int>, 3> slots;
        for (int i = 0; i < 3; ++i) {
            const auto& ref = sw[i];
            if (!ref.is_array() || ref.size() != 2) throw EncodingError("slot needs [branch, end]");
            int b = ref[0].get<int>(), e = ref[1].get<int>();
            if (b < 0 || b >= enc.branches || (e != 0 && e != 1))
                throw EncodingError("slot reference out of range");
            slots[i] = {b, e};
        }
        enc.switches.push_back(slots);
    }
    const auto& marked = spec["marked"];
    if (!marked.is_array() || marked.size() != 3) throw EncodingError("marked needs three branches");
    for (int i = 0; i < 3; ++i) {
        enc.marked[i] = marked[i].get<int>();
        if (enc.marked[i] < 0 || enc.marked[i] >= enc.branches)
            throw EncodingError("marked branch out of range");
    }
    if (enc.marked[0] == enc.marked[1] || enc.marked[0] == enc.marked[2] ||
        enc.marked[1] == enc.marked[2])
        throw EncodingError("marked branches must be distinct");
    return enc;
}

}  // namespace

// Each weight as rational coefficients (alpha, beta, gamma) of (x, y, z),
// solved from the switch conditions and the three marked constraints.
std::vector<std::array<mpq_class, 3>> weight_coefficients(const TrackEncoding& enc) {
    int cols = enc.branches;
    std::vector<std::vector<mpq_class>> rows;  // each row: cols coefficients + 3 rhs
    auto blank = [&] { return std::vector<mpq_class>(cols + 3, mpq_class(0)); };
    for (const auto& sw : enc.switches) {
        auto row = blank();
        row[sw[0].first] += 1;
        row[sw[1].first] -= 1;
        row[sw[2].first] -= 1;
        rows.push_back(std::move(row));
    }
    for (int i = 0; i < 3; ++i) {
        auto row = blank();
        row[enc.marked[i]] = 1;
        row[cols + i] = 1;
        rows.push_back(std::move(row));
    }

    int rank = 0;
    std::vector<int> pivot_of_col(cols, -1);
    for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
        int p = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (rows[r][c] != 0) {
                p = r;
                break;
            }
        if (p == -1) continue;
        std::swap(rows[rank], rows[p]);
        mpq_class lead = rows[rank][c];
        for (auto& v : rows[rank]) v /= lead;
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == rank || rows[r][c] == 0) continue;
            mpq_class f = rows[r][c];
            for (int k = 0; k < cols + 3; ++k) rows[r][k] -= f * rows[rank][k];
        }
        pivot_of_col[c] = rank;
        ++rank;
    }
    if (rank < cols) throw EncodingError("switch conditions do not determine the weights");
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
        for (int k = cols; k < cols + 3; ++k)
            if (rows[r][k] != 0) throw EncodingError("switch conditions are inconsistent");

    std::vector<std::array<mpq_class, 3>> coeff(cols);
    for (int c = 0; c < cols; ++c)
        for (int k = 0; k < 3; ++k) coeff[c][k] = rows[pivot_of_col[c]][cols + k];
    return coeff;
}

std::vector<std::string> available_tracks() {
    std::vector<std::string> out;
    for (const auto& [key, value] : active_data()["tracks"].items()) out.push_back(key);
    return out;
}

TrackEncoding load_encoding(const std::string& label) {
    nlohmann::json j = active_data();
    if (!j["tracks"].contains(label)) throw EncodingError("unknown track label " + label);
    return parse_encoding(j["tracks"][label]);
}

RibbonTrack build_track(const TrackEncoding& enc, const QuadVec3& xyz) {
    auto coeff = weight_coefficients(enc);
    RibbonTrack t;
    t.weights.resize(enc.branches);
    for (int b = 0; b < enc.branches; ++b) {
        QuadExt w(0);
        for (int k = 0; k < 3; ++k) {
            if (coeff[b][k] == 0) continue;
            QuadExt factor(coeff[b][k].get_num(), 0, coeff[b][k].get_den(), 0);
            w = w + factor * xyz[k];
        }
        if (w.sign() <= 0) throw NonPositiveWeight("solved weight of branch " + std::to_string(b));
        t.weights[b] = w;
    }
    for (const auto& sw : enc.switches)
        t.switches.push_back({2 * sw[0].first + sw[0].second, 2 * sw[1].first + sw[1].second,
                              2 * sw[2].first + sw[2].second});
    check_track(t);
    return t;
}

std::string embedded_data() { return kEmbedded; }

std::string default_data_file() {
#ifdef AGOL_DATA_FILE
    return AGOL_DATA_FILE;
#else
    return "data/tracks.json";
#endif
}

RibbonTrack build_start_track(Surface surface, const QuadVec3& weights) {
    std::string label = surface == Surface::Torus ? "torus" : "sphere";
    TrackEncoding enc = load_encoding(label);
    auto coeff = weight_coefficients(enc);
    for (const auto& row : coeff)
        for (const auto& q : row)
            if (q < 0 || q.get_den() != 1)
                throw EncodingError(label + " weights are not nonnegative integer combinations");
    return build_track(enc, weights);
}

}  // namespace agol
