#include "agol/words.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "agol/errors.hpp"

namespace agol {

ParamWord ParamWord::parse(const std::string& text) {
    ParamWord w;
    std::string stripped;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) stripped += ch;
    }
    if (stripped.empty()) throw ParseError("empty word");
    std::stringstream blocks_in(stripped);
    std::string block_text;
    while (std::getline(blocks_in, block_text, ';')) {
        std::array<long, 3> block{};
        std::stringstream entries(block_text);
        std::string entry;
        int k = 0;
        while (std::getline(entries, entry, ',')) {
            if (k >= 3) throw ParseError("block \"" + block_text + "\" has more than 3 entries");
            std::size_t used = 0;
            long value;
            try {
                value = std::stol(entry, &used);
            } catch (const std::exception&) {
                throw ParseError("bad integer \"" + entry + "\"");
            }
            if (used != entry.size()) throw ParseError("bad integer \"" + entry + "\"");
            block[k++] = value;
        }
        if (k != 3) throw ParseError("block \"" + block_text + "\" has fewer than 3 entries");
        w.blocks.push_back(block);
    }
    return w;
}

std::string ParamWord::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i) out += ";";
        out += std::to_string(blocks[i][0]) + "," + std::to_string(blocks[i][1]) + "," +
               std::to_string(blocks[i][2]);
    }
    return out;
}

void validate(const ParamWord& w) {
    if (w.blocks.empty()) throw NotInIn("word has no blocks");
    bool some_p = false, some_pp = false;
    for (std::size_t i = 0; i < w.blocks.size(); ++i) {
        const auto& b = w.blocks[i];
        if (b[0] < 0 || b[1] < 0 || b[2] < 0) {
            throw NotInIn("negative entry in block " + std::to_string(i));
        }
        if (b[2] == 0) throw NotInIn("q = 0 in block " + std::to_string(i));
        if (b[0] + b[1] == 0) throw NotInIn("p + p' = 0 in block " + std::to_string(i));
        some_p = some_p || b[0] > 0;
        some_pp = some_pp || b[1] > 0;
    }
    if (!some_p) throw NotInIn("no block has p > 0");
    if (!some_pp) throw NotInIn("no block has p' > 0");
}

bool is_valid(const ParamWord& w) {
    try {
        validate(w);
        return true;
    } catch (const NotInIn&) {
        return false;
    }
}

ParamWord shift(const ParamWord& w) {
    ParamWord out = w;
    if (!out.blocks.empty()) {
        std::rotate(out.blocks.begin(), out.blocks.begin() + 1, out.blocks.end());
    }
    return out;
}

ParamWord flip(const ParamWord& w) {
    ParamWord out = w;
    for (auto& b : out.blocks) std::swap(b[0], b[1]);
    return out;
}

bool is_symmetric(const ParamWord& w) {
    return std::all_of(w.blocks.begin(), w.blocks.end(),
                       [](const std::array<long, 3>& b) { return b[0] == b[1]; });
}

ParamWord canonical_form(const ParamWord& w) {
    ParamWord best = w;
    ParamWord cur = w;
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t k = 0; k < w.blocks.size(); ++k) {
            if (cur.blocks < best.blocks) best = cur;
            cur = shift(cur);
        }
        cur = flip(w);
    }
    return best;
}

bool are_equivalent(const ParamWord& a, const ParamWord& b) {
    return a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

ParamWord concatenate(const ParamWord& a, const ParamWord& b) {
    ParamWord out = a;
    out.blocks.insert(out.blocks.end(), b.blocks.begin(), b.blocks.end());
    return out;
}

}  // namespace agol
