// Parameter words: sequences of integer triples (p, p', q).
//
// A word with n triples stands for the product of n generator blocks, read
// left to right; blocks[0] is the leftmost block. Admissible words have every
// q positive, every p + p' positive, at least one positive p and at least one
// positive p' somewhere in the word. Two words are equivalent when a cyclic
// rotation of one equals the other or its flip (p and p' swapped in every
// triple).
#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace agol {

struct ParamWord {
    std::vector<std::array<long, 3>> blocks;  // each {p, p', q}

    std::size_t size() const { return blocks.size(); }
    bool operator==(const ParamWord& o) const { return blocks == o.blocks; }

    // "p,p',q;p,p',q;..." with optional whitespace.
    static ParamWord parse(const std::string& text);
    std::string to_string() const;
};

// Throws NotInIn naming the violated condition.
void validate(const ParamWord& w);
bool is_valid(const ParamWord& w);

// Cyclic rotation one block to the left: blocks[i] <- blocks[i+1].
ParamWord shift(const ParamWord& w);
// p and p' swapped in every block.
ParamWord flip(const ParamWord& w);
// Every block has p = p'.
bool is_symmetric(const ParamWord& w);

// Lexicographic minimum over all rotations of w and of flip(w).
ParamWord canonical_form(const ParamWord& w);
bool are_equivalent(const ParamWord& a, const ParamWord& b);

ParamWord concatenate(const ParamWord& a, const ParamWord& b);

}  // namespace agol
