#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace witcount {

inline constexpr int kDefaultMaxDimension = 24;
// Upper limit for --max-d overrides; indices are 64-bit and tables are 2^d long.
inline constexpr int kHardMaxDimension = 40;

// A vector of F_2^d stored as its index: bit j is coordinate j, and
// addition is XOR.
struct GF2Vector {
    std::uint64_t index = 0;

    friend constexpr GF2Vector operator+(GF2Vector a, GF2Vector b) { return {a.index ^ b.index}; }
    friend constexpr auto operator<=>(GF2Vector, GF2Vector) = default;
};

// Inner product over F_2: parity of the shared one-bits.
inline int dot(GF2Vector a, GF2Vector b) { return __builtin_parityll(a.index & b.index); }

// Bitstring of length d, most significant coordinate first.
std::string to_bitstring(GF2Vector v, int d);
GF2Vector from_bitstring(std::string_view bits);

struct Instance {
    int d = 0;
    std::vector<GF2Vector> vectors;
    GF2Vector target;
    int k = 0;

    std::size_t m() const { return vectors.size(); }
    friend bool operator==(const Instance&, const Instance&) = default;
};

struct ParseOptions {
    bool dedupe = false;
    int max_d = kDefaultMaxDimension;
};

// Throws CapacityError, ContractError or DuplicateVectorError.
void validate(const Instance& inst, int max_d = kDefaultMaxDimension);

// Parses the instance file format:
//   d=<int> k=<int>
//   t=<bitstring>
//   <bitstring>[,<bitstring>...]   one or more lines
// Lines starting with '#' and blank lines are ignored. Vector order is kept.
Instance parse_instance(std::string_view text, const ParseOptions& opts = {});

// Inverse of parse_instance: one vector per line.
std::string format_instance(const Instance& inst);

// Characteristic function of V as a 0/1 table of length 2^d.
struct CharTable {
    int d = 0;
    std::vector<std::uint8_t> values;

    std::size_t size() const { return values.size(); }
};

CharTable build_char_table(const Instance& inst);

}  // namespace witcount
