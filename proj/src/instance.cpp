#include "witcount/instance.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <unordered_set>

#include "witcount/errors.hpp"

namespace witcount {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

int parse_int(std::string_view s, std::size_t line, std::string_view key) {
    int value = 0;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, value);
    if (ec != std::errc{} || ptr != end || s.empty())
        throw ParseError(line, "expected an integer for '" + std::string(key) + "', got '" +
                                   std::string(s) + "'");
    return value;
}

GF2Vector parse_bits(std::string_view bits, int d, std::size_t line) {
    if (static_cast<int>(bits.size()) != d)
        throw ParseError(line, "bitstring '" + std::string(bits) + "' has length " +
                                   std::to_string(bits.size()) + ", expected " + std::to_string(d));
    if (bits.find_first_not_of("01") != std::string_view::npos)
        throw ParseError(line, "non-binary digit in '" + std::string(bits) + "'");
    return from_bitstring(bits);
}

}  // namespace

std::string to_bitstring(GF2Vector v, int d) {
    std::string out(static_cast<std::size_t>(d), '0');
    for (int j = 0; j < d; ++j)
        if ((v.index >> j) & 1u) out[static_cast<std::size_t>(d - 1 - j)] = '1';
    return out;
}

GF2Vector from_bitstring(std::string_view bits) {
    std::uint64_t index = 0;
    for (char c : bits) index = (index << 1) | static_cast<std::uint64_t>(c == '1');
    return {index};
}

void validate(const Instance& inst, int max_d) {
    if (max_d > kHardMaxDimension)
        throw CapacityError("dimension cap " + std::to_string(max_d) + " exceeds the hard limit " +
                            std::to_string(kHardMaxDimension));
    if (inst.d < 0) throw ContractError("negative dimension");
    if (inst.d > max_d)
        throw CapacityError("dimension d=" + std::to_string(inst.d) + " exceeds the cap of " +
                            std::to_string(max_d));
    if (inst.k < 0) throw ContractError("negative k");
    const std::uint64_t limit = std::uint64_t{1} << inst.d;
    if (inst.target.index >= limit) throw ContractError("target index out of range");
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(inst.vectors.size());
    for (auto v : inst.vectors) {
        if (v.index >= limit)
            throw ContractError("vector index " + std::to_string(v.index) + " out of range");
        if (!seen.insert(v.index).second)
            throw DuplicateVectorError(0, "duplicate vector " + to_bitstring(v, inst.d));
    }
}

Instance parse_instance(std::string_view text, const ParseOptions& opts) {
    Instance inst;
    bool have_header = false, have_target = false;
    std::unordered_set<std::uint64_t> seen;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        const auto line = trim(text.substr(pos, eol - pos));
        pos = eol + 1;
        ++line_no;
        if (line.empty() || line.front() == '#') continue;

        if (!have_header) {
            bool have_d = false;
            std::istringstream tokens{std::string(line)};
            std::string tok;
            while (tokens >> tok) {
                const auto eq = tok.find('=');
                if (eq == std::string::npos) throw ParseError(line_no, "expected key=value, got '" + tok + "'");
                const auto key = std::string_view(tok).substr(0, eq);
                const auto value = std::string_view(tok).substr(eq + 1);
                if (key == "d") {
                    inst.d = parse_int(value, line_no, key);
                    have_d = true;
                } else if (key == "k") {
                    inst.k = parse_int(value, line_no, key);
                } else {
                    throw ParseError(line_no, "unknown header key '" + std::string(key) + "'");
                }
            }
            if (!have_d) throw ParseError(line_no, "header must define d");
            if (inst.d < 0) throw ParseError(line_no, "d must be non-negative");
            if (inst.k < 0) throw ParseError(line_no, "k must be non-negative");
            if (inst.d > opts.max_d || opts.max_d > kHardMaxDimension)
                throw CapacityError("dimension d=" + std::to_string(inst.d) + " exceeds the cap of " +
                                    std::to_string(std::min(opts.max_d, kHardMaxDimension)));
            have_header = true;
            continue;
        }

        if (!have_target) {
            if (line.substr(0, 2) != "t=") throw ParseError(line_no, "expected target line 't=<bits>'");
            inst.target = parse_bits(trim(line.substr(2)), inst.d, line_no);
            have_target = true;
            continue;
        }

        std::size_t start = 0;
        while (start <= line.size()) {
            auto comma = line.find(',', start);
            if (comma == std::string_view::npos) comma = line.size();
            const auto field = trim(line.substr(start, comma - start));
            start = comma + 1;
            if (field.empty()) throw ParseError(line_no, "empty vector field");
            const auto v = parse_bits(field, inst.d, line_no);
            if (!seen.insert(v.index).second) {
                if (opts.dedupe) continue;
                throw DuplicateVectorError(line_no, "duplicate vector " + std::string(field));
            }
            inst.vectors.push_back(v);
        }
    }
    if (!have_header) throw ParseError(0, "missing header line 'd=<int> k=<int>'");
    if (!have_target) throw ParseError(0, "missing target line 't=<bits>'");
    return inst;
}

std::string format_instance(const Instance& inst) {
    std::string out = "d=" + std::to_string(inst.d) + " k=" + std::to_string(inst.k) + "\n";
    out += "t=" + to_bitstring(inst.target, inst.d) + "\n";
    for (auto v : inst.vectors) out += to_bitstring(v, inst.d) + "\n";
    return out;
}

CharTable build_char_table(const Instance& inst) {
    CharTable table{inst.d, std::vector<std::uint8_t>(std::size_t{1} << inst.d, 0)};
    for (auto v : inst.vectors) table.values[v.index] = 1;
    return table;
}

}  // namespace witcount
