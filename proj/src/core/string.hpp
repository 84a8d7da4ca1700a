#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace parendist {

// A symbol is an integer: +k opens type k, -k closes type k, k in [1..t].
// complement(a) = -a is a fixed-point-free involution that flips orientation.
using Symbol = std::int16_t;

inline Symbol complement(Symbol a) { return static_cast<Symbol>(-a); }
inline bool is_open(Symbol a) { return a > 0; }
inline bool is_close(Symbol a) { return a < 0; }
inline int type_of(Symbol a) { return a > 0 ? a : -a; }

class Alphabet {
public:
    explicit Alphabet(int type_count) : type_count_(type_count) {
        if (type_count < 1) throw std::invalid_argument("alphabet needs at least one type");
    }

    // "pairs" alphabet: character 2k-1 opens and character 2k closes type k.
    static Alphabet from_pairs(const std::string& chars) {
        if (chars.empty() || chars.size() % 2 != 0)
            throw std::invalid_argument("pairs alphabet needs an even, non-empty character list");
        Alphabet a(static_cast<int>(chars.size() / 2));
        a.display_ = chars;
        return a;
    }

    int type_count() const { return type_count_; }
    bool contains(Symbol s) const { return s != 0 && type_of(s) <= type_count_; }
    bool has_display() const { return display_.has_value(); }

    char display_char(Symbol s) const {
        const std::string& d = *display_;
        int t = type_of(s);
        return is_open(s) ? d[2 * (t - 1)] : d[2 * t - 1];
    }

    std::optional<Symbol> from_char(char c) const {
        if (!display_) return std::nullopt;
        const std::string& d = *display_;
        for (int k = 0; k < type_count_; ++k) {
            if (d[2 * k] == c) return static_cast<Symbol>(k + 1);
            if (d[2 * k + 1] == c) return static_cast<Symbol>(-(k + 1));
        }
        return std::nullopt;
    }

    const std::optional<std::string>& display() const { return display_; }

    bool operator==(const Alphabet& o) const {
        return type_count_ == o.type_count_ && display_ == o.display_;
    }

private:
    int type_count_;
    std::optional<std::string> display_;  // open/close char per type, interleaved
};

// Immutable parenthesis string. Positions are 1-based in all public APIs,
// matching the (i..j] range convention; raw symbol storage is 0-based.
class ParenString {
public:
    ParenString(Alphabet alphabet, std::vector<Symbol> symbols)
        : alphabet_(std::move(alphabet)), symbols_(std::move(symbols)) {
        for (Symbol s : symbols_)
            if (!alphabet_.contains(s))
                throw std::invalid_argument("symbol outside declared alphabet");
    }

    // Convenience for tests: one-type-per-bracket-kind literal like "([)]".
    static ParenString from_ascii(const std::string& text,
                                  const std::string& pairs = "()[]{}<>") {
        Alphabet a = Alphabet::from_pairs(pairs);
        std::vector<Symbol> syms;
        syms.reserve(text.size());
        for (char c : text) {
            auto s = a.from_char(c);
            if (!s) throw std::invalid_argument(std::string("character not in alphabet: ") + c);
            syms.push_back(*s);
        }
        return ParenString(std::move(a), std::move(syms));
    }

    const Alphabet& alphabet() const { return alphabet_; }
    int size() const { return static_cast<int>(symbols_.size()); }
    bool empty() const { return symbols_.empty(); }
    Symbol at(int pos) const { return symbols_[pos - 1]; }  // 1-based
    std::span<const Symbol> symbols() const { return symbols_; }

    ParenString with_symbols(std::vector<Symbol> symbols) const {
        return ParenString(alphabet_, std::move(symbols));
    }

    bool operator==(const ParenString& o) const {
        return alphabet_ == o.alphabet_ && symbols_ == o.symbols_;
    }

private:
    Alphabet alphabet_;
    std::vector<Symbol> symbols_;
};

}  // namespace parendist
