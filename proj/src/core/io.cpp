#include "io.hpp"

#include <cctype>
#include <sstream>

namespace parendist {

namespace {

std::string strip(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

ParenString parse_input(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::string header;
    while (std::getline(in, line)) {
        std::string t = strip(line);
        if (t.empty() || t[0] == '#') continue;
        header = t;
        break;
    }
    if (header.empty()) throw ParseError("missing header line");

    std::string body;
    while (std::getline(in, line)) {
        std::string t = strip(line);
        if (!t.empty() && t[0] == '#') continue;
        body += line;
        body += '\n';
    }

    if (header.rfind("pairs:", 0) == 0) {
        std::string chars;
        for (char c : header.substr(6))
            if (!std::isspace(static_cast<unsigned char>(c))) chars.push_back(c);
        Alphabet alpha = [&] {
            try {
                return Alphabet::from_pairs(chars);
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what());
            }
        }();
        std::vector<Symbol> syms;
        for (char c : body) {
            if (std::isspace(static_cast<unsigned char>(c))) continue;
            auto s = alpha.from_char(c);
            if (!s) throw ParseError(std::string("'") + c + "' not in alphabet");
            syms.push_back(*s);
        }
        return ParenString(std::move(alpha), std::move(syms));
    }

    if (header.rfind("types:", 0) == 0) {
        int t = 0;
        {
            std::istringstream hs(header.substr(6));
            if (!(hs >> t) || t < 1) throw ParseError("malformed types header");
            std::string rest;
            if (hs >> rest) throw ParseError("malformed types header");
        }
        std::vector<Symbol> syms;
        std::istringstream bs(body);
        std::string tok;
        while (bs >> tok) {
            long v = 0;
            try {
                size_t pos = 0;
                v = std::stol(tok, &pos);
                if (pos != tok.size()) throw ParseError("bad token: " + tok);
            } catch (const ParseError&) {
                throw;
            } catch (...) {
                throw ParseError("bad token: " + tok);
            }
            if (v == 0) throw ParseError("zero is not a valid symbol");
            if (v > t || v < -t) throw ParseError("symbol outside alphabet: " + tok);
            syms.push_back(static_cast<Symbol>(v));
        }
        return ParenString(Alphabet(t), std::move(syms));
    }

    throw ParseError("malformed header: " + header);
}

std::string serialize(const ParenString& x) {
    std::ostringstream out;
    if (x.alphabet().has_display()) {
        out << "pairs: " << *x.alphabet().display() << '\n';
        for (Symbol s : x.symbols()) out << x.alphabet().display_char(s);
        out << '\n';
    } else {
        out << "types: " << x.alphabet().type_count() << '\n';
        bool first = true;
        for (Symbol s : x.symbols()) {
            if (!first) out << ' ';
            out << static_cast<int>(s);
            first = false;
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace parendist
